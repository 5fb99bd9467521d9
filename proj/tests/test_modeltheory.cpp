#include <doctest.h>

#include <qciore/formula_enum.hpp>
#include <qciore/modeltheory.hpp>
#include <qciore/parser.hpp>
#include <qciore/structure_io.hpp>

using namespace qciore;

namespace
{

PartialStructure S( std::string const& text )
{
  return parse_structure( text );
}

} // namespace

TEST_CASE( "substructures" )
{
  auto A = load_structure( QCIORE_TEST_DATA "/three_point_a.struct" );
  auto B = load_structure( QCIORE_TEST_DATA "/three_point.struct" );
  CHECK( is_substructure( A, B ).holds );
  CHECK( is_substructure( B, B ).holds );
  CHECK( embedding_by_name( A, B ) == std::vector<std::size_t>{ 0 } );
  CHECK_THROWS_AS( embedding_by_name( B, A ), ModelTheoryError );

  auto C = S( "domain = {b}\npred P/1 { plus={(b)} }" );
  auto r = is_substructure( C, B );
  CHECK_FALSE( r.holds );
  REQUIRE( r.violation );
  CHECK( r.violation->symbol == "P" );
  CHECK( r.violation->what == "plus" );
  CHECK( r.violation->tuple == std::vector<std::string>{ "b" } );

  auto D = S( "domain = {b}\npred P/1 { minus={(b)} }" );
  CHECK( is_substructure( D, B ).violation->what == "minus" );

  auto F1 = S( "domain = {a}\nfun f/1 {(a)->a}" );
  auto F2 = S( "domain = {a, b}\nfun f/1 {(a)->b, (b)->b}" );
  CHECK( is_substructure( F1, F2 ).violation->what == "fun" );
  auto K1 = S( "domain = {a}\nconst c = a" );
  auto K2 = S( "domain = {a, b}\nconst c = b" );
  CHECK( is_substructure( K1, K2 ).violation->what == "const" );
  CHECK_THROWS_AS( is_substructure( A, K2 ), ModelTheoryError );
}

TEST_CASE( "assignments carry over through the embedding" )
{
  auto A = S( "domain = {b}\npred P/1 { dot={(b)} }" );
  auto B = load_structure( QCIORE_TEST_DATA "/three_point.struct" );
  auto h = embedding_by_name( A, B );
  Assignment s;
  s.values["x"] = 0;
  auto t = lift( s, h );
  CHECK( t.values.at( "x" ) == 1 );
  CHECK( t.default_element == 1 );
}

TEST_CASE( "elementary substructure failure" )
{
  // P(a) = 0 in both; B adds b with P(b) = 1, so exists x. P(x) goes 0 -> 1
  auto A = S( "domain = {a}\npred P/1 { minus={(a)} }" );
  auto B = S( "domain = {a, b}\npred P/1 { plus={(b)} minus={(a)} }" );
  REQUIRE( is_substructure( A, B ).holds );
  auto v = elementary_sub_bounded( A, B, 1 );
  CHECK_FALSE( v.passed );
  REQUIRE( v.formula );
  CHECK( *v.formula == parse_formula( "exists x. P(x)", A.signature ) );
  CHECK( v.value_a == TruthValue::zero );
  CHECK( v.value_b == TruthValue::one );
  auto serial = elementary_sub_bounded( A, B, 1, { "x" }, false );
  CHECK( serial.formula == v.formula );

  auto e = elementary_equiv_bounded( A, B, 1 );
  CHECK_FALSE( e.passed );

  auto tc = tarski_conditions( A, B, { parse_formula( "P(x)", A.signature ) }, { "x" } );
  CHECK_FALSE( tc.passed() );
  CHECK( tc.failures.front().condition == "TC1" );
}

TEST_CASE( "a one-sided Tarski failure" )
{
  // B: P(a) = 1, P(b) = 1/2, A = {b}. forall x. P(x) is 1 in B but no
  // element of A has P in plus.
  auto B = S( "domain = {a, b}\npred P/1 { plus={(a)} dot={(b)} }" );
  auto A = S( "domain = {b}\npred P/1 { dot={(b)} }" );
  auto rep = tarski_conditions( A, B, { parse_formula( "P(x)", A.signature ) }, { "x" } );
  REQUIRE_FALSE( rep.passed() );
  bool tc3 = false;
  for ( auto const& f : rep.failures )
    tc3 |= f.condition == "TC3";
  CHECK( tc3 );
  CHECK_FALSE( elementary_sub_bounded( A, B, 1 ).passed );
}

TEST_CASE( "elementary extensions pass" )
{
  // copies of an element with the same values
  auto A = S( "domain = {a}\npred P/1 { dot={(a)} }" );
  auto B = S( "domain = {a, b}\npred P/1 { dot={(a),(b)} }" );
  CHECK( tarski_conditions( A, B, enumerate_formulas( A.signature, { "x" }, 2 ), { "x" } ).passed() );
  auto v = elementary_sub_bounded( A, B, 2 );
  CHECK( v.passed );
  CHECK( v.formulas_checked == count_formulas( A.signature, { "x" }, 2 ) );
  CHECK( elementary_equiv_bounded( A, B, 2 ).passed );
  CHECK_THROWS_AS( elementary_sub_bounded( B, A, 1 ), ModelTheoryError );
}

TEST_CASE( "chain unions" )
{
  auto A0 = S( "domain = {a}\npred P/1 { plus={(a)} }\nconst c = a" );
  auto A1 = S( "domain = {a, b}\npred P/1 { plus={(a)} dot={(b)} }\nconst c = a" );
  auto A2 = S( "domain = {a, b, d}\npred P/1 { plus={(a)} dot={(b)} minus={(d)} }\nconst c = a" );
  auto U = chain_union( { A0, A1, A2 } );
  CHECK( U == A2 );
  for ( auto const& M : { A0, A1, A2 } )
    CHECK( is_substructure( M, U ).holds );

  auto bad = S( "domain = {a, b}\npred P/1 { minus={(a),(b)} }\nconst c = a" );
  CHECK_THROWS_AS( chain_union( { A0, bad } ), ModelTheoryError );
  CHECK_THROWS_AS( chain_union( {} ), ModelTheoryError );
}
