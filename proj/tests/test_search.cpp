#include <doctest.h>

#include <qciore/parser.hpp>
#include <qciore/search.hpp>
#include <qciore/structure_io.hpp>

using namespace qciore;

namespace
{

SearchSpec spec_for( std::string const& sig, std::string const& refute, std::size_t max_size,
                     std::vector<std::string> const& gamma = {} )
{
  SearchSpec s;
  s.signature = parse_signature( sig );
  s.refute = parse_formula( refute, s.signature );
  for ( auto const& g : gamma )
    s.gamma.push_back( parse_formula( g, s.signature ) );
  s.max_size = max_size;
  return s;
}

void same_result( SearchResult const& a, SearchResult const& b )
{
  CHECK( a.status == b.status );
  CHECK( a.size == b.size );
  CHECK( a.index == b.index );
  CHECK( a.examined == b.examined );
  CHECK( a.model == b.model );
  CHECK( a.assignment == b.assignment );
  CHECK( a.value == b.value );
}

} // namespace

TEST_CASE( "enumerator counts and order" )
{
  StructureEnumerator e( parse_signature( "P/1" ), 2 );
  CHECK( e.count() == 9 );
  // least significant digit is the last tuple of P
  auto s1 = e.at( 1 );
  CHECK( s1.value( "P", { 0 } ) == TruthValue::zero );
  CHECK( s1.value( "P", { 1 } ) == TruthValue::half );
  CHECK( e.at( 8 ).value( "P", { 0 } ) == TruthValue::one );
  CHECK( e.at( 0 ).elements == default_element_names( 2 ) );

  CHECK( StructureEnumerator( parse_signature( "P/1,R/2" ), 2 ).count() == 9 * 81 );
  CHECK( StructureEnumerator( parse_signature( "f/1,c" ), 3 ).count() == 27 * 3 );
  // equality-normal: only the diagonal varies, over 1/2 and 1
  StructureEnumerator eq( parse_signature( "P/1,=" ), 2, true );
  CHECK( eq.count() == 9 * 4 );
  for ( std::uint64_t i = 0; i < eq.count(); ++i )
  {
    auto A = eq.at( i );
    A.validate();
    CHECK( is_equality_structure( A ) );
  }
  CHECK_THROWS_AS( StructureEnumerator( parse_signature( "R/3" ), 9 ).count(), LimitExceeded );

  std::size_t seen = 0;
  for_each_structure( parse_signature( "P/1" ), 3, false, [&]( PartialStructure const& ) { return ++seen < 10; } );
  CHECK( seen == 10 );
}

TEST_CASE( "countermodels for the four quantifier schemas" )
{
  for ( auto const* text : { "(exists x. ~P(x)) -> ~forall x. P(x)", "(forall x. ~P(x)) -> ~exists x. P(x)",
                             "(forall x. P(x)) -> ~exists x. ~P(x)", "(exists x. P(x)) -> ~forall x. ~P(x)" } )
  {
    INFO( text );
    auto spec = spec_for( "P/1", text, 3 );
    auto r = find_countermodel( spec );
    REQUIRE( r.status == SearchResult::Status::found );
    CHECK( r.size <= 3 );
    CHECK_FALSE( designated( eval_formula( spec.refute, *r.model, {} ) ) );
    same_result( r, find_countermodel_parallel( spec ) );
  }
}

TEST_CASE( "the first countermodel is the least by size then index" )
{
  auto spec = spec_for( "P/1", "(exists x. ~P(x)) -> ~forall x. P(x)", 3 );
  auto r = find_countermodel( spec );
  REQUIRE( r.status == SearchResult::Status::found );
  // one element never works: ~forall and exists ~ see the same single value
  CHECK( r.size == 2 );
  StructureEnumerator e( spec.signature, 2 );
  for ( std::uint64_t i = 0; i < r.index; ++i )
    CHECK( designated( eval_formula( spec.refute, e.at( i ), {} ) ) );
  CHECK( e.at( r.index ) == *r.model );
  CHECK( r.examined == 3 + r.index + 1 );
}

TEST_CASE( "explosion needs consistency" )
{
  auto sig = parse_signature( "P/1,Q/1,c" );
  auto P = parse_formula( "P(c)", sig ), nP = parse_formula( "~P(c)", sig ), oP = parse_formula( "@P(c)", sig );
  auto Q = parse_formula( "Q(c)", sig );

  auto weak = check_consequence_bounded( sig, { P, nP }, Q, 3 );
  REQUIRE( weak.refuted );
  CHECK( weak.search.size == 1 );
  CHECK( weak.search.model->value( "P", { 0 } ) == TruthValue::half );

  auto strong = check_consequence_bounded( sig, { P, nP, oP }, Q, 3 );
  CHECK_FALSE( strong.refuted );
  CHECK( strong.searched_up_to == 3 );
  CHECK( strong.search.status == SearchResult::Status::exhausted );
}

TEST_CASE( "limits" )
{
  auto spec = spec_for( "P/2", "P(x,y) -> P(x,y)", 3 );
  spec.max_structures = 2;
  auto r = find_countermodel( spec );
  CHECK( r.status == SearchResult::Status::limit );
  CHECK( r.examined == 2 );
  CHECK_FALSE( r.limit_reason.empty() );
  auto p = find_countermodel_parallel( spec );
  CHECK( p.status == SearchResult::Status::limit );
  CHECK( p.examined == 2 );

  // the first structure, P(e1,e1) = 0, is already a hit
  auto first = spec_for( "P/2", "forall x. P(x,x)", 3 );
  first.max_structures = 1;
  auto hit = find_countermodel( first );
  CHECK( hit.status == SearchResult::Status::found );
  CHECK( hit.index == 0 );

  auto timed = spec_for( "P/1", "P(x) -> P(x)", 3 );
  timed.time_budget_seconds = 0.0;
  CHECK( find_countermodel( timed ).status == SearchResult::Status::limit );
}

TEST_CASE( "serial and parallel searches agree" )
{
  struct Case
  {
    char const* sig;
    char const* refute;
    std::vector<std::string> gamma;
    std::size_t max;
    bool eq;
  };
  std::vector<Case> cases = {
    { "P/1", "P(x) -> (P(x) -> P(x))", {}, 3, false },
    { "R/2", "(forall x. exists y. R(x,y)) -> exists y. forall x. R(x,y)", {}, 2, false },
    { "R/2", "R(x,y) -> R(y,x)", { "forall x. R(x,x)" }, 2, false },
    { "P/1,=", "forall x. forall y. (x = y -> (P(x) -> P(y)))", {}, 2, true },
    { "P/1,=", "forall x. ~(x = x)", {}, 3, true },
    { "P/1,f/1", "forall x. (P(x) -> P(f(x)))", { "exists x. P(x)" }, 2, false },
  };
  for ( auto const& c : cases )
  {
    INFO( c.refute );
    auto spec = spec_for( c.sig, c.refute, c.max, c.gamma );
    spec.equality_normal = c.eq;
    same_result( find_countermodel( spec ), find_countermodel_parallel( spec ) );
  }
}

TEST_CASE( "progress events" )
{
  auto spec = spec_for( "R/2", "R(x,y) -> R(x,y)", 2 );
  spec.progress_every = 10;
  std::vector<ProgressEvent> events;
  spec.progress = [&]( ProgressEvent const& e ) { events.push_back( e ); };
  auto r = find_countermodel( spec );
  CHECK( r.status == SearchResult::Status::exhausted );
  CHECK( r.examined == 3 + 81 );
  REQUIRE_FALSE( events.empty() );
  for ( std::size_t i = 1; i < events.size(); ++i )
    CHECK( events[i].examined >= events[i - 1].examined );
}

TEST_CASE( "countermodels print and reload" )
{
  auto spec = spec_for( "P/1,R/2,c", "(exists x. R(x,c)) -> R(c,c) | P(c)", 2 );
  auto r = find_countermodel( spec );
  REQUIRE( r.status == SearchResult::Status::found );
  auto again = parse_structure( print_structure( *r.model ) );
  CHECK( again == *r.model );
  CHECK( eval_formula( spec.refute, again, {} ) == r.value );
}

TEST_CASE( "soundness on a small pool" )
{
  SoundnessOptions o;
  o.signature = parse_signature( "P/1" );
  o.vars = { "x" };
  o.depth = 1;
  o.max_size = 2;
  auto rep = soundness_harness( o );
  CHECK( rep.total_violations() == 0 );
  CHECK( rep.recheck_mismatches == 0 );
  CHECK( rep.rechecked > 0 );
  for ( auto const* id : { "Ax1", "bc1", "cr3", "Ax11", "Ax16", "Eq1", "Eq2", "MP", "forall-in", "exists-in" } )
  {
    INFO( id );
    CHECK( rep.instances.at( id ) > 0 );
  }

  o.parallel = false;
  auto serial = soundness_harness( o );
  CHECK( serial.instances == rep.instances );
  CHECK( serial.structures == rep.structures );
  CHECK( serial.rechecked == rep.rechecked );
}

TEST_CASE( "a broken conjunction table is caught" )
{
  // ∧ as the minimum: 1 ∧ 1/2 = 1/2 makes the conjunction of a consistent
  // and an inconsistent formula inconsistent.  Two predicates, so one
  // point can carry both 1 and 1/2
  SoundnessOptions o;
  o.signature = parse_signature( "P/1,Q/1" );
  o.vars = { "x" };
  o.depth = 1;
  o.max_size = 1;
  o.include_equality = false;
  o.include_rules = false;
  for ( auto a : all_truth_values )
    for ( auto b : all_truth_values )
      ( *o.matrix.conj )[index( a )][index( b )] = std::min( a, b );
  auto rep = soundness_harness( o );
  CHECK( rep.violation_counts["co1"] > 0 );
  REQUIRE_FALSE( rep.violations.empty() );
  bool co1 = false;
  for ( auto const& v : rep.violations )
    if ( v.schema == "co1" )
    {
      co1 = true;
      CHECK_FALSE( designated( eval_formula( v.instance, v.structure, v.assignment, o.matrix ) ) );
    }
  CHECK( co1 );
}
