#include <doctest.h>

#include <qciore/formula_enum.hpp>
#include <qciore/parser.hpp>

using namespace qciore;

namespace
{

Signature sig_pr()
{
  return parse_signature( "P/1,R/2,f/1,c" );
}

Formula F( std::string const& text )
{
  return parse_formula( text, sig_pr() );
}

} // namespace

TEST_CASE( "signature descriptions" )
{
  auto s = parse_signature( "P/1, R/2, f/1, c, =" );
  CHECK( s.predicates.at( "P" ) == 1 );
  CHECK( s.predicates.at( "R" ) == 2 );
  CHECK( s.functions.at( "f" ) == 1 );
  CHECK( s.constants.contains( "c" ) );
  CHECK( s.has_equality );
  CHECK( s.predicate_arity( "=" ) == 2 );
  CHECK_FALSE( parse_signature( "P/1" ).predicate_arity( "=" ) );
  CHECK_THROWS_AS( parse_signature( "P/0" ), SignatureError );
  CHECK_THROWS_AS( parse_signature( "P/1,,Q/1" ), SignatureError );
  CHECK_THROWS_AS( parse_signature( "P/x" ), SignatureError );
  CHECK( parse_signature( "P" ).constants.contains( "P" ) ); // bare names are constants
}

TEST_CASE( "precedence and associativity" )
{
  auto f = F( "P(x) & P(y) | R(x,y) -> P(c) -> P(x)" );
  REQUIRE( f.kind() == Connective::imp );
  CHECK( f.left().kind() == Connective::disj );
  CHECK( f.left().left().kind() == Connective::conj );
  // -> is right associative
  CHECK( f.right().kind() == Connective::imp );

  auto g = F( "P(x) & P(y) & P(c)" );
  CHECK( g.left().kind() == Connective::conj ); // & is left associative
  CHECK( F( "~@P(x)" ).body().kind() == Connective::cons );
}

TEST_CASE( "quantifier scope extends to the right" )
{
  auto f = F( "exists x. ~P(x) -> ~forall x. P(x)" );
  REQUIRE( f.kind() == Connective::exists );
  CHECK( f.body().kind() == Connective::imp );

  auto g = F( "(exists x. ~P(x)) -> ~forall x. P(x)" );
  REQUIRE( g.kind() == Connective::imp );
  CHECK( g.left().kind() == Connective::exists );
  CHECK( g.right().body().kind() == Connective::forall );
}

TEST_CASE( "derived connectives expand" )
{
  CHECK( F( "!P(x)" ) == F( "~P(x) & @P(x)" ) );
  CHECK( F( "P(x) <-> P(y)" ) == F( "(P(x) -> P(y)) & (P(y) -> P(x))" ) );
}

TEST_CASE( "printing round-trips" )
{
  for ( auto const* text :
        { "forall x. P(x)", "(exists x. ~P(x)) -> ~(forall x. P(x))", "~(P(x) & P(y))", "@(forall y. R(x,f(y)))",
          "P(c) | (P(x) -> (P(y) -> P(f(f(c)))))", "((P(x) -> P(y)) -> P(c)) & ~@~P(x)" } )
  {
    auto f = F( text );
    CHECK( F( to_string( f ) ) == f );
  }
  CHECK( to_string( F( "forall x. P(x)" ) ) == "forall x. P(x)" );
  CHECK( to_string( F( "(P(x) -> P(y)) -> P(c)" ) ) == "(P(x) -> P(y)) -> P(c)" );

  auto eq = parse_signature( "P/1,=" );
  auto e = parse_formula( "~(x = y) -> x = x", eq );
  CHECK( to_string( e ) == "~(x = y) -> x = x" );
  CHECK( parse_formula( to_string( e ), eq ) == e );

  // enumerated formulas print to text that parses back to the same tree
  auto s = parse_signature( "P/1,R/2,c,=" );
  for ( auto const& f : enumerate_formulas( s, { "x", "y" }, 2 ) )
    REQUIRE( parse_formula( to_string( f ), s ) == f );
}

TEST_CASE( "parse errors" )
{
  auto s = sig_pr();
  CHECK_THROWS_AS( parse_formula( "P(x", s ), ParseError );
  CHECK_THROWS_AS( parse_formula( "Q(x)", s ), ParseError );
  CHECK_THROWS_AS( parse_formula( "P(x,y)", s ), ParseError );
  CHECK_THROWS_AS( parse_formula( "x = y", s ), ParseError );
  CHECK_THROWS_AS( parse_formula( "forall c. P(c)", s ), ParseError );
  CHECK_THROWS_AS( parse_formula( "a -> a", s ), ParseError );
  CHECK_THROWS_AS( parse_formula( "P(x) $ P(y)", s ), ParseError );
  try
  {
    parse_formula( "P(x) & ", s );
    FAIL( "expected a parse error" );
  }
  catch ( ParseError const& e )
  {
    CHECK( e.position() == 7 );
  }
}

TEST_CASE( "letters and inferred symbols" )
{
  Signature s;
  ParseOptions opt;
  opt.allow_letters = true;
  auto f = parse_formula( "a -> (b -> a)", s, opt );
  CHECK( is_propositional( f ) );
  CHECK( letters( f ) == std::set<std::string>{ "a", "b" } );

  Signature t;
  ParseOptions inf;
  inf.infer_symbols = true;
  auto g = parse_formula( "forall x. Q(x, g(y))", t, inf );
  CHECK( t.predicates.at( "Q" ) == 2 );
  CHECK( t.functions.at( "g" ) == 1 );
  CHECK( free_vars( g ) == std::set<std::string>{ "y" } );
  CHECK_THROWS_AS( parse_formula( "Q(x)", t, inf ), ParseError ); // arity now fixed
}

TEST_CASE( "variables" )
{
  auto f = F( "forall x. R(x,y) & exists y. P(y)" );
  CHECK( free_vars( f ) == std::set<std::string>{ "y" } );
  CHECK( all_vars( f ) == std::set<std::string>{ "x", "y" } );
  CHECK_FALSE( is_sentence( f ) );
  CHECK( is_sentence( F( "forall x. P(x)" ) ) );
  CHECK( depth( F( "P(x)" ) ) == 0 );
  CHECK( depth( F( "~forall x. (P(x) & P(c))" ) ) == 3 );
}

TEST_CASE( "substitution and capture" )
{
  auto y = Term::variable( "y" );
  auto fc = Term::apply( "f", { Term::constant( "c" ) } );

  CHECK( substitute( F( "P(x) & forall x. P(x)" ), "x", y ) == F( "P(y) & forall x. P(x)" ) );
  CHECK( substitute( F( "R(x,x)" ), "x", fc ) == F( "R(f(c),f(c))" ) );

  auto captured = F( "forall y. R(x,y)" );
  CHECK_FALSE( is_free_for( y, "x", captured ) );
  CHECK_THROWS_AS( substitute( captured, "x", y ), CaptureError );
  // no free x under the binder: nothing to capture
  CHECK( is_free_for( y, "x", F( "forall y. P(y)" ) ) );
  CHECK( is_free_for( fc, "x", captured ) );
}

TEST_CASE( "replacing some occurrences" )
{
  auto f = F( "R(x,x)" );
  for ( auto const* t : { "R(x,x)", "R(y,x)", "R(x,y)", "R(y,y)" } )
    CHECK( replace_some_matches( f, "x", "y", F( t ) ) );
  CHECK_FALSE( replace_some_matches( f, "x", "y", F( "R(y,c)" ) ) );
  // bound occurrences stay
  CHECK_FALSE( replace_some_matches( F( "forall x. P(x)" ), "x", "y", F( "forall x. P(y)" ) ) );
  CHECK( replace_some_matches( F( "P(x) & forall x. P(x)" ), "x", "y", F( "P(y) & forall x. P(x)" ) ) );
}

TEST_CASE( "universal closure" )
{
  CHECK( universal_closure( F( "R(y,x)" ) ) == F( "forall x. forall y. R(y,x)" ) );
  auto s = F( "forall x. P(x)" );
  CHECK( universal_closure( s ) == s );
}

TEST_CASE( "schema instantiation" )
{
  Signature s;
  ParseOptions opt;
  opt.allow_letters = true;
  auto schema = parse_formula( "a -> (b -> a)", s, opt );
  auto inst = instantiate_letters( schema, { { "a", F( "P(x)" ) }, { "b", F( "forall y. R(x,y)" ) } } );
  CHECK( inst == F( "P(x) -> ((forall y. R(x,y)) -> P(x))" ) );
}

TEST_CASE( "signature checks" )
{
  auto s = sig_pr();
  CHECK_NOTHROW( check_formula( F( "P(f(c))" ), s ) );
  CHECK_THROWS_AS( check_formula( Formula::atom( "Q", { Term::variable( "x" ) } ), s ), SignatureError );
  CHECK_THROWS_AS( check_formula( Formula::letter( "a" ), s ), SignatureError );
  CHECK_NOTHROW( check_formula( Formula::letter( "a" ), s, true ) );
}

TEST_CASE( "formula enumeration" )
{
  auto s = parse_signature( "P/1" );
  auto atoms = enumerate_atoms( s, { "x" } );
  REQUIRE( atoms.size() == 1 );
  // depth 1 over one atom and one variable: ~, @, forall, exists, and the three binary connectives
  auto pool = enumerate_formulas( s, { "x" }, 1 );
  CHECK( pool.size() == 1 + 4 + 3 );
  for ( std::size_t d = 0; d <= 2; ++d )
    for ( auto const* desc : { "P/1", "P/1,R/2", "P/1,c", "R/2,=" } )
    {
      auto sg = parse_signature( desc );
      for ( auto const& vars : { std::vector<std::string>{ "x" }, std::vector<std::string>{ "x", "y" } } )
      {
        auto all = enumerate_formulas( sg, vars, d );
        CHECK( all.size() == count_formulas( sg, vars, d ) );
        std::set<std::string> printed;
        for ( auto const& f : all )
        {
          CHECK( depth( f ) <= d );
          printed.insert( to_string( f ) );
        }
        CHECK( printed.size() == all.size() ); // no duplicates
      }
    }
  // the streaming form can stop early
  std::size_t seen = 0;
  for_each_formula( s, { "x" }, 3, [&]( Formula const& ) { return ++seen < 5; } );
  CHECK( seen == 5 );
}
