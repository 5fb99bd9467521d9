#include <doctest.h>

#include <qciore/cli.hpp>
#include <qciore/parser.hpp>
#include <qciore/structure_io.hpp>

#include <json.hpp>

#include <sstream>

using namespace qciore;

namespace
{

struct Run
{
  int code;
  std::string out, err;
};

Run run( std::vector<std::string> args )
{
  std::ostringstream out, err;
  int code = run_cli( args, out, err );
  return { code, out.str(), err.str() };
}

std::string data( std::string const& name )
{
  return std::string( QCIORE_TEST_DATA ) + "/" + name;
}

} // namespace

TEST_CASE( "eval" )
{
  auto r = run( { "eval", data( "three_point.struct" ), "forall x. P(x)" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "1\nPOS\n" );

  r = run( { "eval", data( "three_point.struct" ), "P(x) & ~P(x)", "--assign", "x=b" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "1/2\n" );

  r = run( { "eval", data( "three_point.struct" ), "P(x)" } );
  CHECK( r.code == 2 );
  CHECK( r.err.find( "free variable x" ) != std::string::npos );

  r = run( { "eval", data( "three_point.struct" ), "(exists x. ~P(x)) -> ~forall x. P(x)", "--valid" } );
  CHECK( r.code == 1 );
  CHECK( r.out.starts_with( "REFUTED\n" ) );

  r = run( { "eval", data( "malformed.struct" ), "forall x. P(x)" } );
  CHECK( r.code == 2 );
  CHECK( r.err.starts_with( "error: " ) );
}

TEST_CASE( "quantifier scope in the command line" )
{
  // without parentheses the existential covers the whole implication, and
  // that formula is valid in the three-point structure
  auto r = run( { "eval", data( "three_point.struct" ), "exists x. ~P(x) -> ~forall x. P(x)", "--valid" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "VALID\n" );
}

TEST_CASE( "json output" )
{
  auto r = run( { "--json", "eval", data( "three_point.struct" ), "~forall x. P(x)" } );
  CHECK( r.code == 1 );
  auto j = nlohmann::json::parse( r.out );
  CHECK( j["value"] == "0" );
  CHECK( j["designated"] == false );
  CHECK( j["trichotomy"] == "NEG" );

  r = run( { "--json", "search", "--sig", "P/1", "--refute", "(forall x. P(x)) -> ~exists x. ~P(x)", "--max", "3" } );
  CHECK( r.code == 1 );
  j = nlohmann::json::parse( r.out );
  CHECK( j["status"] == "found" );
  CHECK( j["size"].get<int>() <= 3 );
}

TEST_CASE( "quiet mode prints nothing" )
{
  auto r = run( { "-q", "taut", "a -> (b -> a)" } );
  CHECK( r.code == 0 );
  CHECK( r.out.empty() );
}

TEST_CASE( "search output reloads as a countermodel" )
{
  auto r = run( { "search", "--refute", "(exists x. ~P(x)) -> ~forall x. P(x)", "--max", "3" } );
  REQUIRE( r.code == 1 );
  CHECK( r.out.starts_with( "# countermodel:" ) );
  auto M = parse_structure( r.out );
  auto f = parse_formula( "(exists x. ~P(x)) -> ~forall x. P(x)", M.signature );
  CHECK_FALSE( designated( eval_formula( f, M, {} ) ) );

  auto s = run( { "search", "--serial", "--refute", "(exists x. ~P(x)) -> ~forall x. P(x)", "--max", "3" } );
  CHECK( s.out == r.out );
}

TEST_CASE( "search outcomes" )
{
  auto r = run( { "search", "--sig", "P/1,Q/1,c", "--gamma-file", data( "bc1_gamma.fml" ), "--refute-file",
                  data( "bc1_goal.fml" ), "--max", "3" } );
  CHECK( r.code == 0 );
  CHECK( r.out == "exhausted(3)\n" );

  r = run( { "search", "--sig", "P/1,Q/1,c", "--gamma", "P(c)", "--gamma", "~P(c)", "--refute", "Q(c)", "--max", "3" } );
  CHECK( r.code == 1 );

  r = run( { "search", "--sig", "P/2", "--refute", "P(x,y) -> P(x,y)", "--max", "3", "--limit", "5" } );
  CHECK( r.code == 3 );
  CHECK( r.out.starts_with( "limit:" ) );

  r = run( { "search", "--sig", "P/1", "--refute", "Q(x)", "--max", "2" } );
  CHECK( r.code == 2 );

  r = run( { "search", "--max", "2" } );
  CHECK( r.code == 2 );

  r = run( { "search", "--progress", "--sig", "R/2", "--refute", "R(x,y) -> R(x,y)", "--max", "3" } );
  CHECK( r.code == 0 );
  auto first = r.err.substr( 0, r.err.find( '\n' ) );
  CHECK( nlohmann::json::parse( first )["event"] == "progress" );
}

TEST_CASE( "check-proof" )
{
  auto r = run( { "check-proof", data( "generalization.proof" ), data( "quantifiers.proof" ) } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "contradiction-forall: accepted" ) != std::string::npos );

  r = run( { "check-proof", data( "generalization_mutated.proof" ) } );
  CHECK( r.code == 1 );
  CHECK( r.out.find( "rejected: step 4" ) != std::string::npos );

  r = run( { "check-proof", data( "nothing-here.proof" ) } );
  CHECK( r.code == 2 );
}

TEST_CASE( "taut and schemas" )
{
  CHECK( run( { "taut", "a | ~a" } ).code == 0 );
  auto r = run( { "taut", "a -> (~a -> b)" } );
  CHECK( r.code == 1 );
  CHECK( run( { "taut", "a -> a", "--matrix", "p1" } ).code == 0 );
  CHECK( run( { "taut", "a -> a", "--matrix", "k3" } ).code == 2 );

  r = run( { "schemas" } );
  CHECK( r.code == 1 );
  CHECK( r.out.find( "cons-imp" ) != std::string::npos );
}

TEST_CASE( "model-theory commands" )
{
  CHECK( run( { "mt", "sub", data( "three_point_a.struct" ), data( "three_point.struct" ) } ).code == 0 );
  CHECK( run( { "mt", "sub", data( "three_point.struct" ), data( "three_point_a.struct" ) } ).code == 2 );
  // forall x. @P(x) is 1 on {a} and 0 on {a, b, c}
  CHECK( run( { "mt", "elem", data( "three_point_a.struct" ), data( "three_point.struct" ), "--depth", "1" } ).code == 0 );
  auto r = run( { "mt", "elem", data( "three_point_a.struct" ), data( "three_point.struct" ), "--depth", "2" } );
  CHECK( r.code == 1 );
  CHECK( run( { "mt", "equiv", data( "three_point.struct" ), data( "three_point.struct" ), "--depth", "2" } ).code == 0 );
  CHECK( run( { "mt", "tarski", data( "three_point.struct" ), data( "three_point.struct" ) } ).code == 0 );
  CHECK( run( { "mt", "nonsense", data( "three_point.struct" ), data( "three_point.struct" ) } ).code == 2 );
}

TEST_CASE( "twist and soundness commands" )
{
  auto r = run( { "twist-verify", "--max-bits", "2" } );
  CHECK( r.code == 0 );
  CHECK( r.out.find( "failures (" ) == std::string::npos );

  r = run( { "soundness", "--sig", "P/1", "--vars", "x", "--max-size", "1", "--no-rules" } );
  CHECK( r.code == 0 );
}

TEST_CASE( "usage errors" )
{
  CHECK( run( {} ).code == 2 );
  CHECK( run( { "frobnicate" } ).code == 2 );
  CHECK( run( { "eval" } ).code == 2 );
  auto h = run( { "--help" } );
  CHECK( h.code == 0 );
  CHECK( h.out.find( "search" ) != std::string::npos );
}
