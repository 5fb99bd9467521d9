#include <doctest.h>

#include <qciore/hilbert.hpp>
#include <qciore/parser.hpp>
#include <qciore/proof_io.hpp>

using namespace qciore;

namespace
{

Formula F( std::string const& text, std::string const& sig = "P/1,R/2,f/1,c" )
{
  return parse_formula( text, parse_signature( sig ) );
}

MatchResult match( std::string const& text, std::string const& id, std::string const& sig = "P/1,R/2,f/1,c" )
{
  return match_schema( F( text, sig ), *find_schema( id ) );
}

ProofVerdict check_text( std::string const& text )
{
  LemmaStore store;
  auto proofs = parse_proofs( text );
  REQUIRE( proofs.size() == 1 );
  return check_proof( proofs[0], store );
}

} // namespace

TEST_CASE( "schema catalogue" )
{
  auto const& all = axiom_schemas();
  CHECK( all.size() == 28 );
  CHECK( all.front().id == "Ax1" );
  CHECK( all.back().id == "Eq2" );
  CHECK( find_schema( "Ax16" ) != nullptr );
  CHECK( find_schema( "Ax17" ) == nullptr );
}

TEST_CASE( "propositional schemas match instances" )
{
  CHECK( match( "P(x) -> ((forall y. R(x,y)) -> P(x))", "Ax1" ).ok() );
  CHECK_FALSE( match( "P(x) -> (P(y) -> P(y))", "Ax1" ).ok() );
  CHECK( match( "@P(c) -> (P(c) -> (~P(c) -> R(x,x)))", "bc1" ).ok() );
  auto [schema, r] = match_any_schema( F( "~~P(x) -> P(x)" ) );
  REQUIRE( schema );
  CHECK( schema->id == "cf" );
}

TEST_CASE( "quantifier schemas and their side conditions" )
{
  CHECK( match( "P(f(c)) -> exists x. P(x)", "Ax11" ).ok() );
  CHECK( match( "R(y,y) -> exists x. R(x,y)", "Ax11" ).ok() );
  CHECK( match( "(forall x. R(x,c)) -> R(f(y),c)", "Ax12" ).ok() );
  // vacuous substitution: x not free
  CHECK( match( "(forall x. P(c)) -> P(c)", "Ax12" ).ok() );
  CHECK_FALSE( match( "(forall x. P(x)) -> P(c) & P(c)", "Ax12" ).ok() );

  // y is captured by the inner quantifier
  auto cap = match( "(forall x. exists y. R(x,y)) -> exists y. R(y,y)", "Ax12" );
  CHECK( cap.status == MatchResult::Status::side_condition );
  auto [schema, any] = match_any_schema( F( "(forall x. exists y. R(x,y)) -> exists y. R(y,y)" ) );
  CHECK( any.status == MatchResult::Status::side_condition );

  CHECK( match( "@(exists x. P(x)) -> exists x. @P(x)", "Ax13" ).ok() );
  CHECK( match( "@(forall x. P(x)) -> exists x. @P(x)", "Ax14" ).ok() );
  CHECK( match( "(exists x. @P(x)) -> @(exists x. P(x))", "Ax15" ).ok() );
  CHECK( match( "(exists x. @P(x)) -> @(forall x. P(x))", "Ax16" ).ok() );
  CHECK_FALSE( match( "(exists y. @P(y)) -> @(forall x. P(x))", "Ax16" ).ok() );
}

TEST_CASE( "equality schemas" )
{
  std::string eq = "P/1,R/2,=";
  CHECK( match( "forall x. x = x", "Eq1", eq ).ok() );
  CHECK_FALSE( match( "forall x. x = y", "Eq1", eq ).ok() );
  CHECK( match( "forall x. forall y. (x = y -> (R(x,x) -> R(x,y)))", "Eq2", eq ).ok() );
  CHECK( match( "forall x. forall y. (x = y -> (R(x,x) -> R(y,y)))", "Eq2", eq ).ok() );
  CHECK( match( "forall x. forall y. (x = y -> (R(x,x) -> R(x,x)))", "Eq2", eq ).ok() );
  CHECK_FALSE( match( "forall x. forall y. (x = y -> (R(x,x) -> R(y,c)))", "Eq2", eq + ",c" ).ok() );
  auto cap = match( "forall x. forall y. (x = y -> ((exists y. R(x,y)) -> exists y. R(y,y)))", "Eq2", eq );
  CHECK_FALSE( cap.ok() );
}

TEST_CASE( "built-in lemmas" )
{
  LemmaStore store;
  CHECK( store.find( "trans" ) != nullptr );
  CHECK( store.find( "identity" ) != nullptr );
  CHECK( store.find( "contraposition" ) != nullptr );
  // fails the matrix check, so it is not admitted
  CHECK( store.find( "cons-imp" ) == nullptr );
  CHECK( store.names().size() == 15 );
  CHECK_THROWS_AS( store.add( *store.find( "trans" ) ), LemmaError );
}

TEST_CASE( "fixture proofs are accepted" )
{
  LemmaStore store;
  std::vector<Proof> proofs = load_proofs( QCIORE_TEST_DATA "/generalization.proof" );
  auto q = load_proofs( QCIORE_TEST_DATA "/quantifiers.proof" );
  proofs.insert( proofs.end(), q.begin(), q.end() );
  REQUIRE( proofs.size() == 4 );
  CHECK( proofs[0].steps.size() == 6 );
  CHECK( proofs[2].steps.size() == 11 );
  CHECK( proofs[3].steps.size() == 11 );
  for ( auto const& p : proofs )
  {
    auto v = check_and_store( p, store );
    INFO( p.name, ": ", v.failure ? to_string( *v.failure ) : "" );
    CHECK( v.accepted );
  }
  CHECK( store.find( "contradiction-forall" ) != nullptr );
}

TEST_CASE( "the mutated generalization is rejected at step 4" )
{
  LemmaStore store;
  auto p = load_proofs( QCIORE_TEST_DATA "/generalization_mutated.proof" );
  REQUIRE( p.size() == 1 );
  auto v = check_proof( p[0], store );
  CHECK_FALSE( v.accepted );
  REQUIRE( v.failure );
  CHECK( v.failure->step == 4 );
  CHECK( v.failure->reason == StepFailure::Reason::side_condition );
  CHECK( to_string( *v.failure ).find( "y is free" ) != std::string::npos );
}

TEST_CASE( "modus ponens in either order" )
{
  auto v = check_text( "name: t\n"
                       "hyp: P(x)\n"
                       "hyp: P(x) -> Q(x)\n"
                       "1. P(x) -> Q(x) ; hyp 2\n"
                       "2. P(x) ; hyp 1\n"
                       "3. Q(x) ; mp 1 2\n"
                       "4. Q(x) ; mp 2 1\n" );
  CHECK( v.accepted );
}

TEST_CASE( "step failures" )
{
  auto v = check_text( "name: t\n1. P(x) ; mp 1 2\n" );
  REQUIRE( v.failure );
  CHECK( v.failure->reason == StepFailure::Reason::bad_reference );

  v = check_text( "name: t\n1. P(x) -> P(x) ; lemma nope\n" );
  CHECK( v.failure->reason == StepFailure::Reason::unknown_lemma );

  v = check_text( "name: t\n1. P(x) -> (P(y) -> P(x)) ; ax Ax99\n" );
  CHECK( v.failure->reason == StepFailure::Reason::unknown_schema );

  v = check_text( "name: t\n1. P(x) -> (P(y) -> P(x)) ; ax Ax2\n" );
  CHECK( v.failure->reason == StepFailure::Reason::no_match );
  CHECK( check_text( "name: t\n1. P(x) -> (P(y) -> P(x)) ; ax\n" ).accepted );

  v = check_text( "name: t\nhyp: P(x)\n1. P(y) ; hyp 1\n" );
  CHECK( v.failure->reason == StepFailure::Reason::no_match );

  // exists-in with x free in the consequent
  v = check_text( "name: t\n"
                  "1. P(x) -> P(x) ; lemma identity\n"
                  "2. (exists x. P(x)) -> P(x) ; exists-in 1\n" );
  CHECK( v.failure->step == 2 );
  CHECK( v.failure->reason == StepFailure::Reason::side_condition );

  v = check_text( "name: t\n"
                  "1. P(y) -> P(y) ; lemma identity\n"
                  "2. (exists x. P(y)) -> P(y) ; exists-in 1\n"
                  "3. P(y) -> forall x. P(y) ; forall-in 1\n" );
  CHECK( v.accepted );
}

TEST_CASE( "lemma citations" )
{
  // biconditional lemmas may be cited in either direction
  CHECK( check_text( "name: t\n1. (a & ~a) -> !@a ; lemma contradiction-strong\n" ).accepted );
  CHECK( check_text( "name: t\n1. !@a -> (a & ~a) ; lemma contradiction-strong\n" ).accepted );
  // trans takes two premise steps
  CHECK( check_text( "name: t\n"
                     "1. P(x) -> P(x) ; lemma identity\n"
                     "2. P(x) -> P(x) ; lemma trans 1 1\n" )
             .accepted );
  auto v = check_text( "name: t\n"
                       "1. P(x) -> P(x) ; lemma identity\n"
                       "2. P(x) -> P(x) ; lemma trans 1\n" );
  CHECK( v.failure->reason == StepFailure::Reason::bad_reference );
}

TEST_CASE( "cited proofs protect their variables" )
{
  LemmaStore store;
  auto proofs = load_proofs( QCIORE_TEST_DATA "/quantifiers.proof" );
  REQUIRE( check_and_store( proofs[0], store ).accepted );
  auto lemma = *store.find( "strong-neg-exists" );
  CHECK( lemma.sensitive_vars.contains( "x" ) );

  // instantiating a with a formula in which x is free would be unsound
  auto bad = parse_proofs( "name: u\n"
                           "1. !(exists x. P(x)) -> forall x. !P(x) ; lemma strong-neg-exists\n" );
  auto v = check_proof( bad[0], store );
  CHECK_FALSE( v.accepted );
  CHECK( v.failure->reason == StepFailure::Reason::side_condition );

  auto good = parse_proofs( "name: w\n"
                            "1. !(exists x. P(y)) -> forall x. !P(y) ; lemma strong-neg-exists\n" );
  CHECK( check_proof( good[0], store ).accepted );
}

TEST_CASE( "deduction side condition" )
{
  auto proofs = load_proofs( QCIORE_TEST_DATA "/generalization.proof" );
  auto const& p = proofs[0];
  // step 4 quantifies x, which is free in the hypothesis
  CHECK_FALSE( wdmt_side_condition( p, p.hypotheses[0] ) );
  CHECK_THROWS_AS( wdmt_side_condition( p, F( "P(x)" ) ), LemmaError );

  auto q = parse_proofs( "name: d\n"
                         "hyp: P(c)\n"
                         "1. P(c) ; hyp 1\n"
                         "2. P(c) -> (P(x) -> P(c)) ; ax Ax1\n"
                         "3. P(x) -> P(c) ; mp 1 2\n"
                         "4. (exists x. P(x)) -> P(c) ; exists-in 3\n" );
  LemmaStore store;
  CHECK( check_proof( q[0], store ).accepted );
  CHECK( wdmt_side_condition( q[0], q[0].hypotheses[0] ) );
}

TEST_CASE( "proof files" )
{
  auto proofs = load_proofs( QCIORE_TEST_DATA "/quantifiers.proof" );
  for ( auto const& p : proofs )
  {
    auto again = parse_proofs( print_proof( p ) );
    REQUIRE( again.size() == 1 );
    CHECK( again[0].name == p.name );
    REQUIRE( again[0].steps.size() == p.steps.size() );
    for ( std::size_t i = 0; i < p.steps.size(); ++i )
    {
      CHECK( again[0].steps[i].formula == p.steps[i].formula );
      CHECK( to_string( again[0].steps[i].justification ) == to_string( p.steps[i].justification ) );
    }
  }
  CHECK_THROWS_AS( parse_proofs( "name: t\n2. P(x) ; hyp 1\n" ), ProofFormatError );
  CHECK_THROWS_AS( parse_proofs( "name: t\n1. P(x) ; frobnicate\n" ), ProofFormatError );
  CHECK_THROWS_AS( parse_proofs( "1. P(x) ; hyp 1\n" ), ProofFormatError );
  CHECK_THROWS( load_proofs( QCIORE_TEST_DATA "/no-such.proof" ) );
}
