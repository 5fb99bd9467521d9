#include <doctest.h>

#include <qciore/triples.hpp>
#include <qciore/twist.hpp>

using namespace qciore;

TEST_CASE( "twist elements" )
{
  for ( std::size_t n = 1; n <= 3; ++n )
  {
    PowersetAlgebra A( n );
    auto N = std::size_t{ 1 } << n;
    CHECK( A.elements().size() == N );
    // pairs with a ⊔ b = 1: 3 choices per point, as for triples
    std::size_t three_n = 1;
    for ( std::size_t i = 0; i < n; ++i )
      three_n *= 3;
    CHECK( all_twist_pairs( A ).size() == three_n );
    CHECK( all_twist_triples( A ).size() == three_n );
    for ( auto const& z : all_twist_pairs( A ) )
      CHECK( is_twist_pair( A, z ) );
  }
  PowersetAlgebra B( 2 );
  CHECK_FALSE( is_twist_pair( B, { B.zero(), B.zero() } ) );
  CHECK_FALSE( is_twist_triple( B, { B.one(), B.one(), B.zero() } ) );
}

TEST_CASE( "dagger on single points" )
{
  // one-point algebra: triples (1,0,0), (0,1,0), (0,0,1) are the values 1, 0, 1/2
  PowersetAlgebra A( 1 );
  auto one = A.one(), zero = A.zero();
  CHECK( dagger( A, { one, zero, zero } ) == TwistPair{ one, zero } );
  CHECK( dagger( A, { zero, one, zero } ) == TwistPair{ zero, one } );
  CHECK( dagger( A, { zero, zero, one } ) == TwistPair{ one, one } );
  CHECK( bottom_pair( A ) == TwistPair{ zero, one } );
  CHECK( bottom_triple( A ) == TwistTriple{ zero, one, zero } );
}

TEST_CASE( "triple operations match the pointwise tables" )
{
  PowersetAlgebra A( 2 );
  for ( auto const& r : all_triples( 2 ) )
  {
    TwistTriple z{ r.plus, r.minus, r.dot };
    auto n = twist_triple_op( A, Connective::neg, z );
    auto expect = triple_neg( r );
    CHECK( n == TwistTriple{ expect.plus, expect.minus, expect.dot } );
    for ( auto const& u : all_triples( 2 ) )
    {
      TwistTriple w{ u.plus, u.minus, u.dot };
      auto i = twist_triple_op( A, Connective::imp, z, &w );
      auto e = triple_imp( r, u );
      CHECK( i == TwistTriple{ e.plus, e.minus, e.dot } );
    }
  }
}

TEST_CASE( "isomorphism checks" )
{
  for ( std::size_t n = 1; n <= 3; ++n )
  {
    auto checks = verify_twist_isomorphism( n );
    CHECK_FALSE( checks.empty() );
    for ( auto const& c : checks )
    {
      INFO( n, " ", c.property, " ", c.first_failure );
      CHECK( c.cases > 0 );
      CHECK( c.failures == 0 );
    }
  }
}

TEST_CASE( "assignment space" )
{
  AssignmentSpace S( 3, { "x", "y" } );
  CHECK( S.size() == 9 );
  CHECK( S.decode( 5 ) == std::vector<std::size_t>{ 1, 2 } );
  CHECK( S.encode( { 2, 0 } ) == 6 );
  CHECK( S.update( 5, "x", 0 ) == 2 );
  CHECK( S.update( 5, "z", 0 ) == 5 );

  // Y = {s : s(x) = 0}: hat_forall over x is empty, hat_exists is everything
  Subset Y( 9 );
  for ( std::size_t s = 0; s < 9; ++s )
    if ( S.decode( s )[0] == 0 )
      Y.insert( s );
  CHECK( S.hat_forall( "x", Y ).empty() );
  CHECK( S.hat_exists( "x", Y ) == Subset::full( 9 ) );
  CHECK( S.hat_forall( "y", Y ) == Y );
}

TEST_CASE( "lifted quantifiers commute with dagger" )
{
  for ( auto const& frame : { std::vector<std::string>{ "x" }, std::vector<std::string>{ "x", "y" } } )
  {
    AssignmentSpace S( 2, frame );
    for ( auto const& c : verify_lifted_quantifiers( S ) )
    {
      INFO( c.property, " ", c.first_failure );
      CHECK( c.cases > 0 );
      CHECK( c.failures == 0 );
    }
  }
}

TEST_CASE( "lifted quantifiers on a one-variable frame" )
{
  // frame {x}, domain 2: assignments 0 and 1. φ takes 1 at s0 and 1/2 at s1.
  AssignmentSpace S( 2, { "x" } );
  auto A = S.algebra();
  TwistTriple z{ Subset::from_indices( 2, { 0 } ), A.zero(), Subset::from_indices( 2, { 1 } ) };
  // ∀̃{1, 1/2} = 1 and ∃̃{1, 1/2} = 1 everywhere
  CHECK( lifted_forall( S, "x", z ) == TwistTriple{ A.one(), A.zero(), A.zero() } );
  CHECK( lifted_exists( S, "x", z ) == TwistTriple{ A.one(), A.zero(), A.zero() } );
  // only 1/2 occurs: both quantifiers give 1/2
  TwistTriple h{ A.zero(), A.zero(), A.one() };
  CHECK( lifted_forall( S, "x", h ) == TwistTriple{ A.zero(), A.zero(), A.one() } );
  CHECK( lifted_exists( S, "x", h ) == TwistTriple{ A.zero(), A.zero(), A.one() } );
  // {0, 1/2}: ∀̃ gives 0, ∃̃ gives 1
  TwistTriple m{ A.zero(), Subset::from_indices( 2, { 0 } ), Subset::from_indices( 2, { 1 } ) };
  CHECK( lifted_forall( S, "x", m ) == TwistTriple{ A.zero(), A.one(), A.zero() } );
  CHECK( lifted_exists( S, "x", m ) == TwistTriple{ A.one(), A.zero(), A.zero() } );
}
