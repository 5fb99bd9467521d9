#include <qciore/twist.hpp>

#include <algorithm>

namespace qciore
{

std::vector<Subset> PowersetAlgebra::elements() const
{
  if ( n_ > 20 )
    throw TwistError( "algebra too large to enumerate" );
  std::vector<Subset> out;
  for ( std::size_t bits = 0; bits < ( std::size_t{ 1 } << n_ ); ++bits )
  {
    Subset s( n_ );
    for ( std::size_t i = 0; i < n_; ++i )
      if ( bits >> i & 1u )
        s.insert( i );
    out.push_back( std::move( s ) );
  }
  return out;
}

bool is_twist_pair( PowersetAlgebra const& A, TwistPair const& z )
{
  return z.first.universe() == A.base_size() && z.second.universe() == A.base_size() &&
         A.join( z.first, z.second ) == A.one();
}

bool is_twist_triple( PowersetAlgebra const& A, TwistTriple const& z )
{
  auto n = A.base_size();
  if ( z.first.universe() != n || z.second.universe() != n || z.third.universe() != n )
    return false;
  return A.meet( z.first, z.second ) == A.zero() && A.meet( z.first, z.third ) == A.zero() &&
         A.meet( z.second, z.third ) == A.zero() && A.join( A.join( z.first, z.second ), z.third ) == A.one();
}

std::vector<TwistPair> all_twist_pairs( PowersetAlgebra const& A )
{
  std::vector<TwistPair> out;
  auto els = A.elements();
  for ( auto const& a : els )
    for ( auto const& b : els )
    {
      TwistPair p{ a, b };
      if ( is_twist_pair( A, p ) )
        out.push_back( p );
    }
  return out;
}

std::vector<TwistTriple> all_twist_triples( PowersetAlgebra const& A )
{
  std::vector<TwistTriple> out;
  auto els = A.elements();
  for ( auto const& a : els )
    for ( auto const& b : els )
    {
      if ( !( A.meet( a, b ) == A.zero() ) )
        continue;
      // the third component is forced
      TwistTriple t{ a, b, A.complement( A.join( a, b ) ) };
      out.push_back( t );
    }
  return out;
}

namespace
{

void check_pair( PowersetAlgebra const& A, TwistPair const& z )
{
  if ( !is_twist_pair( A, z ) )
    throw TwistError( "not a twist pair over this algebra" );
}

void check_triple( PowersetAlgebra const& A, TwistTriple const& z )
{
  if ( !is_twist_triple( A, z ) )
    throw TwistError( "not a twist triple over this algebra" );
}

bool is_binary( Connective op )
{
  return op == Connective::conj || op == Connective::disj || op == Connective::imp;
}

template <class T>
void check_arity( Connective op, T const* w )
{
  bool unary = op == Connective::neg || op == Connective::cons;
  if ( !unary && !is_binary( op ) )
    throw TwistError( "not a propositional connective" );
  if ( is_binary( op ) != ( w != nullptr ) )
    throw TwistError( "wrong number of operands" );
}

} // namespace

TwistPair pair_op( PowersetAlgebra const& A, Connective op, TwistPair const& z, TwistPair const* w )
{
  check_arity( op, w );
  check_pair( A, z );
  if ( w )
    check_pair( A, *w );
  auto const& z1 = z.first;
  auto const& z2 = z.second;
  switch ( op )
  {
  case Connective::neg:
    return { z2, z1 };
  case Connective::cons:
    return { A.complement( A.meet( z1, z2 ) ), A.meet( z1, z2 ) };
  default:
    break;
  }
  auto const& w1 = w->first;
  auto const& w2 = w->second;
  auto both_half = A.meet( A.meet( z1, z2 ), A.meet( w1, w2 ) );
  Subset head;
  if ( op == Connective::conj )
    head = A.meet( z1, w1 );
  else if ( op == Connective::disj )
    head = A.join( z1, w1 );
  else
    head = A.implies( z1, w1 );
  return { head, A.implies( head, both_half ) };
}

TwistTriple twist_triple_op( PowersetAlgebra const& A, Connective op, TwistTriple const& z, TwistTriple const* w )
{
  check_arity( op, w );
  check_triple( A, z );
  if ( w )
    check_triple( A, *w );
  auto const& [z1, z2, z3] = z;
  switch ( op )
  {
  case Connective::neg:
    return { z2, z1, z3 };
  case Connective::cons:
    return { A.join( z1, z2 ), z3, A.zero() };
  default:
    break;
  }
  auto const& [w1, w2, w3] = *w;
  switch ( op )
  {
  case Connective::conj:
    return { A.join( A.join( A.meet( z1, w1 ), A.meet( z1, w3 ) ), A.meet( z3, w1 ) ), A.join( z2, w2 ),
             A.meet( z3, w3 ) };
  case Connective::disj:
    return { A.join( A.join( z1, w1 ), A.join( A.meet( z2, w3 ), A.meet( z3, w2 ) ) ), A.meet( z2, w2 ),
             A.meet( z3, w3 ) };
  default: // implication
    return { A.join( A.join( z2, A.meet( z1, w1 ) ), A.join( A.meet( z1, w3 ), A.meet( z3, w1 ) ) ),
             A.meet( A.join( z1, z3 ), w2 ), A.meet( z3, w3 ) };
  }
}

TwistPair dagger( PowersetAlgebra const& A, TwistTriple const& z )
{
  check_triple( A, z );
  return { A.join( z.first, z.third ), A.join( z.second, z.third ) };
}

TwistTriple ddagger( PowersetAlgebra const& A, TwistPair const& z )
{
  check_pair( A, z );
  return { A.meet( z.first, A.complement( z.second ) ), A.meet( z.second, A.complement( z.first ) ),
           A.meet( z.first, z.second ) };
}

TwistPair bottom_pair( PowersetAlgebra const& A )
{
  return { A.zero(), A.one() };
}

TwistTriple bottom_triple( PowersetAlgebra const& A )
{
  return { A.zero(), A.one(), A.zero() };
}

AssignmentSpace::AssignmentSpace( std::size_t domain_size, std::vector<std::string> frame )
    : d_( domain_size ), frame_( std::move( frame ) )
{
  if ( d_ == 0 )
    throw TwistError( "empty domain" );
  auto sorted = frame_;
  std::sort( sorted.begin(), sorted.end() );
  if ( std::adjacent_find( sorted.begin(), sorted.end() ) != sorted.end() )
    throw TwistError( "repeated frame variable" );
  weight_.assign( frame_.size(), 1 );
  for ( std::size_t i = frame_.size(); i-- > 0; )
  {
    weight_[i] = size_;
    if ( size_ > ( std::size_t{ 1 } << 26 ) / d_ )
      throw TwistError( "assignment space too large" );
    size_ *= d_;
  }
}

std::vector<std::size_t> AssignmentSpace::decode( std::size_t s ) const
{
  std::vector<std::size_t> out( frame_.size() );
  for ( std::size_t i = 0; i < frame_.size(); ++i )
    out[i] = s / weight_[i] % d_;
  return out;
}

std::size_t AssignmentSpace::encode( std::vector<std::size_t> const& values ) const
{
  if ( values.size() != frame_.size() )
    throw TwistError( "assignment length does not match the frame" );
  std::size_t s = 0;
  for ( std::size_t i = 0; i < values.size(); ++i )
  {
    if ( values[i] >= d_ )
      throw TwistError( "element outside the domain" );
    s += values[i] * weight_[i];
  }
  return s;
}

std::size_t AssignmentSpace::update( std::size_t s, std::string const& x, std::size_t a ) const
{
  auto it = std::find( frame_.begin(), frame_.end(), x );
  if ( it == frame_.end() )
    return s;
  auto i = static_cast<std::size_t>( it - frame_.begin() );
  auto current = s / weight_[i] % d_;
  return s - current * weight_[i] + a * weight_[i];
}

Subset AssignmentSpace::hat_forall( std::string const& x, Subset const& Y ) const
{
  if ( Y.universe() != size_ )
    throw TwistError( "set is not over this assignment space" );
  Subset out( size_ );
  for ( std::size_t s = 0; s < size_; ++s )
  {
    bool all = true;
    for ( std::size_t a = 0; a < d_ && all; ++a )
      all = Y.contains( update( s, x, a ) );
    if ( all )
      out.insert( s );
  }
  return out;
}

Subset AssignmentSpace::hat_exists( std::string const& x, Subset const& Y ) const
{
  if ( Y.universe() != size_ )
    throw TwistError( "set is not over this assignment space" );
  Subset out( size_ );
  for ( std::size_t s = 0; s < size_; ++s )
  {
    bool any = false;
    for ( std::size_t a = 0; a < d_ && !any; ++a )
      any = Y.contains( update( s, x, a ) );
    if ( any )
      out.insert( s );
  }
  return out;
}

TwistTriple lifted_forall( AssignmentSpace const& S, std::string const& x, TwistTriple const& z )
{
  auto A = S.algebra();
  check_triple( A, z );
  auto e1 = S.hat_exists( x, z.first );
  auto e2 = S.hat_exists( x, z.second );
  return { e1 - e2, e2, S.hat_forall( x, z.third ) };
}

TwistTriple lifted_exists( AssignmentSpace const& S, std::string const& x, TwistTriple const& z )
{
  auto A = S.algebra();
  check_triple( A, z );
  auto a2 = S.hat_forall( x, z.second );
  auto a3 = S.hat_forall( x, z.third );
  return { A.one() - ( a2 | a3 ), a2, a3 };
}

TwistPair lifted_forall( AssignmentSpace const& S, std::string const& x, TwistPair const& z )
{
  auto A = S.algebra();
  check_pair( A, z );
  auto only1 = z.first - z.second;
  auto only2 = z.second - z.first;
  auto both = S.hat_forall( x, z.first & z.second );
  auto e2 = S.hat_exists( x, only2 );
  return { ( S.hat_exists( x, only1 ) - e2 ) | both, e2 | both };
}

TwistPair lifted_exists( AssignmentSpace const& S, std::string const& x, TwistPair const& z )
{
  auto A = S.algebra();
  check_pair( A, z );
  auto a2 = S.hat_forall( x, z.second - z.first );
  auto both = S.hat_forall( x, z.first & z.second );
  return { ( A.one() - a2 ) | both, a2 | both };
}


namespace
{

std::string show( TwistPair const& z )
{
  return "(" + z.first.to_string() + ", " + z.second.to_string() + ")";
}

std::string show( TwistTriple const& z )
{
  return "(" + z.first.to_string() + ", " + z.second.to_string() + ", " + z.third.to_string() + ")";
}

struct Tally
{
  explicit Tally( std::string property ) { check.property = std::move( property ); }

  TwistCheck check;
  void record( bool ok, std::string const& what )
  {
    ++check.cases;
    if ( ok )
      return;
    if ( check.failures++ == 0 )
      check.first_failure = what;
  }
};

} // namespace

std::vector<TwistCheck> verify_twist_isomorphism( std::size_t n )
{
  PowersetAlgebra A( n );
  auto triples = all_twist_triples( A );
  auto pairs = all_twist_pairs( A );

  Tally inverse( "dagger and ddagger are inverse bijections" );
  for ( auto const& z : triples )
    inverse.record( ddagger( A, dagger( A, z ) ) == z, "ddagger(dagger" + show( z ) + ")" );
  for ( auto const& w : pairs )
    inverse.record( dagger( A, ddagger( A, w ) ) == w, "dagger(ddagger" + show( w ) + ")" );
  inverse.record( triples.size() == pairs.size(), "different numbers of triples and pairs" );

  std::vector<TwistCheck> out{ inverse.check };
  for ( auto op : { Connective::neg, Connective::cons } )
  {
    Tally t( std::string( "dagger preserves " ) + ( op == Connective::neg ? "negation" : "consistency" ) );
    for ( auto const& z : triples )
      t.record( dagger( A, twist_triple_op( A, op, z ) ) == pair_op( A, op, dagger( A, z ) ), show( z ) );
    out.push_back( t.check );
  }
  for ( auto op : { Connective::conj, Connective::disj, Connective::imp } )
  {
    char const* name = op == Connective::conj ? "conjunction" : op == Connective::disj ? "disjunction" : "implication";
    Tally t( std::string( "dagger preserves " ) + name );
    for ( auto const& z : triples )
      for ( auto const& w : triples )
      {
        auto dz = dagger( A, z ), dw = dagger( A, w );
        t.record( dagger( A, twist_triple_op( A, op, z, &w ) ) == pair_op( A, op, dz, &dw ),
                  show( z ) + " " + show( w ) );
      }
    out.push_back( t.check );
  }

  Tally bottom( "bottom is (z & ~z) & @z" );
  for ( auto const& z : triples )
  {
    auto nz = twist_triple_op( A, Connective::neg, z );
    auto cz = twist_triple_op( A, Connective::cons, z );
    auto zz = twist_triple_op( A, Connective::conj, z, &nz );
    bottom.record( twist_triple_op( A, Connective::conj, zz, &cz ) == bottom_triple( A ), show( z ) );
  }
  for ( auto const& w : pairs )
  {
    auto nw = pair_op( A, Connective::neg, w );
    auto cw = pair_op( A, Connective::cons, w );
    auto ww = pair_op( A, Connective::conj, w, &nw );
    bottom.record( pair_op( A, Connective::conj, ww, &cw ) == bottom_pair( A ), show( w ) );
  }
  out.push_back( bottom.check );

  Tally cons( "@z is (z & ~z) -> bottom" );
  auto bot = bottom_pair( A );
  for ( auto const& w : pairs )
  {
    auto nw = pair_op( A, Connective::neg, w );
    auto ww = pair_op( A, Connective::conj, w, &nw );
    cons.record( pair_op( A, Connective::cons, w ) == pair_op( A, Connective::imp, ww, &bot ), show( w ) );
  }
  out.push_back( cons.check );
  return out;
}

std::vector<TwistCheck> verify_lifted_quantifiers( AssignmentSpace const& S )
{
  auto A = S.algebra();
  auto triples = all_twist_triples( A );
  Tally fa( "dagger preserves the lifted universal quantifier" );
  Tally ex( "dagger preserves the lifted existential quantifier" );
  for ( auto const& x : S.frame() )
    for ( auto const& z : triples )
    {
      auto dz = dagger( A, z );
      fa.record( dagger( A, lifted_forall( S, x, z ) ) == lifted_forall( S, x, dz ), x + " " + show( z ) );
      ex.record( dagger( A, lifted_exists( S, x, z ) ) == lifted_exists( S, x, dz ), x + " " + show( z ) );
    }
  return { fa.check, ex.check };
}

} // namespace qciore
