#include <qciore/triples.hpp>

namespace qciore
{

Triple::Triple( std::size_t carrier ) : plus( carrier ), minus( carrier ), dot( carrier ) {}

Triple::Triple( Subset p, Subset m, Subset d ) : plus( std::move( p ) ), minus( std::move( m ) ), dot( std::move( d ) )
{
  if ( plus.universe() != minus.universe() || plus.universe() != dot.universe() )
    throw TripleError( "triple classes over different carriers" );
}

TruthValue Triple::at( std::size_t x ) const
{
  if ( plus.contains( x ) )
    return TruthValue::one;
  if ( dot.contains( x ) )
    return TruthValue::half;
  return TruthValue::zero;
}

void Triple::set( std::size_t x, TruthValue v )
{
  plus.erase( x );
  minus.erase( x );
  dot.erase( x );
  switch ( v )
  {
  case TruthValue::one: plus.insert( x ); break;
  case TruthValue::half: dot.insert( x ); break;
  case TruthValue::zero: minus.insert( x ); break;
  }
}

bool Triple::is_partition() const
{
  return plus.disjoint_with( minus ) && plus.disjoint_with( dot ) && minus.disjoint_with( dot ) &&
         ( plus | minus | dot ) == Subset::full( carrier() );
}

Triple triple_from_map( std::size_t carrier, std::map<std::size_t, TruthValue> const& values )
{
  Triple r( carrier );
  for ( auto const& [x, v] : values )
  {
    if ( x >= carrier )
      throw TripleError( "point " + std::to_string( x ) + " outside the carrier" );
    r.set( x, v );
  }
  if ( values.size() != carrier )
    throw TripleError( "map is not total on the carrier" );
  return r;
}

std::map<std::size_t, TruthValue> triple_to_map( Triple const& r )
{
  if ( !r.is_partition() )
    throw TripleError( "classes do not partition the carrier" );
  std::map<std::size_t, TruthValue> out;
  for ( std::size_t x = 0; x < r.carrier(); ++x )
    out[x] = r.at( x );
  return out;
}

Triple triple_op( Connective op, Triple const& r, Triple const* u, MatrixSpec const& m )
{
  bool binary = op == Connective::conj || op == Connective::disj || op == Connective::imp;
  bool unary = op == Connective::neg || op == Connective::cons;
  if ( !binary && !unary )
    throw TripleError( "not a propositional connective" );
  if ( binary != ( u != nullptr ) )
    throw TripleError( "wrong number of operands" );
  if ( u && u->carrier() != r.carrier() )
    throw TripleError( "carrier mismatch" );
  Triple out( r.carrier() );
  for ( std::size_t x = 0; x < r.carrier(); ++x )
    out.set( x, binary ? m.binary( op, r.at( x ), u->at( x ) ) : m.unary( op, r.at( x ) ) );
  return out;
}

Triple triple_neg( Triple const& r, MatrixSpec const& m ) { return triple_op( Connective::neg, r, nullptr, m ); }
Triple triple_cons( Triple const& r, MatrixSpec const& m ) { return triple_op( Connective::cons, r, nullptr, m ); }
Triple triple_conj( Triple const& r, Triple const& u, MatrixSpec const& m ) { return triple_op( Connective::conj, r, &u, m ); }
Triple triple_disj( Triple const& r, Triple const& u, MatrixSpec const& m ) { return triple_op( Connective::disj, r, &u, m ); }
Triple triple_imp( Triple const& r, Triple const& u, MatrixSpec const& m ) { return triple_op( Connective::imp, r, &u, m ); }

namespace set_forms
{

Triple conj( Triple const& r, Triple const& u )
{
  return { ( r.plus & u.plus ) | ( r.plus & u.dot ) | ( r.dot & u.plus ), r.minus | u.minus, r.dot & u.dot };
}

Triple disj( Triple const& r, Triple const& u )
{
  return { r.plus | u.plus | ( r.minus & u.dot ) | ( r.dot & u.minus ), r.minus & u.minus, r.dot & u.dot };
}

Triple imp( Triple const& r, Triple const& u )
{
  return { r.minus | ( r.plus & u.plus ) | ( r.plus & u.dot ) | ( r.dot & u.plus ), ( r.plus | r.dot ) & u.minus,
           r.dot & u.dot };
}

Triple neg( Triple const& r )
{
  return { r.minus, r.plus, r.dot };
}

Triple cons( Triple const& r )
{
  return { r.plus | r.minus, r.dot, Subset( r.carrier() ) };
}

Triple p1_neg( Triple const& r )
{
  return { r.minus | r.dot, r.plus, Subset( r.carrier() ) };
}

Triple p1_imp( Triple const& r, Triple const& u )
{
  return { r.minus | u.plus | u.dot, ( r.plus | r.dot ) & u.minus, Subset( r.carrier() ) };
}

} // namespace set_forms

std::vector<Triple> all_triples( std::size_t n )
{
  std::size_t total = 1;
  for ( std::size_t i = 0; i < n; ++i )
    total *= 3;
  std::vector<Triple> out;
  out.reserve( total );
  for ( std::size_t k = 0; k < total; ++k )
  {
    Triple r( n );
    auto code = k;
    for ( std::size_t x = 0; x < n; ++x )
    {
      r.set( x, static_cast<TruthValue>( code % 3 ) );
      code /= 3;
    }
    out.push_back( std::move( r ) );
  }
  return out;
}

} // namespace qciore
