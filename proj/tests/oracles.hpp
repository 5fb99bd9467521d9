#pragma once

// Test-only reference material, written out independently of the library:
// the truth tables as printed, the printed set formulas that disagree with
// them, and a direct evaluator that shares no code with eval_formula.

#include <qciore/structures.hpp>

#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oracle
{

using qciore::TruthValue;

inline TruthValue tv( std::string_view s )
{
  if ( s == "1" )
    return TruthValue::one;
  if ( s == "1/2" )
    return TruthValue::half;
  if ( s == "0" )
    return TruthValue::zero;
  throw std::invalid_argument( "oracle: bad value" );
}

// Rows and columns in the printed order 1, 1/2, 0.
using Grid = std::array<std::array<char const*, 3>, 3>;
using Column = std::array<char const*, 3>;
inline constexpr std::array<char const*, 3> order = { "1", "1/2", "0" };

inline Grid const ciore_and = { { { "1", "1", "0" }, { "1", "1/2", "0" }, { "0", "0", "0" } } };
inline Grid const ciore_or = { { { "1", "1", "1" }, { "1", "1/2", "1" }, { "1", "1", "0" } } };
inline Grid const ciore_imp = { { { "1", "1", "0" }, { "1", "1/2", "0" }, { "1", "1", "1" } } };
inline Column const ciore_neg = { "0", "1/2", "1" };
inline Column const ciore_cons = { "1", "0", "1" };

inline Grid const p1_imp = { { { "1", "1", "0" }, { "1", "1", "0" }, { "1", "1", "1" } } };
inline Column const p1_neg = { "0", "1", "1" };

inline Grid const lfi1_and = { { { "1", "1/2", "0" }, { "1/2", "1/2", "0" }, { "0", "0", "0" } } };
inline Grid const lfi1_or = { { { "1", "1", "1" }, { "1", "1/2", "1/2" }, { "1", "1/2", "0" } } };
inline Grid const lfi1_imp = { { { "1", "1/2", "0" }, { "1", "1/2", "0" }, { "1", "1", "1" } } };

inline std::size_t row_of( TruthValue v )
{
  return v == TruthValue::one ? 0 : v == TruthValue::half ? 1 : 2;
}

inline TruthValue lookup( Grid const& g, TruthValue a, TruthValue b )
{
  return tv( g[row_of( a )][row_of( b )] );
}

inline TruthValue lookup( Column const& c, TruthValue a )
{
  return tv( c[row_of( a )] );
}

// Quantifier functions, case by case as defined.
inline TruthValue forall_tilde( std::set<TruthValue> const& Y )
{
  if ( Y.contains( TruthValue::zero ) )
    return TruthValue::zero;
  if ( Y == std::set<TruthValue>{ TruthValue::half } )
    return TruthValue::half;
  return TruthValue::one;
}

inline TruthValue exists_tilde( std::set<TruthValue> const& Y )
{
  if ( Y == std::set<TruthValue>{ TruthValue::half } )
    return TruthValue::half;
  if ( Y == std::set<TruthValue>{ TruthValue::zero } )
    return TruthValue::zero;
  return TruthValue::one;
}

// Classes of a triple as plain sets of points.
struct Classes
{
  std::set<std::size_t> plus, minus, dot;
};

inline std::set<std::size_t> cup( std::set<std::size_t> a, std::set<std::size_t> const& b )
{
  a.insert( b.begin(), b.end() );
  return a;
}

inline std::set<std::size_t> cap( std::set<std::size_t> const& a, std::set<std::size_t> const& b )
{
  std::set<std::size_t> out;
  for ( auto x : a )
    if ( b.contains( x ) )
      out.insert( x );
  return out;
}

// The printed disjunction of triples: (r+ ∪ u+, r- ∩ u-, (r. ∩ u-) ∪ (r- ∩ u.) ∪ (r. ∩ u.)).
inline Classes printed_triple_or( Classes const& r, Classes const& u )
{
  return { cup( r.plus, u.plus ), cap( r.minus, u.minus ),
           cup( cup( cap( r.dot, u.minus ), cap( r.minus, u.dot ) ), cap( r.dot, u.dot ) ) };
}

// The printed implication of triples: (r- ∪ u+, (r+ ∪ r.) ∩ u-, (r+ ∪ r.) ∩ u.).
inline Classes printed_triple_imp( Classes const& r, Classes const& u )
{
  return { cup( r.minus, u.plus ), cap( cup( r.plus, r.dot ), u.minus ), cap( cup( r.plus, r.dot ), u.dot ) };
}

// The printed plus class of a conjunction in the set characterization of
// the semantics: (φ+ ∪ ψ+) ∩ (φ+ ∪ ψ.) ∩ (φ. ∪ ψ+).
inline std::set<std::size_t> printed_conj_plus( Classes const& f, Classes const& g )
{
  return cap( cap( cup( f.plus, g.plus ), cup( f.plus, g.dot ) ), cup( f.dot, g.plus ) );
}

// Direct evaluator over the printed CIORE tables.
class Evaluator
{
public:
  explicit Evaluator( qciore::PartialStructure const& A ) : A_( A ) {}

  TruthValue operator()( qciore::Formula const& f, std::map<std::string, std::size_t> s ) const
  {
    using qciore::Connective;
    switch ( f.kind() )
    {
    case Connective::atom:
    {
      std::size_t idx = 0;
      for ( auto const& t : f.args() )
        idx = idx * A_.size() + term( t, s );
      auto const& r = A_.predicates.at( f.predicate() );
      if ( r.plus.contains( idx ) )
        return TruthValue::one;
      if ( r.dot.contains( idx ) )
        return TruthValue::half;
      return TruthValue::zero;
    }
    case Connective::neg: return lookup( ciore_neg, ( *this )( f.body(), s ) );
    case Connective::cons: return lookup( ciore_cons, ( *this )( f.body(), s ) );
    case Connective::conj: return lookup( ciore_and, ( *this )( f.left(), s ), ( *this )( f.right(), s ) );
    case Connective::disj: return lookup( ciore_or, ( *this )( f.left(), s ), ( *this )( f.right(), s ) );
    case Connective::imp: return lookup( ciore_imp, ( *this )( f.left(), s ), ( *this )( f.right(), s ) );
    case Connective::forall:
    case Connective::exists:
    {
      std::set<TruthValue> Y;
      for ( std::size_t a = 0; a < A_.size(); ++a )
      {
        auto t = s;
        t[f.variable()] = a;
        Y.insert( ( *this )( f.body(), t ) );
      }
      return f.kind() == Connective::forall ? forall_tilde( Y ) : exists_tilde( Y );
    }
    }
    throw std::logic_error( "oracle: unknown connective" );
  }

private:
  std::size_t term( qciore::Term const& t, std::map<std::string, std::size_t> const& s ) const
  {
    switch ( t.kind() )
    {
    case qciore::Term::Kind::variable: return s.at( t.name() );
    case qciore::Term::Kind::constant: return A_.constants.at( t.name() );
    case qciore::Term::Kind::application:
    {
      std::size_t idx = 0;
      for ( auto const& a : t.args() )
        idx = idx * A_.size() + term( a, s );
      return A_.functions.at( t.name() ).at( idx );
    }
    }
    throw std::logic_error( "oracle: unknown term" );
  }

  qciore::PartialStructure const& A_;
};

} // namespace oracle
