#include <qciore/formula_enum.hpp>

namespace qciore
{

namespace
{

void tuples( std::vector<Term> const& terms, std::size_t arity, std::vector<Term>& current,
             std::vector<std::vector<Term>>& out )
{
  if ( current.size() == arity )
  {
    out.push_back( current );
    return;
  }
  for ( auto const& t : terms )
  {
    current.push_back( t );
    tuples( terms, arity, current, out );
    current.pop_back();
  }
}

// Builds depth d from all shallower levels and hands each formula to emit.
template <class Emit>
bool build_level( std::vector<std::vector<Formula>> const& levels, std::vector<std::string> const& vars, Emit&& emit )
{
  auto const& prev = levels.back();
  for ( auto const& f : prev )
    if ( !emit( Formula::negation( f ) ) )
      return false;
  for ( auto const& f : prev )
    if ( !emit( Formula::consistency( f ) ) )
      return false;
  for ( auto const& x : vars )
  {
    for ( auto const& f : prev )
      if ( !emit( Formula::forall( x, f ) ) )
        return false;
    for ( auto const& f : prev )
      if ( !emit( Formula::exists( x, f ) ) )
        return false;
  }
  auto const top = levels.size() - 1;
  for ( int op = 0; op < 3; ++op )
    for ( std::size_t i = 0; i < levels.size(); ++i )
      for ( auto const& a : levels[i] )
        for ( std::size_t j = 0; j < levels.size(); ++j )
        {
          if ( i != top && j != top )
            continue;
          for ( auto const& b : levels[j] )
          {
            auto f = op == 0 ? Formula::conjunction( a, b ) : op == 1 ? Formula::disjunction( a, b ) : Formula::implication( a, b );
            if ( !emit( f ) )
              return false;
          }
        }
  return true;
}

} // namespace

std::vector<Formula> enumerate_atoms( Signature const& sig, std::vector<std::string> const& vars )
{
  std::vector<Term> terms;
  for ( auto const& v : vars )
    terms.push_back( Term::variable( v ) );
  for ( auto const& c : sig.constants )
    terms.push_back( Term::constant( c ) );
  std::vector<Formula> out;
  for ( auto const& [name, arity] : sig.predicates )
  {
    std::vector<std::vector<Term>> args;
    std::vector<Term> cur;
    tuples( terms, static_cast<std::size_t>( arity ), cur, args );
    for ( auto& a : args )
      out.push_back( Formula::atom( name, std::move( a ) ) );
  }
  if ( sig.has_equality )
    for ( auto const& l : terms )
      for ( auto const& r : terms )
        out.push_back( Formula::equality( l, r ) );
  return out;
}

void for_each_formula( Signature const& sig, std::vector<std::string> const& vars, std::size_t max_depth,
                       std::function<bool( Formula const& )> const& visit )
{
  std::vector<std::vector<Formula>> levels{ enumerate_atoms( sig, vars ) };
  for ( auto const& f : levels[0] )
    if ( !visit( f ) )
      return;
  for ( std::size_t d = 1; d <= max_depth; ++d )
  {
    if ( d == max_depth )
    {
      build_level( levels, vars, visit );
      return;
    }
    std::vector<Formula> next;
    build_level( levels, vars, [&]( Formula const& f ) {
      next.push_back( f );
      return true;
    } );
    for ( auto const& f : next )
      if ( !visit( f ) )
        return;
    levels.push_back( std::move( next ) );
  }
}

std::vector<Formula> enumerate_formulas( Signature const& sig, std::vector<std::string> const& vars,
                                         std::size_t max_depth )
{
  std::vector<Formula> out;
  for_each_formula( sig, vars, max_depth, [&]( Formula const& f ) {
    out.push_back( f );
    return true;
  } );
  return out;
}

std::size_t count_formulas( Signature const& sig, std::vector<std::string> const& vars, std::size_t max_depth )
{
  std::vector<std::size_t> level{ enumerate_atoms( sig, vars ).size() };
  std::size_t below = 0; // formulas of depth < current top
  std::size_t total = level[0];
  for ( std::size_t d = 1; d <= max_depth; ++d )
  {
    auto prev = level.back();
    auto upto = below + prev;
    auto next = prev * ( 2 + 2 * vars.size() ) + 3 * ( upto * upto - below * below );
    below = upto;
    level.push_back( next );
    total += next;
  }
  return total;
}

} // namespace qciore
