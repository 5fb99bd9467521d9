#include <qciore/formula_enum.hpp>
#include <qciore/modeltheory.hpp>

#include <atomic>
#include <limits>

namespace qciore
{

std::vector<std::size_t> embedding_by_name( PartialStructure const& A, PartialStructure const& B )
{
  std::vector<std::size_t> h;
  for ( auto const& name : A.elements )
  {
    auto b = B.element_index( name );
    if ( !b )
      throw ModelTheoryError( "element " + name + " of the smaller structure is missing from the larger one" );
    h.push_back( *b );
  }
  return h;
}

Assignment lift( Assignment const& s, std::vector<std::size_t> const& embedding )
{
  Assignment out;
  for ( auto const& [x, a] : s.values )
    out.values[x] = embedding.at( a );
  out.default_element = embedding.at( s.default_element );
  return out;
}

namespace
{

std::vector<std::string> names_of( PartialStructure const& A, std::vector<std::size_t> const& tuple )
{
  std::vector<std::string> out;
  for ( auto a : tuple )
    out.push_back( A.elements[a] );
  return out;
}

std::string show_tuple( std::vector<std::string> const& t )
{
  std::string s = "(";
  for ( std::size_t i = 0; i < t.size(); ++i )
    s += ( i ? "," : "" ) + t[i];
  return s + ")";
}

std::vector<std::size_t> mapped( std::vector<std::size_t> const& tuple, std::vector<std::size_t> const& h )
{
  std::vector<std::size_t> out;
  for ( auto a : tuple )
    out.push_back( h[a] );
  return out;
}

// Predicate names stored in A, "=" included.
std::vector<std::pair<std::string, std::size_t>> predicate_symbols( Signature const& sig )
{
  std::vector<std::pair<std::string, std::size_t>> out;
  for ( auto const& [name, arity] : sig.predicates )
    out.emplace_back( name, static_cast<std::size_t>( arity ) );
  if ( sig.has_equality )
    out.emplace_back( std::string( equality_symbol ), 2 );
  return out;
}

std::vector<Assignment> assignments_over( std::vector<std::string> const& vars, std::size_t n )
{
  std::vector<Assignment> out{ Assignment{} };
  for ( auto const& x : vars )
  {
    std::vector<Assignment> next;
    for ( auto const& s : out )
      for ( std::size_t a = 0; a < n; ++a )
        next.push_back( s.updated( x, a ) );
    out = std::move( next );
  }
  return out;
}

void require_substructure( PartialStructure const& A, PartialStructure const& B )
{
  auto r = is_substructure( A, B );
  if ( !r.holds )
    throw ModelTheoryError( "not a substructure: " + r.violation->message );
}

} // namespace

SubstructureResult is_substructure( PartialStructure const& A, PartialStructure const& B )
{
  if ( !( A.signature == B.signature ) )
    throw ModelTheoryError( "structures have different signatures" );
  auto h = embedding_by_name( A, B );
  SubstructureResult out;
  auto fail = [&]( std::string symbol, std::string what, std::vector<std::string> tuple, std::string msg ) {
    out.holds = false;
    out.violation = SubstructureViolation{ std::move( symbol ), std::move( what ), std::move( tuple ), std::move( msg ) };
    return out;
  };

  for ( auto const& c : A.signature.constants )
    if ( h[A.constants.at( c )] != B.constants.at( c ) )
      return fail( c, "const", {}, "constant " + c + " differs" );
  for ( auto const& [f, arity] : A.signature.functions )
    for ( std::size_t i = 0; i < A.tuple_count( static_cast<std::size_t>( arity ) ); ++i )
    {
      auto t = A.tuple_at( i, static_cast<std::size_t>( arity ) );
      if ( h[A.apply( f, t )] != B.apply( f, mapped( t, h ) ) )
        return fail( f, "fun", names_of( A, t ), "function " + f + " differs at " + show_tuple( names_of( A, t ) ) );
    }
  for ( auto const& [p, arity] : predicate_symbols( A.signature ) )
    for ( std::size_t i = 0; i < A.tuple_count( arity ); ++i )
    {
      auto t = A.tuple_at( i, arity );
      auto va = A.value( p, t );
      auto vb = B.value( p, mapped( t, h ) );
      if ( va == vb )
        continue;
      // first class, in the order plus, minus, dot, whose membership differs
      std::string cls = ( va == TruthValue::one || vb == TruthValue::one )    ? "plus"
                        : ( va == TruthValue::zero || vb == TruthValue::zero ) ? "minus"
                                                                              : "dot";
      return fail( p, cls, names_of( A, t ), "class " + cls + " of " + p + " differs at " + show_tuple( names_of( A, t ) ) );
    }
  return out;
}

TarskiReport tarski_conditions( PartialStructure const& A, PartialStructure const& B,
                                std::vector<Formula> const& formulas, std::vector<std::string> const& vars )
{
  require_substructure( A, B );
  auto h = embedding_by_name( A, B );
  TarskiReport report;
  for ( auto const& phi : formulas )
    for ( auto const& x : vars )
    {
      auto fv = free_vars( phi );
      fv.erase( x );
      auto ex = Formula::exists( x, phi );
      auto all = Formula::forall( x, phi );
      for ( auto const& s : assignments_over( { fv.begin(), fv.end() }, A.size() ) )
      {
        ++report.checked;
        auto sb = lift( s, h );
        // values of φ in B at s[x:=a] for a in A
        ValueMask seen = 0;
        for ( std::size_t a = 0; a < A.size(); ++a )
          seen |= mask_of( eval_formula( phi, B, sb.updated( x, h[a] ) ) );
        auto has = [&]( TruthValue v ) { return ( seen & mask_of( v ) ) != 0; };
        auto fail = [&]( char const* cond, char const* missing ) {
          report.failures.push_back( { phi, x, cond, s, missing } );
        };

        auto ve = eval_formula( ex, B, sb );
        if ( ve == TruthValue::one )
        {
          if ( !has( TruthValue::one ) && !has( TruthValue::half ) )
            fail( "TC1", "no a in A with phi not in minus" );
          else if ( !has( TruthValue::one ) && !has( TruthValue::zero ) )
            fail( "TC1", "no b in A with phi not in dot" );
        }
        if ( ve != TruthValue::half && !has( TruthValue::one ) && !has( TruthValue::zero ) )
          fail( "TC2", "no a in A with phi not in dot" );
        auto va = eval_formula( all, B, sb );
        if ( va == TruthValue::one && !has( TruthValue::one ) )
          fail( "TC3", "no a in A with phi in plus" );
        if ( va == TruthValue::zero && !has( TruthValue::zero ) )
          fail( "TC4", "no a in A with phi in minus" );
      }
    }
  return report;
}

namespace
{

// Runs check(i) over the pool and keeps the least failing index, so the
// parallel and serial runs report the same formula.
template <typename Check>
BoundedVerdict first_failure( std::vector<Formula> const& pool, std::size_t depth, bool parallel, Check check )
{
  BoundedVerdict out;
  out.depth = depth;
  out.formulas_checked = pool.size();
  std::atomic<std::size_t> best{ std::numeric_limits<std::size_t>::max() };
  std::vector<std::optional<BoundedVerdict>> found( pool.size() );
  std::exception_ptr error;
#pragma omp parallel for schedule( dynamic, 8 ) if ( parallel )
  for ( std::int64_t k = 0; k < static_cast<std::int64_t>( pool.size() ); ++k )
  {
    auto i = static_cast<std::size_t>( k );
    if ( i > best.load() )
      continue;
    try
    {
      found[i] = check( pool[i] );
      if ( found[i] )
      {
        auto cur = best.load();
        while ( i < cur && !best.compare_exchange_weak( cur, i ) )
          ;
      }
    }
    catch ( ... )
    {
#pragma omp critical
      if ( !error )
        error = std::current_exception();
    }
  }
  if ( error )
    std::rethrow_exception( error );
  if ( best.load() == std::numeric_limits<std::size_t>::max() )
    return out;
  auto v = *found[best.load()];
  v.passed = false;
  v.depth = depth;
  v.formulas_checked = pool.size();
  return v;
}

} // namespace

BoundedVerdict elementary_sub_bounded( PartialStructure const& A, PartialStructure const& B, std::size_t max_depth,
                                       std::vector<std::string> const& vars, bool parallel )
{
  require_substructure( A, B );
  auto h = embedding_by_name( A, B );
  auto pool = enumerate_formulas( A.signature, vars, max_depth );
  return first_failure( pool, max_depth, parallel, [&]( Formula const& phi ) -> std::optional<BoundedVerdict> {
    auto fv = free_vars( phi );
    for ( auto const& s : assignments_over( { fv.begin(), fv.end() }, A.size() ) )
    {
      auto va = eval_formula( phi, A, s );
      auto vb = eval_formula( phi, B, lift( s, h ) );
      if ( va != vb )
      {
        BoundedVerdict v;
        v.formula = phi;
        v.assignment = s;
        v.value_a = va;
        v.value_b = vb;
        return v;
      }
    }
    return std::nullopt;
  } );
}

BoundedVerdict elementary_equiv_bounded( PartialStructure const& A, PartialStructure const& B, std::size_t max_depth,
                                         std::vector<std::string> const& vars, bool parallel )
{
  if ( !( A.signature == B.signature ) )
    throw ModelTheoryError( "structures have different signatures" );
  std::vector<Formula> sentences;
  for ( auto const& f : enumerate_formulas( A.signature, vars, max_depth ) )
    if ( is_sentence( f ) )
      sentences.push_back( f );
  return first_failure( sentences, max_depth, parallel, [&]( Formula const& phi ) -> std::optional<BoundedVerdict> {
    if ( sentence_trichotomy( phi, A ) == sentence_trichotomy( phi, B ) )
      return std::nullopt;
    BoundedVerdict v;
    v.formula = phi;
    v.value_a = eval_formula( phi, A, {} );
    v.value_b = eval_formula( phi, B, {} );
    return v;
  } );
}

PartialStructure chain_union( std::vector<PartialStructure> const& chain )
{
  if ( chain.empty() )
    throw ModelTheoryError( "empty chain" );
  for ( std::size_t i = 0; i + 1 < chain.size(); ++i )
    require_substructure( chain[i], chain[i + 1] );

  PartialStructure U;
  U.signature = chain.front().signature;
  for ( auto const& M : chain )
    for ( auto const& e : M.elements )
      if ( !U.element_index( e ) )
        U.elements.push_back( e );
  auto preds = predicate_symbols( U.signature );
  for ( auto const& [p, arity] : preds )
    U.predicates[p] = Triple( U.tuple_count( arity ) );
  for ( auto const& [f, arity] : U.signature.functions )
    U.functions[f].assign( U.tuple_count( static_cast<std::size_t>( arity ) ), 0 );

  for ( auto const& M : chain )
  {
    auto h = embedding_by_name( M, U );
    for ( auto const& [p, arity] : preds )
      for ( std::size_t i = 0; i < M.tuple_count( arity ); ++i )
      {
        auto t = M.tuple_at( i, arity );
        U.predicates[p].set( U.tuple_index( mapped( t, h ) ), M.value( p, t ) );
      }
    for ( auto const& [f, arity] : U.signature.functions )
      for ( std::size_t i = 0; i < M.tuple_count( static_cast<std::size_t>( arity ) ); ++i )
      {
        auto t = M.tuple_at( i, static_cast<std::size_t>( arity ) );
        U.functions[f][U.tuple_index( mapped( t, h ) )] = h[M.apply( f, t )];
      }
  }
  auto h0 = embedding_by_name( chain.front(), U );
  for ( auto const& c : U.signature.constants )
    U.constants[c] = h0[chain.front().constants.at( c )];
  U.validate();
  return U;
}

} // namespace qciore
