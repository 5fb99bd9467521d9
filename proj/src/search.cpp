#include <qciore/formula_enum.hpp>
#include <qciore/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <random>

#include <omp.h>

namespace qciore
{

// ---------------------------------------------------------------------------
// Enumeration

std::vector<std::string> default_element_names( std::size_t n )
{
  std::vector<std::string> out;
  for ( std::size_t i = 1; i <= n; ++i )
    out.push_back( "e" + std::to_string( i ) );
  return out;
}

StructureEnumerator::StructureEnumerator( Signature sig, std::size_t size, bool equality_normal )
    : sig_( std::move( sig ) ), n_( size ), equality_normal_( equality_normal )
{
  if ( n_ == 0 )
    throw std::invalid_argument( "domain size must be at least 1" );
  sig_.validate();
  if ( equality_normal_ )
    sig_.has_equality = true;

  auto tuples = [&]( int arity ) {
    std::uint64_t t = 1;
    for ( int i = 0; i < arity; ++i )
    {
      if ( t > ( std::uint64_t{ 1 } << 24 ) / n_ )
        throw LimitExceeded( "too many tuples to enumerate" );
      t *= n_;
    }
    return static_cast<std::size_t>( t );
  };
  for ( auto const& [name, arity] : sig_.predicates )
    for ( std::size_t i = 0; i < tuples( arity ); ++i )
      digits_.push_back( { Slot::pred, name, i, 3 } );
  if ( sig_.has_equality )
  {
    std::string eq( equality_symbol );
    if ( equality_normal_ )
      for ( std::size_t a = 0; a < n_; ++a )
        digits_.push_back( { Slot::eq_diag, eq, a * n_ + a, 2 } );
    else
      for ( std::size_t i = 0; i < n_ * n_; ++i )
        digits_.push_back( { Slot::pred, eq, i, 3 } );
  }
  for ( auto const& [name, arity] : sig_.functions )
    for ( std::size_t i = 0; i < tuples( arity ); ++i )
      digits_.push_back( { Slot::fun, name, i, n_ } );
  for ( auto const& name : sig_.constants )
    digits_.push_back( { Slot::constant, name, 0, n_ } );

  std::uint64_t c = 1;
  bool overflow = false;
  for ( auto const& d : digits_ )
  {
    if ( c > std::numeric_limits<std::uint64_t>::max() / d.radix )
    {
      overflow = true;
      break;
    }
    c *= d.radix;
  }
  if ( !overflow )
    count_ = c;
}

std::uint64_t StructureEnumerator::count() const
{
  if ( !count_ )
    throw LimitExceeded( "number of structures of size " + std::to_string( n_ ) + " exceeds 2^64" );
  return *count_;
}

PartialStructure StructureEnumerator::at( std::uint64_t index ) const
{
  if ( index >= count() )
    throw std::out_of_range( "structure index out of range" );
  PartialStructure A;
  A.signature = sig_;
  A.elements = default_element_names( n_ );
  for ( auto const& [name, arity] : sig_.predicates )
    A.predicates[name] = Triple( A.tuple_count( static_cast<std::size_t>( arity ) ) );
  std::string eq( equality_symbol );
  if ( sig_.has_equality )
  {
    // in equality-normal mode every off-diagonal pair is 0
    Triple r( n_ * n_ );
    for ( std::size_t i = 0; i < n_ * n_; ++i )
      r.set( i, TruthValue::zero );
    A.predicates[eq] = r;
  }
  for ( auto const& [name, arity] : sig_.functions )
    A.functions[name].assign( A.tuple_count( static_cast<std::size_t>( arity ) ), 0 );

  for ( std::size_t i = digits_.size(); i-- > 0; )
  {
    auto const& d = digits_[i];
    auto v = index % d.radix;
    index /= d.radix;
    switch ( d.slot )
    {
    case Slot::pred: A.predicates[d.symbol].set( d.position, static_cast<TruthValue>( v ) ); break;
    case Slot::eq_diag: A.predicates[eq].set( d.position, v == 0 ? TruthValue::half : TruthValue::one ); break;
    case Slot::fun: A.functions[d.symbol][d.position] = static_cast<std::size_t>( v ); break;
    case Slot::constant: A.constants[d.symbol] = static_cast<std::size_t>( v ); break;
    }
  }
  return A;
}

void for_each_structure( Signature const& sig, std::size_t size, bool equality_normal,
                         std::function<bool( PartialStructure const& )> const& visit )
{
  StructureEnumerator e( sig, size, equality_normal );
  auto total = e.count();
  for ( std::uint64_t i = 0; i < total; ++i )
    if ( !visit( e.at( i ) ) )
      return;
}

// ---------------------------------------------------------------------------
// Countermodel search

namespace
{

using Clock = std::chrono::steady_clock;

double seconds_since( Clock::time_point start )
{
  return std::chrono::duration<double>( Clock::now() - start ).count();
}

std::vector<std::string> sorted_free_vars( Formula const& f )
{
  auto fv = free_vars( f );
  return { fv.begin(), fv.end() };
}

// Independent confirmation of a hit through the set-level semantics.
void recheck_hit( SearchSpec const& spec, PartialStructure const& A, Assignment const& s )
{
  for ( auto const& g : spec.gamma )
    if ( !formula_triple( g, A, sorted_free_vars( g ) ).minus.empty() )
      throw std::logic_error( "countermodel recheck: premise " + to_string( g ) + " fails" );
  auto frame = sorted_free_vars( spec.refute );
  auto r = formula_triple( spec.refute, A, frame );
  std::size_t idx = 0;
  for ( auto const& x : frame )
    idx = idx * A.size() + s( x );
  if ( !r.minus.contains( idx ) )
    throw std::logic_error( "countermodel recheck: " + to_string( spec.refute ) + " is not refuted" );
}

std::optional<ValidityResult> refutes( SearchSpec const& spec, PartialStructure const& A )
{
  for ( auto const& g : spec.gamma )
    if ( !is_valid_in( g, A ).valid )
      return std::nullopt;
  auto r = is_valid_in( spec.refute, A );
  if ( r.valid )
    return std::nullopt;
  return r;
}

void check_spec( SearchSpec const& spec )
{
  if ( spec.max_size < 1 )
    throw std::invalid_argument( "maximum domain size must be at least 1" );
  if ( !spec.refute.valid() )
    throw std::invalid_argument( "no formula to refute" );
  auto sig = spec.signature;
  if ( spec.equality_normal )
    sig.has_equality = true;
  check_formula( spec.refute, sig );
  for ( auto const& g : spec.gamma )
    check_formula( g, sig );
}

SearchResult found( StructureEnumerator const& e, std::uint64_t idx, ValidityResult const& r, std::uint64_t examined,
                    SearchSpec const& spec )
{
  SearchResult out;
  out.status = SearchResult::Status::found;
  out.model = e.at( idx );
  out.assignment = r.witness;
  out.value = r.witness_value;
  out.size = e.size();
  out.index = idx;
  out.examined = examined;
  recheck_hit( spec, *out.model, *out.assignment );
  return out;
}

SearchResult limit( std::string reason, std::uint64_t examined )
{
  SearchResult out;
  out.status = SearchResult::Status::limit;
  out.limit_reason = std::move( reason );
  out.examined = examined;
  return out;
}

} // namespace

SearchResult find_countermodel( SearchSpec const& spec )
{
  check_spec( spec );
  auto start = Clock::now();
  std::uint64_t examined = 0;
  for ( std::size_t n = 1; n <= spec.max_size; ++n )
  {
    StructureEnumerator e( spec.signature, n, spec.equality_normal );
    auto total = e.count();
    for ( std::uint64_t idx = 0; idx < total; ++idx )
    {
      if ( spec.max_structures && examined >= *spec.max_structures )
        return limit( "structure limit reached", examined );
      if ( spec.time_budget_seconds && examined % 256 == 0 && seconds_since( start ) > *spec.time_budget_seconds )
        return limit( "time budget exhausted", examined );
      ++examined;
      if ( auto r = refutes( spec, e.at( idx ) ) )
        return found( e, idx, *r, examined, spec );
      if ( spec.progress && examined % spec.progress_every == 0 )
        spec.progress( { n, idx, examined, seconds_since( start ) } );
    }
  }
  SearchResult out;
  out.examined = examined;
  out.size = spec.max_size;
  return out;
}

SearchResult find_countermodel_parallel( SearchSpec const& spec )
{
  check_spec( spec );
  constexpr std::uint64_t block = 2048;
  auto start = Clock::now();
  std::uint64_t examined = 0;
  for ( std::size_t n = 1; n <= spec.max_size; ++n )
  {
    StructureEnumerator e( spec.signature, n, spec.equality_normal );
    auto total = e.count();
    for ( std::uint64_t base = 0; base < total; )
    {
      auto len = std::min( block, total - base );
      if ( spec.max_structures )
      {
        if ( examined >= *spec.max_structures )
          return limit( "structure limit reached", examined );
        len = std::min( len, *spec.max_structures - examined );
      }
      if ( spec.time_budget_seconds && seconds_since( start ) > *spec.time_budget_seconds )
        return limit( "time budget exhausted", examined );

      std::atomic<std::uint64_t> best{ std::numeric_limits<std::uint64_t>::max() };
      std::optional<ValidityResult> best_result;
      std::exception_ptr error;
#pragma omp parallel for schedule( dynamic, 16 )
      for ( std::int64_t i = 0; i < static_cast<std::int64_t>( len ); ++i )
      {
        auto idx = base + static_cast<std::uint64_t>( i );
        if ( idx >= best.load() )
          continue;
        try
        {
          if ( auto r = refutes( spec, e.at( idx ) ) )
          {
#pragma omp critical
            if ( idx < best.load() )
            {
              best = idx;
              best_result = r;
            }
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
      if ( best_result )
        return found( e, best.load(), *best_result, examined + ( best.load() - base ) + 1, spec );
      examined += len;
      base += len;
      if ( spec.progress && ( examined / spec.progress_every ) != ( ( examined - len ) / spec.progress_every ) )
        spec.progress( { n, base - 1, examined, seconds_since( start ) } );
    }
  }
  SearchResult out;
  out.examined = examined;
  out.size = spec.max_size;
  return out;
}

BoundedConsequence check_consequence_bounded( Signature const& sig, std::vector<Formula> const& gamma,
                                              Formula const& phi, std::size_t max_size, bool equality_normal )
{
  SearchSpec spec;
  spec.signature = sig;
  spec.max_size = max_size;
  spec.gamma = gamma;
  spec.refute = phi;
  spec.equality_normal = equality_normal;
  BoundedConsequence out;
  out.search = find_countermodel( spec );
  out.refuted = out.search.status == SearchResult::Status::found;
  out.searched_up_to = out.refuted ? out.search.size : max_size;
  return out;
}

// ---------------------------------------------------------------------------
// Soundness harness

std::uint64_t SoundnessReport::total_violations() const
{
  std::uint64_t t = 0;
  for ( auto const& [k, v] : violation_counts )
    t += v;
  return t;
}

namespace
{

// Every formula obtained from f by replacing some free occurrences of x with y.
std::vector<Formula> replacements( Formula const& f, std::string const& x, std::string const& y );

std::vector<Term> term_replacements( Term const& t, std::string const& x, std::string const& y )
{
  if ( t.is_variable() && t.name() == x )
    return { t, Term::variable( y ) };
  if ( t.kind() != Term::Kind::application )
    return { t };
  std::vector<std::vector<Term>> partial{ {} };
  for ( auto const& a : t.args() )
  {
    std::vector<std::vector<Term>> next;
    for ( auto const& prefix : partial )
      for ( auto const& v : term_replacements( a, x, y ) )
      {
        auto p = prefix;
        p.push_back( v );
        next.push_back( std::move( p ) );
      }
    partial = std::move( next );
  }
  std::vector<Term> out;
  for ( auto& args : partial )
    out.push_back( Term::apply( t.name(), std::move( args ) ) );
  return out;
}

std::vector<Formula> replacements( Formula const& f, std::string const& x, std::string const& y )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    std::vector<std::vector<Term>> partial{ {} };
    for ( auto const& a : f.args() )
    {
      std::vector<std::vector<Term>> next;
      for ( auto const& prefix : partial )
        for ( auto const& v : term_replacements( a, x, y ) )
        {
          auto p = prefix;
          p.push_back( v );
          next.push_back( std::move( p ) );
        }
      partial = std::move( next );
    }
    std::vector<Formula> out;
    for ( auto& args : partial )
      out.push_back( Formula::atom( f.predicate(), std::move( args ) ) );
    return out;
  }
  case Connective::neg:
  case Connective::cons:
  {
    std::vector<Formula> out;
    for ( auto const& b : replacements( f.body(), x, y ) )
      out.push_back( f.kind() == Connective::neg ? Formula::negation( b ) : Formula::consistency( b ) );
    return out;
  }
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
  {
    std::vector<Formula> out;
    auto ls = replacements( f.left(), x, y );
    auto rs = replacements( f.right(), x, y );
    for ( auto const& l : ls )
      for ( auto const& r : rs )
        out.push_back( f.kind() == Connective::conj   ? Formula::conjunction( l, r )
                       : f.kind() == Connective::disj ? Formula::disjunction( l, r )
                                                      : Formula::implication( l, r ) );
    return out;
  }
  case Connective::forall:
  case Connective::exists:
  {
    if ( f.variable() == x )
      return { f };
    std::vector<Formula> out;
    for ( auto const& b : replacements( f.body(), x, y ) )
      out.push_back( f.kind() == Connective::forall ? Formula::forall( f.variable(), b )
                                                    : Formula::exists( f.variable(), b ) );
    return out;
  }
  }
  return { f };
}

std::vector<Assignment> frame_assignments( std::vector<std::string> const& vars, std::size_t n )
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

struct DirectInstance
{
  std::string schema;
  Formula formula;
};

struct RuleInstance
{
  std::string rule;
  std::size_t premise_a, premise_b; // pool indices
  std::size_t var = 0;              // index into vars for the quantifier rules
};

struct Outcome
{
  std::vector<std::string> failed; // schema ids with at least one failing instance here
  std::vector<Violation> witnesses;
  std::uint64_t rechecked = 0;
  std::uint64_t mismatches = 0;
};

struct Harness
{
  SoundnessOptions const& opt;
  std::vector<Formula> pool;
  std::vector<NamedSchema> const& prop = propositional_axioms();
  std::vector<DirectInstance> direct;
  std::vector<RuleInstance> rules;

  TruthValue imp( TruthValue a, TruthValue b ) const { return opt.matrix.binary( Connective::imp, a, b ); }

  Outcome run_structure( PartialStructure const& A ) const
  {
    Outcome out;
    auto points = frame_assignments( opt.vars, A.size() );
    auto const np = points.size();

    // pool values, assignment-major
    std::vector<TruthValue> V( pool.size() * np );
    for ( std::size_t f = 0; f < pool.size(); ++f )
      for ( std::size_t s = 0; s < np; ++s )
        V[f * np + s] = eval_formula( pool[f], A, points[s], opt.matrix );

    // propositional schemas through the values each assignment realises
    for ( auto const& schema : prop )
    {
      auto ls = letters( schema.formula );
      std::vector<std::string> names( ls.begin(), ls.end() );
      bool failed = false;
      for ( std::size_t s = 0; s < np && !failed; ++s )
      {
        std::vector<std::optional<std::size_t>> first_with( 3 );
        for ( std::size_t f = 0; f < pool.size(); ++f )
        {
          auto v = index( V[f * np + s] );
          if ( !first_with[v] )
            first_with[v] = f;
        }
        std::vector<TruthValue> realised;
        for ( auto v : all_truth_values )
          if ( first_with[index( v )] )
            realised.push_back( v );
        if ( realised.empty() )
          continue;
        std::vector<std::size_t> digit( names.size(), 0 );
        while ( true )
        {
          Valuation val;
          for ( std::size_t i = 0; i < names.size(); ++i )
            val[names[i]] = realised[digit[i]];
          auto value = eval_prop( schema.formula, val, opt.matrix );
          if ( !designated( value ) )
          {
            failed = true;
            std::map<std::string, Formula> binding;
            for ( std::size_t i = 0; i < names.size(); ++i )
              binding[names[i]] = pool[*first_with[index( realised[digit[i]] )]];
            auto instance = instantiate_letters( schema.formula, binding );
            auto real = eval_formula( instance, A, points[s], opt.matrix );
            ++out.rechecked;
            if ( real != value )
              ++out.mismatches;
            out.witnesses.push_back( { schema.id, instance, {}, A, points[s], real } );
            break;
          }
          std::size_t i = names.size();
          while ( i > 0 && ++digit[i - 1] == realised.size() )
            digit[--i] = 0;
          if ( i == 0 )
            break;
        }
      }
      if ( failed )
        out.failed.push_back( schema.id );
    }

    // quantifier and equality schemas, evaluated directly
    std::string last_failed;
    for ( auto const& inst : direct )
    {
      if ( inst.schema.rfind( "Eq", 0 ) == 0 && !A.signature.has_equality )
        continue;
      if ( inst.schema.rfind( "Eq", 0 ) != 0 && A.signature.has_equality )
        continue;
      for ( std::size_t s = 0; s < np; ++s )
      {
        auto v = eval_formula( inst.formula, A, points[s], opt.matrix );
        if ( !designated( v ) )
        {
          if ( last_failed != inst.schema &&
               std::find( out.failed.begin(), out.failed.end(), inst.schema ) == out.failed.end() )
            out.failed.push_back( inst.schema );
          last_failed = inst.schema;
          out.witnesses.push_back( { inst.schema, inst.formula, {}, A, points[s], v } );
          break;
        }
        if ( is_sentence( inst.formula ) )
          break;
      }
    }
    if ( A.signature.has_equality )
      return out;

    // rules on pool pairs
    std::vector<std::vector<TruthValue>> QA( opt.vars.size() ), QE( opt.vars.size() );
    if ( !rules.empty() )
      for ( std::size_t x = 0; x < opt.vars.size(); ++x )
      {
        QA[x].resize( pool.size() * np );
        QE[x].resize( pool.size() * np );
        for ( std::size_t f = 0; f < pool.size(); ++f )
          for ( std::size_t s = 0; s < np; ++s )
          {
            QA[x][f * np + s] = eval_formula( Formula::forall( opt.vars[x], pool[f] ), A, points[s], opt.matrix );
            QE[x][f * np + s] = eval_formula( Formula::exists( opt.vars[x], pool[f] ), A, points[s], opt.matrix );
          }
      }
    std::vector<char> valid( pool.size() );
    for ( std::size_t f = 0; f < pool.size(); ++f )
    {
      valid[f] = 1;
      for ( std::size_t s = 0; s < np; ++s )
        valid[f] &= designated( V[f * np + s] );
    }
    std::vector<std::string> rule_failed;
    for ( auto const& r : rules )
    {
      auto a = r.premise_a, b = r.premise_b;
      bool premise = true, conclusion = true;
      std::size_t bad = 0;
      Formula concl;
      std::vector<Formula> premises;
      if ( r.rule == "MP" )
      {
        premise = valid[a];
        for ( std::size_t s = 0; s < np && premise; ++s )
          premise = designated( imp( V[a * np + s], V[b * np + s] ) );
        if ( !premise )
          continue;
        conclusion = valid[b];
        if ( !conclusion )
          for ( bad = 0; designated( V[b * np + bad] ); ++bad )
            ;
        concl = pool[b];
        premises = { pool[a], Formula::implication( pool[a], pool[b] ) };
      }
      else
      {
        for ( std::size_t s = 0; s < np && premise; ++s )
          premise = designated( imp( V[a * np + s], V[b * np + s] ) );
        if ( !premise )
          continue;
        bool universal = r.rule == "forall-in";
        for ( std::size_t s = 0; s < np && conclusion; ++s )
        {
          auto v = universal ? imp( V[a * np + s], QA[r.var][b * np + s] ) : imp( QE[r.var][a * np + s], V[b * np + s] );
          if ( !designated( v ) )
          {
            conclusion = false;
            bad = s;
          }
        }
        auto const& x = opt.vars[r.var];
        concl = universal ? Formula::implication( pool[a], Formula::forall( x, pool[b] ) )
                          : Formula::implication( Formula::exists( x, pool[a] ), pool[b] );
        premises = { Formula::implication( pool[a], pool[b] ) };
      }
      if ( conclusion )
        continue;
      auto real = eval_formula( concl, A, points[bad], opt.matrix );
      ++out.rechecked;
      if ( designated( real ) )
        ++out.mismatches;
      if ( std::find( rule_failed.begin(), rule_failed.end(), r.rule ) == rule_failed.end() )
        rule_failed.push_back( r.rule );
      out.witnesses.push_back( { r.rule, concl, premises, A, points[bad], real } );
    }
    out.failed.insert( out.failed.end(), rule_failed.begin(), rule_failed.end() );
    return out;
  }
};

} // namespace

SoundnessReport soundness_harness( SoundnessOptions const& opt )
{
  Harness h{ opt, enumerate_formulas( opt.signature, opt.vars, opt.depth ), propositional_axioms(), {}, {} };
  SoundnessReport report;

  // propositional schemas: |pool|^letters instances each
  for ( auto const& s : h.prop )
  {
    std::uint64_t c = 1;
    for ( std::size_t i = 0; i < letters( s.formula ).size(); ++i )
      c *= h.pool.size();
    report.instances[s.id] = c;
  }

  std::vector<Term> terms;
  for ( auto const& x : opt.vars )
    terms.push_back( Term::variable( x ) );
  for ( auto const& c : opt.signature.constants )
    terms.push_back( Term::constant( c ) );
  auto add = [&]( std::string const& id, Formula f ) {
    h.direct.push_back( { id, std::move( f ) } );
    ++report.instances[id];
  };
  for ( auto const& phi : h.pool )
    for ( auto const& x : opt.vars )
      for ( auto const& t : terms )
        if ( is_free_for( t, x, phi ) )
          add( "Ax11", Formula::implication( substitute( phi, x, t ), Formula::exists( x, phi ) ) );
  for ( auto const& phi : h.pool )
    for ( auto const& x : opt.vars )
      for ( auto const& t : terms )
        if ( is_free_for( t, x, phi ) )
          add( "Ax12", Formula::implication( Formula::forall( x, phi ), substitute( phi, x, t ) ) );
  for ( auto const& phi : h.pool )
    for ( auto const& x : opt.vars )
    {
      auto c = Formula::consistency( phi );
      add( "Ax13", Formula::implication( Formula::consistency( Formula::exists( x, phi ) ), Formula::exists( x, c ) ) );
      add( "Ax14", Formula::implication( Formula::consistency( Formula::forall( x, phi ) ), Formula::exists( x, c ) ) );
      add( "Ax15", Formula::implication( Formula::exists( x, c ), Formula::consistency( Formula::exists( x, phi ) ) ) );
      add( "Ax16", Formula::implication( Formula::exists( x, c ), Formula::consistency( Formula::forall( x, phi ) ) ) );
    }

  auto eq_sig = opt.signature;
  eq_sig.has_equality = true;
  if ( opt.include_equality )
  {
    for ( auto const& x : opt.vars )
      add( "Eq1", Formula::forall( x, Formula::equality( Term::variable( x ), Term::variable( x ) ) ) );
    auto eq_pool = enumerate_formulas( eq_sig, opt.vars, opt.depth );
    for ( auto const& x : opt.vars )
      for ( auto const& y : opt.vars )
        for ( auto const& phi : eq_pool )
        {
          if ( !is_free_for( Term::variable( y ), x, phi ) )
            continue;
          auto head = Formula::equality( Term::variable( x ), Term::variable( y ) );
          for ( auto const& variant : replacements( phi, x, y ) )
            add( "Eq2", Formula::forall( x, Formula::forall( y, Formula::implication(
                                                                  head, Formula::implication( phi, variant ) ) ) ) );
        }
  }

  if ( opt.include_rules )
  {
    for ( std::size_t a = 0; a < h.pool.size(); ++a )
      for ( std::size_t b = 0; b < h.pool.size(); ++b )
      {
        h.rules.push_back( { "MP", a, b, 0 } );
        ++report.instances["MP"];
        for ( std::size_t x = 0; x < opt.vars.size(); ++x )
        {
          if ( !free_vars( h.pool[a] ).contains( opt.vars[x] ) )
          {
            h.rules.push_back( { "forall-in", a, b, x } );
            ++report.instances["forall-in"];
          }
          if ( !free_vars( h.pool[b] ).contains( opt.vars[x] ) )
          {
            h.rules.push_back( { "exists-in", a, b, x } );
            ++report.instances["exists-in"];
          }
        }
      }
  }

  std::vector<PartialStructure> structures;
  for ( std::size_t n = 1; n <= opt.max_size; ++n )
  {
    for_each_structure( opt.signature, n, false, [&]( PartialStructure const& A ) {
      structures.push_back( A );
      return true;
    } );
    if ( opt.include_equality )
      for_each_structure( eq_sig, n, true, [&]( PartialStructure const& A ) {
        structures.push_back( A );
        return true;
      } );
  }
  report.structures = structures.size();

  std::vector<Outcome> outcomes( structures.size() );
  std::exception_ptr error;
#pragma omp parallel for schedule( dynamic, 4 ) if ( opt.parallel )
  for ( std::int64_t i = 0; i < static_cast<std::int64_t>( structures.size() ); ++i )
  {
    try
    {
      outcomes[static_cast<std::size_t>( i )] = h.run_structure( structures[static_cast<std::size_t>( i )] );
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

  std::map<std::string, std::size_t> recorded;
  for ( auto& o : outcomes )
  {
    for ( auto const& id : o.failed )
      ++report.violation_counts[id];
    for ( auto& w : o.witnesses )
      if ( recorded[w.schema]++ < opt.max_recorded_violations )
        report.violations.push_back( std::move( w ) );
    report.rechecked += o.rechecked;
    report.recheck_mismatches += o.mismatches;
  }

  // sampled propositional instances, evaluated on their real trees and
  // compared with the compositional value
  std::mt19937_64 rng( opt.seed );
  std::vector<std::size_t> plain;
  for ( std::size_t i = 0; i < structures.size(); ++i )
    if ( !structures[i].signature.has_equality )
      plain.push_back( i );
  if ( !h.pool.empty() && !plain.empty() )
    for ( auto const& schema : h.prop )
    {
      auto ls = letters( schema.formula );
      for ( std::size_t k = 0; k < opt.recheck_samples; ++k )
      {
        std::map<std::string, Formula> binding;
        std::vector<std::size_t> picks;
        for ( auto const& l : ls )
        {
          auto f = std::uniform_int_distribution<std::size_t>( 0, h.pool.size() - 1 )( rng );
          picks.push_back( f );
          binding[l] = h.pool[f];
        }
        auto const& A = structures[plain[std::uniform_int_distribution<std::size_t>( 0, plain.size() - 1 )( rng )]];
        auto instance = instantiate_letters( schema.formula, binding );
        for ( auto const& s : frame_assignments( opt.vars, A.size() ) )
        {
          Valuation val;
          std::size_t i = 0;
          for ( auto const& l : ls )
            val[l] = eval_formula( h.pool[picks[i++]], A, s, opt.matrix );
          ++report.rechecked;
          if ( eval_formula( instance, A, s, opt.matrix ) != eval_prop( schema.formula, val, opt.matrix ) )
            ++report.recheck_mismatches;
        }
      }
    }
  return report;
}

} // namespace qciore
