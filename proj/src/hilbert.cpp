#include <qciore/hilbert.hpp>
#include <qciore/matrix3.hpp>
#include <qciore/parser.hpp>

#include <algorithm>

namespace qciore
{

// ---------------------------------------------------------------------------
// Schema table

namespace
{

using PK = Pattern::Kind;

Pattern meta( std::string name )
{
  Pattern p;
  p.kind = PK::meta;
  p.name = std::move( name );
  return p;
}

Pattern node( PK kind, std::vector<Pattern> kids )
{
  Pattern p;
  p.kind = kind;
  p.kids = std::move( kids );
  return p;
}

Pattern neg( Pattern a ) { return node( PK::neg, { std::move( a ) } ); }
Pattern cons( Pattern a ) { return node( PK::cons, { std::move( a ) } ); }
Pattern imp( Pattern a, Pattern b ) { return node( PK::imp, { std::move( a ), std::move( b ) } ); }

Pattern quant( PK kind, std::string slot, Pattern body )
{
  auto p = node( kind, { std::move( body ) } );
  p.var = std::move( slot );
  return p;
}

Pattern forall( std::string slot, Pattern body ) { return quant( PK::forall, std::move( slot ), std::move( body ) ); }
Pattern exists( std::string slot, Pattern body ) { return quant( PK::exists, std::move( slot ), std::move( body ) ); }

Pattern equality( std::string a, std::string b )
{
  Pattern p;
  p.kind = PK::equality;
  p.var = std::move( a );
  p.other = std::move( b );
  return p;
}

Pattern subst( std::string phi, std::string x, std::string t )
{
  Pattern p;
  p.kind = PK::subst;
  p.name = std::move( phi );
  p.var = std::move( x );
  p.other = std::move( t );
  return p;
}

Pattern replace_some( std::string phi, std::string x, std::string y )
{
  Pattern p;
  p.kind = PK::replace_some;
  p.name = std::move( phi );
  p.var = std::move( x );
  p.other = std::move( y );
  return p;
}

Pattern from_formula( Formula const& f )
{
  switch ( f.kind() )
  {
  case Connective::atom:
    if ( !f.is_letter() )
      throw std::logic_error( "propositional schema with a non-letter atom" );
    return meta( f.predicate() );
  case Connective::neg: return neg( from_formula( f.body() ) );
  case Connective::cons: return cons( from_formula( f.body() ) );
  case Connective::conj: return node( PK::conj, { from_formula( f.left() ), from_formula( f.right() ) } );
  case Connective::disj: return node( PK::disj, { from_formula( f.left() ), from_formula( f.right() ) } );
  case Connective::imp: return imp( from_formula( f.left() ), from_formula( f.right() ) );
  default: throw std::logic_error( "propositional schema with a quantifier" );
  }
}

std::vector<AxiomSchema> build_schemas()
{
  std::vector<AxiomSchema> out;
  for ( auto const& s : propositional_axioms() )
    out.push_back( { s.id, from_formula( s.formula ), to_string( s.formula ) } );
  auto phi = meta( "phi" );
  out.push_back( { "Ax11", imp( subst( "phi", "x", "t" ), exists( "x", phi ) ), "phi(t/x) -> exists x. phi" } );
  out.push_back( { "Ax12", imp( forall( "x", phi ), subst( "phi", "x", "t" ) ), "(forall x. phi) -> phi(t/x)" } );
  out.push_back( { "Ax13", imp( cons( exists( "x", phi ) ), exists( "x", cons( phi ) ) ),
                   "@(exists x. phi) -> exists x. @phi" } );
  out.push_back( { "Ax14", imp( cons( forall( "x", phi ) ), exists( "x", cons( phi ) ) ),
                   "@(forall x. phi) -> exists x. @phi" } );
  out.push_back( { "Ax15", imp( exists( "x", cons( phi ) ), cons( exists( "x", phi ) ) ),
                   "(exists x. @phi) -> @(exists x. phi)" } );
  out.push_back( { "Ax16", imp( exists( "x", cons( phi ) ), cons( forall( "x", phi ) ) ),
                   "(exists x. @phi) -> @(forall x. phi)" } );
  out.push_back( { "Eq1", forall( "x", equality( "x", "x" ) ), "forall x. x = x" } );
  out.push_back( { "Eq2",
                   forall( "x", forall( "y", imp( equality( "x", "y" ), imp( phi, replace_some( "phi", "x", "y" ) ) ) ) ),
                   "forall x. forall y. (x = y -> (phi -> phi[x~y]))" } );
  return out;
}

} // namespace

std::vector<AxiomSchema> const& axiom_schemas()
{
  static std::vector<AxiomSchema> const schemas = build_schemas();
  return schemas;
}

AxiomSchema const* find_schema( std::string_view id )
{
  for ( auto const& s : axiom_schemas() )
    if ( s.id == id )
      return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Matching

namespace
{

struct Deferred
{
  Pattern const* pattern;
  Formula target;
};

bool bind_var( MatchEnv& env, std::string const& slot, std::string const& name )
{
  auto [it, inserted] = env.vars.emplace( slot, name );
  return inserted || it->second == name;
}

bool match( Pattern const& p, Formula const& g, MatchEnv& env, std::vector<Deferred>& later )
{
  switch ( p.kind )
  {
  case PK::meta:
  {
    auto [it, inserted] = env.metas.emplace( p.name, g );
    return inserted || it->second == g;
  }
  case PK::neg:
    return g.kind() == Connective::neg && match( p.kids[0], g.body(), env, later );
  case PK::cons:
    return g.kind() == Connective::cons && match( p.kids[0], g.body(), env, later );
  case PK::conj:
  case PK::disj:
  case PK::imp:
  {
    auto want = p.kind == PK::conj ? Connective::conj : p.kind == PK::disj ? Connective::disj : Connective::imp;
    return g.kind() == want && match( p.kids[0], g.left(), env, later ) && match( p.kids[1], g.right(), env, later );
  }
  case PK::forall:
  case PK::exists:
  {
    auto want = p.kind == PK::forall ? Connective::forall : Connective::exists;
    return g.kind() == want && bind_var( env, p.var, g.variable() ) && match( p.kids[0], g.body(), env, later );
  }
  case PK::equality:
  {
    if ( !g.is_atom() || g.predicate() != equality_symbol || g.args().size() != 2 )
      return false;
    auto const& l = g.args()[0];
    auto const& r = g.args()[1];
    return l.is_variable() && r.is_variable() && bind_var( env, p.var, l.name() ) && bind_var( env, p.other, r.name() );
  }
  case PK::subst:
  case PK::replace_some:
    later.push_back( { &p, g } );
    return true;
  }
  return false;
}

// Finds t with phi(t/x) = g by walking both trees together.
bool find_term( Term const& a, Term const& b, std::string const& x, bool x_bound, std::optional<Term>& t )
{
  if ( a.is_variable() && a.name() == x && !x_bound )
  {
    if ( t )
      return *t == b;
    t = b;
    return true;
  }
  if ( a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size() )
    return false;
  for ( std::size_t i = 0; i < a.args().size(); ++i )
    if ( !find_term( a.args()[i], b.args()[i], x, x_bound, t ) )
      return false;
  return true;
}

bool find_subst( Formula const& phi, Formula const& g, std::string const& x, std::optional<Term>& t )
{
  if ( phi.kind() != g.kind() )
    return false;
  switch ( phi.kind() )
  {
  case Connective::atom:
  {
    if ( phi.predicate() != g.predicate() || phi.args().size() != g.args().size() )
      return false;
    for ( std::size_t i = 0; i < phi.args().size(); ++i )
      if ( !find_term( phi.args()[i], g.args()[i], x, false, t ) )
        return false;
    return true;
  }
  case Connective::neg:
  case Connective::cons:
    return find_subst( phi.body(), g.body(), x, t );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return find_subst( phi.left(), g.left(), x, t ) && find_subst( phi.right(), g.right(), x, t );
  case Connective::forall:
  case Connective::exists:
    if ( phi.variable() != g.variable() )
      return false;
    if ( phi.variable() == x )
      return phi.body() == g.body();
    return find_subst( phi.body(), g.body(), x, t );
  }
  return false;
}

MatchResult resolve( Deferred const& d, MatchEnv& env )
{
  MatchResult r;
  auto const& p = *d.pattern;
  auto phi_it = env.metas.find( p.name );
  auto x_it = env.vars.find( p.var );
  if ( phi_it == env.metas.end() || x_it == env.vars.end() )
    throw std::logic_error( "schema leaves a deferred constraint unbound" );
  auto const& phi = phi_it->second;
  auto const& x = x_it->second;

  if ( p.kind == PK::subst )
  {
    std::optional<Term> t;
    if ( !find_subst( phi, d.target, x, t ) )
    {
      r.detail = to_string( d.target ) + " is not " + to_string( phi ) + " with a term for " + x;
      return r;
    }
    if ( !t )
      t = Term::variable( x ); // x not free in phi: any term works
    auto [it, inserted] = env.terms.emplace( p.other, *t );
    if ( !inserted && !( it->second == *t ) )
      return r;
    if ( !is_free_for( *t, x, phi ) )
    {
      r.status = MatchResult::Status::side_condition;
      r.detail = to_string( *t ) + " is not free for " + x + " in " + to_string( phi );
      return r;
    }
    if ( !( substitute( phi, x, *t ) == d.target ) )
      return r;
    r.status = MatchResult::Status::matched;
    return r;
  }

  auto y_it = env.vars.find( p.other );
  if ( y_it == env.vars.end() )
    throw std::logic_error( "schema leaves a deferred constraint unbound" );
  auto const& y = y_it->second;
  if ( !replace_some_matches( phi, x, y, d.target ) )
  {
    r.detail = to_string( d.target ) + " does not arise from " + to_string( phi ) + " by replacing " + x + " with " + y;
    return r;
  }
  if ( !is_free_for( Term::variable( y ), x, phi ) )
  {
    r.status = MatchResult::Status::side_condition;
    r.detail = y + " is not free for " + x + " in " + to_string( phi );
    return r;
  }
  r.status = MatchResult::Status::matched;
  return r;
}

} // namespace

MatchResult match_schema( Formula const& f, AxiomSchema const& schema )
{
  MatchResult r;
  std::vector<Deferred> later;
  if ( !match( schema.pattern, f, r.env, later ) )
  {
    r.detail = "not an instance of " + schema.id;
    return r;
  }
  for ( auto const& d : later )
  {
    auto sub = resolve( d, r.env );
    if ( !sub.ok() )
    {
      r.status = sub.status;
      r.detail = sub.status == MatchResult::Status::side_condition ? sub.detail : "not an instance of " + schema.id;
      return r;
    }
  }
  r.status = MatchResult::Status::matched;
  return r;
}

std::pair<AxiomSchema const*, MatchResult> match_any_schema( Formula const& f )
{
  std::optional<std::pair<AxiomSchema const*, MatchResult>> side;
  for ( auto const& s : axiom_schemas() )
  {
    auto r = match_schema( f, s );
    if ( r.ok() )
      return { &s, r };
    if ( r.status == MatchResult::Status::side_condition && !side )
      side.emplace( &s, r );
  }
  if ( side )
    return *side;
  MatchResult none;
  none.detail = "not an instance of any axiom schema";
  return { nullptr, none };
}

// ---------------------------------------------------------------------------
// Justifications and failures

std::string to_string( Justification const& j )
{
  std::string s;
  switch ( j.kind )
  {
  case Justification::Kind::axiom: s = "ax"; break;
  case Justification::Kind::mp: s = "mp"; break;
  case Justification::Kind::forall_in: s = "forall-in"; break;
  case Justification::Kind::exists_in: s = "exists-in"; break;
  case Justification::Kind::hyp: s = "hyp"; break;
  case Justification::Kind::lemma: s = "lemma"; break;
  }
  if ( !j.name.empty() )
    s += " " + j.name;
  for ( auto r : j.refs )
    s += " " + std::to_string( r );
  return s;
}

std::string to_string( StepFailure const& f )
{
  std::string reason;
  switch ( f.reason )
  {
  case StepFailure::Reason::no_match: reason = "not justified"; break;
  case StepFailure::Reason::side_condition: reason = "side condition"; break;
  case StepFailure::Reason::bad_reference: reason = "bad reference"; break;
  case StepFailure::Reason::unknown_lemma: reason = "unknown lemma"; break;
  case StepFailure::Reason::unknown_schema: reason = "unknown schema"; break;
  }
  return "step " + std::to_string( f.step ) + ": " + reason + ": " + f.message;
}

// ---------------------------------------------------------------------------
// Lemmas

namespace
{

bool is_biconditional( Formula const& f )
{
  return f.kind() == Connective::conj && f.left().kind() == Connective::imp && f.right().kind() == Connective::imp &&
         f.left().left() == f.right().right() && f.left().right() == f.right().left();
}

// One-way matching: letters of the pattern bind to formulas, the rest is literal.
bool match_letters( Formula const& p, Formula const& g, std::map<std::string, Formula>& binding )
{
  if ( p.is_letter() )
  {
    auto [it, inserted] = binding.emplace( p.predicate(), g );
    return inserted || it->second == g;
  }
  if ( p.kind() != g.kind() )
    return false;
  switch ( p.kind() )
  {
  case Connective::atom:
    return p.predicate() == g.predicate() && p.args() == g.args();
  case Connective::neg:
  case Connective::cons:
    return match_letters( p.body(), g.body(), binding );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return match_letters( p.left(), g.left(), binding ) && match_letters( p.right(), g.right(), binding );
  case Connective::forall:
  case Connective::exists:
    return p.variable() == g.variable() && match_letters( p.body(), g.body(), binding );
  }
  return false;
}

Proof transitivity_proof()
{
  Signature sig;
  ParseOptions opt;
  opt.allow_letters = true;
  auto f = [&]( char const* text ) { return parse_formula( text, sig, opt ); };
  using K = Justification::Kind;
  Proof p;
  p.name = "trans";
  p.hypotheses = { f( "a -> b" ), f( "b -> c" ) };
  p.steps = {
      { f( "b -> c" ), { K::hyp, "", { 2 } } },
      { f( "(b -> c) -> (a -> (b -> c))" ), { K::axiom, "Ax1", {} } },
      { f( "a -> (b -> c)" ), { K::mp, "", { 1, 2 } } },
      { f( "(a -> (b -> c)) -> ((a -> b) -> (a -> c))" ), { K::axiom, "Ax2", {} } },
      { f( "(a -> b) -> (a -> c)" ), { K::mp, "", { 3, 4 } } },
      { f( "a -> b" ), { K::hyp, "", { 1 } } },
      { f( "a -> c" ), { K::mp, "", { 6, 5 } } },
  };
  return p;
}

} // namespace

LemmaStore::LemmaStore()
{
  for ( auto const& s : derived_schemas() )
  {
    // only schemas the matrix confirms are admitted
    if ( !is_tautology3( s.formula ).tautology )
      continue;
    add( { s.id, {}, s.formula, {} } );
  }
  auto trans = transitivity_proof();
  auto verdict = check_proof( trans, *this );
  if ( !verdict.accepted )
    throw std::logic_error( "built-in derivation of trans rejected: " + to_string( *verdict.failure ) );
  add( lemma_from_proof( trans, *this ) );
}

Lemma const* LemmaStore::find( std::string const& name ) const
{
  auto it = index_.find( name );
  return it == index_.end() ? nullptr : lemmas_[it->second].get();
}

void LemmaStore::add( Lemma lemma )
{
  if ( index_.contains( lemma.name ) )
    throw LemmaError( "lemma " + lemma.name + " already exists" );
  if ( !lemma.conclusion.valid() )
    throw LemmaError( "lemma " + lemma.name + " has no conclusion" );
  index_[lemma.name] = lemmas_.size();
  lemmas_.push_back( std::make_shared<Lemma const>( std::move( lemma ) ) );
}

std::vector<std::string> LemmaStore::names() const
{
  std::vector<std::string> out;
  for ( auto const& l : lemmas_ )
    out.push_back( l->name );
  return out;
}

Lemma lemma_from_proof( Proof const& p, LemmaStore const& store )
{
  if ( p.steps.empty() )
    throw LemmaError( "proof " + p.name + " has no steps" );
  Lemma l;
  l.name = p.name;
  l.hypotheses = p.hypotheses;
  l.conclusion = p.steps.back().formula;
  for ( auto const& h : p.hypotheses )
  {
    auto vs = all_vars( h );
    l.sensitive_vars.insert( vs.begin(), vs.end() );
  }
  for ( auto const& s : p.steps )
  {
    auto vs = all_vars( s.formula );
    l.sensitive_vars.insert( vs.begin(), vs.end() );
    if ( s.justification.kind == Justification::Kind::lemma )
      if ( auto const* cited = store.find( s.justification.name ) )
        l.sensitive_vars.insert( cited->sensitive_vars.begin(), cited->sensitive_vars.end() );
  }
  return l;
}

// ---------------------------------------------------------------------------
// Proof checking

namespace
{

struct StepChecker
{
  Proof const& p;
  LemmaStore const& store;
  std::size_t k; // 1-based number of the step under check

  Formula const& current() const { return p.steps[k - 1].formula; }

  StepFailure fail( StepFailure::Reason reason, std::string message ) const
  {
    return { k, reason, std::move( message ) };
  }

  std::optional<StepFailure> need_refs( std::size_t count ) const
  {
    auto const& refs = p.steps[k - 1].justification.refs;
    if ( refs.size() != count )
      return fail( StepFailure::Reason::bad_reference,
                   "expected " + std::to_string( count ) + " step reference" + ( count == 1 ? "" : "s" ) );
    return std::nullopt;
  }

  std::optional<StepFailure> check_refs( std::vector<std::size_t> const& refs ) const
  {
    for ( auto r : refs )
      if ( r < 1 || r >= k )
        return fail( StepFailure::Reason::bad_reference, "step " + std::to_string( r ) + " is not an earlier step" );
    return std::nullopt;
  }

  Formula const& step( std::size_t r ) const { return p.steps[r - 1].formula; }

  std::optional<StepFailure> run() const
  {
    auto const& j = p.steps[k - 1].justification;
    using K = Justification::Kind;
    if ( j.kind != K::hyp && j.kind != K::lemma )
      if ( auto e = check_refs( j.refs ) )
        return e;
    switch ( j.kind )
    {
    case K::axiom: return axiom( j );
    case K::mp: return mp( j );
    case K::forall_in: return forall_in( j );
    case K::exists_in: return exists_in( j );
    case K::hyp: return hyp( j );
    case K::lemma: return lemma( j );
    }
    return std::nullopt;
  }

  std::optional<StepFailure> axiom( Justification const& j ) const
  {
    if ( auto e = need_refs( 0 ) )
      return e;
    MatchResult r;
    if ( j.name.empty() )
      r = match_any_schema( current() ).second;
    else
    {
      auto const* s = find_schema( j.name );
      if ( !s )
        return fail( StepFailure::Reason::unknown_schema, "no axiom schema named " + j.name );
      r = match_schema( current(), *s );
    }
    if ( r.ok() )
      return std::nullopt;
    return fail( r.status == MatchResult::Status::side_condition ? StepFailure::Reason::side_condition
                                                                  : StepFailure::Reason::no_match,
                 r.detail );
  }

  std::optional<StepFailure> mp( Justification const& j ) const
  {
    if ( auto e = need_refs( 2 ) )
      return e;
    auto const& a = step( j.refs[0] );
    auto const& b = step( j.refs[1] );
    auto imp_of = []( Formula const& i, Formula const& ante, Formula const& cons ) {
      return i.kind() == Connective::imp && i.left() == ante && i.right() == cons;
    };
    if ( imp_of( b, a, current() ) || imp_of( a, b, current() ) )
      return std::nullopt;
    return fail( StepFailure::Reason::no_match, "neither cited step is an implication from the other to this formula" );
  }

  std::optional<StepFailure> forall_in( Justification const& j ) const
  {
    if ( auto e = need_refs( 1 ) )
      return e;
    auto const& prem = step( j.refs[0] );
    auto const& f = current();
    if ( prem.kind() != Connective::imp )
      return fail( StepFailure::Reason::no_match, "cited step is not an implication" );
    if ( f.kind() != Connective::imp || f.right().kind() != Connective::forall || !( f.left() == prem.left() ) ||
         !( f.right().body() == prem.right() ) )
      return fail( StepFailure::Reason::no_match, "expected " + to_string( prem.left() ) + " -> forall x. " +
                                                      to_string( prem.right() ) + " for some x" );
    auto const& x = f.right().variable();
    if ( free_vars( prem.left() ).contains( x ) )
      return fail( StepFailure::Reason::side_condition, x + " is free in " + to_string( prem.left() ) );
    return std::nullopt;
  }

  std::optional<StepFailure> exists_in( Justification const& j ) const
  {
    if ( auto e = need_refs( 1 ) )
      return e;
    auto const& prem = step( j.refs[0] );
    auto const& f = current();
    if ( prem.kind() != Connective::imp )
      return fail( StepFailure::Reason::no_match, "cited step is not an implication" );
    if ( f.kind() != Connective::imp || f.left().kind() != Connective::exists || !( f.left().body() == prem.left() ) ||
         !( f.right() == prem.right() ) )
      return fail( StepFailure::Reason::no_match, "expected (exists x. " + to_string( prem.left() ) + ") -> " +
                                                      to_string( prem.right() ) + " for some x" );
    auto const& x = f.left().variable();
    if ( free_vars( prem.right() ).contains( x ) )
      return fail( StepFailure::Reason::side_condition, x + " is free in " + to_string( prem.right() ) );
    return std::nullopt;
  }

  std::optional<StepFailure> hyp( Justification const& j ) const
  {
    if ( auto e = need_refs( 1 ) )
      return e;
    auto h = j.refs[0];
    if ( h < 1 || h > p.hypotheses.size() )
      return fail( StepFailure::Reason::bad_reference, "no hypothesis " + std::to_string( h ) );
    if ( !( p.hypotheses[h - 1] == current() ) )
      return fail( StepFailure::Reason::no_match, "formula differs from hypothesis " + std::to_string( h ) );
    return std::nullopt;
  }

  std::optional<StepFailure> lemma( Justification const& j ) const
  {
    if ( auto e = check_refs( j.refs ) )
      return e;
    auto const* L = store.find( j.name );
    if ( !L )
      return fail( StepFailure::Reason::unknown_lemma, "no lemma named " + j.name );
    auto m = L->hypotheses.size();
    if ( j.refs.size() < m )
      return fail( StepFailure::Reason::bad_reference,
                   "lemma " + j.name + " needs " + std::to_string( m ) + " premise steps" );

    // Extra premises s1..sr turn the goal into s1 -> (... -> (sr -> current)).
    Formula goal = current();
    for ( auto i = j.refs.size(); i-- > m; )
      goal = Formula::implication( step( j.refs[i] ), goal );

    std::vector<Formula> conclusions{ L->conclusion };
    if ( is_biconditional( L->conclusion ) )
    {
      conclusions.push_back( L->conclusion.left() );
      conclusions.push_back( L->conclusion.right() );
    }
    for ( auto const& c : conclusions )
    {
      std::map<std::string, Formula> binding;
      bool ok = true;
      for ( std::size_t i = 0; i < m && ok; ++i )
        ok = match_letters( L->hypotheses[i], step( j.refs[i] ), binding );
      if ( !ok || !match_letters( c, goal, binding ) )
        continue;
      for ( auto const& [letter, f] : binding )
        for ( auto const& x : free_vars( f ) )
          if ( L->sensitive_vars.contains( x ) )
            return fail( StepFailure::Reason::side_condition, "instance " + to_string( f ) + " for " + letter +
                                                                  " has free variable " + x + ", used inside lemma " +
                                                                  j.name );
      return std::nullopt;
    }
    return fail( StepFailure::Reason::no_match, "not an instance of lemma " + j.name );
  }
};

} // namespace

ProofVerdict check_proof( Proof const& p, LemmaStore const& store )
{
  ProofVerdict v;
  if ( p.steps.empty() )
  {
    v.failure = StepFailure{ 0, StepFailure::Reason::no_match, "proof has no steps" };
    return v;
  }
  for ( std::size_t k = 1; k <= p.steps.size(); ++k )
  {
    StepChecker c{ p, store, k };
    if ( auto e = c.run() )
    {
      v.failure = e;
      return v;
    }
  }
  v.accepted = true;
  return v;
}

ProofVerdict check_and_store( Proof const& p, LemmaStore& store )
{
  auto v = check_proof( p, store );
  if ( v.accepted )
    store.add( lemma_from_proof( p, store ) );
  return v;
}

bool wdmt_side_condition( Proof const& p, Formula const& phi )
{
  if ( std::find( p.hypotheses.begin(), p.hypotheses.end(), phi ) == p.hypotheses.end() )
    throw LemmaError( to_string( phi ) + " is not a hypothesis of " + p.name );
  auto fv = free_vars( phi );
  for ( auto const& s : p.steps )
  {
    auto const& f = s.formula;
    if ( s.justification.kind == Justification::Kind::forall_in && f.kind() == Connective::imp &&
         f.right().kind() == Connective::forall && fv.contains( f.right().variable() ) )
      return false;
    if ( s.justification.kind == Justification::Kind::exists_in && f.kind() == Connective::imp &&
         f.left().kind() == Connective::exists && fv.contains( f.left().variable() ) )
      return false;
  }
  return true;
}

} // namespace qciore
