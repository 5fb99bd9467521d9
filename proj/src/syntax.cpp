#include <qciore/syntax.hpp>

#include <algorithm>

namespace qciore
{

// ---------------------------------------------------------------------------
// Signature

void Signature::add_predicate( std::string const& name, int arity )
{
  if ( name == equality_symbol )
  {
    if ( arity != 2 )
      throw SignatureError( "equality must be binary" );
    has_equality = true;
    return;
  }
  if ( arity < 1 )
    throw SignatureError( "predicate " + name + " needs a positive arity" );
  if ( functions.contains( name ) || constants.contains( name ) )
    throw SignatureError( "symbol " + name + " already declared with another kind" );
  auto [it, inserted] = predicates.emplace( name, arity );
  if ( !inserted && it->second != arity )
    throw SignatureError( "predicate " + name + " redeclared with a different arity" );
}

void Signature::add_function( std::string const& name, int arity )
{
  if ( arity < 1 )
    throw SignatureError( "function " + name + " needs a positive arity" );
  if ( predicates.contains( name ) || constants.contains( name ) || name == equality_symbol )
    throw SignatureError( "symbol " + name + " already declared with another kind" );
  auto [it, inserted] = functions.emplace( name, arity );
  if ( !inserted && it->second != arity )
    throw SignatureError( "function " + name + " redeclared with a different arity" );
}

void Signature::add_constant( std::string const& name )
{
  if ( predicates.contains( name ) || functions.contains( name ) || name == equality_symbol )
    throw SignatureError( "symbol " + name + " already declared with another kind" );
  constants.insert( name );
}

std::optional<int> Signature::predicate_arity( std::string_view name ) const
{
  if ( name == equality_symbol )
    return has_equality ? std::optional<int>( 2 ) : std::nullopt;
  if ( auto it = predicates.find( std::string( name ) ); it != predicates.end() )
    return it->second;
  return std::nullopt;
}

std::optional<int> Signature::function_arity( std::string_view name ) const
{
  if ( auto it = functions.find( std::string( name ) ); it != functions.end() )
    return it->second;
  return std::nullopt;
}

bool Signature::is_constant( std::string_view name ) const
{
  return constants.contains( std::string( name ) );
}

bool Signature::declares( std::string_view name ) const
{
  return predicate_arity( name ).has_value() || function_arity( name ).has_value() || is_constant( name );
}

void Signature::validate() const
{
  for ( auto const& [name, arity] : predicates )
  {
    if ( arity < 1 )
      throw SignatureError( "predicate " + name + " needs a positive arity" );
    if ( functions.contains( name ) || constants.contains( name ) || name == equality_symbol )
      throw SignatureError( "symbol " + name + " declared twice" );
  }
  for ( auto const& [name, arity] : functions )
  {
    if ( arity < 1 )
      throw SignatureError( "function " + name + " needs a positive arity" );
    if ( constants.contains( name ) )
      throw SignatureError( "symbol " + name + " declared twice" );
  }
}

// ---------------------------------------------------------------------------
// Term

Term Term::variable( std::string name )
{
  Term t;
  t.kind_ = Kind::variable;
  t.name_ = std::move( name );
  return t;
}

Term Term::constant( std::string name )
{
  Term t;
  t.kind_ = Kind::constant;
  t.name_ = std::move( name );
  return t;
}

Term Term::apply( std::string function, std::vector<Term> args )
{
  Term t;
  t.kind_ = Kind::application;
  t.name_ = std::move( function );
  t.args_ = std::move( args );
  return t;
}

// ---------------------------------------------------------------------------
// Formula

namespace
{

Formula::Node const& null_guard( std::shared_ptr<Formula::Node const> const& p )
{
  if ( !p )
    throw std::logic_error( "use of an empty formula" );
  return *p;
}

} // namespace

Formula::Node const& Formula::node() const
{
  return null_guard( node_ );
}

Formula Formula::atom( std::string predicate, std::vector<Term> args )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::atom, std::move( predicate ), std::move( args ), {}, {} } ) );
}

Formula Formula::letter( std::string name )
{
  return atom( std::move( name ), {} );
}

Formula Formula::equality( Term lhs, Term rhs )
{
  return atom( std::string( equality_symbol ), { std::move( lhs ), std::move( rhs ) } );
}

Formula Formula::negation( Formula f )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::neg, {}, {}, std::move( f ), {} } ) );
}

Formula Formula::consistency( Formula f )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::cons, {}, {}, std::move( f ), {} } ) );
}

Formula Formula::conjunction( Formula a, Formula b )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::conj, {}, {}, std::move( a ), std::move( b ) } ) );
}

Formula Formula::disjunction( Formula a, Formula b )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::disj, {}, {}, std::move( a ), std::move( b ) } ) );
}

Formula Formula::implication( Formula a, Formula b )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::imp, {}, {}, std::move( a ), std::move( b ) } ) );
}

Formula Formula::forall( std::string variable, Formula body )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::forall, std::move( variable ), {}, std::move( body ), {} } ) );
}

Formula Formula::exists( std::string variable, Formula body )
{
  return Formula( std::make_shared<Node const>( Node{ Connective::exists, std::move( variable ), {}, std::move( body ), {} } ) );
}

Formula Formula::strong_negation( Formula f )
{
  return conjunction( negation( f ), consistency( f ) );
}

Formula Formula::biconditional( Formula a, Formula b )
{
  return conjunction( implication( a, b ), implication( b, a ) );
}

Connective Formula::kind() const { return node().kind; }

bool Formula::is_letter() const { return is_atom() && node().args.empty(); }

bool Formula::is_unary() const
{
  auto k = kind();
  return k == Connective::neg || k == Connective::cons;
}

bool Formula::is_binary() const
{
  auto k = kind();
  return k == Connective::conj || k == Connective::disj || k == Connective::imp;
}

bool Formula::is_quantifier() const
{
  auto k = kind();
  return k == Connective::forall || k == Connective::exists;
}

std::string const& Formula::predicate() const { return node().name; }
std::vector<Term> const& Formula::args() const { return node().args; }
std::string const& Formula::variable() const { return node().name; }
Formula const& Formula::body() const { return node().lhs; }
Formula const& Formula::left() const { return node().lhs; }
Formula const& Formula::right() const { return node().rhs; }

bool Formula::operator==( Formula const& other ) const
{
  if ( node_ == other.node_ )
    return true;
  if ( !node_ || !other.node_ )
    return false;
  auto const& a = *node_;
  auto const& b = *other.node_;
  if ( a.kind != b.kind || a.name != b.name || a.args != b.args )
    return false;
  if ( a.lhs.valid() != b.lhs.valid() || a.rhs.valid() != b.rhs.valid() )
    return false;
  if ( a.lhs.valid() && !( a.lhs == b.lhs ) )
    return false;
  if ( a.rhs.valid() && !( a.rhs == b.rhs ) )
    return false;
  return true;
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string( Term const& t )
{
  if ( t.kind() != Term::Kind::application )
    return t.name();
  std::string s = t.name() + "(";
  for ( std::size_t i = 0; i < t.args().size(); ++i )
  {
    if ( i )
      s += ",";
    s += to_string( t.args()[i] );
  }
  return s + ")";
}

namespace
{

bool is_equality_atom( Formula const& f )
{
  return f.is_atom() && f.predicate() == equality_symbol;
}

std::string print( Formula const& f );

std::string print_unary_operand( Formula const& f )
{
  if ( f.is_binary() || f.is_quantifier() || is_equality_atom( f ) )
    return "(" + print( f ) + ")";
  return print( f );
}

std::string print_binary_operand( Formula const& f )
{
  if ( f.is_binary() || f.is_quantifier() )
    return "(" + print( f ) + ")";
  return print( f );
}

std::string print( Formula const& f )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    if ( is_equality_atom( f ) )
      return to_string( f.args()[0] ) + " = " + to_string( f.args()[1] );
    if ( f.args().empty() )
      return f.predicate();
    std::string s = f.predicate() + "(";
    for ( std::size_t i = 0; i < f.args().size(); ++i )
    {
      if ( i )
        s += ",";
      s += to_string( f.args()[i] );
    }
    return s + ")";
  }
  case Connective::neg:
    return "~" + print_unary_operand( f.body() );
  case Connective::cons:
    return "@" + print_unary_operand( f.body() );
  case Connective::conj:
    return print_binary_operand( f.left() ) + " & " + print_binary_operand( f.right() );
  case Connective::disj:
    return print_binary_operand( f.left() ) + " | " + print_binary_operand( f.right() );
  case Connective::imp:
    return print_binary_operand( f.left() ) + " -> " + print_binary_operand( f.right() );
  case Connective::forall:
    return "forall " + f.variable() + ". " + print( f.body() );
  case Connective::exists:
    return "exists " + f.variable() + ". " + print( f.body() );
  }
  return {};
}

} // namespace

std::string to_string( Formula const& f )
{
  return print( f );
}

// ---------------------------------------------------------------------------
// Variables

namespace
{

void collect_term_vars( Term const& t, std::set<std::string>& out )
{
  if ( t.kind() == Term::Kind::variable )
    out.insert( t.name() );
  for ( auto const& a : t.args() )
    collect_term_vars( a, out );
}

bool term_has_var( Term const& t, std::string const& x )
{
  if ( t.kind() == Term::Kind::variable )
    return t.name() == x;
  return std::any_of( t.args().begin(), t.args().end(), [&]( Term const& a ) { return term_has_var( a, x ); } );
}

void collect_free( Formula const& f, std::set<std::string> const& bound, std::set<std::string>& out )
{
  switch ( f.kind() )
  {
  case Connective::atom:
    for ( auto const& t : f.args() )
    {
      std::set<std::string> vs;
      collect_term_vars( t, vs );
      for ( auto const& v : vs )
        if ( !bound.contains( v ) )
          out.insert( v );
    }
    return;
  case Connective::neg:
  case Connective::cons:
    collect_free( f.body(), bound, out );
    return;
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    collect_free( f.left(), bound, out );
    collect_free( f.right(), bound, out );
    return;
  case Connective::forall:
  case Connective::exists:
  {
    auto inner = bound;
    inner.insert( f.variable() );
    collect_free( f.body(), inner, out );
    return;
  }
  }
}

bool has_free( Formula const& f, std::string const& x )
{
  switch ( f.kind() )
  {
  case Connective::atom:
    return std::any_of( f.args().begin(), f.args().end(), [&]( Term const& t ) { return term_has_var( t, x ); } );
  case Connective::neg:
  case Connective::cons:
    return has_free( f.body(), x );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return has_free( f.left(), x ) || has_free( f.right(), x );
  case Connective::forall:
  case Connective::exists:
    return f.variable() != x && has_free( f.body(), x );
  }
  return false;
}

} // namespace

std::set<std::string> term_vars( Term const& t )
{
  std::set<std::string> out;
  collect_term_vars( t, out );
  return out;
}

std::set<std::string> free_vars( Formula const& f )
{
  std::set<std::string> out;
  collect_free( f, {}, out );
  return out;
}

std::set<std::string> all_vars( Formula const& f )
{
  std::set<std::string> out;
  switch ( f.kind() )
  {
  case Connective::atom:
    for ( auto const& t : f.args() )
      collect_term_vars( t, out );
    break;
  case Connective::neg:
  case Connective::cons:
    out = all_vars( f.body() );
    break;
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
  {
    out = all_vars( f.left() );
    auto r = all_vars( f.right() );
    out.insert( r.begin(), r.end() );
    break;
  }
  case Connective::forall:
  case Connective::exists:
    out = all_vars( f.body() );
    out.insert( f.variable() );
    break;
  }
  return out;
}

std::set<std::string> letters( Formula const& f )
{
  std::set<std::string> out;
  switch ( f.kind() )
  {
  case Connective::atom:
    if ( f.args().empty() )
      out.insert( f.predicate() );
    break;
  case Connective::neg:
  case Connective::cons:
  case Connective::forall:
  case Connective::exists:
    out = letters( f.body() );
    break;
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
  {
    out = letters( f.left() );
    auto r = letters( f.right() );
    out.insert( r.begin(), r.end() );
    break;
  }
  }
  return out;
}

bool is_sentence( Formula const& f )
{
  return free_vars( f ).empty();
}

bool is_propositional( Formula const& f )
{
  switch ( f.kind() )
  {
  case Connective::atom:
    return f.args().empty();
  case Connective::neg:
  case Connective::cons:
    return is_propositional( f.body() );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return is_propositional( f.left() ) && is_propositional( f.right() );
  case Connective::forall:
  case Connective::exists:
    return false;
  }
  return false;
}

std::size_t depth( Formula const& f )
{
  if ( f.is_atom() )
    return 0;
  if ( f.is_binary() )
    return 1 + std::max( depth( f.left() ), depth( f.right() ) );
  return 1 + depth( f.body() );
}

// ---------------------------------------------------------------------------
// Substitution

namespace
{

bool free_for( Term const& t, std::string const& x, Formula const& f, std::set<std::string> const& tvars,
               bool under_capture )
{
  switch ( f.kind() )
  {
  case Connective::atom:
    if ( !under_capture )
      return true;
    return !std::any_of( f.args().begin(), f.args().end(), [&]( Term const& a ) { return term_has_var( a, x ); } );
  case Connective::neg:
  case Connective::cons:
    return free_for( t, x, f.body(), tvars, under_capture );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return free_for( t, x, f.left(), tvars, under_capture ) && free_for( t, x, f.right(), tvars, under_capture );
  case Connective::forall:
  case Connective::exists:
    if ( f.variable() == x )
      return true; // no free x below
    return free_for( t, x, f.body(), tvars, under_capture || tvars.contains( f.variable() ) );
  }
  return true;
}

Formula subst_unchecked( Formula const& f, std::string const& x, Term const& t )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    std::vector<Term> args;
    args.reserve( f.args().size() );
    for ( auto const& a : f.args() )
      args.push_back( substitute( a, x, t ) );
    return Formula::atom( f.predicate(), std::move( args ) );
  }
  case Connective::neg:
    return Formula::negation( subst_unchecked( f.body(), x, t ) );
  case Connective::cons:
    return Formula::consistency( subst_unchecked( f.body(), x, t ) );
  case Connective::conj:
    return Formula::conjunction( subst_unchecked( f.left(), x, t ), subst_unchecked( f.right(), x, t ) );
  case Connective::disj:
    return Formula::disjunction( subst_unchecked( f.left(), x, t ), subst_unchecked( f.right(), x, t ) );
  case Connective::imp:
    return Formula::implication( subst_unchecked( f.left(), x, t ), subst_unchecked( f.right(), x, t ) );
  case Connective::forall:
    if ( f.variable() == x )
      return f;
    return Formula::forall( f.variable(), subst_unchecked( f.body(), x, t ) );
  case Connective::exists:
    if ( f.variable() == x )
      return f;
    return Formula::exists( f.variable(), subst_unchecked( f.body(), x, t ) );
  }
  return f;
}

} // namespace

bool is_free_for( Term const& t, std::string const& x, Formula const& f )
{
  auto tvars = term_vars( t );
  if ( tvars.empty() )
    return true;
  return free_for( t, x, f, tvars, false );
}

Term substitute( Term const& t, std::string const& x, Term const& by )
{
  switch ( t.kind() )
  {
  case Term::Kind::variable:
    return t.name() == x ? by : t;
  case Term::Kind::constant:
    return t;
  case Term::Kind::application:
  {
    std::vector<Term> args;
    args.reserve( t.args().size() );
    for ( auto const& a : t.args() )
      args.push_back( substitute( a, x, by ) );
    return Term::apply( t.name(), std::move( args ) );
  }
  }
  return t;
}

Formula substitute( Formula const& f, std::string const& x, Term const& t )
{
  if ( !has_free( f, x ) )
    return f;
  if ( !is_free_for( t, x, f ) )
    throw CaptureError( "term " + to_string( t ) + " is not free for " + x + " in " + to_string( f ) );
  return subst_unchecked( f, x, t );
}

Formula instantiate_letters( Formula const& f, std::map<std::string, Formula> const& binding )
{
  switch ( f.kind() )
  {
  case Connective::atom:
    if ( f.args().empty() )
    {
      if ( auto it = binding.find( f.predicate() ); it != binding.end() )
        return it->second;
    }
    return f;
  case Connective::neg:
    return Formula::negation( instantiate_letters( f.body(), binding ) );
  case Connective::cons:
    return Formula::consistency( instantiate_letters( f.body(), binding ) );
  case Connective::conj:
    return Formula::conjunction( instantiate_letters( f.left(), binding ), instantiate_letters( f.right(), binding ) );
  case Connective::disj:
    return Formula::disjunction( instantiate_letters( f.left(), binding ), instantiate_letters( f.right(), binding ) );
  case Connective::imp:
    return Formula::implication( instantiate_letters( f.left(), binding ), instantiate_letters( f.right(), binding ) );
  case Connective::forall:
    return Formula::forall( f.variable(), instantiate_letters( f.body(), binding ) );
  case Connective::exists:
    return Formula::exists( f.variable(), instantiate_letters( f.body(), binding ) );
  }
  return f;
}

namespace
{

bool replace_term_matches( Term const& a, Term const& b, std::string const& x, std::string const& y,
                           std::set<std::string> const& bound )
{
  if ( a.kind() == Term::Kind::variable && a.name() == x && !bound.contains( x ) )
  {
    if ( b.kind() != Term::Kind::variable )
      return false;
    if ( b.name() == x )
      return true;
    return b.name() == y && !bound.contains( y );
  }
  if ( a.kind() != b.kind() || a.name() != b.name() || a.args().size() != b.args().size() )
    return false;
  for ( std::size_t i = 0; i < a.args().size(); ++i )
    if ( !replace_term_matches( a.args()[i], b.args()[i], x, y, bound ) )
      return false;
  return true;
}

bool replace_walk( Formula const& f, Formula const& g, std::string const& x, std::string const& y,
                   std::set<std::string>& bound )
{
  if ( f.kind() != g.kind() )
    return false;
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    if ( f.predicate() != g.predicate() || f.args().size() != g.args().size() )
      return false;
    for ( std::size_t i = 0; i < f.args().size(); ++i )
      if ( !replace_term_matches( f.args()[i], g.args()[i], x, y, bound ) )
        return false;
    return true;
  }
  case Connective::neg:
  case Connective::cons:
    return replace_walk( f.body(), g.body(), x, y, bound );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return replace_walk( f.left(), g.left(), x, y, bound ) && replace_walk( f.right(), g.right(), x, y, bound );
  case Connective::forall:
  case Connective::exists:
  {
    if ( f.variable() != g.variable() )
      return false;
    bool fresh = bound.insert( f.variable() ).second;
    bool ok = replace_walk( f.body(), g.body(), x, y, bound );
    if ( fresh )
      bound.erase( f.variable() );
    return ok;
  }
  }
  return false;
}

} // namespace

bool replace_some_matches( Formula const& f, std::string const& x, std::string const& y, Formula const& candidate )
{
  std::set<std::string> bound;
  return replace_walk( f, candidate, x, y, bound );
}

Formula universal_closure( Formula const& f )
{
  auto fv = free_vars( f );
  Formula out = f;
  // std::set iterates in lexicographic order; wrap from the innermost outwards
  for ( auto it = fv.rbegin(); it != fv.rend(); ++it )
    out = Formula::forall( *it, out );
  return out;
}

// ---------------------------------------------------------------------------
// Signature checks

namespace
{

void check_term( Term const& t, Signature const& sig )
{
  switch ( t.kind() )
  {
  case Term::Kind::variable:
    if ( sig.predicate_arity( t.name() ) || sig.function_arity( t.name() ) )
      throw SignatureError( "symbol " + t.name() + " used as a variable" );
    return;
  case Term::Kind::constant:
    if ( !sig.is_constant( t.name() ) )
      throw SignatureError( "unknown constant " + t.name() );
    return;
  case Term::Kind::application:
  {
    auto arity = sig.function_arity( t.name() );
    if ( !arity )
      throw SignatureError( "unknown function " + t.name() );
    if ( static_cast<std::size_t>( *arity ) != t.args().size() )
      throw SignatureError( "function " + t.name() + " expects " + std::to_string( *arity ) + " arguments" );
    for ( auto const& a : t.args() )
      check_term( a, sig );
    return;
  }
  }
}

} // namespace

void check_formula( Formula const& f, Signature const& sig, bool allow_letters )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    if ( f.args().empty() )
    {
      if ( !allow_letters )
        throw SignatureError( "propositional letter " + f.predicate() + " in a first-order formula" );
      return;
    }
    auto arity = sig.predicate_arity( f.predicate() );
    if ( !arity )
      throw SignatureError( "unknown predicate " + f.predicate() );
    if ( static_cast<std::size_t>( *arity ) != f.args().size() )
      throw SignatureError( "predicate " + f.predicate() + " expects " + std::to_string( *arity ) + " arguments" );
    for ( auto const& t : f.args() )
      check_term( t, sig );
    return;
  }
  case Connective::neg:
  case Connective::cons:
  case Connective::forall:
  case Connective::exists:
    check_formula( f.body(), sig, allow_letters );
    return;
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    check_formula( f.left(), sig, allow_letters );
    check_formula( f.right(), sig, allow_letters );
    return;
  }
}

} // namespace qciore
