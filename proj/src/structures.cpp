#include <qciore/structures.hpp>
#include <qciore/twist.hpp>

#include <algorithm>
#include <set>

namespace qciore
{

// ---------------------------------------------------------------------------
// PartialStructure

std::optional<std::size_t> PartialStructure::element_index( std::string_view name ) const
{
  for ( std::size_t i = 0; i < elements.size(); ++i )
    if ( elements[i] == name )
      return i;
  return std::nullopt;
}

std::size_t PartialStructure::tuple_index( std::vector<std::size_t> const& tuple ) const
{
  std::size_t idx = 0;
  for ( auto a : tuple )
    idx = idx * size() + a;
  return idx;
}

std::vector<std::size_t> PartialStructure::tuple_at( std::size_t index, std::size_t arity ) const
{
  std::vector<std::size_t> t( arity );
  for ( std::size_t i = arity; i-- > 0; )
  {
    t[i] = index % size();
    index /= size();
  }
  return t;
}

std::size_t PartialStructure::tuple_count( std::size_t arity ) const
{
  std::size_t n = 1;
  for ( std::size_t i = 0; i < arity; ++i )
  {
    if ( n > ( std::size_t{ 1 } << 28 ) / std::max<std::size_t>( size(), 1 ) )
      throw StructureError( "too many tuples" );
    n *= size();
  }
  return n;
}

Triple const& PartialStructure::predicate( std::string const& name ) const
{
  auto it = predicates.find( name );
  if ( it == predicates.end() )
    throw StructureError( "no interpretation for predicate " + name );
  return it->second;
}

TruthValue PartialStructure::value( std::string const& name, std::vector<std::size_t> const& tuple ) const
{
  return predicate( name ).at( tuple_index( tuple ) );
}

std::size_t PartialStructure::apply( std::string const& name, std::vector<std::size_t> const& args ) const
{
  auto it = functions.find( name );
  if ( it == functions.end() )
    throw StructureError( "no interpretation for function " + name );
  return it->second.at( tuple_index( args ) );
}

void PartialStructure::validate() const
{
  signature.validate();
  if ( elements.empty() )
    throw StructureError( "empty domain" );
  std::set<std::string> names( elements.begin(), elements.end() );
  if ( names.size() != elements.size() )
    throw StructureError( "repeated element name" );

  std::map<std::string, int> expected = signature.predicates;
  if ( signature.has_equality )
    expected[std::string( equality_symbol )] = 2;
  for ( auto const& [name, arity] : expected )
  {
    auto it = predicates.find( name );
    if ( it == predicates.end() )
      throw StructureError( "no interpretation for predicate " + name );
    auto const& r = it->second;
    if ( r.carrier() != tuple_count( static_cast<std::size_t>( arity ) ) )
      throw StructureError( "predicate " + name + " has the wrong number of tuples" );
    if ( !r.is_partition() )
      throw StructureError( "predicate " + name + " classes do not partition the tuples" );
  }
  for ( auto const& [name, r] : predicates )
    if ( !expected.contains( name ) )
      throw StructureError( "predicate " + name + " is not in the signature" );

  for ( auto const& [name, arity] : signature.functions )
  {
    auto it = functions.find( name );
    if ( it == functions.end() )
      throw StructureError( "no interpretation for function " + name );
    if ( it->second.size() != tuple_count( static_cast<std::size_t>( arity ) ) )
      throw StructureError( "function " + name + " is not total" );
    for ( auto v : it->second )
      if ( v >= size() )
        throw StructureError( "function " + name + " leaves the domain" );
  }
  for ( auto const& [name, table] : functions )
    if ( !signature.functions.contains( name ) )
      throw StructureError( "function " + name + " is not in the signature" );

  for ( auto const& name : signature.constants )
  {
    auto it = constants.find( name );
    if ( it == constants.end() )
      throw StructureError( "no interpretation for constant " + name );
    if ( it->second >= size() )
      throw StructureError( "constant " + name + " outside the domain" );
  }
  for ( auto const& [name, v] : constants )
    if ( !signature.constants.contains( name ) )
      throw StructureError( "constant " + name + " is not in the signature" );
}

// ---------------------------------------------------------------------------
// Assignments

std::size_t Assignment::operator()( std::string const& x ) const
{
  auto it = values.find( x );
  return it == values.end() ? default_element : it->second;
}

Assignment Assignment::updated( std::string const& x, std::size_t a ) const
{
  Assignment s = *this;
  s.values[x] = a;
  return s;
}

std::string to_string( Assignment const& s, PartialStructure const& A )
{
  std::string out;
  for ( auto const& [x, a] : s.values )
  {
    if ( !out.empty() )
      out += ", ";
    out += x + "=" + ( a < A.size() ? A.elements[a] : std::to_string( a ) );
  }
  return "{" + out + "}";
}

// ---------------------------------------------------------------------------
// Quantifier functions

TruthValue forall_value( ValueMask present )
{
  if ( present == 0 || present > 7 )
    throw std::invalid_argument( "quantifier function needs a nonempty set of values" );
  if ( present & mask_of( TruthValue::zero ) )
    return TruthValue::zero;
  if ( present & mask_of( TruthValue::one ) )
    return TruthValue::one;
  return TruthValue::half;
}

TruthValue exists_value( ValueMask present )
{
  if ( present == 0 || present > 7 )
    throw std::invalid_argument( "quantifier function needs a nonempty set of values" );
  if ( present == mask_of( TruthValue::half ) )
    return TruthValue::half;
  if ( present == mask_of( TruthValue::zero ) )
    return TruthValue::zero;
  return TruthValue::one;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace
{

// Assignment plus a stack of quantifier bindings, innermost last.
struct Env
{
  Assignment const& base;
  std::vector<std::pair<std::string const*, std::size_t>> bound;

  std::size_t lookup( std::string const& x ) const
  {
    for ( auto it = bound.rbegin(); it != bound.rend(); ++it )
      if ( *it->first == x )
        return it->second;
    return base( x );
  }
};

std::size_t eval_term_env( Term const& t, PartialStructure const& A, Env const& env )
{
  switch ( t.kind() )
  {
  case Term::Kind::variable:
  {
    auto a = env.lookup( t.name() );
    if ( a >= A.size() )
      throw StructureError( "assignment sends " + t.name() + " outside the domain" );
    return a;
  }
  case Term::Kind::constant:
  {
    auto it = A.constants.find( t.name() );
    if ( it == A.constants.end() )
      throw StructureError( "no interpretation for constant " + t.name() );
    return it->second;
  }
  case Term::Kind::application:
  {
    std::vector<std::size_t> args;
    args.reserve( t.args().size() );
    for ( auto const& a : t.args() )
      args.push_back( eval_term_env( a, A, env ) );
    return A.apply( t.name(), args );
  }
  }
  return 0;
}

TruthValue eval_env( Formula const& f, PartialStructure const& A, Env& env, MatrixSpec const& m )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    if ( f.args().empty() )
      throw StructureError( "propositional letter " + f.predicate() + " has no interpretation in a structure" );
    auto const& r = A.predicate( f.predicate() );
    std::size_t idx = 0;
    for ( auto const& t : f.args() )
      idx = idx * A.size() + eval_term_env( t, A, env );
    if ( idx >= r.carrier() )
      throw StructureError( "arity mismatch for predicate " + f.predicate() );
    return r.at( idx );
  }
  case Connective::neg:
  case Connective::cons:
    return m.unary( f.kind(), eval_env( f.body(), A, env, m ) );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
  {
    auto a = eval_env( f.left(), A, env, m );
    auto b = eval_env( f.right(), A, env, m );
    return m.binary( f.kind(), a, b );
  }
  case Connective::forall:
  case Connective::exists:
  {
    ValueMask present = 0;
    env.bound.emplace_back( &f.variable(), 0 );
    for ( std::size_t a = 0; a < A.size(); ++a )
    {
      env.bound.back().second = a;
      present |= mask_of( eval_env( f.body(), A, env, m ) );
    }
    env.bound.pop_back();
    return f.kind() == Connective::forall ? forall_value( present ) : exists_value( present );
  }
  }
  return TruthValue::zero;
}

} // namespace

std::size_t eval_term( Term const& t, PartialStructure const& A, Assignment const& s )
{
  Env env{ s, {} };
  return eval_term_env( t, A, env );
}

TruthValue eval_formula( Formula const& f, PartialStructure const& A, Assignment const& s, MatrixSpec const& m )
{
  if ( A.elements.empty() )
    throw StructureError( "empty domain" );
  Env env{ s, {} };
  return eval_env( f, A, env, m );
}

bool holds( Formula const& f, PartialStructure const& A, Assignment const& s, MatrixSpec const& m )
{
  return designated( eval_formula( f, A, s, m ) );
}

ValidityResult is_valid_in( Formula const& f, PartialStructure const& A, MatrixSpec const& m )
{
  auto fv = free_vars( f );
  std::vector<std::string> vars( fv.begin(), fv.end() );
  std::vector<std::size_t> digits( vars.size(), 0 );
  ValidityResult r;
  while ( true )
  {
    Assignment s;
    for ( std::size_t i = 0; i < vars.size(); ++i )
      s.values[vars[i]] = digits[i];
    auto v = eval_formula( f, A, s, m );
    if ( !designated( v ) )
    {
      r.valid = false;
      r.witness = s;
      r.witness_value = v;
      return r;
    }
    // odometer, last variable fastest
    std::size_t i = vars.size();
    while ( i > 0 )
    {
      --i;
      if ( ++digits[i] < A.size() )
        break;
      digits[i] = 0;
      if ( i == 0 )
        return r;
    }
    if ( vars.empty() )
      return r;
  }
}

// ---------------------------------------------------------------------------
// Set-level semantics

namespace
{

void bound_vars( Formula const& f, std::set<std::string>& out )
{
  if ( f.is_atom() )
    return;
  if ( f.is_binary() )
  {
    bound_vars( f.left(), out );
    bound_vars( f.right(), out );
    return;
  }
  if ( f.is_quantifier() )
    out.insert( f.variable() );
  bound_vars( f.body(), out );
}

struct SetSemantics
{
  PartialStructure const& A;
  AssignmentSpace const& space;
  PowersetAlgebra algebra;
  std::vector<Assignment> points;

  TwistTriple run( Formula const& f ) const
  {
    switch ( f.kind() )
    {
    case Connective::atom:
    {
      if ( f.args().empty() )
        throw StructureError( "propositional letter " + f.predicate() + " has no interpretation in a structure" );
      auto const& r = A.predicate( f.predicate() );
      TwistTriple z{ algebra.zero(), algebra.zero(), algebra.zero() };
      std::vector<std::size_t> tuple( f.args().size() );
      for ( std::size_t s = 0; s < points.size(); ++s )
      {
        for ( std::size_t i = 0; i < tuple.size(); ++i )
          tuple[i] = eval_term( f.args()[i], A, points[s] );
        auto idx = A.tuple_index( tuple );
        if ( r.plus.contains( idx ) )
          z.first.insert( s );
        else if ( r.minus.contains( idx ) )
          z.second.insert( s );
        else
          z.third.insert( s );
      }
      return z;
    }
    case Connective::neg:
    case Connective::cons:
      return twist_triple_op( algebra, f.kind(), run( f.body() ) );
    case Connective::conj:
    case Connective::disj:
    case Connective::imp:
    {
      auto a = run( f.left() );
      auto b = run( f.right() );
      return twist_triple_op( algebra, f.kind(), a, &b );
    }
    case Connective::forall:
      return lifted_forall( space, f.variable(), run( f.body() ) );
    case Connective::exists:
      return lifted_exists( space, f.variable(), run( f.body() ) );
    }
    return {};
  }
};

} // namespace

Triple formula_triple( Formula const& f, PartialStructure const& A, std::vector<std::string> const& frame )
{
  for ( auto const& x : free_vars( f ) )
    if ( std::find( frame.begin(), frame.end(), x ) == frame.end() )
      throw StructureError( "variable " + x + " is free but not in the frame" );
  std::set<std::string> bound;
  bound_vars( f, bound );
  auto extended = frame;
  for ( auto const& x : bound )
    if ( std::find( frame.begin(), frame.end(), x ) == frame.end() )
      extended.push_back( x );

  AssignmentSpace space( A.size(), extended );
  SetSemantics sem{ A, space, space.algebra(), {} };
  sem.points.reserve( space.size() );
  for ( std::size_t s = 0; s < space.size(); ++s )
  {
    Assignment a;
    auto vals = space.decode( s );
    for ( std::size_t i = 0; i < extended.size(); ++i )
      a.values[extended[i]] = vals[i];
    sem.points.push_back( std::move( a ) );
  }
  auto z = sem.run( f );

  // the extra coordinates do not affect the classes of f; read them at 0
  AssignmentSpace small( A.size(), frame );
  Triple out( small.size() );
  std::vector<std::size_t> vals( extended.size(), 0 );
  for ( std::size_t s = 0; s < small.size(); ++s )
  {
    auto head = small.decode( s );
    std::copy( head.begin(), head.end(), vals.begin() );
    auto big = space.encode( vals );
    if ( z.first.contains( big ) )
      out.plus.insert( s );
    else if ( z.second.contains( big ) )
      out.minus.insert( s );
    else
      out.dot.insert( s );
  }
  return out;
}

std::string to_string( Trichotomy t )
{
  switch ( t )
  {
  case Trichotomy::pos: return "POS";
  case Trichotomy::neg: return "NEG";
  case Trichotomy::both: return "BOTH";
  }
  return "?";
}

Trichotomy sentence_trichotomy( Formula const& f, PartialStructure const& A )
{
  if ( !is_sentence( f ) )
    throw StructureError( "sentence expected: " + to_string( f ) + " has free variables" );
  Assignment s;
  bool pos = holds( Formula::conjunction( f, Formula::consistency( f ) ), A, s );
  bool neg = holds( Formula::conjunction( Formula::negation( f ), Formula::consistency( f ) ), A, s );
  bool both = holds( Formula::conjunction( f, Formula::negation( f ) ), A, s );
  if ( pos + neg + both != 1 )
    throw std::logic_error( "trichotomy violated for " + to_string( f ) );
  return pos ? Trichotomy::pos : neg ? Trichotomy::neg : Trichotomy::both;
}

// ---------------------------------------------------------------------------
// Equality

std::vector<std::size_t> diagonal_indices( std::size_t size )
{
  std::vector<std::size_t> out;
  for ( std::size_t a = 0; a < size; ++a )
    out.push_back( a * size + a );
  return out;
}

Triple classical_equality( std::size_t size )
{
  Triple r( size * size );
  for ( std::size_t i = 0; i < size * size; ++i )
    r.set( i, TruthValue::zero );
  for ( auto i : diagonal_indices( size ) )
    r.set( i, TruthValue::one );
  return r;
}

bool is_equality_structure( PartialStructure const& A )
{
  if ( !A.signature.has_equality )
    throw StructureError( "signature has no equality" );
  auto const& r = A.predicate( std::string( equality_symbol ) );
  return ( r.plus | r.dot ) == Subset::from_indices( A.size() * A.size(), diagonal_indices( A.size() ) );
}

// ---------------------------------------------------------------------------
// Expansions and reducts

std::string element_constant_name( PartialStructure const& A, std::size_t element )
{
  return "c_" + A.elements.at( element );
}

PartialStructure expand_with_names( PartialStructure const& A, std::vector<std::size_t> const& elements )
{
  PartialStructure B = A;
  for ( auto a : elements )
  {
    if ( a >= A.size() )
      throw StructureError( "element outside the domain" );
    auto name = element_constant_name( A, a );
    if ( B.signature.declares( name ) )
      throw StructureError( "constant name " + name + " is already taken" );
    B.signature.add_constant( name );
    B.constants[name] = a;
  }
  return B;
}

PartialStructure reduct( PartialStructure const& A, Signature const& sig )
{
  PartialStructure B;
  B.signature = sig;
  B.elements = A.elements;
  for ( auto const& [name, arity] : sig.predicates )
  {
    if ( A.signature.predicate_arity( name ) != arity )
      throw StructureError( "predicate " + name + " is not in the structure's signature" );
    B.predicates[name] = A.predicate( name );
  }
  if ( sig.has_equality )
  {
    if ( !A.signature.has_equality )
      throw StructureError( "structure has no equality" );
    B.predicates[std::string( equality_symbol )] = A.predicate( std::string( equality_symbol ) );
  }
  for ( auto const& [name, arity] : sig.functions )
  {
    if ( A.signature.function_arity( name ) != arity )
      throw StructureError( "function " + name + " is not in the structure's signature" );
    B.functions[name] = A.functions.at( name );
  }
  for ( auto const& name : sig.constants )
  {
    if ( !A.signature.is_constant( name ) )
      throw StructureError( "constant " + name + " is not in the structure's signature" );
    B.constants[name] = A.constants.at( name );
  }
  return B;
}

} // namespace qciore
