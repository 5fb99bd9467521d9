#include <qciore/matrix3.hpp>
#include <qciore/parser.hpp>

#include <algorithm>
#include <cctype>
#include <limits>

#include <omp.h>

namespace qciore
{

namespace
{

constexpr TruthValue O = TruthValue::zero;
constexpr TruthValue H = TruthValue::half;
constexpr TruthValue I = TruthValue::one;

// Tables are written with rows and columns in the order 1, ½, 0, as they are
// usually displayed, then reindexed to the 0, ½, 1 storage order.
BinaryTable from_display( std::array<std::array<TruthValue, 3>, 3> rows )
{
  BinaryTable t{};
  constexpr std::array<std::size_t, 3> slot = { 2, 1, 0 };
  for ( std::size_t r = 0; r < 3; ++r )
    for ( std::size_t c = 0; c < 3; ++c )
      t[slot[r]][slot[c]] = rows[r][c];
  return t;
}

UnaryTable unary_from_display( std::array<TruthValue, 3> row )
{
  return { row[2], row[1], row[0] };
}

MatrixSpec make_ciore()
{
  MatrixSpec m;
  m.name = "CIORE";
  m.conj = from_display( { { { I, I, O }, { I, H, O }, { O, O, O } } } );
  m.disj = from_display( { { { I, I, I }, { I, H, I }, { I, I, O } } } );
  m.imp = from_display( { { { I, I, O }, { I, H, O }, { I, I, I } } } );
  m.neg = unary_from_display( { O, H, I } );
  m.cons = unary_from_display( { I, O, I } );
  return m;
}

MatrixSpec make_p1()
{
  MatrixSpec m;
  m.name = "P1";
  m.imp = from_display( { { { I, I, O }, { I, I, O }, { I, I, I } } } );
  m.neg = unary_from_display( { O, I, I } );
  return m;
}

MatrixSpec make_lfi1()
{
  MatrixSpec m;
  m.name = "LFI1";
  m.conj = from_display( { { { I, H, O }, { H, H, O }, { O, O, O } } } );
  m.disj = from_display( { { { I, I, I }, { I, H, H }, { I, H, O } } } );
  m.imp = from_display( { { { I, H, O }, { I, H, O }, { I, I, I } } } );
  m.neg = unary_from_display( { O, H, I } );
  m.cons = unary_from_display( { I, O, I } );
  return m;
}

char const* connective_name( Connective c )
{
  switch ( c )
  {
  case Connective::neg: return "negation";
  case Connective::cons: return "consistency";
  case Connective::conj: return "conjunction";
  case Connective::disj: return "disjunction";
  case Connective::imp: return "implication";
  default: return "quantifier";
  }
}

} // namespace

std::string to_string( TruthValue v )
{
  switch ( v )
  {
  case TruthValue::zero: return "0";
  case TruthValue::half: return "1/2";
  case TruthValue::one: return "1";
  }
  return "?";
}

std::optional<TruthValue> parse_truth_value( std::string_view text )
{
  if ( text == "0" )
    return TruthValue::zero;
  if ( text == "1/2" || text == "½" )
    return TruthValue::half;
  if ( text == "1" )
    return TruthValue::one;
  return std::nullopt;
}

MatrixSpec const& MatrixSpec::ciore()
{
  static MatrixSpec const m = make_ciore();
  return m;
}

MatrixSpec const& MatrixSpec::p1()
{
  static MatrixSpec const m = make_p1();
  return m;
}

MatrixSpec const& MatrixSpec::lfi1()
{
  static MatrixSpec const m = make_lfi1();
  return m;
}

MatrixSpec const& MatrixSpec::by_name( std::string_view name )
{
  std::string upper( name );
  std::transform( upper.begin(), upper.end(), upper.begin(), []( unsigned char c ) { return std::toupper( c ); } );
  if ( upper == "CIORE" )
    return ciore();
  if ( upper == "P1" )
    return p1();
  if ( upper == "LFI1" )
    return lfi1();
  throw MatrixError( "unknown matrix " + std::string( name ) );
}

TruthValue MatrixSpec::unary( Connective c, TruthValue a ) const
{
  auto const& table = c == Connective::neg ? neg : c == Connective::cons ? cons : std::optional<UnaryTable>{};
  if ( !table )
    throw MatrixError( "matrix " + name + " does not interpret " + connective_name( c ) );
  return ( *table )[index( a )];
}

TruthValue MatrixSpec::binary( Connective c, TruthValue a, TruthValue b ) const
{
  std::optional<BinaryTable> const* table = nullptr;
  switch ( c )
  {
  case Connective::conj: table = &conj; break;
  case Connective::disj: table = &disj; break;
  case Connective::imp: table = &imp; break;
  default: break;
  }
  if ( !table || !*table )
    throw MatrixError( "matrix " + name + " does not interpret " + connective_name( c ) );
  return ( **table )[index( a )][index( b )];
}

std::string to_string( Valuation const& v )
{
  std::string s = "{";
  bool first = true;
  for ( auto const& [k, val] : v )
  {
    if ( !first )
      s += ", ";
    s += k + "=" + to_string( val );
    first = false;
  }
  return s + "}";
}

TruthValue eval_prop( Formula const& f, Valuation const& v, MatrixSpec const& m )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    if ( !f.is_letter() )
      throw MatrixError( "atom " + to_string( f ) + " is not a propositional letter" );
    auto it = v.find( f.predicate() );
    if ( it == v.end() )
      throw MatrixError( "valuation misses letter " + f.predicate() );
    return it->second;
  }
  case Connective::neg:
  case Connective::cons:
    return m.unary( f.kind(), eval_prop( f.body(), v, m ) );
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
    return m.binary( f.kind(), eval_prop( f.left(), v, m ), eval_prop( f.right(), v, m ) );
  case Connective::forall:
  case Connective::exists:
    throw MatrixError( "quantifier in a propositional formula" );
  }
  return TruthValue::zero;
}

namespace
{

// Postfix program: every instruction reads earlier slots only.
struct Instr
{
  Connective op;
  std::size_t a = 0, b = 0; // operand slots, or letter index for atoms
};

struct Program
{
  std::vector<std::string> letters;
  std::vector<Instr> code;
};

std::size_t compile( Formula const& f, std::vector<std::string> const& letters, MatrixSpec const& m,
                     std::vector<Instr>& code )
{
  switch ( f.kind() )
  {
  case Connective::atom:
  {
    if ( !f.is_letter() )
      throw MatrixError( "atom " + to_string( f ) + " is not a propositional letter" );
    auto it = std::lower_bound( letters.begin(), letters.end(), f.predicate() );
    code.push_back( { Connective::atom, static_cast<std::size_t>( it - letters.begin() ), 0 } );
    break;
  }
  case Connective::neg:
  case Connective::cons:
  {
    m.unary( f.kind(), TruthValue::zero ); // reject absent connectives up front
    auto a = compile( f.body(), letters, m, code );
    code.push_back( { f.kind(), a, 0 } );
    break;
  }
  case Connective::conj:
  case Connective::disj:
  case Connective::imp:
  {
    m.binary( f.kind(), TruthValue::zero, TruthValue::zero );
    auto a = compile( f.left(), letters, m, code );
    auto b = compile( f.right(), letters, m, code );
    code.push_back( { f.kind(), a, b } );
    break;
  }
  case Connective::forall:
  case Connective::exists:
    throw MatrixError( "quantifier in a propositional formula" );
  }
  return code.size() - 1;
}

Program compile( Formula const& f, MatrixSpec const& m )
{
  Program p;
  auto ls = letters( f );
  p.letters.assign( ls.begin(), ls.end() );
  compile( f, p.letters, m, p.code );
  return p;
}

std::uint64_t power3( std::size_t n )
{
  std::uint64_t r = 1;
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( r > std::numeric_limits<std::uint64_t>::max() / 3 )
      throw MatrixError( "too many letters for exhaustive checking" );
    r *= 3;
  }
  return r;
}

// Valuation number k: the first letter is the most significant base-3 digit,
// so increasing k is lexicographic order.
void decode( std::uint64_t k, std::size_t n, std::vector<TruthValue>& vals )
{
  for ( std::size_t i = n; i-- > 0; )
  {
    vals[i] = static_cast<TruthValue>( k % 3 );
    k /= 3;
  }
}

TruthValue run( Program const& p, MatrixSpec const& m, std::vector<TruthValue> const& vals, std::vector<TruthValue>& slots )
{
  for ( std::size_t i = 0; i < p.code.size(); ++i )
  {
    auto const& in = p.code[i];
    switch ( in.op )
    {
    case Connective::atom: slots[i] = vals[in.a]; break;
    case Connective::neg: slots[i] = ( *m.neg )[index( slots[in.a] )]; break;
    case Connective::cons: slots[i] = ( *m.cons )[index( slots[in.a] )]; break;
    case Connective::conj: slots[i] = ( *m.conj )[index( slots[in.a] )][index( slots[in.b] )]; break;
    case Connective::disj: slots[i] = ( *m.disj )[index( slots[in.a] )][index( slots[in.b] )]; break;
    case Connective::imp: slots[i] = ( *m.imp )[index( slots[in.a] )][index( slots[in.b] )]; break;
    default: break;
    }
  }
  return slots.back();
}

Valuation to_valuation( Program const& p, std::uint64_t k )
{
  std::vector<TruthValue> vals( p.letters.size() );
  decode( k, p.letters.size(), vals );
  Valuation v;
  for ( std::size_t i = 0; i < vals.size(); ++i )
    v[p.letters[i]] = vals[i];
  return v;
}

} // namespace

TautologyResult is_tautology3( Formula const& f, MatrixSpec const& m )
{
  auto p = compile( f, m );
  auto total = power3( p.letters.size() );
  std::vector<TruthValue> vals( p.letters.size() ), slots( p.code.size() );
  TautologyResult r;
  for ( std::uint64_t k = 0; k < total; ++k )
  {
    decode( k, p.letters.size(), vals );
    ++r.valuations;
    if ( !designated( run( p, m, vals, slots ) ) )
    {
      r.tautology = false;
      r.witness = to_valuation( p, k );
      return r;
    }
  }
  return r;
}

TautologyResult is_tautology3_parallel( Formula const& f, MatrixSpec const& m )
{
  auto p = compile( f, m );
  auto total = power3( p.letters.size() );
  auto const n = p.letters.size();
  std::uint64_t least = total;

#pragma omp parallel
  {
    std::vector<TruthValue> vals( n ), slots( p.code.size() );
    std::uint64_t mine = total;
#pragma omp for schedule( static )
    for ( std::int64_t sk = 0; sk < static_cast<std::int64_t>( total ); ++sk )
    {
      auto k = static_cast<std::uint64_t>( sk );
      if ( k >= mine )
        continue;
      decode( k, n, vals );
      if ( !designated( run( p, m, vals, slots ) ) )
        mine = k;
    }
#pragma omp critical
    least = std::min( least, mine );
  }

  TautologyResult r;
  if ( least < total )
  {
    r.tautology = false;
    r.witness = to_valuation( p, least );
    r.valuations = least + 1;
  }
  else
    r.valuations = total;
  return r;
}

namespace
{

std::vector<NamedSchema> parse_schemas( std::vector<std::pair<char const*, char const*>> const& items )
{
  std::vector<NamedSchema> out;
  Signature sig;
  ParseOptions opt;
  opt.allow_letters = true;
  for ( auto const& [id, text] : items )
    out.push_back( { id, parse_formula( text, sig, opt ) } );
  return out;
}

} // namespace

std::vector<NamedSchema> const& propositional_axioms()
{
  static std::vector<NamedSchema> const axioms = parse_schemas( {
      { "Ax1", "a -> (b -> a)" },
      { "Ax2", "(a -> (b -> c)) -> ((a -> b) -> (a -> c))" },
      { "Ax3", "a -> (b -> (a & b))" },
      { "Ax4", "(a & b) -> a" },
      { "Ax5", "(a & b) -> b" },
      { "Ax6", "a -> (a | b)" },
      { "Ax7", "b -> (a | b)" },
      { "Ax8", "(a -> c) -> ((b -> c) -> ((a | b) -> c))" },
      { "Ax9", "(a -> b) | a" },
      { "Ax10", "a | ~a" },
      { "bc1", "@a -> (a -> (~a -> b))" },
      { "ci", "~@a -> (a & ~a)" },
      { "cf", "~~a -> a" },
      { "ce", "a -> ~~a" },
      { "co1", "(@a | @b) -> @(a & b)" },
      { "co2", "(@a | @b) -> @(a | b)" },
      { "co3", "(@a | @b) -> @(a -> b)" },
      { "cr1", "@(a & b) -> (@a | @b)" },
      { "cr2", "@(a | b) -> (@a | @b)" },
      { "cr3", "@(a -> b) -> (@a | @b)" },
  } );
  return axioms;
}

std::vector<NamedSchema> const& derived_schemas()
{
  static std::vector<NamedSchema> const schemas = parse_schemas( {
      { "identity", "a -> a" },
      { "contraposition", "(a -> b) -> (!b -> !a)" },
      { "contradiction-strong", "(a & ~a) <-> !@a" },
      { "contradiction-cons", "(a & ~a) <-> ~@a" },
      { "cons-cons", "@@a" },
      { "cons-neg", "@a <-> @~a" },
      { "strong-and", "(!a | !b) <-> !(a & b)" },
      { "contradiction-and", "((a & ~a) & (b & ~b)) <-> ((a & b) & ~(a & b))" },
      { "cons-and", "((a & (b & @b)) | ((a & @a) & b)) <-> ((a & b) & @(a & b))" },
      { "cons-or",
        "((((a & @a) | (b & @b)) | ((a & ~a) & !b)) | (!a & (b & ~b))) <-> ((a | b) & @(a | b))" },
      { "strong-or", "(!a & !b) <-> !(a | b)" },
      { "contradiction-or", "((a & ~a) & (b & ~b)) <-> ((a | b) & ~(a | b))" },
      { "cons-imp", "(!a | (b & @b)) <-> ((a -> b) & @(a -> b))" },
      { "strong-imp", "(a & !b) <-> !(a -> b)" },
      { "contradiction-imp", "((a & ~a) & (b & ~b)) <-> ((a -> b) & ~(a -> b))" },
  } );
  return schemas;
}

std::vector<SchemaCheck> check_named_schemas( MatrixSpec const& m )
{
  std::vector<SchemaCheck> out;
  auto add = [&]( NamedSchema const& s ) {
    SchemaCheck c;
    c.id = s.id;
    c.formula = s.formula;
    try
    {
      auto r = is_tautology3( s.formula, m );
      c.passed = r.tautology;
      c.witness = r.witness;
    }
    catch ( MatrixError const& e )
    {
      c.error = e.what();
    }
    out.push_back( std::move( c ) );
  };
  for ( auto const& s : propositional_axioms() )
    add( s );
  for ( auto const& s : derived_schemas() )
    add( s );
  return out;
}

} // namespace qciore
