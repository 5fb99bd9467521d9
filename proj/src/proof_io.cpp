#include <qciore/parser.hpp>
#include <qciore/proof_io.hpp>
#include <qciore/structure_io.hpp>

#include <cctype>
#include <sstream>

namespace qciore
{

namespace
{

std::string_view trim( std::string_view s )
{
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
    s.remove_suffix( 1 );
  return s;
}

std::vector<std::string> words( std::string_view s )
{
  std::vector<std::string> out;
  std::istringstream in{ std::string( s ) };
  std::string w;
  while ( in >> w )
    out.push_back( w );
  return out;
}

[[noreturn]] void fail( std::size_t line, std::string const& msg )
{
  throw ProofFormatError( "line " + std::to_string( line ) + ": " + msg );
}

std::size_t number( std::string const& w, std::size_t line )
{
  if ( w.empty() || w.size() > 9 )
    fail( line, "bad number '" + w + "'" );
  std::size_t n = 0;
  for ( char c : w )
  {
    if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
      fail( line, "bad number '" + w + "'" );
    n = n * 10 + static_cast<std::size_t>( c - '0' );
  }
  return n;
}

Justification parse_justification( std::string_view text, std::size_t line )
{
  auto ws = words( text );
  if ( ws.empty() )
    fail( line, "missing justification" );
  using K = Justification::Kind;
  Justification j;
  auto const& head = ws[0];
  std::size_t first_ref = 1;
  if ( head == "ax" )
  {
    j.kind = K::axiom;
    if ( ws.size() > 2 )
      fail( line, "ax takes at most one schema name" );
    if ( ws.size() == 2 )
      j.name = ws[1];
    return j;
  }
  if ( head == "mp" )
    j.kind = K::mp;
  else if ( head == "forall-in" )
    j.kind = K::forall_in;
  else if ( head == "exists-in" )
    j.kind = K::exists_in;
  else if ( head == "hyp" )
    j.kind = K::hyp;
  else if ( head == "lemma" )
  {
    j.kind = K::lemma;
    if ( ws.size() < 2 )
      fail( line, "lemma needs a name" );
    j.name = ws[1];
    first_ref = 2;
  }
  else
    fail( line, "unknown justification '" + head + "'" );
  for ( auto i = first_ref; i < ws.size(); ++i )
  {
    auto w = ws[i];
    if ( !w.empty() && w.back() == ',' )
      w.pop_back();
    j.refs.push_back( number( w, line ) );
  }
  return j;
}

} // namespace

std::vector<Proof> parse_proofs( std::string_view text )
{
  std::vector<Proof> proofs;
  Signature sig;
  ParseOptions opt;
  opt.allow_letters = true;
  opt.infer_symbols = true;

  auto formula = [&]( std::string_view s, std::size_t line ) {
    try
    {
      return parse_formula( trim( s ), sig, opt );
    }
    catch ( ParseError const& e )
    {
      fail( line, e.what() );
    }
    catch ( SignatureError const& e )
    {
      fail( line, e.what() );
    }
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while ( start <= text.size() )
  {
    auto end = text.find( '\n', start );
    if ( end == std::string_view::npos )
      end = text.size();
    auto raw = text.substr( start, end - start );
    start = end + 1;
    ++line_no;
    if ( auto hash = raw.find( '#' ); hash != std::string_view::npos )
      raw = raw.substr( 0, hash );
    auto line = trim( raw );
    if ( line.empty() )
    {
      if ( end == text.size() )
        break;
      continue;
    }

    auto colon = line.find( ':' );
    auto key = colon == std::string_view::npos ? std::string_view{} : trim( line.substr( 0, colon ) );
    if ( key == "name" )
    {
      auto name = trim( line.substr( colon + 1 ) );
      if ( name.empty() )
        fail( line_no, "empty proof name" );
      proofs.push_back( { std::string( name ), {}, {} } );
      continue;
    }
    if ( key == "sig" )
    {
      try
      {
        auto extra = parse_signature( line.substr( colon + 1 ) );
        for ( auto const& [n, a] : extra.predicates )
          sig.add_predicate( n, a );
        for ( auto const& [n, a] : extra.functions )
          sig.add_function( n, a );
        for ( auto const& c : extra.constants )
          sig.add_constant( c );
        sig.has_equality = sig.has_equality || extra.has_equality;
      }
      catch ( SignatureError const& e )
      {
        fail( line_no, e.what() );
      }
      continue;
    }
    if ( proofs.empty() )
      fail( line_no, "expected 'name:' before proof content" );
    auto& p = proofs.back();
    if ( key == "hyp" )
    {
      if ( !p.steps.empty() )
        fail( line_no, "hypotheses must precede the steps" );
      p.hypotheses.push_back( formula( line.substr( colon + 1 ), line_no ) );
      continue;
    }

    // numbered step: "n. formula ; justification"
    auto dot = line.find( '.' );
    if ( dot == std::string_view::npos )
      fail( line_no, "expected a numbered step" );
    auto n = number( std::string( trim( line.substr( 0, dot ) ) ), line_no );
    if ( n != p.steps.size() + 1 )
      fail( line_no, "step " + std::to_string( n ) + " out of sequence, expected " + std::to_string( p.steps.size() + 1 ) );
    auto rest = line.substr( dot + 1 );
    auto semi = rest.rfind( ';' );
    if ( semi == std::string_view::npos )
      fail( line_no, "missing ';' before the justification" );
    ProofStep s;
    s.formula = formula( rest.substr( 0, semi ), line_no );
    s.justification = parse_justification( rest.substr( semi + 1 ), line_no );
    s.line = line_no;
    p.steps.push_back( std::move( s ) );
  }
  for ( auto const& p : proofs )
    if ( p.steps.empty() )
      throw ProofFormatError( "proof " + p.name + " has no steps" );
  return proofs;
}

std::vector<Proof> load_proofs( std::string const& path )
{
  return parse_proofs( read_file( path ) );
}

std::string print_proof( Proof const& p )
{
  std::ostringstream out;
  out << "name: " << p.name << "\n";
  for ( auto const& h : p.hypotheses )
    out << "hyp: " << to_string( h ) << "\n";
  for ( std::size_t i = 0; i < p.steps.size(); ++i )
    out << i + 1 << ". " << to_string( p.steps[i].formula ) << " ; " << to_string( p.steps[i].justification ) << "\n";
  return out.str();
}

} // namespace qciore
