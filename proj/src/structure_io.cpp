#include <qciore/structure_io.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace qciore
{

namespace
{

struct Tok
{
  std::string text;
  std::size_t line;
  bool word; // identifier or number, as opposed to punctuation
};

bool word_char( char c )
{
  return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '\'';
}

std::vector<Tok> tokenize( std::string_view s )
{
  std::vector<Tok> out;
  std::size_t line = 1;
  for ( std::size_t i = 0; i < s.size(); )
  {
    char c = s[i];
    if ( c == '\n' )
    {
      ++line;
      ++i;
    }
    else if ( std::isspace( static_cast<unsigned char>( c ) ) )
      ++i;
    else if ( c == '#' )
    {
      while ( i < s.size() && s[i] != '\n' )
        ++i;
    }
    else if ( word_char( c ) )
    {
      auto j = i;
      while ( j < s.size() && word_char( s[j] ) )
        ++j;
      out.push_back( { std::string( s.substr( i, j - i ) ), line, true } );
      i = j;
    }
    else if ( s.substr( i, 2 ) == "->" )
    {
      out.push_back( { "->", line, false } );
      i += 2;
    }
    else if ( std::string_view( "{}(),=/" ).find( c ) != std::string_view::npos )
    {
      out.push_back( { std::string( 1, c ), line, false } );
      ++i;
    }
    else
      throw StructureError( "line " + std::to_string( line ) + ": unexpected character '" + std::string( 1, c ) + "'" );
  }
  return out;
}

class Reader
{
public:
  explicit Reader( std::string_view text ) : toks_( tokenize( text ) ) {}

  PartialStructure run()
  {
    bool equality_normal = false;
    bool have_domain = false;
    while ( !at_end() )
    {
      auto kw = next_word( "a declaration" );
      if ( kw == "domain" )
      {
        if ( have_domain )
          fail( "domain declared twice" );
        expect( "=" );
        read_domain();
        have_domain = true;
        continue;
      }
      if ( kw == "equality" )
      {
        auto w = next_word( "'normal'" );
        if ( w != "normal" )
          fail( "expected 'normal' after 'equality'" );
        equality_normal = true;
        continue;
      }
      if ( !have_domain )
        fail( "the domain must be declared first" );
      if ( kw == "pred" )
        read_pred();
      else if ( kw == "fun" )
        read_fun();
      else if ( kw == "const" )
        read_const();
      else
        fail( "unknown declaration '" + kw + "'" );
    }
    if ( !have_domain )
      throw StructureError( "missing domain declaration" );

    std::string eq( equality_symbol );
    if ( equality_normal )
    {
      A_.signature.has_equality = true;
      if ( !A_.predicates.contains( eq ) )
        A_.predicates[eq] = classical_equality( A_.size() );
    }
    A_.validate();
    if ( equality_normal && !is_equality_structure( A_ ) )
      throw StructureError( "equality normal: plus and dot classes of = must be exactly the diagonal" );
    return std::move( A_ );
  }

private:
  bool at_end() const { return pos_ >= toks_.size(); }

  std::size_t line() const
  {
    if ( toks_.empty() )
      return 1;
    return toks_[std::min( pos_, toks_.size() - 1 )].line;
  }

  [[noreturn]] void fail( std::string const& msg ) const
  {
    throw StructureError( "line " + std::to_string( line() ) + ": " + msg );
  }

  Tok const& next( char const* what )
  {
    if ( at_end() )
      fail( std::string( "unexpected end of file, expected " ) + what );
    return toks_[pos_++];
  }

  std::string next_word( char const* what )
  {
    auto const& t = next( what );
    if ( !t.word )
    {
      --pos_;
      fail( std::string( "expected " ) + what + ", found '" + t.text + "'" );
    }
    return t.text;
  }

  void expect( std::string const& punct )
  {
    auto const& t = next( punct.c_str() );
    if ( t.word || t.text != punct )
    {
      --pos_;
      fail( "expected '" + punct + "', found '" + t.text + "'" );
    }
  }

  bool peek( std::string const& punct ) const
  {
    return !at_end() && !toks_[pos_].word && toks_[pos_].text == punct;
  }

  void read_domain()
  {
    expect( "{" );
    if ( peek( "}" ) )
      fail( "empty domain" );
    do
    {
      auto name = next_word( "an element name" );
      if ( A_.element_index( name ) )
        fail( "element " + name + " listed twice" );
      A_.elements.push_back( name );
    } while ( accept( "," ) );
    expect( "}" );
  }

  bool accept( std::string const& punct )
  {
    if ( !peek( punct ) )
      return false;
    ++pos_;
    return true;
  }

  std::size_t element()
  {
    auto name = next_word( "an element name" );
    auto idx = A_.element_index( name );
    if ( !idx )
    {
      --pos_;
      fail( "unknown element " + name );
    }
    return *idx;
  }

  std::vector<std::size_t> tuple( int arity )
  {
    expect( "(" );
    std::vector<std::size_t> t;
    t.push_back( element() );
    while ( accept( "," ) )
      t.push_back( element() );
    expect( ")" );
    if ( t.size() != static_cast<std::size_t>( arity ) )
      fail( "tuple of length " + std::to_string( t.size() ) + " for arity " + std::to_string( arity ) );
    return t;
  }

  std::pair<std::string, int> symbol_and_arity( bool allow_equality )
  {
    std::string name;
    if ( allow_equality && accept( "=" ) )
      name = std::string( equality_symbol );
    else
      name = next_word( "a symbol name" );
    expect( "/" );
    auto ar = next_word( "an arity" );
    int arity = 0;
    for ( char c : ar )
    {
      if ( !std::isdigit( static_cast<unsigned char>( c ) ) || arity > 16 )
        fail( "bad arity " + ar );
      arity = arity * 10 + ( c - '0' );
    }
    if ( arity < 1 )
      fail( "arity must be positive" );
    return { name, arity };
  }

  void read_pred()
  {
    auto [name, arity] = symbol_and_arity( true );
    if ( A_.predicates.contains( name ) )
      fail( "predicate " + name + " declared twice" );
    try
    {
      A_.signature.add_predicate( name, arity );
    }
    catch ( SignatureError const& e )
    {
      fail( e.what() );
    }
    auto count = A_.tuple_count( static_cast<std::size_t>( arity ) );
    Subset plus( count ), minus( count ), dot( count );
    std::set<std::string> seen;
    expect( "{" );
    while ( !accept( "}" ) )
    {
      auto cls = next_word( "plus, minus or dot" );
      Subset* target = cls == "plus" ? &plus : cls == "minus" ? &minus : cls == "dot" ? &dot : nullptr;
      if ( !target )
        fail( "unknown class '" + cls + "'" );
      if ( !seen.insert( cls ).second )
        fail( "class " + cls + " given twice" );
      expect( "=" );
      expect( "{" );
      if ( !accept( "}" ) )
      {
        do
        {
          auto idx = A_.tuple_index( tuple( arity ) );
          if ( plus.contains( idx ) || minus.contains( idx ) || dot.contains( idx ) )
            fail( "tuple listed twice in predicate " + name );
          target->insert( idx );
        } while ( accept( "," ) );
        expect( "}" );
      }
    }
    Triple r( plus, minus, dot );
    if ( !r.is_partition() )
      fail( "predicate " + name + " does not classify every tuple" );
    A_.predicates[name] = std::move( r );
  }

  void read_fun()
  {
    auto [name, arity] = symbol_and_arity( false );
    try
    {
      A_.signature.add_function( name, arity );
    }
    catch ( SignatureError const& e )
    {
      fail( e.what() );
    }
    if ( A_.functions.contains( name ) )
      fail( "function " + name + " declared twice" );
    auto count = A_.tuple_count( static_cast<std::size_t>( arity ) );
    std::vector<std::size_t> table( count, A_.size() );
    expect( "{" );
    if ( !accept( "}" ) )
    {
      do
      {
        auto idx = A_.tuple_index( tuple( arity ) );
        expect( "->" );
        if ( table[idx] != A_.size() )
          fail( "function " + name + " defined twice at one argument" );
        table[idx] = element();
      } while ( accept( "," ) );
      expect( "}" );
    }
    for ( auto v : table )
      if ( v == A_.size() )
        fail( "function " + name + " is not total" );
    A_.functions[name] = std::move( table );
  }

  void read_const()
  {
    auto name = next_word( "a constant name" );
    try
    {
      A_.signature.add_constant( name );
    }
    catch ( SignatureError const& e )
    {
      fail( e.what() );
    }
    if ( A_.constants.contains( name ) )
      fail( "constant " + name + " declared twice" );
    expect( "=" );
    A_.constants[name] = element();
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  PartialStructure A_;
};

std::string tuple_text( PartialStructure const& A, std::size_t idx, std::size_t arity )
{
  std::string s = "(";
  auto t = A.tuple_at( idx, arity );
  for ( std::size_t i = 0; i < t.size(); ++i )
  {
    if ( i )
      s += ",";
    s += A.elements[t[i]];
  }
  return s + ")";
}

std::string class_text( PartialStructure const& A, Subset const& cls, std::size_t arity )
{
  std::string s = "{";
  bool first = true;
  for ( auto idx : cls.members() )
  {
    if ( !first )
      s += ",";
    s += tuple_text( A, idx, arity );
    first = false;
  }
  return s + "}";
}

} // namespace

PartialStructure parse_structure( std::string_view text )
{
  return Reader( text ).run();
}

std::string read_file( std::string const& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
    throw std::runtime_error( "cannot open " + path );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PartialStructure load_structure( std::string const& path )
{
  return parse_structure( read_file( path ) );
}

std::string print_structure( PartialStructure const& A )
{
  std::ostringstream out;
  out << "domain = {";
  for ( std::size_t i = 0; i < A.size(); ++i )
    out << ( i ? ", " : "" ) << A.elements[i];
  out << "}\n";
  auto pred = [&]( std::string const& name, std::size_t arity ) {
    auto const& r = A.predicate( name );
    out << "pred " << name << "/" << arity << " { plus=" << class_text( A, r.plus, arity )
        << " minus=" << class_text( A, r.minus, arity ) << " dot=" << class_text( A, r.dot, arity ) << " }\n";
  };
  for ( auto const& [name, arity] : A.signature.predicates )
    pred( name, static_cast<std::size_t>( arity ) );
  if ( A.signature.has_equality )
  {
    pred( std::string( equality_symbol ), 2 );
    if ( is_equality_structure( A ) )
      out << "equality normal\n";
  }
  for ( auto const& [name, arity] : A.signature.functions )
  {
    out << "fun " << name << "/" << arity << " {";
    auto const& table = A.functions.at( name );
    for ( std::size_t i = 0; i < table.size(); ++i )
      out << ( i ? ", " : "" ) << tuple_text( A, i, static_cast<std::size_t>( arity ) ) << "->"
          << A.elements[table[i]];
    out << "}\n";
  }
  for ( auto const& name : A.signature.constants )
    out << "const " << name << " = " << A.elements[A.constants.at( name )] << "\n";
  return out.str();
}

} // namespace qciore
