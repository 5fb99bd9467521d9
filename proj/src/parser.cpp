#include <qciore/parser.hpp>

#include <cctype>
#include <optional>

namespace qciore
{

namespace
{

enum class Tok
{
  ident,
  lparen,
  rparen,
  comma,
  dot,
  tilde,
  at,
  bang,
  amp,
  bar,
  arrow,
  iff,
  eq,
  end
};

struct Token
{
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start( char c )
{
  return std::isalpha( static_cast<unsigned char>( c ) ) || c == '_';
}

bool ident_char( char c )
{
  return std::isalnum( static_cast<unsigned char>( c ) ) || c == '_' || c == '\'';
}

std::vector<Token> tokenize( std::string_view s )
{
  std::vector<Token> out;
  std::size_t i = 0;
  while ( i < s.size() )
  {
    char c = s[i];
    if ( std::isspace( static_cast<unsigned char>( c ) ) )
    {
      ++i;
      continue;
    }
    if ( ident_start( c ) )
    {
      std::size_t j = i;
      while ( j < s.size() && ident_char( s[j] ) )
        ++j;
      out.push_back( { Tok::ident, std::string( s.substr( i, j - i ) ), i } );
      i = j;
      continue;
    }
    if ( s.substr( i, 3 ) == "<->" )
    {
      out.push_back( { Tok::iff, "<->", i } );
      i += 3;
      continue;
    }
    if ( s.substr( i, 2 ) == "->" )
    {
      out.push_back( { Tok::arrow, "->", i } );
      i += 2;
      continue;
    }
    Tok k;
    switch ( c )
    {
    case '(': k = Tok::lparen; break;
    case ')': k = Tok::rparen; break;
    case ',': k = Tok::comma; break;
    case '.': k = Tok::dot; break;
    case '~': k = Tok::tilde; break;
    case '@': k = Tok::at; break;
    case '!': k = Tok::bang; break;
    case '&': k = Tok::amp; break;
    case '|': k = Tok::bar; break;
    case '=': k = Tok::eq; break;
    default:
      throw ParseError( std::string( "unexpected character '" ) + c + "'", i );
    }
    out.push_back( { k, std::string( 1, c ), i } );
    ++i;
  }
  out.push_back( { Tok::end, "", s.size() } );
  return out;
}

bool is_keyword( std::string const& s )
{
  return s == "forall" || s == "exists";
}

class Parser
{
public:
  Parser( std::string_view text, Signature& sig, ParseOptions options )
      : toks_( tokenize( text ) ), sig_( sig ), opt_( options )
  {
  }

  Formula parse_all()
  {
    auto f = formula();
    expect( Tok::end, "end of input" );
    return f;
  }

  Term parse_term_all()
  {
    auto t = term();
    expect( Tok::end, "end of input" );
    return t;
  }

private:
  Token const& peek( std::size_t ahead = 0 ) const
  {
    auto i = std::min( pos_ + ahead, toks_.size() - 1 );
    return toks_[i];
  }

  Token const& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  bool accept( Tok k )
  {
    if ( peek().kind != k )
      return false;
    advance();
    return true;
  }

  Token const& expect( Tok k, char const* what )
  {
    if ( peek().kind != k )
    {
      auto const& t = peek();
      throw ParseError( std::string( "expected " ) + what + ( t.kind == Tok::end ? ", found end of input" : ", found '" + t.text + "'" ),
                        t.pos );
    }
    return advance();
  }

  Formula formula()
  {
    auto lhs = implication();
    if ( accept( Tok::iff ) )
      return Formula::biconditional( lhs, implication() );
    return lhs;
  }

  Formula implication()
  {
    auto lhs = disjunction();
    if ( accept( Tok::arrow ) )
      return Formula::implication( lhs, implication() );
    return lhs;
  }

  Formula disjunction()
  {
    auto f = conjunction();
    while ( accept( Tok::bar ) )
      f = Formula::disjunction( f, conjunction() );
    return f;
  }

  Formula conjunction()
  {
    auto f = unary();
    while ( accept( Tok::amp ) )
      f = Formula::conjunction( f, unary() );
    return f;
  }

  Formula unary()
  {
    auto const& t = peek();
    switch ( t.kind )
    {
    case Tok::tilde:
      advance();
      return Formula::negation( unary() );
    case Tok::at:
      advance();
      return Formula::consistency( unary() );
    case Tok::bang:
      advance();
      return Formula::strong_negation( unary() );
    case Tok::lparen:
    {
      // terms are never parenthesised, so "(" always opens a formula
      advance();
      auto f = formula();
      expect( Tok::rparen, "')'" );
      return f;
    }
    case Tok::ident:
      if ( is_keyword( t.text ) )
      {
        bool universal = t.text == "forall";
        advance();
        auto const& v = expect( Tok::ident, "a variable" );
        if ( is_keyword( v.text ) )
          throw ParseError( "keyword used as a variable", v.pos );
        if ( sig_.declares( v.text ) )
          throw ParseError( "cannot bind declared symbol " + v.text, v.pos );
        std::string var = v.text;
        expect( Tok::dot, "'.'" );
        auto body = formula();
        return universal ? Formula::forall( var, body ) : Formula::exists( var, body );
      }
      return atom();
    default:
      throw ParseError( t.kind == Tok::end ? "unexpected end of input" : "unexpected '" + t.text + "'", t.pos );
    }
  }

  Formula atom()
  {
    auto const& t = peek();
    // Predicate application: identifier followed by "(" that is a predicate.
    if ( peek( 1 ).kind == Tok::lparen )
    {
      auto arity = sig_.predicate_arity( t.text );
      bool predicate = arity.has_value();
      if ( !predicate && !sig_.function_arity( t.text ) && opt_.infer_symbols &&
           std::isupper( static_cast<unsigned char>( t.text[0] ) ) )
        predicate = true;
      if ( predicate )
      {
        auto name_tok = advance();
        advance(); // (
        std::vector<Term> args;
        args.push_back( term() );
        while ( accept( Tok::comma ) )
          args.push_back( term() );
        expect( Tok::rparen, "')'" );
        if ( arity )
        {
          if ( static_cast<std::size_t>( *arity ) != args.size() )
            throw ParseError( "predicate " + name_tok.text + " expects " + std::to_string( *arity ) + " arguments",
                              name_tok.pos );
        }
        else
        {
          try
          {
            sig_.add_predicate( name_tok.text, static_cast<int>( args.size() ) );
          }
          catch ( SignatureError const& e )
          {
            throw ParseError( e.what(), name_tok.pos );
          }
        }
        return Formula::atom( name_tok.text, std::move( args ) );
      }
    }
    // Propositional letter: bare identifier not followed by "=".
    if ( opt_.allow_letters && peek( 1 ).kind != Tok::lparen && peek( 1 ).kind != Tok::eq &&
         !sig_.is_constant( t.text ) && !sig_.function_arity( t.text ) )
    {
      if ( sig_.predicate_arity( t.text ) )
        throw ParseError( "predicate " + t.text + " used without arguments", t.pos );
      return Formula::letter( advance().text );
    }
    auto lhs_pos = t.pos;
    auto lhs = term();
    if ( peek().kind != Tok::eq )
    {
      if ( lhs.kind() == Term::Kind::application || sig_.is_constant( lhs.name() ) )
        throw ParseError( "expected '=' after term", peek().pos );
      if ( sig_.predicate_arity( lhs.name() ) )
        throw ParseError( "predicate " + lhs.name() + " used without arguments", lhs_pos );
      throw ParseError( "unknown predicate " + lhs.name(), lhs_pos );
    }
    auto eq_pos = advance().pos;
    if ( !sig_.has_equality )
    {
      if ( !opt_.infer_symbols )
        throw ParseError( "signature has no equality", eq_pos );
      sig_.has_equality = true;
    }
    return Formula::equality( lhs, term() );
  }

  Term term()
  {
    auto const& t = expect( Tok::ident, "a term" );
    if ( is_keyword( t.text ) )
      throw ParseError( "keyword used as a term", t.pos );
    if ( accept( Tok::lparen ) )
    {
      std::vector<Term> args;
      args.push_back( term() );
      while ( accept( Tok::comma ) )
        args.push_back( term() );
      expect( Tok::rparen, "')'" );
      auto arity = sig_.function_arity( t.text );
      if ( !arity )
      {
        if ( !opt_.infer_symbols || sig_.predicate_arity( t.text ) || sig_.is_constant( t.text ) )
          throw ParseError( "unknown function " + t.text, t.pos );
        try
        {
          sig_.add_function( t.text, static_cast<int>( args.size() ) );
        }
        catch ( SignatureError const& e )
        {
          throw ParseError( e.what(), t.pos );
        }
      }
      else if ( static_cast<std::size_t>( *arity ) != args.size() )
        throw ParseError( "function " + t.text + " expects " + std::to_string( *arity ) + " arguments", t.pos );
      return Term::apply( t.text, std::move( args ) );
    }
    if ( sig_.is_constant( t.text ) )
      return Term::constant( t.text );
    if ( sig_.function_arity( t.text ) )
      throw ParseError( "function " + t.text + " used without arguments", t.pos );
    if ( sig_.predicate_arity( t.text ) )
      throw ParseError( "predicate " + t.text + " used as a term", t.pos );
    return Term::variable( t.text );
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature& sig_;
  ParseOptions opt_;
};

} // namespace

Formula parse_formula( std::string_view text, Signature const& sig )
{
  Signature copy = sig;
  return Parser( text, copy, {} ).parse_all();
}

Formula parse_formula( std::string_view text, Signature& sig, ParseOptions const& options )
{
  return Parser( text, sig, options ).parse_all();
}

Term parse_term( std::string_view text, Signature const& sig )
{
  Signature copy = sig;
  return Parser( text, copy, {} ).parse_term_all();
}

Signature parse_signature( std::string_view text )
{
  Signature sig;
  std::size_t i = 0;
  auto trim = []( std::string_view s ) {
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.front() ) ) )
      s.remove_prefix( 1 );
    while ( !s.empty() && std::isspace( static_cast<unsigned char>( s.back() ) ) )
      s.remove_suffix( 1 );
    return s;
  };
  while ( i <= text.size() )
  {
    auto j = text.find( ',', i );
    if ( j == std::string_view::npos )
      j = text.size();
    auto item = trim( text.substr( i, j - i ) );
    i = j + 1;
    if ( item.empty() )
    {
      if ( j == text.size() )
        break;
      throw SignatureError( "empty entry in signature" );
    }
    if ( item == equality_symbol )
    {
      sig.has_equality = true;
      continue;
    }
    auto slash = item.find( '/' );
    std::string name( trim( item.substr( 0, slash ) ) );
    if ( name.empty() || !ident_start( name[0] ) )
      throw SignatureError( "bad symbol name '" + name + "'" );
    for ( char c : name )
      if ( !ident_char( c ) )
        throw SignatureError( "bad symbol name '" + name + "'" );
    if ( is_keyword( name ) )
      throw SignatureError( "keyword used as a symbol name" );
    if ( slash == std::string_view::npos )
    {
      sig.add_constant( name );
      continue;
    }
    auto arity_text = trim( item.substr( slash + 1 ) );
    int arity = 0;
    if ( arity_text.empty() )
      throw SignatureError( "missing arity for " + name );
    for ( char c : arity_text )
    {
      if ( !std::isdigit( static_cast<unsigned char>( c ) ) )
        throw SignatureError( "bad arity for " + name );
      arity = arity * 10 + ( c - '0' );
      if ( arity > 64 )
        throw SignatureError( "arity too large for " + name );
    }
    if ( std::isupper( static_cast<unsigned char>( name[0] ) ) )
      sig.add_predicate( name, arity );
    else
      sig.add_function( name, arity );
  }
  return sig;
}

} // namespace qciore
