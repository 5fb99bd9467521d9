#pragma once

#include <qciore/syntax.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qciore
{

/// Syntax error; position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error
{
public:
  ParseError( std::string const& message, std::size_t position )
      : std::runtime_error( message + " at position " + std::to_string( position ) ), position_( position )
  {
  }

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

struct ParseOptions
{
  /// Accept bare identifiers in formula position as propositional letters.
  bool allow_letters = false;
  /// Add unknown symbols to the signature instead of rejecting them:
  /// capitalised applied names become predicates, lowercase applied names
  /// become functions. Bare identifiers in term position are variables unless
  /// declared constants.
  bool infer_symbols = false;
};

/// Grammar, loosest binding first:
///
///   formula := imp ( "<->" imp )?
///   imp     := or ( "->" imp )?
///   or      := and ( "|" and )*
///   and     := unary ( "&" unary )*
///   unary   := "~" unary | "@" unary | "!" unary
///            | ( "forall" | "exists" ) var "." formula
///            | "(" formula ")" | atom
///   atom    := Pred "(" term ( "," term )* ")" | term "=" term | letter
///
/// A quantifier body extends as far right as possible. "!" is strong
/// negation and "<->" the biconditional; both expand to primitive connectives.
Formula parse_formula( std::string_view text, Signature const& sig );
Formula parse_formula( std::string_view text, Signature& sig, ParseOptions const& options );

Term parse_term( std::string_view text, Signature const& sig );

/// Parses a comma-separated signature description such as "P/1,R/2,f/1,c,=".
/// Names with an arity starting in upper case are predicates, lower case are
/// functions; bare names are constants; "=" enables equality.
Signature parse_signature( std::string_view text );

} // namespace qciore
