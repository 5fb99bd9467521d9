#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qciore
{

/// Name of the distinguished binary equality predicate, written `t1 = t2`.
inline constexpr std::string_view equality_symbol = "=";

/// Raised when a symbol is missing from the signature, or used with the wrong arity.
class SignatureError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised by substitute() when the term is not free for the variable.
class CaptureError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// A first-order signature: predicate and function symbols with positive
/// arities, constants, and an optional equality predicate.
struct Signature
{
  std::map<std::string, int> predicates;
  std::map<std::string, int> functions;
  std::set<std::string> constants;
  bool has_equality = false;

  void add_predicate( std::string const& name, int arity );
  void add_function( std::string const& name, int arity );
  void add_constant( std::string const& name );

  /// Arity of a predicate; "=" resolves to 2 iff the signature has equality.
  std::optional<int> predicate_arity( std::string_view name ) const;
  std::optional<int> function_arity( std::string_view name ) const;
  bool is_constant( std::string_view name ) const;
  bool declares( std::string_view name ) const;

  /// Throws SignatureError when the name sets overlap or an arity is not positive.
  void validate() const;

  bool operator==( Signature const& ) const = default;
};

class Term
{
public:
  enum class Kind
  {
    variable,
    constant,
    application
  };

  static Term variable( std::string name );
  static Term constant( std::string name );
  static Term apply( std::string function, std::vector<Term> args );

  Kind kind() const { return kind_; }
  bool is_variable() const { return kind_ == Kind::variable; }
  std::string const& name() const { return name_; }
  std::vector<Term> const& args() const { return args_; }

  bool operator==( Term const& ) const = default;

private:
  Kind kind_ = Kind::variable;
  std::string name_;
  std::vector<Term> args_;
};

enum class Connective
{
  atom,
  neg,
  cons,
  conj,
  disj,
  imp,
  forall,
  exists
};

/// Immutable formula tree with shared subterms.
///
/// Atoms carry a predicate name and argument terms. An atom with no
/// arguments is a schematic propositional letter; letters appear in
/// propositional formulas and in axiom or lemma schemas, never in a
/// first-order signature.
class Formula
{
public:
  struct Node;

  Formula() = default;

  static Formula atom( std::string predicate, std::vector<Term> args );
  static Formula letter( std::string name );
  static Formula equality( Term lhs, Term rhs );
  static Formula negation( Formula f );
  static Formula consistency( Formula f );
  static Formula conjunction( Formula a, Formula b );
  static Formula disjunction( Formula a, Formula b );
  static Formula implication( Formula a, Formula b );
  static Formula forall( std::string variable, Formula body );
  static Formula exists( std::string variable, Formula body );

  /// ~a, expanded to ¬a ∧ ∘a.
  static Formula strong_negation( Formula f );
  /// a <-> b, expanded to (a → b) ∧ (b → a).
  static Formula biconditional( Formula a, Formula b );

  bool valid() const { return node_ != nullptr; }
  Connective kind() const;
  bool is_atom() const { return kind() == Connective::atom; }
  bool is_letter() const;
  bool is_unary() const;
  bool is_binary() const;
  bool is_quantifier() const;

  /// Predicate name of an atom.
  std::string const& predicate() const;
  std::vector<Term> const& args() const;
  /// Bound variable of a quantifier.
  std::string const& variable() const;
  /// Operand of a unary connective or body of a quantifier.
  Formula const& body() const;
  Formula const& left() const;
  Formula const& right() const;

  bool operator==( Formula const& other ) const;
  bool operator!=( Formula const& other ) const { return !( *this == other ); }

private:
  explicit Formula( std::shared_ptr<Node const> node ) : node_( std::move( node ) ) {}
  Node const& node() const;

  std::shared_ptr<Node const> node_;
};

struct Formula::Node
{
  Connective kind;
  std::string name;
  std::vector<Term> args;
  Formula lhs;
  Formula rhs;
};

std::string to_string( Term const& t );
/// Canonical printing; parse_formula() reads it back to the same tree.
std::string to_string( Formula const& f );

std::set<std::string> term_vars( Term const& t );
std::set<std::string> free_vars( Formula const& f );
/// Every variable occurring in f, free or bound (including quantifier prefixes).
std::set<std::string> all_vars( Formula const& f );
std::set<std::string> letters( Formula const& f );
bool is_sentence( Formula const& f );
/// Quantifier-free, and every atom is a letter.
bool is_propositional( Formula const& f );
/// Nesting depth of connectives and quantifiers; atoms have depth 0.
std::size_t depth( Formula const& f );

/// True iff no free occurrence of x in f lies in the scope of a quantifier
/// binding a variable of t.
bool is_free_for( Term const& t, std::string const& x, Formula const& f );

Term substitute( Term const& t, std::string const& x, Term const& by );
/// f(t/x); throws CaptureError when t is not free for x in f.
Formula substitute( Formula const& f, std::string const& x, Term const& t );

/// Simultaneous replacement of letters by formulas (schema instantiation).
Formula instantiate_letters( Formula const& f, std::map<std::string, Formula> const& binding );

/// True iff candidate arises from f by replacing some (possibly none, possibly
/// all) free occurrences of x by y.
bool replace_some_matches( Formula const& f, std::string const& x, std::string const& y,
                           Formula const& candidate );

/// Prefixes one universal quantifier per free variable, lexicographically
/// ordered (outermost first); sentences are returned unchanged.
Formula universal_closure( Formula const& f );

/// Checks every atom and term against the signature. Letters are accepted
/// only when allow_letters is set.
void check_formula( Formula const& f, Signature const& sig, bool allow_letters = false );

} // namespace qciore
