#pragma once

#include <qciore/matrix3.hpp>
#include <qciore/syntax.hpp>
#include <qciore/triples.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qciore
{

class StructureError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Finite partial structure. Elements are 0..size()-1 and carry names in
/// that order; the order is the fixed total order used for witnesses.
///
/// A predicate of arity k is a Triple over the size^k tuples, indexed with
/// the first argument most significant. Function tables use the same
/// indexing. With equality in the signature the triple for "=" is stored
/// like any other predicate.
struct PartialStructure
{
  Signature signature;
  std::vector<std::string> elements;
  std::map<std::string, Triple> predicates;
  std::map<std::string, std::vector<std::size_t>> functions;
  std::map<std::string, std::size_t> constants;

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> element_index( std::string_view name ) const;

  /// Index of a tuple among the size^arity tuples.
  std::size_t tuple_index( std::vector<std::size_t> const& tuple ) const;
  std::vector<std::size_t> tuple_at( std::size_t index, std::size_t arity ) const;
  std::size_t tuple_count( std::size_t arity ) const;

  Triple const& predicate( std::string const& name ) const;
  TruthValue value( std::string const& predicate, std::vector<std::size_t> const& tuple ) const;
  std::size_t apply( std::string const& function, std::vector<std::size_t> const& args ) const;

  /// Checks nonempty domain, distinct element names, an interpretation for
  /// every symbol of the signature (and nothing else), partition triples of
  /// the right size, and total function tables.
  void validate() const;

  bool operator==( PartialStructure const& ) const = default;
};

/// Variable assignment with finite support. Variables not in the map take
/// default_element, the least element unless set otherwise.
struct Assignment
{
  std::map<std::string, std::size_t> values;
  std::size_t default_element = 0;

  std::size_t operator()( std::string const& x ) const;
  /// s_x^a
  Assignment updated( std::string const& x, std::size_t a ) const;

  bool operator==( Assignment const& ) const = default;
};

std::string to_string( Assignment const& s, PartialStructure const& A );

/// Bit i set means the value with index i occurs.
using ValueMask = unsigned;

inline ValueMask mask_of( TruthValue v ) { return 1u << index( v ); }

/// ∀̃: 1 if 1 occurs and 0 does not, ½ if only ½ occurs, 0 if 0 occurs.
TruthValue forall_value( ValueMask present );
/// ∃̃: ½ if only ½ occurs, 0 if only 0 occurs, 1 otherwise.
TruthValue exists_value( ValueMask present );

std::size_t eval_term( Term const& t, PartialStructure const& A, Assignment const& s );

/// Recursive 3-valued evaluation. Connectives go through the matrix tables
/// (CIORE unless another matrix is passed); quantifiers collect the values
/// at every s_x^a and apply ∀̃ or ∃̃.
TruthValue eval_formula( Formula const& f, PartialStructure const& A, Assignment const& s,
                         MatrixSpec const& m = MatrixSpec::ciore() );

/// The value is designated.
bool holds( Formula const& f, PartialStructure const& A, Assignment const& s,
            MatrixSpec const& m = MatrixSpec::ciore() );

struct ValidityResult
{
  bool valid = true;
  /// First refuting assignment over the free variables, enumerated with the
  /// alphabetically first variable most significant.
  std::optional<Assignment> witness;
  TruthValue witness_value = TruthValue::zero;
};

/// Checks every assignment of the free variables of f; others do not matter.
ValidityResult is_valid_in( Formula const& f, PartialStructure const& A, MatrixSpec const& m = MatrixSpec::ciore() );

/// Set-level semantics: the triple of assignments over frame (indexed as in
/// AssignmentSpace, first frame variable most significant) on which f takes
/// 1, 0, ½. Built bottom-up with the twist-triple operations over the
/// powerset of assignments and the lifted quantifier operators, without
/// calling eval_formula. Throws StructureError when a free variable of f is
/// missing from frame.
Triple formula_triple( Formula const& f, PartialStructure const& A, std::vector<std::string> const& frame );

enum class Trichotomy
{
  pos,
  neg,
  both
};

std::string to_string( Trichotomy t );

/// POS when φ∧∘φ is valid, NEG when ¬φ∧∘φ is, BOTH when φ∧¬φ is.
/// Throws StructureError for formulas with free variables.
Trichotomy sentence_trichotomy( Formula const& f, PartialStructure const& A );

/// (Δ, complement of Δ, ∅) over size^2 pairs.
Triple classical_equality( std::size_t size );
std::vector<std::size_t> diagonal_indices( std::size_t size );

/// The plus and dot classes of "=" together are exactly the diagonal.
/// Throws StructureError when the signature has no equality.
bool is_equality_structure( PartialStructure const& A );

/// Adds a constant naming each listed element, called "c_" followed by the
/// element name. Throws StructureError when a name is taken.
PartialStructure expand_with_names( PartialStructure const& A, std::vector<std::size_t> const& elements );
std::string element_constant_name( PartialStructure const& A, std::size_t element );

/// Forgets the symbols outside sig, which must be part of A's signature.
PartialStructure reduct( PartialStructure const& A, Signature const& sig );

} // namespace qciore
