#pragma once

#include <qciore/syntax.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qciore
{

/// The three truth values, ordered 0 < ½ < 1. The underlying integers are
/// used as table indices.
enum class TruthValue : std::uint8_t
{
  zero = 0,
  half = 1,
  one = 2
};

inline constexpr std::array<TruthValue, 3> all_truth_values = { TruthValue::zero, TruthValue::half,
                                                                 TruthValue::one };

inline bool designated( TruthValue v ) { return v != TruthValue::zero; }
inline std::size_t index( TruthValue v ) { return static_cast<std::size_t>( v ); }

/// "0", "1/2", "1".
std::string to_string( TruthValue v );
/// Accepts "0", "1/2", "½", "1".
std::optional<TruthValue> parse_truth_value( std::string_view text );

class MatrixError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

using UnaryTable = std::array<TruthValue, 3>;
/// Indexed [left][right].
using BinaryTable = std::array<std::array<TruthValue, 3>, 3>;

/// Truth tables for the five connectives. Connectives a matrix does not
/// interpret are left empty, and evaluating them raises MatrixError.
struct MatrixSpec
{
  std::string name;
  std::optional<BinaryTable> conj;
  std::optional<BinaryTable> disj;
  std::optional<BinaryTable> imp;
  std::optional<UnaryTable> neg;
  std::optional<UnaryTable> cons;

  static MatrixSpec const& ciore();
  /// Sette's logic: only → and ¬.
  static MatrixSpec const& p1();
  static MatrixSpec const& lfi1();
  /// Looks up "CIORE", "P1" or "LFI1" (case-insensitive).
  static MatrixSpec const& by_name( std::string_view name );

  TruthValue unary( Connective c, TruthValue a ) const;
  TruthValue binary( Connective c, TruthValue a, TruthValue b ) const;

  bool operator==( MatrixSpec const& ) const = default;
};

/// Assignment of truth values to propositional letters.
using Valuation = std::map<std::string, TruthValue>;

std::string to_string( Valuation const& v );

/// Throws MatrixError on a missing letter, a non-letter atom, a quantifier,
/// or a connective the matrix lacks.
TruthValue eval_prop( Formula const& f, Valuation const& v, MatrixSpec const& m = MatrixSpec::ciore() );

struct TautologyResult
{
  bool tautology = true;
  /// Least refuting valuation, letters compared in name order and values 0 < ½ < 1.
  std::optional<Valuation> witness;
  std::uint64_t valuations = 0;
};

/// Exhaustive check over all 3^n valuations of the letters of f.
TautologyResult is_tautology3( Formula const& f, MatrixSpec const& m = MatrixSpec::ciore() );
/// Same result as is_tautology3; valuations are split across OpenMP threads.
TautologyResult is_tautology3_parallel( Formula const& f, MatrixSpec const& m = MatrixSpec::ciore() );

struct NamedSchema
{
  std::string id;
  Formula formula;
};

/// The twenty propositional axiom schemas, over letters a, b, c:
/// Ax1 to Ax10, bc1, ci, cf, ce, co1 to co3, cr1 to cr3.
std::vector<NamedSchema> const& propositional_axioms();

/// Fifteen derived propositional schemas admitted as built-in lemmas.
/// Here ! is strong negation and <-> the biconditional.
std::vector<NamedSchema> const& derived_schemas();

struct SchemaCheck
{
  std::string id;
  Formula formula;
  bool passed = false;
  std::optional<Valuation> witness;
  std::string error;
};

/// Runs is_tautology3 on every propositional axiom and derived schema.
/// Schemas using a connective absent from m are reported as failed with an error.
std::vector<SchemaCheck> check_named_schemas( MatrixSpec const& m = MatrixSpec::ciore() );

} // namespace qciore
