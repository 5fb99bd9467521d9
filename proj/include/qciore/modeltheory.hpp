#pragma once

#include <qciore/structures.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qciore
{

/// Raised when a precondition on a pair of structures fails.
class ModelTheoryError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Elements of A located in B by name; throws ModelTheoryError when A's
/// domain is not a subset of B's.
std::vector<std::size_t> embedding_by_name( PartialStructure const& A, PartialStructure const& B );

/// Frame-restricted assignment on A carried over to B through the embedding.
Assignment lift( Assignment const& s, std::vector<std::size_t> const& embedding );

struct SubstructureViolation
{
  std::string symbol;
  /// "const", "fun", or one of "plus", "minus", "dot".
  std::string what;
  /// Arguments in A's element names (empty for constants).
  std::vector<std::string> tuple;
  std::string message;
};

struct SubstructureResult
{
  bool holds = true;
  std::optional<SubstructureViolation> violation;
};

/// Same signature, constants agree, functions restrict, and each of the
/// three classes of every predicate (including "=") restricts to A.
SubstructureResult is_substructure( PartialStructure const& A, PartialStructure const& B );

struct TarskiFailure
{
  Formula formula;
  std::string var;
  /// TC1 to TC4.
  std::string condition;
  Assignment assignment;
  /// e.g. "no a in A with phi not in minus"
  std::string missing;
};

struct TarskiReport
{
  std::size_t checked = 0;
  std::vector<TarskiFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// For each φ, each x in vars and each assignment into A of the free
/// variables of φ other than x:
///   TC1  s ∈ ‖∃xφ‖⊕(B)  ⇒ some a, b in A: s[x:=a] ∉ ‖φ‖⊖(B), s[x:=b] ∉ ‖φ‖⊙(B)
///   TC2  s ∉ ‖∃xφ‖⊙(B)  ⇒ some a in A: s[x:=a] ∉ ‖φ‖⊙(B)
///   TC3  s ∈ ‖∀xφ‖⊕(B)  ⇒ some a in A: s[x:=a] ∈ ‖φ‖⊕(B)
///   TC4  s ∈ ‖∀xφ‖⊖(B)  ⇒ some a in A: s[x:=a] ∈ ‖φ‖⊖(B)
TarskiReport tarski_conditions( PartialStructure const& A, PartialStructure const& B,
                                std::vector<Formula> const& formulas, std::vector<std::string> const& vars );

struct BoundedVerdict
{
  bool passed = true;
  std::size_t depth = 0;
  std::size_t formulas_checked = 0;
  /// First formula, in enumeration order, on which the check fails.
  std::optional<Formula> formula;
  std::optional<Assignment> assignment;
  TruthValue value_a = TruthValue::zero;
  TruthValue value_b = TruthValue::zero;
};

/// A ≺ B up to depth: every formula from enumerate_formulas(sig, vars, depth)
/// takes the same value in A and B at every assignment of its free
/// variables into A. One-sided: passing says nothing beyond the depth.
BoundedVerdict elementary_sub_bounded( PartialStructure const& A, PartialStructure const& B, std::size_t max_depth,
                                       std::vector<std::string> const& vars = { "x" }, bool parallel = true );

/// A ≡ B up to depth: every enumerated sentence has the same trichotomy
/// class in A and B. The separating sentence is reported on failure.
BoundedVerdict elementary_equiv_bounded( PartialStructure const& A, PartialStructure const& B, std::size_t max_depth,
                                         std::vector<std::string> const& vars = { "x" }, bool parallel = true );

/// Union of an increasing chain A0 ⊆ A1 ⊆ ...: domains, predicate classes
/// and function graphs united, constants taken from A0. Throws when some
/// member is not a substructure of its successor.
PartialStructure chain_union( std::vector<PartialStructure> const& chain );

} // namespace qciore
