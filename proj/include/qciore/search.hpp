#pragma once

#include <qciore/matrix3.hpp>
#include <qciore/structures.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qciore
{

class LimitExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// All structures over sig with domain {e1, ..., en}, addressed by index.
///
/// An index is a mixed-radix number whose digits, most significant first,
/// are: for each predicate by name and each tuple in order, its value
/// (0, ½, 1); then the equality triple (in equality-normal mode only the
/// diagonal varies, over ½ and 1, and every other pair is 0); then each
/// function table entry; then each constant. Increasing index is
/// lexicographic order over the interpretation tables.
class StructureEnumerator
{
public:
  StructureEnumerator( Signature sig, std::size_t size, bool equality_normal = false );

  /// Throws LimitExceeded when the count does not fit in 64 bits.
  std::uint64_t count() const;
  PartialStructure at( std::uint64_t index ) const;

  std::size_t size() const { return n_; }
  Signature const& signature() const { return sig_; }

private:
  enum class Slot
  {
    pred,
    eq_diag,
    fun,
    constant
  };
  struct Digit
  {
    Slot slot;
    std::string symbol;
    std::size_t position;
    std::uint64_t radix;
  };

  Signature sig_;
  std::size_t n_;
  bool equality_normal_;
  std::vector<Digit> digits_;
  std::optional<std::uint64_t> count_;
};

/// Element names used by the enumerator: e1, ..., en.
std::vector<std::string> default_element_names( std::size_t n );

/// Calls visit on every structure of the given size in index order; visit
/// returns false to stop early.
void for_each_structure( Signature const& sig, std::size_t size, bool equality_normal,
                         std::function<bool( PartialStructure const& )> const& visit );

struct ProgressEvent
{
  std::size_t size;
  std::uint64_t index;
  std::uint64_t examined;
  double elapsed_seconds;
};

struct SearchSpec
{
  Signature signature;
  std::size_t max_size = 1;
  std::vector<Formula> gamma;
  Formula refute;
  bool equality_normal = false;
  std::optional<std::uint64_t> max_structures;
  std::optional<double> time_budget_seconds;
  /// Called between blocks of structures.
  std::function<void( ProgressEvent const& )> progress;
  std::uint64_t progress_every = 100000;
};

struct SearchResult
{
  enum class Status
  {
    found,
    exhausted,
    limit
  };

  Status status = Status::exhausted;
  std::optional<PartialStructure> model;
  /// Least refuting assignment of the free variables of the refuted formula.
  std::optional<Assignment> assignment;
  TruthValue value = TruthValue::zero;
  std::size_t size = 0;
  std::uint64_t index = 0;
  std::uint64_t examined = 0;
  std::string limit_reason;
};

/// First structure, by size and then index, in which every formula of gamma
/// is valid and the refuted formula is not. Each hit is rechecked through
/// formula_triple before it is returned.
SearchResult find_countermodel( SearchSpec const& spec );
/// Same result; each block of indices is searched by OpenMP threads and the
/// least hit wins.
SearchResult find_countermodel_parallel( SearchSpec const& spec );

/// One-sided: refuted with a witness, or no countermodel up to max_size.
/// Never claims that the consequence holds.
struct BoundedConsequence
{
  bool refuted = false;
  std::size_t searched_up_to = 0;
  SearchResult search;
};

BoundedConsequence check_consequence_bounded( Signature const& sig, std::vector<Formula> const& gamma,
                                              Formula const& phi, std::size_t max_size, bool equality_normal = false );

struct SoundnessOptions
{
  /// Signature of the instance pool; equality is added for Eq1 and Eq2.
  Signature signature;
  std::vector<std::string> vars = { "x", "y" };
  std::size_t depth = 1;
  std::size_t max_size = 2;
  MatrixSpec matrix = MatrixSpec::ciore();
  bool include_equality = true;
  bool include_rules = true;
  /// Propositional instances re-evaluated on their real formula trees, per schema.
  std::size_t recheck_samples = 200;
  std::uint64_t seed = 1;
  bool parallel = true;
  std::size_t max_recorded_violations = 5;
};

struct Violation
{
  std::string schema;
  Formula instance;
  /// Premises for rule checks.
  std::vector<Formula> premises;
  PartialStructure structure;
  Assignment assignment;
  TruthValue value = TruthValue::zero;
};

struct SoundnessReport
{
  std::map<std::string, std::uint64_t> instances;
  std::map<std::string, std::uint64_t> violation_counts;
  std::vector<Violation> violations;
  std::uint64_t structures = 0;
  std::uint64_t rechecked = 0;
  /// Real-tree evaluations that disagreed with the compositional route.
  std::uint64_t recheck_mismatches = 0;

  std::uint64_t total_violations() const;
};

/// Pool: formulas up to the given depth over the signature and vars.
/// Propositional schemas are instantiated with pool formulas for their
/// letters; their value at an assignment is computed from the pool values
/// through the matrix, with a sample of real instances rechecked by
/// eval_formula. Quantifier schemas range over pool formulas, vars, and terms
/// from vars and constants, evaluated directly. Eq1 and Eq2 are checked on
/// equality-normal structures. The rules are checked on pool pairs: MP
/// (α, α → β ⊢ β), ∀-In and ∃-In.
SoundnessReport soundness_harness( SoundnessOptions const& options );

} // namespace qciore
