#pragma once

#include <qciore/syntax.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qciore
{

/// Pattern language for axiom schemas. Formula metavariables stand for any
/// formula; variable slots for any variable; Subst and ReplaceSome are
/// resolved after the rest of the pattern has bound their arguments.
struct Pattern
{
  enum class Kind
  {
    meta,         // formula metavariable, name
    neg,          // kids[0]
    cons,         // kids[0]
    conj,         // kids[0], kids[1]
    disj,         // kids[0], kids[1]
    imp,          // kids[0], kids[1]
    forall,       // variable slot name, kids[0]
    exists,       // variable slot name, kids[0]
    equality,     // variable slots name = other
    subst,        // metavariable name, variable slot var, term slot other: φ(t/x)
    replace_some, // metavariable name, variable slots var and other: φ[x≀y]
  };

  Kind kind = Kind::meta;
  std::string name;
  std::string var;
  std::string other;
  std::vector<Pattern> kids;
};

struct AxiomSchema
{
  std::string id;
  Pattern pattern;
  /// Human-readable form, e.g. "forall x. phi -> phi(t/x)".
  std::string display;
};

/// All schemas in their canonical order:
/// Ax1 to Ax10, bc1, ci, cf, ce, co1 to co3, cr1 to cr3 (propositional),
/// Ax11  φ(t/x) → ∃xφ       t free for x in φ
/// Ax12  ∀xφ → φ(t/x)       t free for x in φ
/// Ax13  ∘∃xφ → ∃x∘φ
/// Ax14  ∘∀xφ → ∃x∘φ
/// Ax15  ∃x∘φ → ∘∃xφ
/// Ax16  ∃x∘φ → ∘∀xφ
/// Eq1   ∀x(x = x)
/// Eq2   ∀x∀y((x = y) → (φ → φ[x≀y]))   y free for x in φ
std::vector<AxiomSchema> const& axiom_schemas();
AxiomSchema const* find_schema( std::string_view id );

struct MatchEnv
{
  std::map<std::string, Formula> metas;
  std::map<std::string, std::string> vars;
  std::map<std::string, Term> terms;
};

struct MatchResult
{
  enum class Status
  {
    matched,
    no_match,
    side_condition
  };

  Status status = Status::no_match;
  MatchEnv env;
  std::string detail;

  bool ok() const { return status == Status::matched; }
};

MatchResult match_schema( Formula const& f, AxiomSchema const& schema );

/// Tries every schema in canonical order and returns the first match. When
/// none matches but some schema failed only on its side condition, that
/// failure is returned.
std::pair<AxiomSchema const*, MatchResult> match_any_schema( Formula const& f );

struct Justification
{
  enum class Kind
  {
    axiom,     // name: schema id, empty for any schema
    mp,        // refs: two earlier steps, an implication and its antecedent, in either order
    forall_in, // refs: one step α → β, giving α → ∀xβ
    exists_in, // refs: one step α → β, giving ∃xα → β
    hyp,       // refs: hypothesis number
    lemma      // name; refs: steps for the lemma's hypotheses, then extra antecedents
  };

  Kind kind = Kind::axiom;
  std::string name;
  std::vector<std::size_t> refs;
};

std::string to_string( Justification const& j );

struct ProofStep
{
  Formula formula;
  Justification justification;
  /// Source line, 0 when built in code.
  std::size_t line = 0;
};

/// Steps are numbered from 1 in order; hypotheses likewise.
struct Proof
{
  std::string name;
  std::vector<Formula> hypotheses;
  std::vector<ProofStep> steps;
};

/// A checked result that later proofs may cite. Letters in the hypotheses
/// and conclusion are schematic and may be instantiated by any formula whose
/// free variables avoid sensitive_vars.
struct Lemma
{
  std::string name;
  std::vector<Formula> hypotheses;
  Formula conclusion;
  std::set<std::string> sensitive_vars;
};

class LemmaError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Append-only collection of lemmas. A default-constructed store holds the
/// built-in lemmas: those derived propositional schemas that pass an
/// exhaustive 3-valued tautology check (cons-imp does not) and "trans", (a → b), (b → c) ⊢ a → c,
/// whose derivation from Ax1 and Ax2 is checked on construction.
class LemmaStore
{
public:
  LemmaStore();

  Lemma const* find( std::string const& name ) const;
  /// Throws LemmaError when the name is taken.
  void add( Lemma lemma );
  std::vector<std::string> names() const;

private:
  std::vector<std::shared_ptr<Lemma const>> lemmas_;
  std::map<std::string, std::size_t> index_;
};

struct StepFailure
{
  enum class Reason
  {
    no_match,       // formula is not what the justification produces
    side_condition, // right shape, but a variable condition fails
    bad_reference,  // index out of range or not earlier
    unknown_lemma,
    unknown_schema
  };

  std::size_t step = 0;
  Reason reason = Reason::no_match;
  std::string message;
};

std::string to_string( StepFailure const& f );

struct ProofVerdict
{
  bool accepted = false;
  std::optional<StepFailure> failure;
};

ProofVerdict check_proof( Proof const& p, LemmaStore const& store );

/// Checks p and, when accepted, adds it to the store as a lemma named after it.
ProofVerdict check_and_store( Proof const& p, LemmaStore& store );

/// The lemma a proof establishes: its hypotheses, last step, and every
/// variable it mentions (plus those of lemmas it cites) as sensitive.
Lemma lemma_from_proof( Proof const& p, LemmaStore const& store );

/// True iff no ∀-In or ∃-In step quantifies a variable free in phi, so the
/// deduction metatheorem applies to phi. Throws LemmaError when phi is not a
/// hypothesis of p.
bool wdmt_side_condition( Proof const& p, Formula const& phi );

} // namespace qciore
