#pragma once

#include <qciore/subset.hpp>
#include <qciore/syntax.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace qciore
{

class TwistError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// The powerset Boolean algebra of {0, ..., n-1}. Every finite Boolean
/// algebra is isomorphic to one of these.
class PowersetAlgebra
{
public:
  explicit PowersetAlgebra( std::size_t n ) : n_( n ) {}

  std::size_t base_size() const { return n_; }
  Subset zero() const { return Subset( n_ ); }
  Subset one() const { return Subset::full( n_ ); }

  Subset meet( Subset const& a, Subset const& b ) const { return a & b; }
  Subset join( Subset const& a, Subset const& b ) const { return a | b; }
  Subset complement( Subset const& a ) const { return ~a; }
  /// a ⊃ b = ∼a ⊔ b
  Subset implies( Subset const& a, Subset const& b ) const { return join( complement( a ), b ); }

  /// All 2^n elements, ordered by their bit pattern.
  std::vector<Subset> elements() const;

private:
  std::size_t n_;
};

/// (a, b) with a ⊔ b = 1: a carries the value of a formula, b the value of its negation.
struct TwistPair
{
  Subset first;
  Subset second;

  bool operator==( TwistPair const& ) const = default;
};

/// (a, b, c) with pairwise meets 0 and join 1.
struct TwistTriple
{
  Subset first;
  Subset second;
  Subset third;

  bool operator==( TwistTriple const& ) const = default;
};

bool is_twist_pair( PowersetAlgebra const& A, TwistPair const& z );
bool is_twist_triple( PowersetAlgebra const& A, TwistTriple const& z );

std::vector<TwistPair> all_twist_pairs( PowersetAlgebra const& A );
std::vector<TwistTriple> all_twist_triples( PowersetAlgebra const& A );

/// Pair operations:
///   (z1,z2) ∧ (w1,w2) = (z1⊓w1, (z1⊓w1) ⊃ ((z1⊓z2)⊓(w1⊓w2)))
///   (z1,z2) ∨ (w1,w2) = (z1⊔w1, (z1⊔w1) ⊃ ((z1⊓z2)⊓(w1⊓w2)))
///   (z1,z2) → (w1,w2) = (z1⊃w1, (z1⊃w1) ⊃ ((z1⊓z2)⊓(w1⊓w2)))
///   ¬(z1,z2) = (z2,z1)
///   ∘(z1,z2) = (∼(z1⊓z2), z1⊓z2)
TwistPair pair_op( PowersetAlgebra const& A, Connective op, TwistPair const& z, TwistPair const* w = nullptr );

/// Triple operations, the set-algebra forms of the 3-valued tables with
/// ∩, ∪ read as ⊓, ⊔.
TwistTriple twist_triple_op( PowersetAlgebra const& A, Connective op, TwistTriple const& z,
                             TwistTriple const* w = nullptr );

/// †(z1,z2,z3) = (z1⊔z3, z2⊔z3)
TwistPair dagger( PowersetAlgebra const& A, TwistTriple const& z );
/// ‡(z1,z2) = (z1⊓∼z2, z2⊓∼z1, z1⊓z2)
TwistTriple ddagger( PowersetAlgebra const& A, TwistPair const& z );

/// (0, 1)
TwistPair bottom_pair( PowersetAlgebra const& A );
/// (0, 1, 0)
TwistTriple bottom_triple( PowersetAlgebra const& A );

/// Assignments of a finite domain {0..d-1} to a list of frame variables,
/// numbered in mixed radix with the first frame variable most significant.
/// Sets of assignments are Subsets of {0, ..., d^k - 1}.
class AssignmentSpace
{
public:
  AssignmentSpace( std::size_t domain_size, std::vector<std::string> frame );

  std::size_t domain_size() const { return d_; }
  std::vector<std::string> const& frame() const { return frame_; }
  std::size_t size() const { return size_; }
  PowersetAlgebra algebra() const { return PowersetAlgebra( size_ ); }

  std::vector<std::size_t> decode( std::size_t s ) const;
  std::size_t encode( std::vector<std::size_t> const& values ) const;
  /// The assignment s with x sent to a. Variables outside the frame leave s unchanged.
  std::size_t update( std::size_t s, std::string const& x, std::size_t a ) const;

  /// {s : s_x^a ∈ Y for every a}
  Subset hat_forall( std::string const& x, Subset const& Y ) const;
  /// {s : s_x^a ∈ Y for some a}
  Subset hat_exists( std::string const& x, Subset const& Y ) const;

private:
  std::size_t d_;
  std::vector<std::string> frame_;
  std::size_t size_ = 1;
  std::vector<std::size_t> weight_;
};

/// [∀x]_T(Z1,Z2,Z3) = (∃̂(Z1) − ∃̂(Z2), ∃̂(Z2), ∀̂(Z3))
TwistTriple lifted_forall( AssignmentSpace const& S, std::string const& x, TwistTriple const& z );
/// [∃x]_T(Z1,Z2,Z3) = (S − (∀̂(Z2) ∪ ∀̂(Z3)), ∀̂(Z2), ∀̂(Z3))
TwistTriple lifted_exists( AssignmentSpace const& S, std::string const& x, TwistTriple const& z );

/// Pair forms written out directly; they coincide with † ∘ [Qx]_T ∘ ‡.
///   [∀x]_P(Z1,Z2) = ((∃̂(Z1−Z2) − ∃̂(Z2−Z1)) ∪ ∀̂(Z1∩Z2), ∃̂(Z2−Z1) ∪ ∀̂(Z1∩Z2))
///   [∃x]_P(Z1,Z2) = ((S − ∀̂(Z2−Z1)) ∪ ∀̂(Z1∩Z2), ∀̂(Z2−Z1) ∪ ∀̂(Z1∩Z2))
TwistPair lifted_forall( AssignmentSpace const& S, std::string const& x, TwistPair const& z );
TwistPair lifted_exists( AssignmentSpace const& S, std::string const& x, TwistPair const& z );

struct TwistCheck
{
  std::string property;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

/// Exhaustive checks over the powerset algebra of an n-element set: † and ‡
/// are mutually inverse bijections, † commutes with each connective, ⊥ is
/// (z∧¬z)∧∘z in both representations, and ∘z = (z∧¬z) → ⊥ for pairs.
std::vector<TwistCheck> verify_twist_isomorphism( std::size_t n );

/// †([Qx]_T z) = [Qx]_P(†z) for every triple over the assignment space and
/// every frame variable x.
std::vector<TwistCheck> verify_lifted_quantifiers( AssignmentSpace const& S );

} // namespace qciore
