#pragma once

#include <qciore/matrix3.hpp>
#include <qciore/subset.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qciore
{

/// Three-way classification of a finite carrier {0, ..., n-1}: plus holds
/// the points with value 1, minus those with value 0, dot those with ½.
///
/// The empty carrier is allowed here so that the operations are closed;
/// structures never build one.
struct Triple
{
  Subset plus;
  Subset minus;
  Subset dot;

  Triple() = default;
  explicit Triple( std::size_t carrier );
  Triple( Subset plus, Subset minus, Subset dot );

  std::size_t carrier() const { return plus.universe(); }
  TruthValue at( std::size_t x ) const;
  void set( std::size_t x, TruthValue v );

  /// Pairwise disjoint and covering the carrier.
  bool is_partition() const;

  bool operator==( Triple const& ) const = default;
};

class TripleError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// The triple with the given value at each carrier point. Throws TripleError
/// when the map is not total on the carrier or mentions points outside it.
Triple triple_from_map( std::size_t carrier, std::map<std::size_t, TruthValue> const& values );
std::map<std::size_t, TruthValue> triple_to_map( Triple const& r );

/// Pointwise lift of the matrix table: result(x) = table(r(x), u(x)).
/// u must be given exactly when op is binary.
Triple triple_op( Connective op, Triple const& r, Triple const* u = nullptr,
                  MatrixSpec const& m = MatrixSpec::ciore() );

Triple triple_neg( Triple const& r, MatrixSpec const& m = MatrixSpec::ciore() );
Triple triple_cons( Triple const& r, MatrixSpec const& m = MatrixSpec::ciore() );
Triple triple_conj( Triple const& r, Triple const& u, MatrixSpec const& m = MatrixSpec::ciore() );
Triple triple_disj( Triple const& r, Triple const& u, MatrixSpec const& m = MatrixSpec::ciore() );
Triple triple_imp( Triple const& r, Triple const& u, MatrixSpec const& m = MatrixSpec::ciore() );

/// Closed set-algebra forms of the CIORE operations, written with unions,
/// intersections and differences of the classes only. They agree with the
/// pointwise lift; tests check this exhaustively.
namespace set_forms
{
Triple conj( Triple const& r, Triple const& u );
Triple disj( Triple const& r, Triple const& u );
Triple imp( Triple const& r, Triple const& u );
Triple neg( Triple const& r );
Triple cons( Triple const& r );

/// Sette's logic: ¬r = (r⊖ ∪ r⊙, r⊕, ∅) and r → u = (r⊖ ∪ u⊕ ∪ u⊙, (r⊕ ∪ r⊙) ∩ u⊖, ∅).
Triple p1_neg( Triple const& r );
Triple p1_imp( Triple const& r, Triple const& u );
} // namespace set_forms

/// Every triple over a carrier of size n, in the order of the base-3 number
/// whose digit i is the value at point i (point 0 least significant).
std::vector<Triple> all_triples( std::size_t n );

} // namespace qciore
