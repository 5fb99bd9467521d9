#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qciore
{

/// Subset of a finite universe {0, ..., size-1}, stored as a packed bit vector.
///
/// Both operands of a binary operation must share the same universe size;
/// mixing universes throws std::invalid_argument.
class Subset
{
public:
  Subset() = default;
  explicit Subset( std::size_t universe );

  static Subset full( std::size_t universe );
  static Subset from_indices( std::size_t universe, std::vector<std::size_t> const& members );

  std::size_t universe() const { return universe_; }

  bool contains( std::size_t i ) const
  {
    return ( words_[i >> 6] >> ( i & 63 ) ) & 1u;
  }
  void insert( std::size_t i ) { words_[i >> 6] |= std::uint64_t{ 1 } << ( i & 63 ); }
  void erase( std::size_t i ) { words_[i >> 6] &= ~( std::uint64_t{ 1 } << ( i & 63 ) ); }

  std::size_t count() const;
  bool empty() const;
  std::vector<std::size_t> members() const;

  Subset operator&( Subset const& other ) const;
  Subset operator|( Subset const& other ) const;
  /// Set difference.
  Subset operator-( Subset const& other ) const;
  /// Complement relative to the universe.
  Subset operator~() const;

  bool operator==( Subset const& other ) const = default;
  bool is_subset_of( Subset const& other ) const;
  bool disjoint_with( Subset const& other ) const;

  std::string to_string() const;

private:
  void check_same( Subset const& other ) const;
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

} // namespace qciore
