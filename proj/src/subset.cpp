#include <qciore/subset.hpp>

#include <bit>
#include <stdexcept>

namespace qciore
{

Subset::Subset( std::size_t universe )
    : universe_( universe ), words_( ( universe + 63 ) / 64, 0u )
{
}

Subset Subset::full( std::size_t universe )
{
  Subset s( universe );
  for ( auto& w : s.words_ )
    w = ~std::uint64_t{ 0 };
  s.trim();
  return s;
}

Subset Subset::from_indices( std::size_t universe, std::vector<std::size_t> const& members )
{
  Subset s( universe );
  for ( auto i : members )
  {
    if ( i >= universe )
      throw std::out_of_range( "subset member outside universe" );
    s.insert( i );
  }
  return s;
}

std::size_t Subset::count() const
{
  std::size_t n = 0;
  for ( auto w : words_ )
    n += static_cast<std::size_t>( std::popcount( w ) );
  return n;
}

bool Subset::empty() const
{
  for ( auto w : words_ )
    if ( w != 0 )
      return false;
  return true;
}

std::vector<std::size_t> Subset::members() const
{
  std::vector<std::size_t> out;
  for ( std::size_t i = 0; i < universe_; ++i )
    if ( contains( i ) )
      out.push_back( i );
  return out;
}

void Subset::check_same( Subset const& other ) const
{
  if ( universe_ != other.universe_ )
    throw std::invalid_argument( "subset universe mismatch" );
}

void Subset::trim()
{
  if ( universe_ % 64 != 0 && !words_.empty() )
    words_.back() &= ( std::uint64_t{ 1 } << ( universe_ % 64 ) ) - 1;
}

Subset Subset::operator&( Subset const& other ) const
{
  check_same( other );
  Subset r = *this;
  for ( std::size_t i = 0; i < words_.size(); ++i )
    r.words_[i] &= other.words_[i];
  return r;
}

Subset Subset::operator|( Subset const& other ) const
{
  check_same( other );
  Subset r = *this;
  for ( std::size_t i = 0; i < words_.size(); ++i )
    r.words_[i] |= other.words_[i];
  return r;
}

Subset Subset::operator-( Subset const& other ) const
{
  check_same( other );
  Subset r = *this;
  for ( std::size_t i = 0; i < words_.size(); ++i )
    r.words_[i] &= ~other.words_[i];
  return r;
}

Subset Subset::operator~() const
{
  Subset r = *this;
  for ( auto& w : r.words_ )
    w = ~w;
  r.trim();
  return r;
}

bool Subset::is_subset_of( Subset const& other ) const
{
  check_same( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    if ( words_[i] & ~other.words_[i] )
      return false;
  return true;
}

bool Subset::disjoint_with( Subset const& other ) const
{
  check_same( other );
  for ( std::size_t i = 0; i < words_.size(); ++i )
    if ( words_[i] & other.words_[i] )
      return false;
  return true;
}

std::string Subset::to_string() const
{
  std::string s = "{";
  bool first = true;
  for ( auto i : members() )
  {
    if ( !first )
      s += ",";
    s += std::to_string( i );
    first = false;
  }
  return s + "}";
}

} // namespace qciore
