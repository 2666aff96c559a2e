#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace ciso {

using Vertex = int;

/// Maximum number of vertices a Graph may carry (one machine word per row).
inline constexpr int kMaxVertices = 64;

/// A set of vertex ids in [0, 64), stored as a single bitmask.
class VertexSet {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) insert(v);
  }

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet single(Vertex v) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    return from_bits(std::uint64_t{1} << v);
  }

  template <class Range>
  static VertexSet from_range(const Range& r) {
    VertexSet s;
    for (auto v : r) s.insert(static_cast<Vertex>(v));
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Vertex v) const { return v >= 0 && v < kMaxVertices && ((bits_ >> v) & 1U); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr Vertex min() const { return std::countr_zero(bits_); }
  constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

  void insert(Vertex v) {
    if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    bits_ |= std::uint64_t{1} << v;
  }
  constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

  constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  constexpr VertexSet operator|(VertexSet o) const { return from_bits(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return from_bits(bits_ & o.bits_); }
  constexpr VertexSet operator^(VertexSet o) const { return from_bits(bits_ ^ o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return from_bits(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  constexpr bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Lexicographic order on the ascending member sequences ({0,5} < {1} < {1,2}).
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const std::uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint64_t low = diff & (~diff + 1);
  const std::uint64_t below = low - 1;
  // Members below the first difference form the common prefix.
  if (a.bits() & low) return (b.bits() & ~below) != 0;
  return (a.bits() & ~below) == 0;
}

inline std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace ciso
