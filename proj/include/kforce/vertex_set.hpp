#pragma once

#include "kforce/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace kforce {

using Vertex = std::size_t;

inline constexpr std::size_t kMaxSubsetUniverse = 63;

/// A subset of the vertex range 0..universe-1 with bitset semantics.
///
/// Sets over different universes never compare equal and must not be
/// combined; the binary operators assume matching universes.
class VertexSet {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;
  static constexpr Vertex npos = Bits::npos;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : bits_(universe) {
    for (Vertex v : members) bits_.set(v);
  }
  VertexSet(std::size_t universe, const std::vector<Vertex>& members) : bits_(universe) {
    for (Vertex v : members) bits_.set(v);
  }

  /// Builds the set whose members are the one bits of `mask` (universe <= 64).
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v)
      if ((mask >> v) & 1U) s.bits_.set(v);
    return s;
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    s.bits_.set();
    return s;
  }

  std::size_t universe() const { return bits_.size(); }
  std::size_t count() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool is_full() const { return bits_.all(); }
  bool contains(Vertex v) const { return v < bits_.size() && bits_.test(v); }

  void insert(Vertex v) { bits_.set(v); }
  void erase(Vertex v) { bits_.reset(v); }

  Vertex first() const { return bits_.find_first(); }
  Vertex next(Vertex v) const { return bits_.find_next(v); }

  bool is_subset_of(const VertexSet& other) const { return bits_.is_subset_of(other.bits_); }
  bool intersects(const VertexSet& other) const { return bits_.intersects(other.bits_); }

  VertexSet complement() const {
    VertexSet s = *this;
    s.bits_.flip();
    return s;
  }

  std::vector<Vertex> members() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for (Vertex v = first(); v != npos; v = next(v)) out.push_back(v);
    return out;
  }

  std::uint64_t to_mask() const {
    std::uint64_t mask = 0;
    for (Vertex v = first(); v != npos && v < 64; v = next(v)) mask |= std::uint64_t{1} << v;
    return mask;
  }

  VertexSet& operator&=(const VertexSet& o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator|=(const VertexSet& o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator-=(const VertexSet& o) { bits_ -= o.bits_; return *this; }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }

  /// Size of (this minus other) without materializing it.
  std::size_t count_outside(const VertexSet& other) const {
    std::size_t c = 0;
    for (Vertex v = first(); v != npos; v = next(v))
      if (!other.bits_.test(v)) ++c;
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
    os << '{';
    bool first = true;
    for (Vertex v = s.first(); v != npos; v = s.next(v)) {
      if (!first) os << ',';
      os << v;
      first = false;
    }
    return os << '}';
  }

 private:
  Bits bits_;
};

/// Calls `f(v)` for each member in increasing order.
template <typename F>
void for_each_member(const VertexSet& s, F&& f) {
  for (Vertex v = s.first(); v != VertexSet::npos; v = s.next(v)) f(v);
}

/// Enumerates every `size`-subset of 0..universe-1 in colexicographic order,
/// stopping early when `visit` returns true. Returns whether it stopped early.
template <typename Visit>
bool for_each_subset_colex(std::size_t universe, std::size_t size, Visit&& visit) {
  if (universe > kMaxSubsetUniverse)
    throw ScopeError("subset enumeration supports at most 63 vertices");
  if (size > universe) return false;
  if (size == 0) return visit(std::uint64_t{0});
  const std::uint64_t limit = std::uint64_t{1} << universe;
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  while (mask < limit) {
    if (visit(mask)) return true;
    // Gosper's hack: next integer with the same popcount.
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    mask = (((ripple ^ mask) >> 2) / low) | ripple;
    if (ripple == 0) break;
  }
  return false;
}

}  // namespace kforce
