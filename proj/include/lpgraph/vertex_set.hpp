#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "lpgraph/error.hpp"

namespace lpgraph {

/// Largest vertex count representable by the bitset-backed VertexSet.
inline constexpr int kMaxVertices = 64;

/// A subset of the 1-based vertex range 1..64, stored as a bitmask.
///
/// Vertex v occupies bit v-1. Ordering and hashing go through the mask, so
/// VertexSet is usable directly as a map key.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSet from_vector(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.insert(v);
    return s;
  }
  /// {1, ..., n}
  static VertexSet range(int n) {
    if (n < 0 || n > kMaxVertices) throw Error(ErrorKind::ResourceLimit, "vertex count above 64 is not supported");
    return VertexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static VertexSet singleton(int v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }

  bool contains(int v) const { return v >= 1 && v <= kMaxVertices && ((mask_ >> (v - 1)) & 1u); }
  void insert(int v) {
    if (v < 1 || v > kMaxVertices) throw Error(ErrorKind::InvalidInput, "vertex id out of range: " + std::to_string(v));
    mask_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(int v) {
    if (v >= 1 && v <= kMaxVertices) mask_ &= ~(std::uint64_t{1} << (v - 1));
  }
  VertexSet with(int v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(int v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  /// Smallest member; 0 when empty.
  int min() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }
  int max() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }

  bool is_subset_of(VertexSet other) const { return (mask_ & ~other.mask_) == 0; }
  bool intersects(VertexSet other) const { return (mask_ & other.mask_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.mask_ | b.mask_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & b.mask_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.mask_ & ~b.mask_); }
  VertexSet& operator|=(VertexSet b) {
    mask_ |= b.mask_;
    return *this;
  }
  VertexSet& operator&=(VertexSet b) {
    mask_ &= b.mask_;
    return *this;
  }
  VertexSet& operator-=(VertexSet b) {
    mask_ &= ~b.mask_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.mask_ <=> b.mask_; }

  /// Members in increasing order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) f(std::countr_zero(m) + 1);
  }

  /// "{1,2,4}"
  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int v) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    });
    return out + "}";
  }

 private:
  std::uint64_t mask_ = 0;
};

/// Calls f(subset) for every subset of `s`, including the empty set and `s`.
template <typename F>
void for_each_subset(VertexSet s, F&& f) {
  const std::uint64_t full = s.mask();
  std::uint64_t sub = 0;
  while (true) {
    f(VertexSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace lpgraph

template <>
struct std::hash<lpgraph::VertexSet> {
  std::size_t operator()(lpgraph::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.mask()); }
};
