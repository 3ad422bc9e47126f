#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace spl {

// Hard cap on graph order. All vertex sets are fixed-width bitsets of this
// size; intersections therefore cost kWords word operations regardless of n.
inline constexpr int kMaxVertices = 512;
inline constexpr int kWords = kMaxVertices / 64;

// A set of vertex ids in [0, kMaxVertices). Value type, cheap to copy.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) set(v);
  }
  static VertexSet full(int n) {
    VertexSet s;
    for (int i = 0; i < n / 64; ++i) s.w_[i] = ~0ull;
    if (n % 64) s.w_[n / 64] = (1ull << (n % 64)) - 1;
    return s;
  }

  void set(int v) { w_[v >> 6] |= 1ull << (v & 63); }
  void reset(int v) { w_[v >> 6] &= ~(1ull << (v & 63)); }
  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  // Smallest member, or -1 when empty.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return -1;
  }
  // Smallest member > v, or -1.
  int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    int i = v >> 6;
    std::uint64_t w = w_[i] & (~0ull << (v & 63));
    while (true) {
      if (w) return i * 64 + std::countr_zero(w);
      if (++i == kWords) return -1;
      w = w_[i];
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.w_ == b.w_;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  int intersection_count(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

 private:
  std::array<std::uint64_t, kWords> w_{};
};

}  // namespace spl
