#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "g2lab/errors.hpp"

namespace g2lab {

/// A strictly increasing tuple of indices in 1..9, the key of one exterior
/// monomial e^{i1 i2 ...}. Stored as a bitmask (bit i set <=> index i present),
/// which makes the canonical form unique by construction.
class IndexSet {
 public:
  static constexpr int max_index = 9;

  constexpr IndexSet() = default;

  /// Build from strictly increasing indices; anything else is an error.
  static IndexSet of(std::initializer_list<int> ascending) {
    return of(std::span<const int>(ascending.begin(), ascending.size()));
  }

  static IndexSet of(std::span<const int> ascending) {
    IndexSet s;
    int prev = 0;
    for (int i : ascending) {
      if (i < 1 || i > max_index)
        throw InputError("index " + std::to_string(i) + " outside 1..9");
      if (i <= prev) throw InputError("indices must be strictly increasing");
      s.bits_ |= uint16_t(1u << i);
      prev = i;
    }
    return s;
  }

  /// Build from indices in arbitrary order; returns the canonical set and the
  /// sign of the sorting permutation, or sign 0 when an index repeats.
  static std::pair<IndexSet, int> sorted(std::span<const int> indices) {
    IndexSet s;
    int sign = 1;
    for (int i : indices) {
      if (i < 1 || i > max_index)
        throw InputError("index " + std::to_string(i) + " outside 1..9");
      uint16_t bit = uint16_t(1u << i);
      if (s.bits_ & bit) return {IndexSet{}, 0};
      // moving i past the already-placed larger indices costs one swap each
      int larger = std::popcount(uint16_t(s.bits_ >> (i + 1)));
      if (larger % 2) sign = -sign;
      s.bits_ |= bit;
    }
    return {s, sign};
  }

  int grade() const { return std::popcount(bits_); }

  bool contains(int i) const { return (bits_ >> i) & 1u; }

  bool empty() const { return bits_ == 0; }

  uint16_t bits() const { return bits_; }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(size_t(grade()));
    for (int i = 1; i <= max_index; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  /// Concatenated digits, e.g. "127". Empty set renders as "".
  std::string label() const {
    std::string out;
    for (int i = 1; i <= max_index; ++i)
      if (contains(i)) out.push_back(char('0' + i));
    return out;
  }

  /// Wedge of two monomials: the merged set and the parity of the merge, or
  /// nullopt when an index repeats.
  static std::optional<std::pair<IndexSet, int>> merge(IndexSet a, IndexSet b) {
    if (a.bits_ & b.bits_) return std::nullopt;
    int sign = 1;
    for (int j = 1; j <= max_index; ++j) {
      if (!b.contains(j)) continue;
      if (std::popcount(uint16_t(a.bits_ >> (j + 1))) % 2) sign = -sign;
    }
    IndexSet m;
    m.bits_ = uint16_t(a.bits_ | b.bits_);
    return std::make_pair(m, sign);
  }

  /// Complement within 1..n and the permutation sign of (this, complement)
  /// relative to (1..n).
  std::pair<IndexSet, int> complement(int n) const {
    IndexSet c;
    for (int i = 1; i <= n; ++i)
      if (!contains(i)) c.bits_ |= uint16_t(1u << i);
    auto m = merge(*this, c);
    return {c, m->second};
  }

  bool operator==(const IndexSet&) const = default;

  /// Lexicographic order on the index tuples (1,2,7) < (1,3,5); this is the
  /// canonical rendering and column order everywhere.
  bool operator<(const IndexSet& o) const {
    uint16_t a = bits_, b = o.bits_;
    while (a && b) {
      int ia = std::countr_zero(a), ib = std::countr_zero(b);
      if (ia != ib) return ia < ib;
      a = uint16_t(a & (a - 1));
      b = uint16_t(b & (b - 1));
    }
    return a == 0 && b != 0;
  }

 private:
  uint16_t bits_ = 0;
};

}  // namespace g2lab
