#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace ratass {

/// Subset of a ground set of at most 128 elements, addressed by index.
class VertexSet {
 public:
  static constexpr std::size_t capacity = 128;

  constexpr VertexSet() = default;

  static VertexSet singleton(std::size_t v) {
    VertexSet s;
    s.insert(v);
    return s;
  }

  void insert(std::size_t v) noexcept { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(std::size_t v) noexcept { w_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  bool contains(std::size_t v) const noexcept { return (w_[v >> 6] >> (v & 63)) & 1U; }

  bool empty() const noexcept { return (w_[0] | w_[1]) == 0; }
  int size() const noexcept { return std::popcount(w_[0]) + std::popcount(w_[1]); }

  /// other is a subset of *this
  bool includes(const VertexSet& other) const noexcept {
    return (other.w_[0] & ~w_[0]) == 0 && (other.w_[1] & ~w_[1]) == 0;
  }

  VertexSet with(std::size_t v) const noexcept {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(std::size_t v) const noexcept {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  friend VertexSet operator|(VertexSet x, const VertexSet& y) noexcept {
    x.w_[0] |= y.w_[0];
    x.w_[1] |= y.w_[1];
    return x;
  }
  friend VertexSet operator&(VertexSet x, const VertexSet& y) noexcept {
    x.w_[0] &= y.w_[0];
    x.w_[1] &= y.w_[1];
    return x;
  }

  bool operator==(const VertexSet&) const = default;

  /// Largest member; undefined on the empty set.
  int max() const noexcept {
    if (w_[1]) return 127 - std::countl_zero(w_[1]);
    return 63 - std::countl_zero(w_[0]);
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = w_[word];
      while (bits) {
        out.push_back(word * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t bits = w_[word];
      while (bits) {
        fn(word * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

  /// Lexicographic comparison of the increasing index sequences.
  friend bool lex_less(const VertexSet& x, const VertexSet& y) noexcept {
    for (int word = 0; word < 2; ++word) {
      std::uint64_t diff = x.w_[word] ^ y.w_[word];
      if (!diff) continue;
      int t = std::countr_zero(diff);
      std::uint64_t above = t == 63 ? 0 : ~((std::uint64_t{2} << t) - 1);
      const VertexSet& holder = (x.w_[word] >> t) & 1U ? x : y;
      const VertexSet& other = &holder == &x ? y : x;
      // `other` continues with some element larger than t, or stops.
      bool other_continues = (other.w_[word] & above) != 0 || (word == 0 && other.w_[1] != 0);
      bool holder_first = other_continues;
      return (&holder == &x) ? holder_first : !holder_first;
    }
    return false;
  }

  /// Cardinality first, then lexicographic.
  friend bool canonical_less(const VertexSet& x, const VertexSet& y) noexcept {
    int sx = x.size(), sy = y.size();
    if (sx != sy) return sx < sy;
    return lex_less(x, y);
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = w_[0] * 0x9E3779B97F4A7C15ULL ^ (w_[1] + 0x632BE59BD9B4E019ULL + (w_[0] << 6) + (w_[0] >> 2));
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }

 private:
  std::uint64_t w_[2]{0, 0};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace ratass
