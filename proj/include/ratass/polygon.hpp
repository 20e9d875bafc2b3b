#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratass/arith.hpp"
#include "ratass/error.hpp"

namespace ratass {

/// A chord `ij` of the polygon whose boundary points are labelled 0..b.
/// Sides (j = i + 1 and the pair 0, b) are not diagonals.
class Diagonal {
 public:
  Diagonal(int i, int j, int b) : i_(i), j_(j), b_(b) {
    if (!valid(i, j, b))
      throw Error(ErrorKind::InvalidDiagonal,
                  std::to_string(i) + "-" + std::to_string(j) + " is not a diagonal of the " +
                      std::to_string(b + 1) + "-gon");
  }

  static bool valid(int i, int j, int b) { return 0 <= i && i < j && j <= b && j - i >= 2 && !(i == 0 && j == b); }

  static std::optional<Diagonal> try_make(int i, int j, int b) {
    if (!valid(i, j, b)) return std::nullopt;
    return Diagonal(i, j, b);
  }

  int i() const noexcept { return i_; }
  int j() const noexcept { return j_; }
  int b() const noexcept { return b_; }

  /// Boundary points strictly between i and j, and on the other arc.
  int inner_points() const noexcept { return j_ - i_ - 1; }
  int outer_points() const noexcept { return b_ - 1 - inner_points(); }

  std::string str() const { return std::to_string(i_) + "-" + std::to_string(j_); }

  bool operator==(const Diagonal&) const = default;

  // Larger endpoint first, then smaller endpoint.
  std::strong_ordering operator<=>(const Diagonal& o) const noexcept {
    if (auto c = b_ <=> o.b_; c != 0) return c;
    if (auto c = j_ <=> o.j_; c != 0) return c;
    return i_ <=> o.i_;
  }

 private:
  int i_;
  int j_;
  int b_;
};

struct DiagonalHash {
  std::size_t operator()(const Diagonal& d) const noexcept {
    return std::hash<int>{}((d.b() * 1024 + d.j()) * 1024 + d.i());
  }
};

/// S(a,b) = { floor(i b / a) : i = 1..a-1 }.
class RemainderSet {
 public:
  RemainderSet(int a, int b) : a_(a), b_(b) {
    require_coprime_pair(a, b);
    for (int t = 1; t < a; ++t) members_.push_back(static_cast<int>(static_cast<long long>(t) * b / a));
  }

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  const std::vector<int>& members() const noexcept { return members_; }
  bool contains(int x) const { return std::binary_search(members_.begin(), members_.end(), x); }

 private:
  int a_;
  int b_;
  std::vector<int> members_;  // strictly increasing
};

inline RemainderSet remainder_set(int a, int b) { return RemainderSet(a, b); }

inline bool is_admissible(const RemainderSet& s, const Diagonal& d) {
  return d.b() == s.b() && s.contains(d.inner_points()) && s.contains(d.outer_points());
}

inline bool is_admissible(const Diagonal& d, int a, int b) { return is_admissible(RemainderSet(a, b), d); }

/// Every diagonal of the (b+1)-gon, ordered by (j, i).
inline std::vector<Diagonal> all_diagonals(int b) {
  std::vector<Diagonal> out;
  for (int j = 0; j <= b; ++j)
    for (int i = 0; i < j; ++i)
      if (Diagonal::valid(i, j, b)) out.emplace_back(i, j, b);
  return out;
}

inline std::vector<Diagonal> all_admissible_diagonals(int a, int b) {
  const RemainderSet s(a, b);
  std::vector<Diagonal> out;
  for (const auto& d : all_diagonals(b))
    if (is_admissible(s, d)) out.push_back(d);
  return out;
}

/// Strictly interleaved endpoints. Shared endpoints never cross.
inline bool crosses(const Diagonal& d, const Diagonal& e) {
  return (d.i() < e.i() && e.i() < d.j() && d.j() < e.j()) || (e.i() < d.i() && d.i() < e.j() && e.j() < d.j());
}

/// The diagonal d - k, i.e. (i-k)(j-k); negative k shifts the other way.
/// Empty when an endpoint leaves [0, b] or the result is a side.
inline std::optional<Diagonal> translate(const Diagonal& d, int k) {
  return Diagonal::try_make(d.i() - k, d.j() - k, d.b());
}

/// Parses "i-j".
inline Diagonal parse_diagonal(std::string_view text, int b) {
  auto dash = text.find('-');
  if (dash == std::string_view::npos) throw Error(ErrorKind::Parse, "expected i-j, got '" + std::string(text) + "'");
  auto number = [&](std::string_view part) {
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty())
      throw Error(ErrorKind::Parse, "bad boundary point '" + std::string(part) + "'");
    return value;
  };
  int x = number(text.substr(0, dash));
  int y = number(text.substr(dash + 1));
  if (x > y) std::swap(x, y);
  return Diagonal(x, y, b);
}

}  // namespace ratass
