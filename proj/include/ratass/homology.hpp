#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ratass/associahedra.hpp"
#include "ratass/complex.hpp"
#include "ratass/error.hpp"

namespace ratass {

enum class Field { GF2, Rational };

inline std::string to_string(Field f) { return f == Field::GF2 ? "gf2" : "q"; }

/// Reduced Betti numbers for dimensions -1..dim; `values[k + 1]` is b̃_k.
struct BettiVector {
  Field field = Field::GF2;
  std::vector<std::int64_t> values;

  int top_dimension() const noexcept { return static_cast<int>(values.size()) - 2; }
  std::int64_t at(int k) const {
    auto idx = static_cast<std::size_t>(k + 1);
    return k >= -1 && idx < values.size() ? values[idx] : 0;
  }
  bool operator==(const BettiVector&) const = default;
};

/// Sparse column: increasing row indices with their coefficients.
using SparseColumn = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// ---------------------------------------------------------------------------
// Rank over GF(2)
// ---------------------------------------------------------------------------

/// Dense Gaussian elimination with columns packed into 64-bit words.
inline std::size_t rank_gf2_dense(std::size_t rows, const std::vector<SparseColumn>& columns) {
  const std::size_t words = (rows + 63) / 64;
  std::vector<std::vector<std::uint64_t>> cols;
  cols.reserve(columns.size());
  for (const auto& c : columns) {
    std::vector<std::uint64_t> bits(words, 0);
    for (const auto& [row, value] : c)
      if (value % 2 != 0) bits[row / 64] ^= std::uint64_t{1} << (row % 64);
    cols.push_back(std::move(bits));
  }
  std::size_t rank = 0;
  for (std::size_t row = 0; row < rows && rank < cols.size(); ++row) {
    const std::size_t w = row / 64;
    const std::uint64_t bit = std::uint64_t{1} << (row % 64);
    std::size_t pivot = rank;
    while (pivot < cols.size() && !(cols[pivot][w] & bit)) ++pivot;
    if (pivot == cols.size()) continue;
    std::swap(cols[pivot], cols[rank]);
    for (std::size_t c = rank + 1; c < cols.size(); ++c)
      if (cols[c][w] & bit)
        for (std::size_t k = w; k < words; ++k) cols[c][k] ^= cols[rank][k];
    ++rank;
  }
  return rank;
}

/// Standard column reduction (pivot = lowest nonzero row). Returns the pivot
/// row of each column that stays nonzero.
inline std::vector<std::uint32_t> reduce_gf2_sparse(const std::vector<SparseColumn>& columns) {
  std::unordered_map<std::uint32_t, std::size_t> owner;  // pivot row -> reduced column
  std::vector<std::vector<std::uint32_t>> reduced(columns.size());
  std::vector<std::uint32_t> pivots;
  std::vector<std::uint32_t> scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = reduced[c];
    for (const auto& [row, value] : columns[c])
      if (value % 2 != 0) col.push_back(row);
    while (!col.empty()) {
      auto it = owner.find(col.back());
      if (it == owner.end()) break;
      const auto& other = reduced[it->second];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner.emplace(col.back(), c);
      pivots.push_back(col.back());
    }
  }
  return pivots;
}

// ---------------------------------------------------------------------------
// Rank over Q
// ---------------------------------------------------------------------------

namespace detail {

struct CheckedInt {
  static std::int64_t mul(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "int64 overflow in elimination");
    return r;
  }
  static std::int64_t sub(std::int64_t x, std::int64_t y) {
    std::int64_t r;
    if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "int64 overflow in elimination");
    return r;
  }
};

template <class Int>
Int abs_value(const Int& x) {
  return x < 0 ? Int(-x) : x;
}

template <class Int>
Int gcd_value(Int x, Int y) {
  x = abs_value(x);
  y = abs_value(y);
  while (y != 0) {
    Int t = x % y;
    x = y;
    y = t;
  }
  return x;
}

template <class Int>
Int times(const Int& x, const Int& y) {
  if constexpr (std::is_same_v<Int, std::int64_t>) return CheckedInt::mul(x, y);
  else return x * y;
}

template <class Int>
Int minus(const Int& x, const Int& y) {
  if constexpr (std::is_same_v<Int, std::int64_t>) return CheckedInt::sub(x, y);
  else return x - y;
}

/// Fraction-free column reduction: col <- p*col - c*pivot_col, then divide
/// out the content. Rank over Q is unchanged by each step.
template <class Int>
std::vector<std::uint32_t> reduce_rational(const std::vector<SparseColumn>& columns) {
  using Col = std::vector<std::pair<std::uint32_t, Int>>;
  std::unordered_map<std::uint32_t, std::size_t> owner;
  std::vector<Col> reduced(columns.size());
  std::vector<std::uint32_t> pivots;
  Col scratch;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    auto& col = reduced[c];
    for (const auto& [row, value] : columns[c])
      if (value != 0) col.emplace_back(row, Int(value));
    while (!col.empty()) {
      auto it = owner.find(col.back().first);
      if (it == owner.end()) break;
      const auto& other = reduced[it->second];
      const Int p = other.back().second;
      const Int q = col.back().second;
      scratch.clear();
      std::size_t x = 0, y = 0;
      while (x < col.size() || y < other.size()) {
        if (y == other.size() || (x < col.size() && col[x].first < other[y].first)) {
          scratch.emplace_back(col[x].first, times(p, col[x].second));
          ++x;
        } else if (x == col.size() || other[y].first < col[x].first) {
          scratch.emplace_back(other[y].first, minus(Int(0), times(q, other[y].second)));
          ++y;
        } else {
          Int v = minus(times(p, col[x].second), times(q, other[y].second));
          if (v != 0) scratch.emplace_back(col[x].first, v);
          ++x;
          ++y;
        }
      }
      Int g = 0;
      for (const auto& e : scratch) g = gcd_value(g, e.second);
      if (g > 1)
        for (auto& e : scratch) e.second /= g;
      col.swap(scratch);
    }
    if (!col.empty()) {
      owner.emplace(col.back().first, c);
      pivots.push_back(col.back().first);
    }
  }
  return pivots;
}

}  // namespace detail

/// Pivot rows of the reduced matrix over Q; exact, falling back to
/// arbitrary precision if 64-bit coefficients overflow.
inline std::vector<std::uint32_t> reduce_rational(const std::vector<SparseColumn>& columns) {
  try {
    return detail::reduce_rational<std::int64_t>(columns);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    return detail::reduce_rational<boost::multiprecision::cpp_int>(columns);
  }
}

// ---------------------------------------------------------------------------
// Boundary matrices
// ---------------------------------------------------------------------------

/// Faces of one dimension in canonical order with a reverse index.
struct FaceLayer {
  std::vector<VertexSet> faces;
  std::unordered_map<VertexSet, std::uint32_t, VertexSetHash> index;
};

template <class V>
std::vector<FaceLayer> face_layers(const BasicComplex<V>& complex) {
  std::vector<FaceLayer> layers(static_cast<std::size_t>(complex.dimension() + 2));
  for (const auto& s : complex.sorted_masks()) {
    auto& layer = layers[static_cast<std::size_t>(s.size())];
    layer.index.emplace(s, static_cast<std::uint32_t>(layer.faces.size()));
    layer.faces.push_back(s);
  }
  return layers;
}

/// Column of the signed boundary of `face`: removing the t-th vertex in
/// ground order contributes (-1)^t.
inline SparseColumn boundary_column(const VertexSet& face, const FaceLayer& below) {
  SparseColumn col;
  int t = 0;
  face.for_each([&](int v) {
    col.emplace_back(below.index.at(face.without(static_cast<std::size_t>(v))), t % 2 == 0 ? 1 : -1);
    ++t;
  });
  std::sort(col.begin(), col.end());
  return col;
}

/// ∂_k maps k-faces to (k-1)-faces; k = 0 maps vertices onto the empty face.
template <class V>
std::vector<SparseColumn> boundary_matrix(const BasicComplex<V>& complex, int k) {
  auto layers = face_layers(complex);
  std::vector<SparseColumn> cols;
  if (k < 0 || static_cast<std::size_t>(k + 1) >= layers.size()) return cols;
  for (const auto& f : layers[static_cast<std::size_t>(k + 1)].faces)
    cols.push_back(boundary_column(f, layers[static_cast<std::size_t>(k)]));
  return cols;
}

/// ∂_{k-1} ∂_k = 0 for every k, checked over the integers.
template <class V>
bool boundary_squared_vanishes(const BasicComplex<V>& complex) {
  auto layers = face_layers(complex);
  for (std::size_t size = 2; size < layers.size(); ++size) {
    for (const auto& f : layers[size].faces) {
      std::unordered_map<std::uint32_t, std::int64_t> acc;
      for (const auto& [row, sign] : boundary_column(f, layers[size - 1])) {
        for (const auto& [row2, sign2] : boundary_column(layers[size - 1].faces[row], layers[size - 2]))
          acc[row2] += sign * sign2;
      }
      for (const auto& [row, value] : acc)
        if (value != 0) return false;
    }
  }
  return true;
}

struct HomologyOptions {
  bool check_boundary_squared = true;
  /// Dense bit-packed elimination below this many matrix bits.
  std::uint64_t dense_gf2_bits = std::uint64_t{1} << 24;
};

/// Reduced Betti numbers by rank-nullity. Matrices are reduced from the top
/// dimension down; a k-face that is a pivot row of the reduced ∂_{k+1}
/// indexes a column of ∂_k that reduces to zero, so it is skipped.
template <class V>
BettiVector betti_numbers(const BasicComplex<V>& complex, Field field, const HomologyOptions& options = {}) {
  if (options.check_boundary_squared && !boundary_squared_vanishes(complex))
    throw Error(ErrorKind::LemmaViolated, "boundary of boundary is nonzero");
  auto layers = face_layers(complex);
  const int dim = complex.dimension();
  // rank[k + 1] = rank of ∂_k for k = -1..dim+1 (∂_{-1}, ∂_{dim+1} vanish)
  std::vector<std::int64_t> rank(static_cast<std::size_t>(dim + 3), 0);
  std::vector<char> cleared;
  for (int k = dim; k >= 0; --k) {
    const auto& top = layers[static_cast<std::size_t>(k + 1)];
    const auto& below = layers[static_cast<std::size_t>(k)];
    std::vector<SparseColumn> cols;
    cols.reserve(top.faces.size());
    for (std::size_t c = 0; c < top.faces.size(); ++c)
      if (cleared.empty() || !cleared[c]) cols.push_back(boundary_column(top.faces[c], below));

    std::vector<std::uint32_t> pivots;
    std::size_t r = 0;
    bool have_pivots = true;
    if (field == Field::GF2) {
      if (static_cast<std::uint64_t>(below.faces.size()) * cols.size() <= options.dense_gf2_bits) {
        r = rank_gf2_dense(below.faces.size(), cols);
        have_pivots = false;
      } else {
        pivots = reduce_gf2_sparse(cols);
        r = pivots.size();
      }
    } else {
      pivots = reduce_rational(cols);
      r = pivots.size();
    }
    rank[static_cast<std::size_t>(k + 1)] = static_cast<std::int64_t>(r);
    cleared.assign(have_pivots ? below.faces.size() : 0, 0);
    for (auto p : pivots) cleared[p] = 1;
  }

  BettiVector out{field, {}};
  std::int64_t euler_f = 0, euler_b = 0;
  for (int k = -1; k <= dim; ++k) {
    const auto f = static_cast<std::int64_t>(layers[static_cast<std::size_t>(k + 1)].faces.size());
    const auto value = f - rank[static_cast<std::size_t>(k + 1)] - rank[static_cast<std::size_t>(k + 2)];
    out.values.push_back(value);
    euler_f += (k + 1) % 2 == 0 ? -f : f;
    euler_b += (k + 1) % 2 == 0 ? -value : value;
  }
  if (euler_f != euler_b) throw Error(ErrorKind::LemmaViolated, "Betti numbers disagree with the Euler characteristic");
  return out;
}

// ---------------------------------------------------------------------------
// Wedge of spheres and Alexander duality
// ---------------------------------------------------------------------------

/// 1/b C(b, a)
inline std::uint64_t sphere_count(int a, int b) {
  return exact_divide(binomial(b, a), static_cast<std::uint64_t>(b), "sphere count");
}

/// b̃ concentrated in one dimension with the given rank.
inline bool is_concentrated(const BettiVector& betti, int dimension, std::uint64_t rank) {
  for (int k = -1; k <= betti.top_dimension(); ++k) {
    const std::int64_t want = k == dimension ? static_cast<std::int64_t>(rank) : 0;
    if (betti.at(k) != want) return false;
  }
  return betti.top_dimension() >= dimension || rank == 0;
}

struct WedgeReport {
  int a = 0;
  int b = 0;
  std::uint64_t expected_spheres = 0;
  int sphere_dimension = 0;
  BettiVector gf2;
  BettiVector rational;
  bool fields_agree = false;
  bool ok = false;
};

/// Ass(a,b) has b̃ concentrated in dimension a-2 with rank C(b,a)/b, over both fields.
inline WedgeReport check_wedge(int a, int b, const Limits& limits = {}, const HomologyOptions& options = {}) {
  auto ass = build_ass(a, b, limits);
  WedgeReport r;
  r.a = a;
  r.b = b;
  r.expected_spheres = sphere_count(a, b);
  r.sphere_dimension = a - 2;
  r.gf2 = betti_numbers(ass, Field::GF2, options);
  r.rational = betti_numbers(ass, Field::Rational, options);
  r.fields_agree = r.gf2.values == r.rational.values;
  r.ok = r.fields_agree && is_concentrated(r.gf2, a - 2, r.expected_spheres) &&
         is_concentrated(r.rational, a - 2, r.expected_spheres);
  return r;
}

struct PartitionLine {
  int a = 0;
  std::size_t admissible = 0;
  std::size_t complementary = 0;
  bool disjoint = false;
  bool covers = false;
};

struct PartitionReport {
  int b = 0;
  std::size_t total_diagonals = 0;
  std::vector<PartitionLine> lines;
  bool ok = false;
};

/// For every a coprime to b, admissible(a,b) and admissible(b-a,b) split the
/// diagonals of the (b+1)-gon. Admissibility for a = 1 is empty.
inline PartitionReport alexander_partition_check(int b) {
  if (b < 3) throw Error(ErrorKind::BadOrder, "need b >= 3");
  PartitionReport rep;
  rep.b = b;
  const auto all = all_diagonals(b);
  rep.total_diagonals = all.size();
  rep.ok = true;
  for (int a = 1; a < b; ++a) {
    if (!is_coprime_pair(a, b)) continue;
    const RemainderSet s(a, b), t(b - a, b);
    PartitionLine line{a, 0, 0, true, true};
    for (const auto& d : all) {
      const bool x = is_admissible(s, d), y = is_admissible(t, d);
      line.admissible += x;
      line.complementary += y;
      if (x && y) line.disjoint = false;
      if (!x && !y) line.covers = false;
    }
    rep.ok = rep.ok && line.disjoint && line.covers;
    rep.lines.push_back(line);
  }
  return rep;
}

struct DualityReport {
  int a = 0;
  int b = 0;
  std::uint64_t expected_rank = 0;
  std::int64_t rank = 0;       // b̃_{a-2}(Ass(a,b))
  std::int64_t dual_rank = 0;  // b̃_{b-a-2}(Ass(b-a,b))
  bool concentrated = false;
  bool dual_concentrated = false;
  bool dimensions_pair = false;  // (a-2) + (b-a-2) = (b-3) - 1
  bool ok = false;
  std::string note =
      "homology-rank check only: equal reduced Betti numbers in complementary degrees of the (b-3)-sphere "
      "Ass(b-1,b); the deformation-retraction statement itself is not mechanized";
};

inline DualityReport alexander_duality_check(int a, int b, const Limits& limits = {}, Field field = Field::GF2,
                                             const HomologyOptions& options = {}) {
  require_coprime_pair(a, b);
  DualityReport rep;
  rep.a = a;
  rep.b = b;
  rep.expected_rank = sphere_count(a, b);
  const auto here = betti_numbers(build_ass(a, b, limits), field, options);
  const auto there = betti_numbers(build_ass(b - a, b, limits), field, options);
  rep.rank = here.at(a - 2);
  rep.dual_rank = there.at(b - a - 2);
  rep.concentrated = is_concentrated(here, a - 2, rep.expected_rank);
  rep.dual_concentrated = is_concentrated(there, b - a - 2, rep.expected_rank);
  rep.dimensions_pair = (a - 2) + (b - a - 2) == (b - 3) - 1;
  rep.ok = rep.rank == rep.dual_rank && rep.rank == static_cast<std::int64_t>(rep.expected_rank) && rep.concentrated &&
           rep.dual_concentrated && rep.dimensions_pair;
  return rep;
}

}  // namespace ratass
