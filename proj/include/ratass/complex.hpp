#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ratass/arith.hpp"
#include "ratass/error.hpp"
#include "ratass/vertex_set.hpp"

namespace ratass {

/// A finite set of vertices kept sorted and duplicate-free.
template <class V>
class BasicFace {
 public:
  using value_type = V;
  using const_iterator = typename std::vector<V>::const_iterator;

  BasicFace() = default;
  BasicFace(std::initializer_list<V> vs) : BasicFace(std::vector<V>(vs)) {}
  explicit BasicFace(std::vector<V> vs) : items_(std::move(vs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  int dim() const noexcept { return static_cast<int>(items_.size()) - 1; }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }
  const V& operator[](std::size_t k) const { return items_[k]; }
  const std::vector<V>& items() const noexcept { return items_; }

  bool contains(const V& v) const { return std::binary_search(items_.begin(), items_.end(), v); }
  bool includes(const BasicFace& o) const {
    return std::includes(items_.begin(), items_.end(), o.items_.begin(), o.items_.end());
  }

  BasicFace with(const V& v) const {
    auto vs = items_;
    vs.push_back(v);
    return BasicFace(std::move(vs));
  }
  BasicFace without(const V& v) const {
    auto vs = items_;
    vs.erase(std::remove(vs.begin(), vs.end(), v), vs.end());
    return BasicFace(std::move(vs));
  }

  bool operator==(const BasicFace&) const = default;
  /// Cardinality first, then lexicographic, matching VertexSet::canonical_less.
  friend bool operator<(const BasicFace& x, const BasicFace& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.items_ < y.items_;
  }

 private:
  std::vector<V> items_;
};

/// f_{-1..d} and h_{0..d+1} where d is the dimension.
struct FHVector {
  std::vector<std::int64_t> f;  // f[k] counts faces of dimension k-1
  std::vector<std::int64_t> h;
};

/// Simplicial complex stored as an explicit face family over an ordered
/// ground set of at most 128 vertices. Faces are bit masks of ground indices;
/// the ground order is the vertex type's `<`, which fixes the canonical face
/// order used everywhere (cardinality, then lexicographic).
template <class V>
class BasicComplex {
 public:
  using vertex_type = V;
  using face_type = BasicFace<V>;
  using FaceSet = std::unordered_set<VertexSet, VertexSetHash>;

  BasicComplex() : BasicComplex(std::vector<V>{}) {}

  /// The complex {∅} on the given ground set.
  explicit BasicComplex(std::vector<V> ground) : ground_(std::move(ground)) {
    std::sort(ground_.begin(), ground_.end());
    ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
    if (ground_.size() > VertexSet::capacity)
      throw Error(ErrorKind::CapExceeded, "ground set of " + std::to_string(ground_.size()) + " vertices exceeds 128");
    faces_.insert(VertexSet{});
  }

  /// Downward closure of the given faces.
  static BasicComplex from_facets(std::vector<V> ground, const std::vector<face_type>& generators,
                                  std::uint64_t max_faces = Limits{}.max_faces) {
    BasicComplex c(std::move(ground));
    std::vector<VertexSet> masks;
    masks.reserve(generators.size());
    for (const auto& g : generators) masks.push_back(c.mask_of(g));
    c.close_downward(masks, max_faces);
    return c;
  }

  const std::vector<V>& ground() const noexcept { return ground_; }
  const FaceSet& faces() const noexcept { return faces_; }
  std::size_t face_count() const noexcept { return faces_.size(); }

  std::optional<std::size_t> index_of(const V& v) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), v);
    if (it == ground_.end() || !(*it == v)) return std::nullopt;
    return static_cast<std::size_t>(it - ground_.begin());
  }

  VertexSet mask_of(const face_type& f) const {
    VertexSet s;
    for (const auto& v : f) {
      auto k = index_of(v);
      if (!k) throw Error(ErrorKind::NotAFace, "vertex outside the ground set");
      s.insert(*k);
    }
    return s;
  }

  std::optional<VertexSet> try_mask_of(const face_type& f) const {
    VertexSet s;
    for (const auto& v : f) {
      auto k = index_of(v);
      if (!k) return std::nullopt;
      s.insert(*k);
    }
    return s;
  }

  face_type face_of(const VertexSet& s) const {
    std::vector<V> vs;
    s.for_each([&](int k) { vs.push_back(ground_[static_cast<std::size_t>(k)]); });
    return face_type(std::move(vs));
  }

  bool contains(const VertexSet& s) const { return faces_.count(s) != 0; }
  bool contains(const face_type& f) const {
    auto s = try_mask_of(f);
    return s && contains(*s);
  }

  int dimension() const {
    int d = -1;
    for (const auto& s : faces_) d = std::max(d, s.size() - 1);
    return d;
  }

  /// Inclusion-maximal faces in canonical order.
  std::vector<VertexSet> facet_masks() const {
    std::vector<VertexSet> out;
    for (const auto& s : faces_) {
      bool maximal = true;
      for (std::size_t v = 0; v < ground_.size() && maximal; ++v)
        if (!s.contains(v) && contains(s.with(v))) maximal = false;
      if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
    return out;
  }

  std::vector<face_type> facets() const {
    std::vector<face_type> out;
    for (const auto& s : facet_masks()) out.push_back(face_of(s));
    return out;
  }

  bool is_pure() const {
    auto fs = facet_masks();
    return std::all_of(fs.begin(), fs.end(), [&](const auto& s) { return s.size() == fs.front().size(); });
  }

  /// All faces in canonical order.
  std::vector<VertexSet> sorted_masks() const {
    std::vector<VertexSet> out(faces_.begin(), faces_.end());
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return canonical_less(x, y); });
    return out;
  }

  // Raw mutation for collapse bookkeeping; callers keep the family closed.
  void insert_mask(const VertexSet& s) { faces_.insert(s); }
  bool erase_mask(const VertexSet& s) { return faces_.erase(s) != 0; }

  bool is_downward_closed() const {
    for (const auto& s : faces_) {
      bool ok = true;
      s.for_each([&](int v) { ok = ok && contains(s.without(static_cast<std::size_t>(v))); });
      if (!ok) return false;
    }
    return true;
  }

  bool operator==(const BasicComplex& o) const { return ground_ == o.ground_ && faces_ == o.faces_; }

  void close_downward(const std::vector<VertexSet>& generators, std::uint64_t max_faces) {
    // Layer by layer from the largest generators, so each face is produced
    // from an already-known face one size up.
    int top = 0;
    for (const auto& g : generators) top = std::max(top, g.size());
    std::vector<std::vector<VertexSet>> layers(static_cast<std::size_t>(top) + 1);
    auto add = [&](const VertexSet& s) {
      if (faces_.insert(s).second) {
        layers[static_cast<std::size_t>(s.size())].push_back(s);
        if (faces_.size() > max_faces)
          throw Error(ErrorKind::CapExceeded, "face count exceeds cap " + std::to_string(max_faces));
      }
    };
    for (const auto& g : generators) add(g);
    for (int size = top; size >= 1; --size) {
      auto layer = std::move(layers[static_cast<std::size_t>(size)]);
      for (const auto& s : layer) s.for_each([&](int v) { add(s.without(static_cast<std::size_t>(v))); });
    }
  }

 private:
  std::vector<V> ground_;
  FaceSet faces_;
};

template <class V>
FHVector f_vector(const BasicComplex<V>& complex) {
  const int d = complex.dimension();
  FHVector out;
  out.f.assign(static_cast<std::size_t>(d + 2), 0);
  for (const auto& s : complex.faces()) ++out.f[static_cast<std::size_t>(s.size())];
  return out;
}

/// h_k = sum_{i=0}^{k} (-1)^{k-i} C(n-i, k-i) f_{i-1} with n = dim + 1.
inline std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  std::vector<std::int64_t> h(f.size(), 0);
  for (int k = 0; k <= n; ++k) {
    std::int64_t acc = 0;
    for (int i = 0; i <= k; ++i) {
      auto c = static_cast<std::int64_t>(binomial(n - i, k - i));
      std::int64_t term = c * f[static_cast<std::size_t>(i)];
      acc += ((k - i) % 2 == 0) ? term : -term;
    }
    h[static_cast<std::size_t>(k)] = acc;
  }
  return h;
}

template <class V>
FHVector fh_vector(const BasicComplex<V>& complex) {
  FHVector out = f_vector(complex);
  out.h = h_from_f(out.f);
  return out;
}

template <class V>
std::vector<std::int64_t> h_vector(const BasicComplex<V>& complex) {
  return h_from_f(f_vector(complex).f);
}

template <class V>
struct FlagReport {
  bool flag = true;
  std::optional<BasicFace<V>> empty_face;  // a minimal one when not flag
};

/// Searches the cliques of the 1-skeleton for one missing from the complex.
/// A minimal missing clique minus its last vertex is a face, so extending
/// every face by a larger adjacent vertex reaches it.
template <class V>
FlagReport<V> is_flag(const BasicComplex<V>& complex) {
  const std::size_t n = complex.ground().size();
  std::vector<VertexSet> nbr(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && complex.contains(VertexSet::singleton(u).with(v))) nbr[u].insert(v);

  std::optional<VertexSet> best;
  for (const auto& s : complex.faces()) {
    if (s.size() < 2) continue;
    const std::size_t start = static_cast<std::size_t>(s.max()) + 1;
    for (std::size_t v = start; v < n; ++v) {
      if (!nbr[v].includes(s)) continue;
      auto t = s.with(v);
      if (!complex.contains(t) && (!best || canonical_less(t, *best))) best = t;
    }
  }
  FlagReport<V> report;
  if (best) {
    report.flag = false;
    report.empty_face = complex.face_of(*best);
  }
  return report;
}

/// Faces of the complex containing no member of `removed`.
template <class V>
BasicComplex<V> deletion(const BasicComplex<V>& complex, const std::vector<BasicFace<V>>& removed) {
  std::vector<VertexSet> masks;
  for (const auto& f : removed) {
    if (auto m = complex.try_mask_of(f)) masks.push_back(*m);
  }
  BasicComplex<V> out(complex.ground());
  out.erase_mask(VertexSet{});
  for (const auto& s : complex.faces()) {
    bool keep = std::none_of(masks.begin(), masks.end(), [&](const auto& m) { return s.includes(m); });
    if (keep) out.insert_mask(s);
  }
  return out;
}

}  // namespace ratass
