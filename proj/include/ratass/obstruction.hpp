#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ratass/error.hpp"
#include "ratass/membership.hpp"
#include "ratass/polygon.hpp"

namespace ratass {

/// A pair {ik, jk} with i < j < k; `lesser` precedes `greater` in the
/// (larger endpoint, smaller endpoint) order on diagonals.
struct ObstructionEdge {
  Diagonal lesser;
  Diagonal greater;

  ObstructionEdge(Diagonal d, Diagonal e) : lesser(std::min(d, e)), greater(std::max(d, e)) {}

  int apex() const noexcept { return greater.j(); }
  std::string str() const { return "{" + lesser.str() + "," + greater.str() + "}"; }

  bool operator==(const ObstructionEdge&) const = default;
  std::strong_ordering operator<=>(const ObstructionEdge& o) const noexcept {
    if (auto c = lesser <=> o.lesser; c != 0) return c;
    return greater <=> o.greater;
  }
};

/// The edge order used by the collapse schedule.
inline std::strong_ordering edge_order(const ObstructionEdge& e1, const ObstructionEdge& e2) { return e1 <=> e2; }

class ObstructionGraph {
 public:
  ObstructionGraph(int a, int b, std::vector<Diagonal> vertices, std::vector<ObstructionEdge> edges)
      : a_(a), b_(b), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    edge_set_.insert(edges_.begin(), edges_.end());
  }

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  const std::vector<Diagonal>& vertices() const noexcept { return vertices_; }
  /// Sorted increasingly by the edge order.
  const std::vector<ObstructionEdge>& edges() const noexcept { return edges_; }

  bool has_edge(const Diagonal& d, const Diagonal& e) const {
    return d != e && edge_set_.count(ObstructionEdge(d, e)) != 0;
  }

 private:
  int a_;
  int b_;
  std::vector<Diagonal> vertices_;
  std::vector<ObstructionEdge> edges_;
  std::set<ObstructionEdge> edge_set_;
};

/// Brute force: a noncrossing admissible pair is an edge iff it is not a face
/// of Ass(a,b). Every edge is checked to share its larger endpoint.
inline ObstructionGraph build_obstruction_graph(int a, int b) {
  auto ground = all_admissible_diagonals(a, b);
  std::vector<ObstructionEdge> edges;
  for (std::size_t u = 0; u < ground.size(); ++u) {
    for (std::size_t v = u + 1; v < ground.size(); ++v) {
      const auto& d = ground[u];
      const auto& e = ground[v];
      if (crosses(d, e) || is_face_of_ass(Face{d, e}, a, b)) continue;
      if (d.j() != e.j())
        throw Error(ErrorKind::LemmaViolated, "obstruction edge {" + d.str() + "," + e.str() + "} has distinct larger endpoints");
      edges.emplace_back(d, e);
    }
  }
  return ObstructionGraph(a, b, std::move(ground), std::move(edges));
}

/// Edges whose shared larger endpoint is m.
inline std::vector<ObstructionEdge> component(const ObstructionGraph& g, int m) {
  std::vector<ObstructionEdge> out;
  for (const auto& e : g.edges())
    if (e.apex() == m) out.push_back(e);
  return out;
}

/// Number of connected pieces among the vertices touched by `edges`.
inline int connected_pieces(const std::vector<ObstructionEdge>& edges) {
  std::vector<Diagonal> nodes;
  for (const auto& e : edges) {
    nodes.push_back(e.lesser);
    nodes.push_back(e.greater);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  std::vector<std::size_t> parent(nodes.size());
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = k;
  auto find = [&](std::size_t k) {
    while (parent[k] != k) k = parent[k] = parent[parent[k]];
    return k;
  };
  auto idx = [&](const Diagonal& d) {
    return static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), d) - nodes.begin());
  };
  int pieces = static_cast<int>(nodes.size());
  for (const auto& e : edges) {
    auto x = find(idx(e.lesser)), y = find(idx(e.greater));
    if (x != y) {
      parent[x] = y;
      --pieces;
    }
  }
  return pieces;
}

/// Edges of component m predicted from component b by shifting each edge down
/// by b - m and dropping those that leave the polygon.
inline std::vector<ObstructionEdge> translated_component(const ObstructionGraph& g, int m) {
  std::vector<ObstructionEdge> out;
  for (const auto& e : component(g, g.b())) {
    auto d = translate(e.lesser, g.b() - m);
    auto f = translate(e.greater, g.b() - m);
    if (d && f) out.emplace_back(*d, *f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {
inline void require_admissible(const Diagonal& d, int a, int b, const std::string& context) {
  if (!is_admissible(d, a, b))
    throw Error(ErrorKind::AdmissibilityViolated, context + ": " + d.str() + " is not admissible");
}
}  // namespace detail

/// For an edge {ik, jk}, the diagonal ij closing the wedge.
inline Diagonal wedge_completion(const ObstructionEdge& e, int a, int b) {
  const int i = e.lesser.i(), j = e.greater.i();
  auto d = Diagonal::try_make(i, j, b);
  if (!d) throw Error(ErrorKind::AdmissibilityViolated, "wedge " + e.str() + " closes along a side");
  detail::require_admissible(*d, a, b, "wedge completion of " + e.str());
  return *d;
}

/// The s with i < s < j, sk admissible and {sk, jk} not an edge, increasing.
inline std::vector<int> crossing_indices(const ObstructionEdge& e, const ObstructionGraph& g) {
  const int i = e.lesser.i(), j = e.greater.i(), k = e.apex();
  const RemainderSet rs(g.a(), g.b());
  std::vector<int> out;
  for (int s = i + 1; s < j; ++s) {
    auto d = Diagonal::try_make(s, k, g.b());
    if (d && is_admissible(rs, *d) && !g.has_edge(*d, e.greater)) out.push_back(s);
  }
  return out;
}

/// For an edge {ik, jk} and a crossing index s, the diagonal (i, s); also
/// confirms {ik, sk} is itself an edge.
inline Diagonal half_wedge_completion(const ObstructionEdge& e, int s, const ObstructionGraph& g) {
  const int i = e.lesser.i(), k = e.apex();
  auto d = Diagonal::try_make(i, s, g.b());
  if (!d) throw Error(ErrorKind::AdmissibilityViolated, "half wedge " + e.str() + " at s=" + std::to_string(s) + " closes along a side");
  detail::require_admissible(*d, g.a(), g.b(), "half-wedge completion of " + e.str());
  auto sk = Diagonal::try_make(s, k, g.b());
  if (!sk || !g.has_edge(e.lesser, *sk))
    throw Error(ErrorKind::LemmaViolated, "{" + e.lesser.str() + "," + std::to_string(s) + "-" + std::to_string(k) + "} is not an edge");
  return *d;
}

}  // namespace ratass
