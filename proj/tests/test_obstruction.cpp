#include <catch_amalgamated.hpp>

#include <set>

#include "ratass/associahedra.hpp"
#include "ratass/obstruction.hpp"

using namespace ratass;

namespace {

std::vector<std::pair<int, int>> coprime_pairs(int max_sum) {
  std::vector<std::pair<int, int>> out;
  for (int b = 2; b < max_sum; ++b)
    for (int a = 1; a < b && a + b <= max_sum; ++a)
      if (is_coprime_pair(a, b)) out.emplace_back(a, b);
  return out;
}

ObstructionEdge edge(int i, int j, int k, int l, int b) { return ObstructionEdge(Diagonal(i, j, b), Diagonal(k, l, b)); }

std::vector<std::string> names(const std::vector<ObstructionEdge>& es) {
  std::vector<std::string> out;
  for (const auto& e : es) out.push_back(e.str());
  return out;
}

}  // namespace

TEST_CASE("obstruction graphs of the worked examples", "[obstruction]") {
  CHECK(names(build_obstruction_graph(3, 5).edges()) == std::vector<std::string>{"{0-4,2-4}", "{1-5,3-5}"});
  const auto g = build_obstruction_graph(5, 8);
  CHECK(names(g.edges()) == std::vector<std::string>{"{0-4,2-4}", "{1-5,3-5}", "{2-6,4-6}", "{0-7,2-7}", "{0-7,5-7}",
                                                     "{3-7,5-7}", "{1-8,3-8}", "{1-8,6-8}", "{4-8,6-8}"});
  CHECK(names(component(g, 8)) == std::vector<std::string>{"{1-8,3-8}", "{1-8,6-8}", "{4-8,6-8}"});
  CHECK(component(g, 0).empty());
  CHECK(component(g, 1).empty());
  CHECK(connected_pieces(component(g, 6)) == 1);
}

TEST_CASE("the apex 6 component of OG(5,8) is disconnected", "[obstruction]") {
  // Vertices: translates of the apex 8 vertices that stay inside the polygon.
  const auto g = build_obstruction_graph(5, 8);
  std::set<Diagonal> verts;
  for (const auto& e : component(g, 8))
    for (const auto& d : {e.lesser, e.greater})
      if (auto t = translate(d, 2)) verts.insert(*t);
  CHECK(verts == std::set<Diagonal>{Diagonal(1, 6, 8), Diagonal(2, 6, 8), Diagonal(4, 6, 8)});
  const auto edges = component(g, 6);
  std::set<Diagonal> touched;
  for (const auto& e : edges) touched.insert({e.lesser, e.greater});
  const auto isolated = static_cast<int>(verts.size() - touched.size());
  CHECK(connected_pieces(edges) + isolated == 2);
}

TEST_CASE("no edges at b = ka + 1", "[obstruction]") {
  for (int a = 2; a <= 6; ++a)
    for (int k = 1; k * a + 1 <= 13; ++k) CHECK(build_obstruction_graph(a, k * a + 1).edges().empty());
}

TEST_CASE("edge order", "[obstruction]") {
  const auto e1 = edge(0, 4, 2, 4, 8), e2 = edge(1, 5, 3, 5, 8);
  CHECK(edge_order(e1, e1) == std::strong_ordering::equal);
  CHECK(edge_order(e1, e2) == std::strong_ordering::less);
  CHECK(edge_order(e2, e1) == std::strong_ordering::greater);
  CHECK(edge(2, 4, 0, 4, 8) == e1);
  CHECK(e1.apex() == 4);
}

TEST_CASE("edges are exactly the rejected noncrossing pairs", "[obstruction]") {
  for (auto [a, b] : coprime_pairs(15)) {
    INFO("(a,b) = (" << a << "," << b << ")");
    const auto g = build_obstruction_graph(a, b);
    const auto ass = build_ass(a, b);
    const auto ground = all_admissible_diagonals(a, b);
    std::size_t count = 0;
    for (std::size_t u = 0; u < ground.size(); ++u)
      for (std::size_t v = u + 1; v < ground.size(); ++v) {
        const auto& d = ground[u];
        const auto& e = ground[v];
        if (crosses(d, e)) continue;
        const bool in_ass = ass.contains(Face{d, e});
        CHECK(g.has_edge(d, e) == !in_ass);
        count += in_ass ? 0 : 1;
      }
    CHECK(g.edges().size() == count);
    for (const auto& e : g.edges()) CHECK(e.lesser.j() == e.greater.j());
  }
}

TEST_CASE("deleting the edges from Âss gives Ass", "[obstruction]") {
  for (auto [a, b] : coprime_pairs(14)) {
    const auto g = build_obstruction_graph(a, b);
    std::vector<Face> removed;
    for (const auto& e : g.edges()) removed.push_back(Face{e.lesser, e.greater});
    CHECK(deletion(build_hat_ass(a, b), removed) == build_ass(a, b));
  }
}

TEST_CASE("components are translates of the top component", "[obstruction]") {
  for (auto [a, b] : coprime_pairs(16)) {
    const auto g = build_obstruction_graph(a, b);
    for (int m = 0; m <= b; ++m) CHECK(names(component(g, m)) == names(translated_component(g, m)));
  }
}

TEST_CASE("wedge completions", "[obstruction]") {
  const auto g = build_obstruction_graph(5, 8);
  CHECK(wedge_completion(edge(4, 8, 6, 8, 8), 5, 8) == Diagonal(4, 6, 8));
  CHECK(wedge_completion(edge(0, 4, 2, 4, 5), 3, 5) == Diagonal(0, 2, 5));
  CHECK(wedge_completion(edge(1, 8, 3, 8, 8), 5, 8) == Diagonal(1, 3, 8));
  CHECK(crossing_indices(edge(1, 8, 6, 8, 8), g) == std::vector<int>{3});
  CHECK(crossing_indices(edge(1, 8, 3, 8, 8), g).empty());
  CHECK(crossing_indices(edge(0, 4, 2, 4, 5), build_obstruction_graph(3, 5)).empty());
  CHECK(half_wedge_completion(edge(1, 8, 6, 8, 8), 3, g) == Diagonal(1, 3, 8));
  // {37,57} is an edge, so s = 3 is not a crossing index of {07,57}; s = 2 is.
  CHECK(crossing_indices(edge(0, 7, 5, 7, 8), g) == std::vector<int>{2});
  CHECK(half_wedge_completion(edge(0, 7, 5, 7, 8), 2, g) == Diagonal(0, 2, 8));
  CHECK_FALSE(g.has_edge(Diagonal(0, 7, 8), Diagonal(3, 7, 8)));
  try {
    half_wedge_completion(edge(0, 7, 5, 7, 8), 3, g);
    FAIL("expected AdmissibilityViolated");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AdmissibilityViolated);
  }
}

TEST_CASE("completion lemmas hold on every edge", "[obstruction]") {
  for (auto [a, b] : coprime_pairs(16)) {
    const auto g = build_obstruction_graph(a, b);
    for (const auto& e : g.edges()) {
      CHECK(is_admissible(wedge_completion(e, a, b), a, b));
      for (int s : crossing_indices(e, g)) CHECK(is_admissible(half_wedge_completion(e, s, g), a, b));
    }
  }
}
