#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ratass/associahedra.hpp"
#include "ratass/complex.hpp"
#include "ratass/error.hpp"
#include "ratass/obstruction.hpp"

namespace ratass {

// ---------------------------------------------------------------------------
// Elementary collapses and cone-vertex batches
// ---------------------------------------------------------------------------

template <class V>
struct BasicFreePair {
  BasicFace<V> facet;
  BasicFace<V> subface;
  bool operator==(const BasicFreePair&) const = default;
};

/// (facet, subface) as masks over the complex's ground set.
using MaskPair = std::pair<VertexSet, VertexSet>;

/// `facet` is the only face of the complex properly containing `subface`,
/// assuming the face family is downward closed (any proper superface then
/// contains a superface of one more vertex).
template <class V>
bool is_free_pair(const BasicComplex<V>& complex, const VertexSet& facet, const VertexSet& subface) {
  if (!facet.includes(subface) || facet.size() != subface.size() + 1) return false;
  if (!complex.contains(facet) || !complex.contains(subface)) return false;
  const std::size_t n = complex.ground().size();
  for (std::size_t v = 0; v < n; ++v) {
    if (!subface.contains(v) && !facet.contains(v) && complex.contains(subface.with(v))) return false;
    if (!facet.contains(v) && complex.contains(facet.with(v))) return false;
  }
  return true;
}

/// Collapses `complex` onto its deletion of `face` in place, pairing each
/// face G containing `face` but not `cone` with G + cone. Pairs are removed
/// larger faces first (descending cardinality, then lexicographic on the
/// larger member), and each is checked free at its turn.
template <class V>
std::vector<MaskPair> collapse_by_cone_in_place(BasicComplex<V>& complex, const VertexSet& face, std::size_t cone) {
  if (!complex.contains(face)) throw Error(ErrorKind::NotAFace, "collapse target is not a face");
  if (face.contains(cone)) throw Error(ErrorKind::NotConeVertex, "cone vertex lies in the face");

  std::vector<MaskPair> pairs;
  for (const auto& g : complex.faces()) {
    if (!g.includes(face)) continue;
    if (!complex.contains(g.with(cone))) {
      throw Error(ErrorKind::NotConeVertex, "face of size " + std::to_string(g.size()) +
                                                " containing the target does not extend by the cone vertex");
    }
    if (!g.contains(cone)) pairs.emplace_back(g.with(cone), g);
  }
  std::sort(pairs.begin(), pairs.end(), [](const MaskPair& x, const MaskPair& y) {
    if (x.first.size() != y.first.size()) return x.first.size() > y.first.size();
    return lex_less(x.first, y.first);
  });
  for (const auto& [facet, subface] : pairs) {
    if (!is_free_pair(complex, facet, subface)) throw Error(ErrorKind::NotFree, "cone batch produced a non-free pair");
    complex.erase_mask(facet);
    complex.erase_mask(subface);
  }
  return pairs;
}

template <class V>
struct ConeCollapse {
  std::vector<BasicFreePair<V>> pairs;
  BasicComplex<V> result;
};

/// Value form of the cone-vertex collapse: the pairs realising the collapse
/// of `complex` onto the deletion of `face`, and that deletion.
template <class V>
ConeCollapse<V> cone_vertex_collapse(const BasicComplex<V>& complex, const BasicFace<V>& face, const V& cone) {
  auto face_mask = complex.try_mask_of(face);
  if (!face_mask || !complex.contains(*face_mask)) throw Error(ErrorKind::NotAFace, "collapse target is not a face");
  auto cone_index = complex.index_of(cone);
  if (!cone_index) throw Error(ErrorKind::NotConeVertex, "cone vertex outside the ground set");
  ConeCollapse<V> out{{}, complex};
  for (const auto& [facet, subface] : collapse_by_cone_in_place(out.result, *face_mask, *cone_index))
    out.pairs.push_back({complex.face_of(facet), complex.face_of(subface)});
  return out;
}

// ---------------------------------------------------------------------------
// The collapse of Âss(a,b) onto Ass(a,b)
// ---------------------------------------------------------------------------

/// Which batch a step belongs to: edge r (1-based, increasing edge order),
/// crossing face q (1..p), or q = p + 1 for the final wedge batch.
struct Stage {
  int r = 0;
  int q = 0;
  Diagonal cone;
  bool operator==(const Stage&) const = default;
};

struct CollapseStep {
  Face facet;
  Face subface;
  Stage stage;
  bool operator==(const CollapseStep&) const = default;
};

struct CollapseCertificate {
  int a = 0;
  int b = 0;
  std::vector<CollapseStep> steps;
  bool operator==(const CollapseCertificate&) const = default;
};

struct ScheduleOptions {
  Limits limits{};
  /// After each edge, compare against Âss minus faces holding a later edge.
  bool check_stages = true;
};

struct ScheduleRun {
  CollapseCertificate certificate;
  SimplicialComplex hat;
  SimplicialComplex terminal;
  ObstructionGraph graph;
};

inline std::string face_string(const Face& f) {
  std::string s = "{";
  for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "," : "") + f[k].str();
  return s + "}";
}

/// Processes obstruction edges from last to first in the edge order. For
/// e_r = {ik, jk}: each crossing face F_q = {ik, s_q k, jk} is collapsed away
/// with cone vertex (i, s_q), then e_r itself with cone vertex (i, j).
inline ScheduleRun run_collapse_schedule(int a, int b, const ScheduleOptions& options = {}) {
  auto hat = build_hat_ass(a, b, options.limits);
  auto graph = build_obstruction_graph(a, b);
  const auto& edges = graph.edges();
  const int n_edges = static_cast<int>(edges.size());

  auto mask = [&](std::initializer_list<Diagonal> ds) { return hat.mask_of(Face(std::vector<Diagonal>(ds))); };
  auto index = [&](const Diagonal& d) { return *hat.index_of(d); };

  // Highest edge index contained in each face of Âss, for stage checks.
  std::unordered_map<VertexSet, int, VertexSetHash> top_edge;
  std::vector<VertexSet> edge_masks;
  for (const auto& e : edges) edge_masks.push_back(mask({e.lesser, e.greater}));
  if (options.check_stages) {
    for (const auto& f : hat.faces()) {
      int top = 0;
      for (int r = 1; r <= n_edges; ++r)
        if (f.includes(edge_masks[static_cast<std::size_t>(r - 1)])) top = r;
      top_edge.emplace(f, top);
    }
  }

  ScheduleRun run{CollapseCertificate{a, b, {}}, hat, hat, graph};
  auto& current = run.terminal;
  auto record = [&](const std::vector<MaskPair>& pairs, const Stage& stage) {
    for (const auto& [facet, subface] : pairs)
      run.certificate.steps.push_back({hat.face_of(facet), hat.face_of(subface), stage});
  };
  auto batch = [&](int r, int q, const VertexSet& target, const Diagonal& cone) {
    if (!current.contains(target))
      throw ScheduleFailed(r, q, face_string(hat.face_of(target)), "face missing from the current complex");
    try {
      record(collapse_by_cone_in_place(current, target, index(cone)), Stage{r, q, cone});
    } catch (const ScheduleFailed&) {
      throw;
    } catch (const Error& err) {
      throw ScheduleFailed(r, q, face_string(hat.face_of(target)), err.what());
    }
  };

  for (int r = n_edges; r >= 1; --r) {
    const auto& e = edges[static_cast<std::size_t>(r - 1)];
    const auto s_list = crossing_indices(e, graph);
    const int p = static_cast<int>(s_list.size());
    for (int q = 1; q <= p; ++q) {
      const int s = s_list[static_cast<std::size_t>(q - 1)];
      Diagonal cone = half_wedge_completion(e, s, graph);
      Diagonal sk(s, e.apex(), b);
      batch(r, q, mask({e.lesser, sk, e.greater}), cone);
    }
    batch(r, p + 1, edge_masks[static_cast<std::size_t>(r - 1)], wedge_completion(e, a, b));

    if (options.check_stages) {
      std::size_t expected = 0;
      for (const auto& [f, top] : top_edge) expected += top < r ? 1 : 0;
      bool ok = expected == current.face_count();
      for (const auto& f : current.faces()) ok = ok && top_edge.at(f) < r;
      if (!ok) throw ScheduleFailed(r, p + 1, e.str(), "stage result differs from the deletion of edges >= r");
    }
  }

  auto ass = build_ass(a, b, options.limits);
  if (!(current == ass)) throw ScheduleFailed(0, 0, "{}", "terminal complex differs from Ass(a,b)");
  return run;
}

inline CollapseCertificate collapse_schedule(int a, int b, const ScheduleOptions& options = {}) {
  return run_collapse_schedule(a, b, options).certificate;
}

// ---------------------------------------------------------------------------
// Independent replay
// ---------------------------------------------------------------------------

enum class FreenessScan {
  Ground,      // test every one-vertex extension of the subface and facet
  Exhaustive,  // test every face of the current complex
};

struct VerificationReport {
  bool valid = false;
  std::size_t steps_checked = 0;
  std::optional<std::size_t> failed_step;  // 1-based; 0 for a bad start family; empty when only the end state is wrong
  std::string reason;
  std::size_t terminal_faces = 0;
};

/// Replays `cert` on a private copy of `start`, stored as plain sorted
/// diagonal lists, and compares the outcome with `target`.
inline VerificationReport verify_certificate(const SimplicialComplex& start, const SimplicialComplex& target,
                                             const CollapseCertificate& cert,
                                             FreenessScan scan = FreenessScan::Ground) {
  struct Hash {
    std::size_t operator()(const std::vector<Diagonal>& f) const noexcept {
      std::size_t h = f.size();
      for (const auto& d : f) h = h * 1000003u ^ DiagonalHash{}(d);
      return h;
    }
  };
  using Family = std::unordered_set<std::vector<Diagonal>, Hash>;

  VerificationReport report;
  Family live;
  for (const auto& m : start.faces()) live.insert(start.face_of(m).items());

  auto plus = [](std::vector<Diagonal> f, const Diagonal& d) {
    f.insert(std::upper_bound(f.begin(), f.end(), d), d);
    return f;
  };
  auto fail = [&](std::size_t step, std::string why) {
    report.valid = false;
    report.failed_step = step;
    report.reason = std::move(why);
    report.terminal_faces = live.size();
    return report;
  };

  for (const auto& f : live) {
    for (std::size_t k = 0; k < f.size(); ++k) {
      auto smaller = f;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(k));
      if (!live.count(smaller)) return fail(0, "start family is not closed under subsets");
    }
  }
  const auto& ground = start.ground();
  if (!ground.empty() && cert.b != ground.front().b())
    return fail(0, "certificate polygon does not match the start complex");

  for (std::size_t t = 0; t < cert.steps.size(); ++t) {
    const auto& facet = cert.steps[t].facet.items();
    const auto& sub = cert.steps[t].subface.items();
    const std::size_t step = t + 1;
    if (facet.size() != sub.size() + 1 || !std::includes(facet.begin(), facet.end(), sub.begin(), sub.end()))
      return fail(step, "subface is not a codimension-one face of the facet");
    if (!live.count(facet) || !live.count(sub)) return fail(step, "pair is not present in the current complex");

    if (scan == FreenessScan::Ground) {
      for (const auto& v : ground) {
        if (std::binary_search(facet.begin(), facet.end(), v)) continue;
        if (live.count(plus(sub, v))) return fail(step, "subface also lies in " + face_string(Face(plus(sub, v))));
        if (live.count(plus(facet, v))) return fail(step, "facet lies in " + face_string(Face(plus(facet, v))));
      }
    } else {
      for (const auto& f : live) {
        if (f.size() <= sub.size() || f == facet) continue;
        if (std::includes(f.begin(), f.end(), sub.begin(), sub.end()))
          return fail(step, "subface has another proper superface");
      }
    }
    live.erase(facet);
    live.erase(sub);
    ++report.steps_checked;
  }

  report.terminal_faces = live.size();
  Family goal;
  for (const auto& m : target.faces()) goal.insert(target.face_of(m).items());
  report.valid = live == goal;
  if (!report.valid) report.reason = "terminal complex differs from the target";
  return report;
}

// ---------------------------------------------------------------------------
// Morse matching
// ---------------------------------------------------------------------------

struct MatchedPair {
  Face lower;
  Face upper;
};

/// The certificate's pairs as a matching on the faces of `hat` missing from
/// `ass`; throws NotPerfect unless every such face is matched exactly once
/// with a face differing by one diagonal.
inline std::vector<MatchedPair> extract_morse_matching(const CollapseCertificate& cert, const SimplicialComplex& hat,
                                                       const SimplicialComplex& ass) {
  std::vector<MatchedPair> out;
  std::unordered_map<VertexSet, int, VertexSetHash> seen;
  for (const auto& step : cert.steps) {
    if (step.facet.size() != step.subface.size() + 1 || !step.facet.includes(step.subface))
      throw Error(ErrorKind::NotPerfect, "pair " + face_string(step.subface) + " / " + face_string(step.facet) +
                                             " does not differ by one diagonal");
    for (const auto* f : {&step.subface, &step.facet}) {
      auto m = hat.try_mask_of(*f);
      if (!m || !hat.contains(*m) || ass.contains(*m))
        throw Error(ErrorKind::NotPerfect, face_string(*f) + " is not a face of the difference");
      if (++seen[*m] > 1) throw Error(ErrorKind::NotPerfect, face_string(*f) + " matched twice");
    }
    out.push_back({step.subface, step.facet});
  }
  for (const auto& m : hat.faces()) {
    if (!ass.contains(m) && !seen.count(m))
      throw Error(ErrorKind::NotPerfect, face_string(hat.face_of(m)) + " is unmatched");
  }
  return out;
}

}  // namespace ratass
