#pragma once

#include <cstdint>
#include <vector>

#include "ratass/arith.hpp"
#include "ratass/complex.hpp"
#include "ratass/lattice.hpp"
#include "ratass/polygon.hpp"

namespace ratass {

using SimplicialComplex = BasicComplex<Diagonal>;

/// 1/(a+b) C(a+b, a)
inline std::uint64_t rational_catalan(int a, int b) {
  require_coprime_pair(a, b);
  return exact_divide(binomial(a + b, a), static_cast<std::uint64_t>(a + b), "rational Catalan number");
}

/// 1/a C(a,i) C(b+i-1, i-1): faces with i-1 diagonals in Ass(a,b).
inline std::uint64_t rational_kirkman(int a, int b, int i) {
  require_coprime_pair(a, b);
  if (i < 1 || i > a) throw Error(ErrorKind::BadOrder, "Kirkman index out of [1,a]");
  auto num = Wide(binomial(a, i)) * binomial(b + i - 1, i - 1);
  return exact_divide(num, static_cast<std::uint64_t>(a), "rational Kirkman number");
}

/// 1/a C(a,i) C(b-1, i-1)
inline std::uint64_t rational_narayana(int a, int b, int i) {
  require_coprime_pair(a, b);
  if (i < 1 || i > a) throw Error(ErrorKind::BadOrder, "Narayana index out of [1,a]");
  auto num = Wide(binomial(a, i)) * binomial(b - 1, i - 1);
  return exact_divide(num, static_cast<std::uint64_t>(a), "rational Narayana number");
}

inline void check_size_guard(int a, int b, const Limits& limits) {
  require_coprime_pair(a, b);
  if (b > limits.max_b)
    throw Error(ErrorKind::CapExceeded, "b=" + std::to_string(b) + " exceeds size guard b <= " + std::to_string(limits.max_b));
}

/// All mutually noncrossing sets of admissible diagonals.
inline SimplicialComplex build_hat_ass(int a, int b, const Limits& limits = {}) {
  check_size_guard(a, b, limits);
  SimplicialComplex c(all_admissible_diagonals(a, b));
  const auto& ground = c.ground();
  const std::size_t n = ground.size();
  std::vector<VertexSet> compatible(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (!crosses(ground[u], ground[v])) compatible[u].insert(v);

  // Extend each face only by larger compatible vertices.
  std::vector<std::pair<VertexSet, VertexSet>> stack;  // (face, remaining candidates)
  VertexSet all;
  for (std::size_t v = 0; v < n; ++v) all.insert(v);
  stack.emplace_back(VertexSet{}, all);
  while (!stack.empty()) {
    auto [face, candidates] = stack.back();
    stack.pop_back();
    candidates.for_each([&](int v) {
      auto next = face.with(static_cast<std::size_t>(v));
      c.insert_mask(next);
      if (c.face_count() > limits.max_faces)
        throw Error(ErrorKind::CapExceeded, "face count exceeds cap " + std::to_string(limits.max_faces));
      stack.emplace_back(next, candidates & compatible[static_cast<std::size_t>(v)]);
    });
  }
  return c;
}

/// Faces of Ass(a,b): downward closure of the laser facets of all Dyck paths.
inline SimplicialComplex build_ass(int a, int b, const Limits& limits = {}) {
  check_size_guard(a, b, limits);
  std::vector<Face> facets;
  for (const auto& d : enumerate_dyck_paths(a, b, limits)) facets.push_back(facet_of(d));
  return SimplicialComplex::from_facets(all_admissible_diagonals(a, b), facets, limits.max_faces);
}

}  // namespace ratass
