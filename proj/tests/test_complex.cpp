#include <catch_amalgamated.hpp>

#include "ratass/complex.hpp"

using namespace ratass;
using IntComplex = BasicComplex<int>;
using IntFace = BasicFace<int>;

namespace {

IntComplex simplex(int n) {
  std::vector<int> ground(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) ground[static_cast<std::size_t>(k)] = k;
  return IntComplex::from_facets(ground, {IntFace(ground)});
}

IntComplex triangle_boundary() { return IntComplex::from_facets({0, 1, 2}, {IntFace{0, 1}, IntFace{1, 2}, IntFace{0, 2}}); }

}  // namespace

TEST_CASE("vertex sets", "[complex]") {
  VertexSet s;
  s.insert(3);
  s.insert(100);
  CHECK(s.size() == 2);
  CHECK(s.contains(100));
  CHECK(s.max() == 100);
  CHECK(s.indices() == std::vector<int>{3, 100});
  CHECK(s.with(7).includes(s));
  CHECK_FALSE(s.includes(s.with(7)));
  CHECK(s.without(3).indices() == std::vector<int>{100});
  CHECK(lex_less(VertexSet::singleton(1).with(5), VertexSet::singleton(2)));
  CHECK(canonical_less(VertexSet::singleton(2), VertexSet::singleton(1).with(5)));
}

TEST_CASE("faces are sorted and deduplicated", "[complex]") {
  IntFace f{3, 1, 2, 1};
  CHECK(f.items() == std::vector<int>{1, 2, 3});
  CHECK(f.dim() == 2);
  CHECK(f.includes(IntFace{1, 3}));
  CHECK(f.without(2) == IntFace{1, 3});
  CHECK(IntFace{5} < IntFace{1, 2});
}

TEST_CASE("downward closure and f-vectors", "[complex]") {
  auto s = simplex(3);
  CHECK(s.face_count() == 8);
  CHECK(s.is_downward_closed());
  CHECK(s.dimension() == 2);
  CHECK(f_vector(s).f == std::vector<std::int64_t>{1, 3, 3, 1});
  CHECK(h_vector(s) == std::vector<std::int64_t>{1, 0, 0, 0});

  IntComplex point = IntComplex::from_facets({7}, {IntFace{7}});
  CHECK(f_vector(point).f == std::vector<std::int64_t>{1, 1});

  IntComplex empty({1, 2});
  CHECK(empty.face_count() == 1);
  CHECK(empty.dimension() == -1);
  CHECK(empty.facets() == std::vector<IntFace>{IntFace{}});

  auto t = triangle_boundary();
  CHECK(fh_vector(t).f == std::vector<std::int64_t>{1, 3, 3});
  CHECK(fh_vector(t).h == std::vector<std::int64_t>{1, 1, 1});
  CHECK(t.is_pure());
  CHECK(t.facets() == std::vector<IntFace>{IntFace{0, 1}, IntFace{0, 2}, IntFace{1, 2}});
}

TEST_CASE("face cap", "[complex]") {
  std::vector<int> ground{0, 1, 2, 3, 4, 5};
  try {
    IntComplex::from_facets(ground, {IntFace(ground)}, 10);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("h from f matches the defining sum", "[complex]") {
  // Two disjoint edges: f = (1,4,2), n = 2: h0 = 1, h1 = 4 - 2 = 2, h2 = 2 - 4 + 1 = -1.
  CHECK(h_from_f({1, 4, 2}) == std::vector<std::int64_t>{1, 2, -1});
}

TEST_CASE("flagness", "[complex]") {
  auto t = triangle_boundary();
  auto rep = is_flag(t);
  CHECK_FALSE(rep.flag);
  REQUIRE(rep.empty_face.has_value());
  CHECK(*rep.empty_face == IntFace{0, 1, 2});
  CHECK(is_flag(simplex(4)).flag);
  // Boundary of a tetrahedron: the smallest empty face is the whole vertex set.
  auto tet = IntComplex::from_facets({0, 1, 2, 3}, {IntFace{0, 1, 2}, IntFace{0, 1, 3}, IntFace{0, 2, 3}, IntFace{1, 2, 3}});
  auto r2 = is_flag(tet);
  CHECK_FALSE(r2.flag);
  CHECK(*r2.empty_face == IntFace{0, 1, 2, 3});
  // A square with one diagonal triangle missing: empty face {0,1,2} is reported before {0,2,3}.
  auto sq = IntComplex::from_facets({0, 1, 2, 3}, {IntFace{0, 1}, IntFace{1, 2}, IntFace{0, 2}, IntFace{0, 2, 3}});
  auto r3 = is_flag(sq);
  CHECK_FALSE(r3.flag);
  CHECK(*r3.empty_face == IntFace{0, 1, 2});
}

TEST_CASE("deletion", "[complex]") {
  auto s = simplex(3);
  auto d = deletion(s, {IntFace{1}});
  CHECK(d == IntComplex::from_facets({0, 1, 2}, {IntFace{0, 2}}));
  CHECK(deletion(s, {}) == s);
  auto e = deletion(s, {IntFace{0, 1}});
  CHECK(e == IntComplex::from_facets({0, 1, 2}, {IntFace{0, 2}, IntFace{1, 2}}));
  CHECK(e.is_downward_closed());
}
