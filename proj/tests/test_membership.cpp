#include <catch_amalgamated.hpp>

#include "ratass/associahedra.hpp"
#include "ratass/membership.hpp"

using namespace ratass;

namespace {

std::vector<std::pair<int, int>> coprime_pairs(int max_sum) {
  std::vector<std::pair<int, int>> out;
  for (int b = 2; b < max_sum; ++b)
    for (int a = 1; a < b && a + b <= max_sum; ++a)
      if (is_coprime_pair(a, b)) out.emplace_back(a, b);
  return out;
}

Face face58(std::initializer_list<std::pair<int, int>> ds) {
  std::vector<Diagonal> v;
  for (auto [i, j] : ds) v.emplace_back(i, j, 8);
  return Face(std::move(v));
}

// Paths whose facet contains the face.
std::vector<DyckPath> containing_paths(const Face& f, const std::vector<DyckPath>& paths) {
  std::vector<DyckPath> out;
  for (const auto& d : paths)
    if (facet_of(d).includes(f)) out.push_back(d);
  return out;
}

bool valleys_fire_into(const DyckPath& d, const Face& f) {
  for (auto v : valleys(d))
    if (!f.contains(laser_diagonal(d, v))) return false;
  return true;
}

}  // namespace

TEST_CASE("worked rejections for (5,8)", "[membership]") {
  auto r1 = valley_path(face58({{5, 7}, {2, 4}, {0, 5}, {0, 4}}), 5, 8);
  CHECK_FALSE(r1.member());
  REQUIRE(r1.break_x.has_value());
  CHECK(*r1.break_x == 0);
  CHECK_FALSE(is_face_of_ass(face58({{5, 7}, {4, 8}, {2, 4}, {0, 4}}), 5, 8));
}

TEST_CASE("empty face has the top-left path", "[membership]") {
  for (auto [a, b] : coprime_pairs(12)) {
    auto r = valley_path(Face{}, a, b);
    REQUIRE(r.member());
    std::string w(static_cast<std::size_t>(a), 'N');
    w.append(static_cast<std::size_t>(b), 'E');
    CHECK(r.valley_path->word() == w);
  }
}

TEST_CASE("small examples", "[membership]") {
  CHECK_FALSE(is_face_of_ass(Face{Diagonal(0, 4, 5), Diagonal(2, 4, 5)}, 3, 5));
  CHECK_FALSE(is_face_of_ass(Face{Diagonal(1, 5, 5), Diagonal(3, 5, 5)}, 3, 5));
  CHECK(is_face_of_ass(Face{Diagonal(0, 2, 5), Diagonal(0, 4, 5)}, 3, 5));
  for (auto [a, b] : coprime_pairs(14))
    for (const auto& d : all_admissible_diagonals(a, b)) CHECK(is_face_of_ass(Face{d}, a, b));
}

TEST_CASE("faces outside Âss are refused", "[membership]") {
  auto kind = [](const Face& f, int a, int b) {
    try {
      valley_path(f, a, b);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind(Face{Diagonal(0, 3, 5)}, 3, 5) == ErrorKind::NotAFaceOfHat);
  CHECK(kind(Face{Diagonal(0, 4, 5), Diagonal(1, 5, 5)}, 3, 5) == ErrorKind::NotAFaceOfHat);
  CHECK(kind(Face{Diagonal(0, 2, 6)}, 3, 5) == ErrorKind::NotAFaceOfHat);
}

TEST_CASE("valley paths agree with the exhaustive path oracle", "[membership]") {
  for (auto [a, b] : coprime_pairs(12)) {
    INFO("(a,b) = (" << a << "," << b << ")");
    const auto paths = enumerate_dyck_paths(a, b);
    const auto hat = build_hat_ass(a, b);
    for (const auto& m : hat.faces()) {
      const Face f = hat.face_of(m);
      const auto r = valley_path(f, a, b);
      const auto holders = containing_paths(f, paths);
      CHECK(r.member() == !holders.empty());
      CHECK(r.member() != r.break_x.has_value());
      if (!r.member()) continue;
      const DyckPath& vp = *r.valley_path;
      CHECK(facet_of(vp).includes(f));
      CHECK(valleys_fire_into(vp, f));
      // Exactly one containing path has all of its valley lasers in F.
      std::size_t count = 0;
      for (const auto& d : holders) count += valleys_fire_into(d, f) ? 1 : 0;
      CHECK(count == 1);
      // Vertical runs sit at the smaller endpoints of F, plus x = 0.
      std::set<int> runs{0}, want{0};
      for (auto p : vp.laser_sources()) runs.insert(p.x);
      for (const auto& d : f) want.insert(d.i());
      CHECK(runs == want);
    }
  }
}

TEST_CASE("valley paths are minimal in Young's lattice", "[membership]") {
  for (auto [a, b] : coprime_pairs(11)) {
    const auto paths = enumerate_dyck_paths(a, b);
    const auto ass = build_ass(a, b);
    for (const auto& m : ass.faces()) {
      const Face f = ass.face_of(m);
      const auto lambda = partition_of(*valley_path(f, a, b).valley_path);
      for (const auto& d : containing_paths(f, paths)) CHECK(lambda.contained_in(partition_of(d)));
    }
  }
}

TEST_CASE("every laser facet is accepted with its own path", "[membership]") {
  for (auto [a, b] : coprime_pairs(14))
    for (const auto& d : enumerate_dyck_paths(a, b)) {
      auto r = valley_path(facet_of(d), a, b);
      REQUIRE(r.member());
      CHECK(*r.valley_path == d);
    }
}
