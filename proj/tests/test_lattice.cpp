#include <catch_amalgamated.hpp>

#include <boost/rational.hpp>

#include <optional>
#include <set>

#include "ratass/lattice.hpp"

using namespace ratass;
using Q = boost::rational<long long>;

namespace {

// Exact ray trace: intersect the ray of slope a/b from `src` with every unit
// segment of the path and keep the nearest proper intersection.
std::optional<int> ray_trace_oracle(const DyckPath& d, LatticePoint src) {
  auto pts = d.points();
  auto steps = d.steps();
  std::optional<Q> best_x;
  std::optional<int> best_k;
  bool best_is_interior_east = false;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    const auto p = pts[t];
    if (steps[t] == Step::East) {
      // Ray reaches height p.y at x = src.x + (p.y - src.y) b / a.
      Q x = Q(src.x) + Q(static_cast<long long>(p.y - src.y) * d.b(), d.a());
      if (x <= Q(src.x) || x < Q(p.x) || x > Q(p.x + 1)) continue;
      if (!best_x || x < *best_x) {
        best_x = x;
        best_k = p.x + 1;
        best_is_interior_east = x != Q(p.x) && x != Q(p.x + 1);
      }
    } else {
      Q y = Q(src.y) + Q(static_cast<long long>(p.x - src.x) * d.a(), d.b());
      Q x(p.x);
      if (x <= Q(src.x) || y < Q(p.y) || y > Q(p.y + 1)) continue;
      if (!best_x || x < *best_x) {
        best_x = x;
        best_k.reset();
        best_is_interior_east = false;
      }
    }
  }
  if (!best_is_interior_east) return std::nullopt;
  return best_k;
}

// Every word with a North and b East steps, filtered by the prefix condition.
std::vector<std::string> dyck_words_oracle(int a, int b) {
  std::vector<std::string> out;
  const int n = a + b;
  for (unsigned m = 0; m < (1U << n); ++m) {
    if (std::popcount(m) != a) continue;
    std::string w;
    long long north = 0, east = 0;
    bool ok = true;
    for (int t = n - 1; t >= 0; --t) {
      bool is_north = (m >> t) & 1U;
      w.push_back(is_north ? 'N' : 'E');
      (is_north ? north : east) += 1;
      if (north * b < east * a) ok = false;
    }
    if (ok) out.push_back(w);
  }
  std::sort(out.begin(), out.end(), [](const std::string& x, const std::string& y) {
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k] != y[k]) return x[k] == 'N';
    return false;
  });
  return out;
}

const DyckPath& example58() {
  static const DyckPath d = parse_dyck_path("NNENNEEENEEEE", 5, 8);
  return d;
}

std::vector<std::pair<int, int>> coprime_pairs(int max_sum) {
  std::vector<std::pair<int, int>> out;
  for (int b = 2; b < max_sum; ++b)
    for (int a = 1; a < b && a + b <= max_sum; ++a)
      if (is_coprime_pair(a, b)) out.emplace_back(a, b);
  return out;
}

}  // namespace

TEST_CASE("Dyck path validation", "[lattice]") {
  CHECK_NOTHROW(parse_dyck_path("NEE", 1, 2));
  CHECK_THROWS_AS(parse_dyck_path("ENE", 1, 2), Error);
  CHECK_THROWS_AS(parse_dyck_path("NNE", 1, 2), Error);
  CHECK_THROWS_AS(parse_dyck_path("NXE", 1, 2), Error);
  CHECK_THROWS_AS(parse_dyck_path("NNEE", 2, 2), Error);
  CHECK(example58().word() == "NNENNEEENEEEE");
}

TEST_CASE("enumeration matches brute force over all words", "[lattice]") {
  CHECK(enumerate_dyck_paths(1, 2).size() == 1);
  CHECK(enumerate_dyck_paths(1, 2).front().word() == "NEE");
  CHECK(enumerate_dyck_paths(2, 3).size() == 2);
  for (auto [a, b] : coprime_pairs(16)) {
    std::vector<std::string> got;
    for (const auto& d : enumerate_dyck_paths(a, b)) got.push_back(d.word());
    INFO("(a,b) = (" << a << "," << b << ")");
    CHECK(got == dyck_words_oracle(a, b));
  }
  auto all = enumerate_dyck_paths(5, 8);
  CHECK(std::any_of(all.begin(), all.end(), [](const DyckPath& d) { return d == example58(); }));
}

TEST_CASE("enumeration cap", "[lattice]") {
  Limits tight;
  tight.max_paths = 100;
  try {
    enumerate_dyck_paths(5, 8, tight);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::CapExceeded);
  }
}

TEST_CASE("partitions", "[lattice]") {
  CHECK(partition_of(parse_dyck_path("NNNEEEEE", 3, 5)).parts == std::vector<int>{0, 0, 0});
  CHECK(partition_of(example58()).parts == std::vector<int>{4, 1, 1, 0, 0});
  CHECK(partition_of(parse_dyck_path("NENEE", 2, 3)).parts == std::vector<int>{1, 0});
  for (const auto& d : enumerate_dyck_paths(5, 9)) {
    auto p = partition_of(d).parts;
    CHECK(std::is_sorted(p.rbegin(), p.rend()));
    // Row r from the top has its North step at x = p[r]; its bottom lies at height a-1-r.
    for (std::size_t r = 0; r < p.size(); ++r)
      CHECK(weakly_above_diagonal({p[r], 5 - 1 - static_cast<int>(r)}, 5, 9));
  }
}

TEST_CASE("valleys", "[lattice]") {
  CHECK(valleys(parse_dyck_path("NNNEEEEE", 3, 5)).empty());
  CHECK(valleys(example58()) == std::vector<LatticePoint>{{1, 2}, {4, 4}});
  CHECK(valleys(parse_dyck_path("NENEE", 2, 3)) == std::vector<LatticePoint>{{1, 1}});
}

TEST_CASE("lasers on the (5,8) example", "[lattice]") {
  const auto& d = example58();
  CHECK(fire_laser(d, {1, 3}).hit_step_right_x == 3);
  CHECK(fire_laser(d, {4, 4}).hit_step_right_x == 6);
  CHECK(laser_diagonal(d, {1, 2}) == Diagonal(1, 6, 8));
  CHECK(laser_diagonal(d, {0, 1}) == Diagonal(0, 7, 8));
  CHECK(facet_of(d) == Face{Diagonal(0, 7, 8), Diagonal(1, 6, 8), Diagonal(1, 3, 8), Diagonal(4, 6, 8)});
}

TEST_CASE("invalid laser sources", "[lattice]") {
  const auto& d = example58();
  auto kind = [&](LatticePoint p) {
    try {
      fire_laser(d, p);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Parse;
  };
  CHECK(kind({0, 0}) == ErrorKind::InvalidSource);
  CHECK(kind({1, 1}) == ErrorKind::InvalidSource);  // not on the path
  CHECK(kind({2, 4}) == ErrorKind::InvalidSource);  // bottom of an East step
}

TEST_CASE("lasers from the top-left path", "[lattice]") {
  for (auto [a, b] : coprime_pairs(16)) {
    std::string w(static_cast<std::size_t>(a), 'N');
    w.append(static_cast<std::size_t>(b), 'E');
    auto d = parse_dyck_path(w, a, b);
    for (int k = 1; k < a; ++k) {
      const int want = ((a - k) * b + a - 1) / a;
      CHECK(fire_laser(d, {0, k}).hit_step_right_x == want);
    }
  }
}

TEST_CASE("lasers agree with an exact ray trace on every path", "[lattice]") {
  for (auto [a, b] : coprime_pairs(15)) {
    for (const auto& d : enumerate_dyck_paths(a, b)) {
      std::set<Diagonal> seen;
      for (auto p : d.laser_sources()) {
        auto want = ray_trace_oracle(d, p);
        REQUIRE(want.has_value());
        auto hit = fire_laser(d, p);
        CHECK(hit.hit_step_right_x == *want);
        auto diag = laser_diagonal(d, p);
        CHECK(is_admissible(diag, a, b));
        seen.insert(diag);
      }
      CHECK(seen.size() == static_cast<std::size_t>(a - 1));
    }
  }
}

TEST_CASE("facets are noncrossing and determine their path", "[lattice]") {
  for (auto [a, b] : coprime_pairs(15)) {
    std::set<std::vector<Diagonal>> facets;
    for (const auto& d : enumerate_dyck_paths(a, b)) {
      auto f = facet_of(d);
      CHECK(f.size() == static_cast<std::size_t>(a - 1));
      for (std::size_t u = 0; u < f.size(); ++u)
        for (std::size_t v = u + 1; v < f.size(); ++v) CHECK_FALSE(crosses(f[u], f[v]));
      facets.insert(f.items());
    }
    CHECK(facets.size() == enumerate_dyck_paths(a, b).size());
  }
}

TEST_CASE("run-length form", "[lattice]") {
  auto runs = run_lengths(example58().steps());
  std::vector<std::pair<Step, int>> want{{Step::North, 2}, {Step::East, 1}, {Step::North, 2},
                                         {Step::East, 3},  {Step::North, 1}, {Step::East, 4}};
  CHECK(runs == want);
}
