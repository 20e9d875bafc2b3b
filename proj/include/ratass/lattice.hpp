#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ratass/arith.hpp"
#include "ratass/complex.hpp"
#include "ratass/error.hpp"
#include "ratass/polygon.hpp"

namespace ratass {

using Face = BasicFace<Diagonal>;

enum class Step : char { North = 'N', East = 'E' };

struct LatticePoint {
  int x = 0;
  int y = 0;
  bool operator==(const LatticePoint&) const = default;
};

/// Where a laser lands: the East step from (k-1, y) to (k, y) with
/// k = hit_step_right_x and y = hit_step_y.
struct LaserHit {
  LatticePoint source;
  int hit_step_right_x = 0;
  int hit_step_y = 0;
  bool operator==(const LaserHit&) const = default;
};

/// Signed offset of `p` from the line of slope a/b through `origin`, scaled
/// by b: positive strictly above, zero on, negative below.
inline std::int64_t offset_from_line(LatticePoint origin, LatticePoint p, int a, int b) {
  return static_cast<std::int64_t>(p.y - origin.y) * b - static_cast<std::int64_t>(p.x - origin.x) * a;
}

/// p lies weakly above y = (a/b) x.
inline bool weakly_above_diagonal(LatticePoint p, int a, int b) { return offset_from_line({0, 0}, p, a, b) >= 0; }

namespace detail {

/// Fires the laser from `source` against the path continuing with `steps`
/// (which begin at `source`). North steps raise the offset from the laser
/// line by b, East steps lower it by a, so the first East step that takes the
/// offset from positive to negative holds the landing point. Coprimality
/// keeps the offset nonzero at every lattice point other than the source.
inline LaserHit trace_laser(LatticePoint source, int a, int b, std::span<const Step> steps) {
  LatticePoint p = source;
  std::int64_t offset = 0;
  for (Step s : steps) {
    if (s == Step::North) {
      ++p.y;
      offset += b;
    } else {
      ++p.x;
      std::int64_t next = offset - a;
      if (offset > 0 && next < 0) return LaserHit{source, p.x, p.y};
      if (next == 0 && p.x != source.x)
        throw Error(ErrorKind::InvalidSource, "laser meets the path at a lattice point; (a,b) not coprime?");
      offset = next;
    }
  }
  throw Error(ErrorKind::InvalidSource,
              "laser from (" + std::to_string(source.x) + "," + std::to_string(source.y) + ") never lands");
}

}  // namespace detail

/// An (a,b)-Dyck path stored as its step word.
class DyckPath {
 public:
  DyckPath(int a, int b, std::vector<Step> steps) : a_(a), b_(b), steps_(std::move(steps)) {
    require_coprime_pair(a, b);
    if (steps_.size() != static_cast<std::size_t>(a + b))
      throw Error(ErrorKind::InvalidPath, "path length " + std::to_string(steps_.size()) + " != a+b");
    LatticePoint p;
    for (Step s : steps_) {
      (s == Step::North ? p.y : p.x) += 1;
      if (!weakly_above_diagonal(p, a, b))
        throw Error(ErrorKind::InvalidPath, word() + " dips below y = (a/b)x");
    }
    if (p.x != b || p.y != a) throw Error(ErrorKind::InvalidPath, word() + " does not end at (b,a)");
  }

  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  std::span<const Step> steps() const noexcept { return steps_; }

  std::string word() const {
    std::string w;
    for (Step s : steps_) w.push_back(static_cast<char>(s));
    return w;
  }

  /// Lattice points visited, starting at (0,0).
  std::vector<LatticePoint> points() const {
    std::vector<LatticePoint> pts{{0, 0}};
    for (Step s : steps_) {
      auto p = pts.back();
      (s == Step::North ? p.y : p.x) += 1;
      pts.push_back(p);
    }
    return pts;
  }

  /// Bottoms of North steps other than the origin, in path order.
  std::vector<LatticePoint> laser_sources() const {
    std::vector<LatticePoint> out;
    auto pts = points();
    for (std::size_t t = 0; t < steps_.size(); ++t)
      if (steps_[t] == Step::North && !(pts[t] == LatticePoint{0, 0})) out.push_back(pts[t]);
    return out;
  }

  bool operator==(const DyckPath&) const = default;

 private:
  int a_;
  int b_;
  std::vector<Step> steps_;
};

inline std::vector<Step> parse_steps(std::string_view word) {
  std::vector<Step> steps;
  for (char c : word) {
    if (c == 'N' || c == 'n') steps.push_back(Step::North);
    else if (c == 'E' || c == 'e') steps.push_back(Step::East);
    else throw Error(ErrorKind::Parse, std::string("unexpected step '") + c + "'");
  }
  return steps;
}

inline DyckPath parse_dyck_path(std::string_view word, int a, int b) { return DyckPath(a, b, parse_steps(word)); }

/// Run-length form, e.g. N^2 E N^2 E^3 N E^4 -> {(N,2),(E,1),(N,2),(E,3),(N,1),(E,4)}.
inline std::vector<std::pair<Step, int>> run_lengths(std::span<const Step> steps) {
  std::vector<std::pair<Step, int>> runs;
  for (Step s : steps) {
    if (!runs.empty() && runs.back().first == s) ++runs.back().second;
    else runs.emplace_back(s, 1);
  }
  return runs;
}

/// Every (a,b)-Dyck path, lexicographic in the step word with N < E.
inline std::vector<DyckPath> enumerate_dyck_paths(int a, int b, const Limits& limits = {}) {
  require_coprime_pair(a, b);
  if (binomial(a + b, a) > limits.max_paths)
    throw Error(ErrorKind::CapExceeded, "C(a+b,a) = " + std::to_string(binomial(a + b, a)) + " exceeds path cap");
  std::vector<DyckPath> out;
  std::vector<Step> word;
  word.reserve(static_cast<std::size_t>(a + b));
  auto extend = [&](auto&& self, int x, int y) -> void {
    if (x == b && y == a) {
      out.emplace_back(a, b, word);
      return;
    }
    if (y < a) {
      word.push_back(Step::North);
      self(self, x, y + 1);
      word.pop_back();
    }
    if (x < b && weakly_above_diagonal({x + 1, y}, a, b)) {
      word.push_back(Step::East);
      self(self, x + 1, y);
      word.pop_back();
    }
  };
  extend(extend, 0, 0);
  return out;
}

/// Row lengths of the Ferrers diagram northwest of a path, top row first.
struct Partition {
  std::vector<int> parts;

  /// Young's lattice containment.
  bool contained_in(const Partition& o) const {
    if (parts.size() != o.parts.size()) return false;
    for (std::size_t k = 0; k < parts.size(); ++k)
      if (parts[k] > o.parts[k]) return false;
    return true;
  }
  bool operator==(const Partition&) const = default;
};

inline Partition partition_of(const DyckPath& d) {
  // The North step climbing row y sits at x = (cells left of the path in that row).
  Partition lambda;
  int x = 0;
  for (Step s : d.steps()) {
    if (s == Step::North) lambda.parts.push_back(x);
    else ++x;
  }
  std::reverse(lambda.parts.begin(), lambda.parts.end());
  return lambda;
}

/// EN corners, west to east.
inline std::vector<LatticePoint> valleys(const DyckPath& d) {
  std::vector<LatticePoint> out;
  auto pts = d.points();
  auto steps = d.steps();
  for (std::size_t t = 1; t < steps.size(); ++t)
    if (steps[t - 1] == Step::East && steps[t] == Step::North) out.push_back(pts[t]);
  return out;
}

inline LaserHit fire_laser(const DyckPath& d, LatticePoint source) {
  if (source == LatticePoint{0, 0}) throw Error(ErrorKind::InvalidSource, "the origin fires no laser");
  auto pts = d.points();
  auto steps = d.steps();
  for (std::size_t t = 0; t < steps.size(); ++t) {
    if (pts[t] == source) {
      if (steps[t] != Step::North) break;
      return detail::trace_laser(source, d.a(), d.b(), steps.subspan(t));
    }
  }
  throw Error(ErrorKind::InvalidSource,
              "(" + std::to_string(source.x) + "," + std::to_string(source.y) + ") is not the bottom of a North step");
}

inline Diagonal laser_diagonal(const DyckPath& d, LatticePoint source) {
  auto hit = fire_laser(d, source);
  Diagonal diag(source.x, hit.hit_step_right_x, d.b());
  if (!is_admissible(diag, d.a(), d.b()))
    throw Error(ErrorKind::AdmissibilityViolated, "laser diagonal " + diag.str() + " is not admissible");
  return diag;
}

/// The a-1 laser diagonals of a path.
inline Face facet_of(const DyckPath& d) {
  std::vector<Diagonal> diags;
  for (auto p : d.laser_sources()) diags.push_back(laser_diagonal(d, p));
  return Face(std::move(diags));
}

}  // namespace ratass
