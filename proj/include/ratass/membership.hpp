#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "ratass/error.hpp"
#include "ratass/lattice.hpp"
#include "ratass/polygon.hpp"

namespace ratass {

/// Outcome of building a valley path: either the path, or the x-coordinate
/// at which the construction fell below y = (a/b)x.
struct MembershipResult {
  std::optional<DyckPath> valley_path;
  std::optional<int> break_x;

  bool member() const noexcept { return valley_path.has_value(); }
};

/// Throws NotAFaceOfHat unless every diagonal is admissible for (a,b) and no
/// two cross.
inline void require_hat_face(const Face& face, int a, int b) {
  const RemainderSet s(a, b);
  for (const auto& d : face) {
    if (d.b() != b || !is_admissible(s, d))
      throw Error(ErrorKind::NotAFaceOfHat, d.str() + " is not (" + std::to_string(a) + "," + std::to_string(b) + ")-admissible");
  }
  for (std::size_t u = 0; u < face.size(); ++u)
    for (std::size_t v = u + 1; v < face.size(); ++v)
      if (crosses(face[u], face[v]))
        throw Error(ErrorKind::NotAFaceOfHat, face[u].str() + " crosses " + face[v].str());
}

/// Builds the valley path of `face` backwards from (b,a): west until a column
/// holding smaller endpoints of the face, south until each of that column's
/// diagonals has appeared as a laser (or the walk leaves the region above the
/// line), then one more step west.
inline MembershipResult valley_path(const Face& face, int a, int b) {
  require_coprime_pair(a, b);
  require_hat_face(face, a, b);

  std::map<int, std::set<int>> by_left;
  for (const auto& d : face) by_left[d.i()].insert(d.j());

  std::vector<Step> forward;  // path from the current corner to (b,a)
  LatticePoint corner{b, a};
  auto south = [&] {
    --corner.y;
    forward.insert(forward.begin(), Step::North);
  };
  auto west = [&] {
    --corner.x;
    forward.insert(forward.begin(), Step::East);
  };

  for (int i = b; i >= 0; --i) {
    bool fell_below = false;
    auto column = by_left.find(i);
    if (column == by_left.end()) {
      if (i > 0) west();
      else while (corner.y > 0) south();
    } else {
      std::set<int> wanted = column->second;
      while (!wanted.empty()) {
        south();
        if (!weakly_above_diagonal(corner, a, b)) {
          fell_below = true;
          break;
        }
        if (corner == LatticePoint{0, 0}) continue;
        wanted.erase(detail::trace_laser(corner, a, b, forward).hit_step_right_x);
      }
      if (i > 0) west();
      else while (corner.y > 0) south();
    }
    if (fell_below || !weakly_above_diagonal(corner, a, b)) return MembershipResult{std::nullopt, i};
  }
  return MembershipResult{DyckPath(a, b, std::move(forward)), std::nullopt};
}

inline bool is_face_of_ass(const Face& face, int a, int b) { return valley_path(face, a, b).member(); }

}  // namespace ratass
