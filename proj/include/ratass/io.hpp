#pragma once

#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ratass/associahedra.hpp"
#include "ratass/collapse.hpp"
#include "ratass/error.hpp"
#include "ratass/homology.hpp"
#include "ratass/lattice.hpp"
#include "ratass/membership.hpp"
#include "ratass/obstruction.hpp"
#include "ratass/polygon.hpp"

namespace ratass::io {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

inline Json header(int a, int b) {
  Json j;
  j["schema"] = schema_version;
  j["a"] = a;
  j["b"] = b;
  return j;
}

// ---------------------------------------------------------------------------
// Diagonals and faces
// ---------------------------------------------------------------------------

inline Json to_json(const Diagonal& d) { return Json::array({d.i(), d.j()}); }

inline Json to_json(const Face& f) {
  Json out = Json::array();
  for (const auto& d : f) out.push_back(to_json(d));
  return out;
}

namespace detail {
[[noreturn]] inline void parse_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

inline int int_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    parse_error(std::string("missing integer field '") + key + "'");
  return j.at(key).get<int>();
}
}  // namespace detail

inline Diagonal diagonal_from_json(const Json& j, int b) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    detail::parse_error("diagonal must be [i, j], got " + j.dump());
  const int i = j[0].get<int>(), k = j[1].get<int>();
  auto d = Diagonal::try_make(i, k, b);
  if (!d) throw Error(ErrorKind::InvalidDiagonal, j.dump() + " is not a diagonal of the " + std::to_string(b + 1) + "-gon");
  return *d;
}

inline Face face_from_json(const Json& j, int b) {
  if (!j.is_array()) detail::parse_error("face must be an array of diagonals, got " + j.dump());
  std::vector<Diagonal> ds;
  for (const auto& d : j) ds.push_back(diagonal_from_json(d, b));
  return Face(std::move(ds));
}

/// Comma-separated "i-j" list; an empty string is the empty face.
inline Face parse_face(std::string_view text, int b) {
  std::vector<Diagonal> ds;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) ds.push_back(parse_diagonal(token, b));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Face(std::move(ds));
}

// ---------------------------------------------------------------------------
// Complexes
// ---------------------------------------------------------------------------

inline Json fh_json(const FHVector& fh) {
  Json j;
  j["f"] = fh.f;
  j["h"] = fh.h;
  return j;
}

/// {schema, a, b, ground, facets[, faces]} with facets and faces in canonical order.
inline Json complex_json(int a, int b, const SimplicialComplex& c, bool all_faces = false) {
  Json j = header(a, b);
  Json ground = Json::array();
  for (const auto& d : c.ground()) ground.push_back(to_json(d));
  j["ground"] = std::move(ground);
  Json facets = Json::array();
  for (const auto& f : c.facets()) facets.push_back(to_json(f));
  j["facets"] = std::move(facets);
  if (all_faces) {
    Json faces = Json::array();
    for (const auto& m : c.sorted_masks()) faces.push_back(to_json(c.face_of(m)));
    j["faces"] = std::move(faces);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Dyck paths
// ---------------------------------------------------------------------------

/// [["N",2],["E",1],...]
inline Json runs_json(const DyckPath& d) {
  Json out = Json::array();
  for (const auto& [step, n] : run_lengths(d.steps()))
    out.push_back(Json::array({std::string(1, static_cast<char>(step)), n}));
  return out;
}

inline Json path_json(const DyckPath& d) {
  Json j = header(d.a(), d.b());
  j["word"] = d.word();
  j["runs"] = runs_json(d);
  return j;
}

inline DyckPath path_from_runs(const Json& runs, int a, int b) {
  if (!runs.is_array()) detail::parse_error("runs must be an array");
  std::string word;
  for (const auto& r : runs) {
    if (!r.is_array() || r.size() != 2 || !r[0].is_string() || !r[1].is_number_integer() || r[1].get<int>() < 0)
      detail::parse_error("run must be [\"N\"|\"E\", count], got " + r.dump());
    word.append(static_cast<std::size_t>(r[1].get<int>()), r[0].get<std::string>() == "N" ? 'N' : r[0].get<std::string>() == "E" ? 'E' : '?');
  }
  return parse_dyck_path(word, a, b);
}

// ---------------------------------------------------------------------------
// Membership
// ---------------------------------------------------------------------------

inline Json membership_json(int a, int b, const Face& face, const MembershipResult& r) {
  Json j = header(a, b);
  j["face"] = to_json(face);
  j["member"] = r.member();
  if (r.valley_path) {
    j["valley_path"] = r.valley_path->word();
    j["facet"] = to_json(facet_of(*r.valley_path));
  }
  if (r.break_x) j["break_x"] = *r.break_x;
  return j;
}

// ---------------------------------------------------------------------------
// Obstruction graph
// ---------------------------------------------------------------------------

/// {schema, a, b, edges: [[[i,k],[j,k]]...]} in increasing edge order.
inline Json obstruction_json(const ObstructionGraph& g) {
  Json j = header(g.a(), g.b());
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({to_json(e.lesser), to_json(e.greater)}));
  j["edges"] = std::move(edges);
  return j;
}

/// Undirected graph with one cluster per apex; edges listed in edge order.
inline std::string obstruction_dot(const ObstructionGraph& g) {
  std::map<int, std::vector<ObstructionEdge>> by_apex;
  for (const auto& e : g.edges()) by_apex[e.apex()].push_back(e);
  std::string out = "graph OG_" + std::to_string(g.a()) + "_" + std::to_string(g.b()) + " {\n";
  out += "  node [shape=plaintext];\n";
  for (const auto& [apex, edges] : by_apex) {
    out += "  subgraph cluster_apex_" + std::to_string(apex) + " {\n";
    out += "    label=\"apex " + std::to_string(apex) + "\";\n";
    for (const auto& e : edges) out += "    \"" + e.lesser.str() + "\" -- \"" + e.greater.str() + "\";\n";
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

// ---------------------------------------------------------------------------
// Collapse certificates
// ---------------------------------------------------------------------------

inline Json certificate_json(const CollapseCertificate& cert) {
  Json j = header(cert.a, cert.b);
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json step;
    step["facet"] = to_json(s.facet);
    step["subface"] = to_json(s.subface);
    Json stage;
    stage["r"] = s.stage.r;
    stage["q"] = s.stage.q;
    stage["cone"] = to_json(s.stage.cone);
    step["stage"] = std::move(stage);
    steps.push_back(std::move(step));
  }
  j["steps"] = std::move(steps);
  return j;
}

inline CollapseCertificate certificate_from_json(const Json& j) {
  if (j.contains("schema") && j.at("schema") != schema_version)
    detail::parse_error("unsupported certificate schema " + j.at("schema").dump());
  CollapseCertificate cert;
  cert.a = detail::int_field(j, "a");
  cert.b = detail::int_field(j, "b");
  require_coprime_pair(cert.a, cert.b);
  if (!j.contains("steps") || !j.at("steps").is_array()) detail::parse_error("missing array field 'steps'");
  for (const auto& s : j.at("steps")) {
    if (!s.is_object() || !s.contains("facet") || !s.contains("subface") || !s.contains("stage"))
      detail::parse_error("step needs facet, subface and stage: " + s.dump());
    const auto& st = s.at("stage");
    if (!st.is_object() || !st.contains("cone")) detail::parse_error("stage needs r, q and cone: " + st.dump());
    Stage stage{detail::int_field(st, "r"), detail::int_field(st, "q"), diagonal_from_json(st.at("cone"), cert.b)};
    cert.steps.push_back(
        CollapseStep{face_from_json(s.at("facet"), cert.b), face_from_json(s.at("subface"), cert.b), stage});
  }
  return cert;
}

inline Json verification_json(int a, int b, const VerificationReport& r) {
  Json j = header(a, b);
  j["valid"] = r.valid;
  j["steps_checked"] = r.steps_checked;
  if (r.failed_step) j["failed_step"] = *r.failed_step;
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["terminal_faces"] = r.terminal_faces;
  return j;
}

// ---------------------------------------------------------------------------
// Homology
// ---------------------------------------------------------------------------

inline Json betti_json(int a, int b, const BettiVector& betti, std::uint64_t expected_spheres, bool wedge_ok) {
  Json j = header(a, b);
  j["field"] = to_string(betti.field);
  j["min_dimension"] = -1;
  j["reduced_betti"] = betti.values;
  j["expected"] = {{"dimension", a - 2}, {"spheres", expected_spheres}};
  j["wedge_of_spheres"] = wedge_ok;
  return j;
}

inline Json duality_json(const PartitionReport& partition, const std::vector<DualityReport>& ranks) {
  Json j;
  j["schema"] = schema_version;
  j["b"] = partition.b;
  j["diagonals"] = partition.total_diagonals;
  Json rows = Json::array();
  for (std::size_t k = 0; k < partition.lines.size(); ++k) {
    const auto& p = partition.lines[k];
    Json row;
    row["a"] = p.a;
    row["dual_a"] = partition.b - p.a;
    row["admissible"] = p.admissible;
    row["dual_admissible"] = p.complementary;
    row["partition"] = p.disjoint && p.covers;
    if (k < ranks.size()) {
      const auto& r = ranks[k];
      row["rank"] = r.rank;
      row["dual_rank"] = r.dual_rank;
      row["expected_rank"] = r.expected_rank;
      row["rank_duality"] = r.ok;
    }
    rows.push_back(std::move(row));
  }
  j["pairs"] = std::move(rows);
  j["ok"] = partition.ok && std::all_of(ranks.begin(), ranks.end(), [](const auto& r) { return r.ok; });
  j["note"] = DualityReport{}.note;
  return j;
}

// ---------------------------------------------------------------------------
// SVG
// ---------------------------------------------------------------------------

namespace detail {
inline std::string fixed3(double x) {
  if (std::fabs(x) < 5e-4) x = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}
}  // namespace detail

/// The (b+1)-gon on a circle with boundary point 0 at the top and labels
/// increasing clockwise; the face's diagonals are drawn as chords.
inline std::string render_svg(int b, const Face& face, const std::string& title = {}) {
  constexpr double size = 400.0, centre = 200.0, radius = 160.0, label_radius = 182.0;
  const int n = b + 1;
  auto at = [&](int k, double r) {
    const double t = 2.0 * std::numbers::pi * k / n;
    return std::pair{centre + r * std::sin(t), centre - r * std::cos(t)};
  };
  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::fixed3(size) + "\" height=\"" + detail::fixed3(size) +
       "\" viewBox=\"0 0 400 400\">\n";
  if (!title.empty()) s += "  <title>" + title + "</title>\n";
  s += "  <polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" points=\"";
  for (int k = 0; k < n; ++k) {
    auto [x, y] = at(k, radius);
    s += (k ? " " : "") + detail::fixed3(x) + "," + detail::fixed3(y);
  }
  s += "\"/>\n";
  for (const auto& d : face) {
    auto [x1, y1] = at(d.i(), radius);
    auto [x2, y2] = at(d.j(), radius);
    s += "  <line x1=\"" + detail::fixed3(x1) + "\" y1=\"" + detail::fixed3(y1) + "\" x2=\"" + detail::fixed3(x2) +
         "\" y2=\"" + detail::fixed3(y2) + "\" stroke=\"steelblue\" stroke-width=\"2\"/>\n";
  }
  for (int k = 0; k < n; ++k) {
    auto [x, y] = at(k, radius);
    auto [lx, ly] = at(k, label_radius);
    s += "  <circle cx=\"" + detail::fixed3(x) + "\" cy=\"" + detail::fixed3(y) + "\" r=\"3\"/>\n";
    s += "  <text x=\"" + detail::fixed3(lx) + "\" y=\"" + detail::fixed3(ly) +
         "\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">" + std::to_string(k) + "</text>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace ratass::io
