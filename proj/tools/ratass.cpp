#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ratass/ratass.hpp"

namespace {

using namespace ratass;
using io::Json;

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;
constexpr int exit_cap = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int a = 0;
  int b = 0;
  std::string format = "json";
  std::string model = "ass";
  std::string face;
  std::string path;
  std::string emit = "-";
  std::string cert;
  std::string out = "-";
  std::string field = "gf2";
  std::string scan = "ground";
  bool all_faces = false;
  Limits limits;
};

std::uint64_t env_cap(const char* name, std::uint64_t fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  char* end = nullptr;
  auto x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) throw UsageError(std::string(name) + " must be a positive integer");
  return x;
}

void write_output(const std::string& target, const std::string& text) {
  if (target == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw UsageError("cannot write " + target);
  f << text;
}

std::string read_input(const std::string& source) {
  std::stringstream ss;
  if (source == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(source, std::ios::binary);
    if (!f) throw UsageError("cannot read " + source);
    ss << f.rdbuf();
  }
  return ss.str();
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw UsageError("format '" + o.format + "' is not available for this command");
}

Field parse_field(const std::string& f) {
  if (f == "gf2") return Field::GF2;
  if (f == "q") return Field::Rational;
  throw UsageError("field must be gf2 or q");
}

SimplicialComplex build_model(const Options& o) {
  if (o.model == "ass") return build_ass(o.a, o.b, o.limits);
  if (o.model == "hat") return build_hat_ass(o.a, o.b, o.limits);
  throw UsageError("model must be ass or hat");
}

std::string line(const Json& j) { return j.dump() + "\n"; }

int cmd_build(const Options& o) {
  require_format(o, {"json"});
  write_output(o.out, line(io::complex_json(o.a, o.b, build_model(o), o.all_faces)));
  return exit_ok;
}

int cmd_fvector(const Options& o) {
  require_format(o, {"json", "text"});
  auto ass = build_ass(o.a, o.b, o.limits);
  auto fh = fh_vector(ass);
  std::vector<std::int64_t> kirkman, narayana;
  for (int i = 1; i <= o.a; ++i) {
    kirkman.push_back(static_cast<std::int64_t>(rational_kirkman(o.a, o.b, i)));
    narayana.push_back(static_cast<std::int64_t>(rational_narayana(o.a, o.b, i)));
  }
  const auto facets = ass.facets().size();
  const auto catalan = rational_catalan(o.a, o.b);
  const bool ok = fh.f == kirkman && fh.h == narayana && facets == catalan;
  if (o.format == "text") {
    auto seq = [](const std::vector<std::int64_t>& v) {
      std::string s = "(";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
      return s + ")";
    };
    write_output(o.out, "f=" + seq(fh.f) + " h=" + seq(fh.h) + " facets=" + std::to_string(facets) +
                            (ok ? " (matches formulas)\n" : " (DOES NOT match formulas)\n"));
  } else {
    Json j = io::header(o.a, o.b);
    j["f"] = fh.f;
    j["h"] = fh.h;
    j["kirkman"] = kirkman;
    j["narayana"] = narayana;
    j["facets"] = facets;
    j["catalan"] = catalan;
    j["matches_formulas"] = ok;
    write_output(o.out, line(j));
  }
  return ok ? exit_ok : exit_verification;
}

int cmd_membership(const Options& o) {
  require_format(o, {"json", "text"});
  Face f = io::parse_face(o.face, o.b);
  auto r = valley_path(f, o.a, o.b);
  if (o.format == "text") {
    std::string s = face_string(f) + (r.member() ? " is a face of Ass; valley path " + r.valley_path->word()
                                                 : " is not a face of Ass; loop broke at x = " + std::to_string(*r.break_x));
    write_output(o.out, s + "\n");
  } else {
    write_output(o.out, line(io::membership_json(o.a, o.b, f, r)));
  }
  return exit_ok;
}

int cmd_obstruction(const Options& o) {
  require_format(o, {"json", "dot", "text"});
  auto g = build_obstruction_graph(o.a, o.b);
  if (o.format == "dot") {
    write_output(o.out, io::obstruction_dot(g));
  } else if (o.format == "text") {
    std::string s;
    for (std::size_t r = 0; r < g.edges().size(); ++r)
      s += "e" + std::to_string(r + 1) + " = " + g.edges()[r].str() + "\n";
    write_output(o.out, s);
  } else {
    write_output(o.out, line(io::obstruction_json(g)));
  }
  return exit_ok;
}

int cmd_collapse(const Options& o) {
  require_format(o, {"json"});
  ScheduleOptions so;
  so.limits = o.limits;
  auto run = run_collapse_schedule(o.a, o.b, so);
  write_output(o.emit, line(io::certificate_json(run.certificate)));
  std::cerr << "collapse (" << o.a << "," << o.b << "): " << run.certificate.steps.size() << " free pairs, "
            << run.hat.face_count() << " -> " << run.terminal.face_count() << " faces\n";
  return exit_ok;
}

int cmd_verify(const Options& o) {
  require_format(o, {"json"});
  Json j;
  try {
    j = Json::parse(read_input(o.cert));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("certificate is not JSON: ") + e.what());
  }
  auto cert = io::certificate_from_json(j);
  const FreenessScan scan = o.scan == "exhaustive" ? FreenessScan::Exhaustive
                            : o.scan == "ground"   ? FreenessScan::Ground
                                                   : throw UsageError("scan must be ground or exhaustive");
  Limits limits = o.limits;
  auto start = build_hat_ass(cert.a, cert.b, limits);
  auto target = build_ass(cert.a, cert.b, limits);
  auto rep = verify_certificate(start, target, cert, scan);
  write_output(o.out, line(io::verification_json(cert.a, cert.b, rep)));
  return rep.valid ? exit_ok : exit_verification;
}

int cmd_homology(const Options& o) {
  require_format(o, {"json"});
  const Field field = parse_field(o.field);
  auto betti = betti_numbers(build_model(o), field);
  const auto spheres = sphere_count(o.a, o.b);
  const bool ok = is_concentrated(betti, o.a - 2, spheres);
  write_output(o.out, line(io::betti_json(o.a, o.b, betti, spheres, ok)));
  return ok ? exit_ok : exit_verification;
}

int cmd_duality(const Options& o) {
  require_format(o, {"json"});
  const Field field = parse_field(o.field);
  auto partition = alexander_partition_check(o.b);
  std::vector<DualityReport> ranks;
  for (const auto& l : partition.lines) ranks.push_back(alexander_duality_check(l.a, o.b, o.limits, field));
  Json j = io::duality_json(partition, ranks);
  write_output(o.out, line(j));
  return j["ok"].get<bool>() ? exit_ok : exit_verification;
}

int cmd_render(const Options& o) {
  require_format(o, {"svg"});
  if (!o.face.empty() && !o.path.empty()) throw UsageError("give either --face or --path");
  Face f;
  std::string title;
  if (!o.path.empty()) {
    auto d = parse_dyck_path(o.path, o.a, o.b);
    f = facet_of(d);
    title = "F(" + d.word() + ")";
  } else {
    f = io::parse_face(o.face, o.b);
    require_hat_face(f, o.a, o.b);
    title = face_string(f);
  }
  write_output(o.out, io::render_svg(o.b, f, title));
  return exit_ok;
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::CapExceeded:
      return exit_cap;
    case ErrorKind::NotCoprime:
    case ErrorKind::BadOrder:
    case ErrorKind::Parse:
    case ErrorKind::InvalidDiagonal:
    case ErrorKind::InvalidPath:
    case ErrorKind::InvalidSource:
    case ErrorKind::NotAFaceOfHat:
      return exit_usage;
    default:
      return exit_verification;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational associahedra Ass(a,b) and Âss(a,b): construction, collapse certificates, homology"};
  app.require_subcommand(1, 1);
  Options o;
  std::uint64_t max_faces = 0, max_paths = 0;
  int max_b = 0;
  app.add_option("--max-faces", max_faces, "Face cap (env RATASS_MAX_FACES)")->check(CLI::PositiveNumber);
  app.add_option("--max-paths", max_paths, "Dyck path enumeration cap (env RATASS_MAX_PATHS)")->check(CLI::PositiveNumber);
  app.add_option("--max-b", max_b, "Largest b accepted (env RATASS_MAX_B)")->check(CLI::PositiveNumber);

  auto pair = [&](CLI::App* c) {
    c->add_option("--a", o.a, "Height a")->required();
    c->add_option("--b", o.b, "Width b, coprime to a")->required();
  };
  auto output = [&](CLI::App* c, std::vector<std::string> formats) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(formats));
    c->add_option("-o,--out", o.out, "Output file, - for stdout");
  };

  auto* build = app.add_subcommand("build", "Export Ass(a,b) or Âss(a,b) as JSON");
  pair(build);
  output(build, {"json"});
  build->add_option("--model", o.model, "ass or hat")->check(CLI::IsMember({"ass", "hat"}));
  build->add_flag("--faces", o.all_faces, "Include every face, not just facets");

  auto* fvec = app.add_subcommand("fvector", "f- and h-vectors of Ass(a,b) against the Kirkman and Narayana formulas");
  pair(fvec);
  output(fvec, {"json", "text"});

  auto* memb = app.add_subcommand("membership", "Decide whether a face of Âss(a,b) lies in Ass(a,b)");
  pair(memb);
  output(memb, {"json", "text"});
  memb->add_option("--face", o.face, "Comma-separated diagonals, e.g. \"5-7,2-4,0-5,0-4\"")->required();

  auto* og = app.add_subcommand("obstruction", "The obstruction graph OG(a,b) in edge order");
  pair(og);
  output(og, {"json", "dot", "text"});

  auto* col = app.add_subcommand("collapse", "Collapse Âss(a,b) onto Ass(a,b) and emit the certificate");
  pair(col);
  col->add_option("--emit", o.emit, "Certificate file, - for stdout");

  auto* ver = app.add_subcommand("verify", "Replay a collapse certificate on Âss(a,b) and compare with Ass(a,b)");
  ver->add_option("--cert", o.cert, "Certificate file, - for stdin")->required();
  ver->add_option("--scan", o.scan, "Freeness test: ground or exhaustive")->check(CLI::IsMember({"ground", "exhaustive"}));
  output(ver, {"json"});

  auto* hom = app.add_subcommand("homology", "Reduced Betti numbers");
  pair(hom);
  output(hom, {"json"});
  hom->add_option("--field", o.field, "gf2 or q")->check(CLI::IsMember({"gf2", "q"}));
  hom->add_option("--model", o.model, "ass or hat")->check(CLI::IsMember({"ass", "hat"}));

  auto* dual = app.add_subcommand("duality", "Admissible-diagonal partition and rank duality for every a coprime to b");
  dual->add_option("--b", o.b, "Width b")->required();
  dual->add_option("--field", o.field, "gf2 or q")->check(CLI::IsMember({"gf2", "q"}));
  output(dual, {"json"});

  auto* render = app.add_subcommand("render", "SVG of a face drawn in the (b+1)-gon");
  pair(render);
  render->add_option("--face", o.face, "Comma-separated diagonals");
  render->add_option("--path", o.path, "Dyck path word; draws its laser facet");
  render->add_option("-o,--out", o.out, "Output file, - for stdout");
  o.format = "json";

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    o.limits.max_faces = max_faces ? max_faces : env_cap("RATASS_MAX_FACES", o.limits.max_faces);
    o.limits.max_paths = max_paths ? max_paths : env_cap("RATASS_MAX_PATHS", o.limits.max_paths);
    o.limits.max_b = max_b ? max_b : static_cast<int>(env_cap("RATASS_MAX_B", static_cast<std::uint64_t>(o.limits.max_b)));
    if (render->parsed() && o.format == "json") o.format = "svg";
    if (!ver->parsed() && !dual->parsed()) require_coprime_pair(o.a, o.b);

    if (build->parsed()) return cmd_build(o);
    if (fvec->parsed()) return cmd_fvector(o);
    if (memb->parsed()) return cmd_membership(o);
    if (og->parsed()) return cmd_obstruction(o);
    if (col->parsed()) return cmd_collapse(o);
    if (ver->parsed()) return cmd_verify(o);
    if (hom->parsed()) return cmd_homology(o);
    if (dual->parsed()) return cmd_duality(o);
    if (render->parsed()) return cmd_render(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const ScheduleFailed& e) {
    std::cerr << "error: collapse schedule failed at r=" << e.r() << " q=" << e.q() << " on " << e.face() << ": "
              << e.what() << "\n";
    return exit_verification;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return exit_usage;
}
