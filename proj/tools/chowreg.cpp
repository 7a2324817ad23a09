// Copyright 2026 The chowreg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: checks, boundaries, normalization, admissibility,
// regulator values, torsion orders and wavefront exports.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "chowreg/cycle_file.hpp"
#include "chowreg/error.hpp"
#include "chowreg/fixtures.hpp"
#include "chowreg/regulator.hpp"

using nlohmann::ordered_json;
using namespace chowreg;

namespace {

constexpr int kFormatVersion = 1;
constexpr int kDigits = 30;

struct Settings {
  std::string command;
  std::string input;
  std::string fixture_name;
  std::string cycle;
  long precision = 256;
  double tolerance = 1e-8;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::optional<std::string> eps;
  bool equal_phase = false;
  std::string lambda = "0.5";
  long max_order = 200;
  std::string export_dir;
};

std::string num(const Real& x, int digits = kDigits) { return x.to_string(digits); }

ordered_json cjson(const Complex& z, int digits = kDigits) {
  return ordered_json{{"re", num(z.re, digits)}, {"im", num(z.im, digits)}};
}

ordered_json schedule_json(const PhaseSchedule& s) {
  ordered_json phases = ordered_json::array();
  for (const auto& p : s.phases) phases.push_back(num(p, 20));
  return ordered_json{{"bound", num(s.eps_bound, 20)},
                      {"phases", phases},
                      {"nested", s.strict && !s.equal_phase},
                      {"equal_phase", s.equal_phase}};
}

std::string point_cycle_text(const PointPrecycle& z) {
  if (z.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < z.components.size(); ++k) {
    const auto& c = z.components[k];
    long m = c.mult;
    if (k == 0) {
      if (m < 0) out += "-";
    } else {
      out += m < 0 ? " - " : " + ";
    }
    if (std::labs(m) != 1) out += std::to_string(std::labs(m));
    out += "{";
    for (size_t i = 0; i < c.coords.size(); ++i) out += (i ? ", " : "") + c.coords[i].to_string(12);
    out += "}";
  }
  return out;
}

ordered_json point_cycle_json(const PointPrecycle& z) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : z.components) {
    ordered_json coords = ordered_json::array();
    for (const auto& x : c.coords) coords.push_back(x.to_string(kDigits));
    comps.push_back({{"mult", c.mult}, {"coords", coords}});
  }
  return ordered_json{{"n", z.n}, {"text", point_cycle_text(z)}, {"components", comps}};
}

ordered_json curve_json(const Precycle& z) {
  ordered_json comps = ordered_json::array();
  for (const auto& c : z.components) {
    ordered_json coords = ordered_json::array();
    for (const auto& f : c.coords) coords.push_back(f.to_string());
    comps.push_back({{"mult", c.mult}, {"coords", coords}});
  }
  return ordered_json{{"n", z.n}, {"order", z.order}, {"components", comps}};
}

ordered_json admissibility_json(const AdmissibilityReport& rep) {
  ordered_json fails = ordered_json::array();
  for (const auto& f : rep.failures) {
    ordered_json j{{"component", f.component}, {"kind", f.kind}, {"detail", f.detail}};
    if (f.witness) j["witness"] = cjson(*f.witness, 20);
    fails.push_back(j);
  }
  return ordered_json{{"ok", rep.ok}, {"failures", fails}};
}

ordered_json regulator_json(const RegulatorValue& v) {
  long k = 0;
  Complex rep = canonical_representative(v.value.mid, v.p, &k);
  Complex q = rep / lattice_generator(v.p);
  ordered_json terms = ordered_json::array();
  for (const auto& t : v.breakdown) {
    ordered_json j{{"component", t.component},
                   {"kind", term_kind_name(t.kind)},
                   {"mult", t.mult},
                   {"path", t.path},
                   {"value", cjson(t.value)},
                   {"error", num(t.error, 3)}};
    if (t.t) {
      j["t"] = cjson(*t.t, 20);
      j["sign"] = t.sign;
    }
    terms.push_back(j);
  }
  ordered_json out{{"p", v.p},
                   {"value", cjson(v.value.mid)},
                   {"error", num(Real(v.value.rad), 3)},
                   {"quadrature_error", num(v.quadrature_error, 3)},
                   {"lattice_power", v.lattice_power},
                   {"canonical_representative", cjson(rep)},
                   {"q", cjson(q)},
                   {"schedule_used", schedule_json(v.schedule_used)},
                   {"breakdown", terms}};
  if (v.agreement) {
    ordered_json sched = ordered_json::array();
    ordered_json vals = ordered_json::array();
    for (size_t i = 0; i < v.agreement->values.size(); ++i) {
      sched.push_back(schedule_json(v.agreement->schedules[i]));
      vals.push_back(cjson(v.agreement->values[i]));
    }
    out["agreement"] = {{"ok", v.agreement->ok},
                        {"schedules", sched},
                        {"values", vals},
                        {"lattice_multiples", v.agreement->lattice_multiples},
                        {"max_deviation", num(v.agreement->max_deviation, 3)}};
  }
  return out;
}

ordered_json error_json(const Error& e) {
  return ordered_json{{"class", error_class_name(e.error_class())},
                      {"exit_code", e.exit_code()},
                      {"message", e.what()}};
}

// Decimal flags are read exactly at the working precision.
Real decimal(const std::string& text, const std::string& flag) {
  try {
    size_t used = 0;
    (void)std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    fail(ErrorClass::kDomain, flag + " expects a number, got '" + text + "'");
  }
  return Real::from_string(text);
}

RegulatorOptions regulator_options(const Settings& st) {
  RegulatorOptions ro;
  ro.search.seed = st.seed;
  if (st.eps) ro.search.eps_start = decimal(*st.eps, "--eps");
  return ro;
}

PhaseSchedule requested_schedule(const Settings& st, int n) {
  Real eps = decimal(*st.eps, "--eps");
  if (st.equal_phase) return equal_phase_schedule(eps, n);
  Real lambda = decimal(st.lambda, "--schedule-lambda");
  try {
    return make_schedule(eps, n, lambda);
  } catch (const Error& e) {
    // Same fallback as the schedule search; reported as nested = false.
    if (e.error_class() != ErrorClass::kSchedule) throw;
    return relaxed_schedule(eps, n, lambda);
  }
}

ordered_json run_check(const CycleDefinition& c, long bits) {
  ordered_json r{{"n", c.n}, {"p", c.p}};
  if (c.point_level()) {
    r["level"] = "point";
    r["components"] = c.points.components.size();
    r["proper"] = true;
    r["closed"] = true;
    r["normalized"] = true;
    return r;
  }
  const Precycle& z = c.curve;
  r["level"] = "curve";
  r["components"] = z.components.size();
  ProperReport pr = check_face_proper(z, bits);
  ordered_json viol = ordered_json::array();
  for (const auto& v : pr.violations) {
    ordered_json vals = ordered_json::array();
    for (const auto& x : v.values) vals.push_back(x.to_string(20));
    viol.push_back({{"component", v.component}, {"t", v.parameter.to_string(20)}, {"values", vals}});
  }
  r["proper"] = pr.ok;
  r["proper_violations"] = viol;
  ordered_json degenerate = ordered_json::array();
  for (size_t k = 0; k < z.components.size(); ++k) {
    if (is_degenerate(z.components[k])) degenerate.push_back(k);
  }
  r["degenerate_components"] = degenerate;
  if (pr.ok) {
    r["closed"] = is_closed(z, bits);
    FaceProfile prof = face_vanishing_profile(z, bits);
    r["normalized"] = prof.normalized();
    ordered_json faces = ordered_json::array();
    for (const auto& e : prof.entries) {
      faces.push_back({{"i", e.i}, {"at", e.at_infinity ? "inf" : "0"}, {"vanishes", e.vanishes}});
    }
    r["faces"] = faces;
  }
  return r;
}

ordered_json run_boundary(const CycleDefinition& c, long bits) {
  if (c.point_level()) {
    // Facets of points in the 1-cube are empty.
    if (c.n > 1) fail(ErrorClass::kDomain, "boundary of point cycles is only defined for n = 1");
    return ordered_json{{"boundary", point_cycle_json(PointPrecycle{0, c.points.order, {}})}};
  }
  return ordered_json{{"boundary", point_cycle_json(boundary(c.curve, bits))}};
}

ordered_json run_normalize(const CycleDefinition& c, long bits) {
  if (c.point_level()) fail(ErrorClass::kDomain, "normalize applies to curve cycles");
  Precycle z = normalize(c.curve, bits);
  CycleFile out;
  out.order = z.order;
  CycleDefinition d;
  d.name = c.name;
  d.n = c.n;
  d.p = c.p;
  d.curve = z;
  out.cycles.push_back(d);
  return ordered_json{{"normalized", curve_json(z)},
                      {"text", serialize_cycle_file(out)},
                      {"faces_normalized", face_vanishing_profile(z, bits).normalized()}};
}

ordered_json run_admissible(const CycleDefinition& c, const Settings& st) {
  if (st.equal_phase && !st.eps) fail(ErrorClass::kDomain, "--equal-phase needs --eps");
  if (c.point_level()) {
    PhaseSchedule s = st.eps ? requested_schedule(st, c.n) : equal_phase_schedule(Real(0.25), c.n);
    return ordered_json{{"schedule", schedule_json(s)},
                        {"admissible", admissibility_json(admissible(c.points, s))}};
  }
  if (st.eps) {
    PhaseSchedule s = requested_schedule(st, c.n);
    return ordered_json{{"schedule", schedule_json(s)},
                        {"admissible", admissibility_json(admissible(c.curve, s))}};
  }
  SearchOptions so;
  so.seed = st.seed;
  AdmissibilityReport last;
  PhaseSchedule s = search_schedule(c.curve, so, &last);
  return ordered_json{{"schedule", schedule_json(s)}, {"admissible", admissibility_json(last)}};
}

RegulatorValue compute_regulator(const CycleDefinition& c, const Settings& st) {
  RegulatorOptions ro = regulator_options(st);
  if (c.point_level()) return regulator(c.points, ro);
  return regulator(c.curve, ro);
}

ordered_json run_regulator(const CycleDefinition& c, const Settings& st, bool with_torsion) {
  long bits = st.precision;
  ordered_json r;
  if (!c.point_level()) {
    r["checks"] = {{"closed", is_closed(c.curve, bits)},
                   {"normalized", face_vanishing_profile(c.curve, bits).normalized()}};
  }
  RegulatorValue v = compute_regulator(c, st);
  r["regulator"] = regulator_json(v);
  if (with_torsion) {
    TorsionResult t = torsion_order(v, st.max_order, Real(st.tolerance));
    ordered_json tj{{"max_order", st.max_order},
                    {"tolerance", st.tolerance},
                    {"q", cjson(t.q)},
                    {"residual", num(t.residual, 3)}};
    if (t.order) {
      tj["order"] = *t.order;
      tj["certificate"] = t.certificate.get_str();
    } else {
      tj["order"] = nullptr;
    }
    r["torsion"] = tj;
  }
  return r;
}

ordered_json run_trace(const CycleDefinition& c, const Settings& st) {
  if (c.point_level()) fail(ErrorClass::kDomain, "trace applies to curve cycles");
  if (st.export_dir.empty()) fail(ErrorClass::kDomain, "trace needs --export <dir>");
  PhaseSchedule s;
  if (st.eps) {
    s = requested_schedule(st, c.n);
  } else {
    SearchOptions so;
    so.seed = st.seed;
    s = search_schedule(c.curve, so);
  }
  std::filesystem::create_directories(st.export_dir);
  std::filesystem::path dir(st.export_dir);
  std::string paths_file = (dir / (c.name + "_paths.csv")).string();
  std::string xs_file = (dir / (c.name + "_intersections.csv")).string();
  std::ofstream pf(paths_file), xf(xs_file);
  if (!pf || !xf) fail(ErrorClass::kDomain, "cannot write to " + st.export_dir);
  size_t n_paths = 0, n_xs = 0;
  bool header = true;
  bool xheader = true;
  for (size_t ci = 0; ci < c.curve.components.size(); ++ci) {
    const auto& comp = c.curve.components[ci];
    for (int i = 1; i <= c.n; ++i) {
      if (comp.coords[i - 1].is_constant()) continue;
      auto paths = trace_wavefront(comp.coords[i - 1], i, s.phases[i - 1]);
      write_paths_csv(pf, ci, paths, header);
      header = false;
      n_paths += paths.size();
      if (i == 1 && c.n >= 2) {
        auto xs = find_pair_intersections(comp, paths, 2, s.phases[1]);
        write_intersections_csv(xf, ci, xs, xheader);
        xheader = false;
        n_xs += xs.size();
      }
    }
  }
  if (xheader) write_intersections_csv(xf, 0, {}, true);
  return ordered_json{{"schedule", schedule_json(s)},
                      {"paths", n_paths},
                      {"intersections", n_xs},
                      {"files", {paths_file, xs_file}}};
}

void print_text(std::ostream& os, const ordered_json& j, int indent = 0) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    os << std::string(indent, ' ') << it.key() << ":";
    if (it->is_object()) {
      os << "\n";
      print_text(os, *it, indent + 2);
    } else if (it->is_string()) {
      std::string s = it->get<std::string>();
      if (s.find('\n') != std::string::npos) {
        os << "\n";
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line)) os << std::string(indent + 2, ' ') << line << "\n";
      } else {
        os << " " << s << "\n";
      }
    } else {
      os << " " << it->dump() << "\n";
    }
  }
}

int emit(const Settings& st, const ordered_json& report, int code) {
  if (st.format == "text") {
    print_text(std::cout, report);
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return code;
}

CycleFile load_input(const Settings& st) {
  if (st.fixture_name == "all") {
    CycleFile f;
    for (const auto& name : fixture_names()) f.cycles.push_back(fixture(name));
    return f;
  }
  if (!st.fixture_name.empty()) {
    CycleFile f;
    CycleDefinition d = fixture(st.fixture_name);
    f.order = d.point_level() ? d.points.order : d.curve.order;
    f.cycles.push_back(d);
    return f;
  }
  if (st.input.empty()) fail(ErrorClass::kDomain, "no input: give a cycle file or --fixture");
  std::ifstream in(st.input);
  if (!in) fail(ErrorClass::kDomain, "cannot read " + st.input);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_cycle_file(buf.str());
}

int run(const Settings& st) {
  WorkingPrecision wp(st.precision);
  if (st.command == "fixtures") {
    ordered_json r;
    for (const auto& name : fixture_names()) {
      CycleDefinition d = fixture(name);
      r[name] = {{"format_version", kFormatVersion}, {"n", d.n}, {"p", d.p}, {"text", fixture_text(name)}};
    }
    return emit(st, r, 0);
  }
  CycleFile file;
  try {
    file = load_input(st);
  } catch (const Error& e) {
    return emit(st, ordered_json{{"format_version", kFormatVersion}, {"error", error_json(e)}},
                e.exit_code());
  }
  ordered_json report;
  int code = 0;
  bool matched = false;
  for (const auto& c : file.cycles) {
    if (!st.cycle.empty() && c.name != st.cycle) continue;
    matched = true;
    ordered_json rec{{"format_version", kFormatVersion}, {"command", st.command},
                     {"precision", st.precision}, {"n", c.n}, {"p", c.p}};
    try {
      ordered_json body;
      if (st.command == "check") {
        body = run_check(c, st.precision);
      } else if (st.command == "boundary") {
        body = run_boundary(c, st.precision);
      } else if (st.command == "normalize") {
        body = run_normalize(c, st.precision);
      } else if (st.command == "admissible") {
        body = run_admissible(c, st);
      } else if (st.command == "regulator") {
        body = run_regulator(c, st, false);
      } else if (st.command == "torsion") {
        body = run_regulator(c, st, true);
      } else if (st.command == "trace") {
        body = run_trace(c, st);
      }
      rec.update(body);
    } catch (const Error& e) {
      rec["error"] = error_json(e);
      if (code == 0) code = e.exit_code();
    }
    report[c.name] = rec;
  }
  if (!matched) {
    Error e(ErrorClass::kDomain, "no cycle named '" + st.cycle + "'");
    return emit(st, ordered_json{{"format_version", kFormatVersion}, {"error", error_json(e)}},
                e.exit_code());
  }
  return emit(st, report, code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regulator values of higher Chow cycles over cyclotomic fields"};
  app.require_subcommand(1);
  Settings st;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) {
      sub->add_option("file", st.input, "Cycle definition file");
      std::vector<std::string> names = fixture_names();
      names.push_back("all");
      sub->add_option("--fixture", st.fixture_name, "Built-in cycle, or 'all'")
          ->check(CLI::IsMember(names));
      sub->add_option("--cycle", st.cycle, "Only the cycle with this name");
    }
    sub->add_option("--precision", st.precision, "Working precision in bits")
        ->check(CLI::Range(64L, 4096L));
    sub->add_option("--tolerance", st.tolerance, "Recognition tolerance");
    sub->add_option("--format", st.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", st.seed, "Schedule search seed");
  };

  add_common(app.add_subcommand("check", "Properness, closedness, normalization, degeneracy"), true);
  add_common(app.add_subcommand("boundary", "Bloch boundary"), true);
  add_common(app.add_subcommand("normalize", "Normalized representative"), true);
  auto* adm = app.add_subcommand("admissible", "Admissibility of a phase schedule");
  add_common(adm, true);
  adm->add_option("--eps", st.eps, "Schedule bound (or common phase with --equal-phase)");
  auto* eq = adm->add_flag("--equal-phase", st.equal_phase, "All phases equal to --eps");
  adm->add_option("--schedule-lambda", st.lambda, "Nested schedule factor")->excludes(eq);
  auto* reg = app.add_subcommand("regulator", "Regulator value");
  add_common(reg, true);
  reg->add_option("--eps", st.eps, "Starting schedule bound");
  auto* tor = app.add_subcommand("torsion", "Regulator value and torsion order");
  add_common(tor, true);
  tor->add_option("--eps", st.eps, "Starting schedule bound");
  tor->add_option("--max-order", st.max_order, "Largest order tried")->check(CLI::PositiveNumber);
  auto* tr = app.add_subcommand("trace", "Export wavefront paths and intersections as CSV");
  add_common(tr, true);
  tr->add_option("--export", st.export_dir, "Output directory")->required();
  tr->add_option("--eps", st.eps, "Schedule bound");
  tr->add_option("--schedule-lambda", st.lambda, "Nested schedule factor");
  add_common(app.add_subcommand("fixtures", "List built-in cycles"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  st.command = app.get_subcommands().front()->get_name();
  try {
    return run(st);
  } catch (const Error& e) {
    std::cerr << error_class_name(e.error_class()) << " error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
