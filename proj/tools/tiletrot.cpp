// tiletrot: resource tables, QPE sweep data, bounds, gate counts and oracle checks.
//
// Exit codes: 0 success, 1 a check failed, 2 configuration error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tiletrot/error.hpp"
#include "tiletrot/io.hpp"
#include "tiletrot/oracle.hpp"
#include "tiletrot/qpe.hpp"
#include "tiletrot/tables.hpp"

using namespace tiletrot;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string lattice = "periodic_hex";
  std::string lattice_file;
  std::string cover_file;
  int L = 4;
  std::string model = "hubbard";
  double U = 4.0;
  double V = 2.0;
  double tau = 1.0;
  std::vector<double> eps;
  std::vector<std::string> alpha;
  std::vector<int> l_list;
  std::string eps_rule = "fixed";
  int theta = 10;
  int gamma = 40;
  bool no_qubitized = false;
  std::string out;
  std::string format = "json";
  std::string level = "fast";
  double bound_scale = 1.0;
};

ModelParams model_params(const RunConfig& c) {
  ModelParams p;
  p.model = model_kind_from_string(c.model);
  p.tau = c.tau;
  p.U = c.U;
  p.V = p.model == ModelKind::hubbard ? 0.0 : c.V;
  p.validate();
  return p;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::config, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, path + ": " + e.what());
  }
}

LatticeGraph make_lattice(const RunConfig& c) {
  if (!c.lattice_file.empty()) return lattice_from_json(read_json(c.lattice_file));
  if (c.lattice == "periodic_hex") return build_periodic_hex(c.L, c.L);
  if (c.lattice == "rhombus") return build_hex_fragment(rhombus_cells(c.L, c.L));
  if (c.lattice == "hexagon") return build_hex_fragment({{0, 0}});
  if (c.lattice == "patch_a") return build_hex_fragment(fragment_patch_a());
  if (c.lattice == "patch_b") return build_hex_fragment(fragment_patch_b());
  if (c.lattice == "square") return build_square_fragment(c.L, c.L);
  if (c.lattice == "ring") return build_ring(c.L);
  if (c.lattice == "chain") return build_chain(c.L);
  throw Error(ErrorKind::config, "unknown lattice '" + c.lattice + "'");
}

// Covers from --cover-file are returned unvalidated; callers that cost them validate first.
SectionCover make_cover(const RunConfig& c, const LatticeGraph& g) {
  if (!c.cover_file.empty()) return cover_from_json(read_json(c.cover_file));
  switch (g.kind()) {
    case LatticeKind::periodic_hex: return cover_periodic_hex(g);
    case LatticeKind::hex_fragment: return cover_hex_fragment(g);
    default: throw Error(ErrorKind::unsupported_lattice, std::string("no cover for ") + to_string(g.kind()));
  }
}

HwpChoice hwp_from_string(const std::string& s) {
  for (auto h : {HwpChoice::off, HwpChoice::quarter, HwpChoice::half, HwpChoice::full})
    if (s == to_string(h)) return h;
  throw Error(ErrorKind::config, "alpha must be one of 0, N/4-1, N/2-1, N-1; got '" + s + "'");
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::config, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(const RunConfig& c, const Json& j) {
  Output o(c.out);
  o.stream() << j.dump(2) << '\n';
}

int cmd_table2(const RunConfig& c) {
  const auto rows = compute_table2();
  Output o(c.out);
  if (c.format == "csv")
    write_csv(o.stream(), rows);
  else
    o.stream() << to_json(rows).dump(2) << '\n';
  return kExitOk;
}

int cmd_qpe(const RunConfig& c) {
  SweepConfig s;
  s.params = model_params(c);
  s.l_values = c.l_list;
  s.eps_rule = c.eps_rule == "per_site" ? EpsRule::per_site : EpsRule::fixed;
  if (c.eps_rule != "fixed" && c.eps_rule != "per_site")
    throw Error(ErrorKind::config, "eps-rule must be fixed or per_site");
  s.hwp.clear();
  for (const auto& a : c.alpha) s.hwp.push_back(hwp_from_string(a));
  s.qubitized = !c.no_qubitized;
  s.theta = c.theta;
  s.gamma = c.gamma;
  std::vector<double> eps = c.eps;
  if (eps.empty()) eps.push_back(s.eps_rule == EpsRule::fixed ? 0.05 : 0.005);
  std::vector<SweepRow> rows;
  for (double e : eps) {
    s.eps = e;
    const auto part = crossover_sweep(s);
    rows.insert(rows.end(), part.begin(), part.end());
  }
  Output o(c.out);
  if (c.format == "json")
    o.stream() << to_json(rows).dump(2) << '\n';
  else
    write_csv(o.stream(), rows);
  return kExitOk;
}

SectionCover make_valid_cover(const RunConfig& c, const LatticeGraph& g) {
  auto cover = make_cover(c, g);
  const auto rep = validate_cover(g, cover);
  if (!rep.valid) throw Error(ErrorKind::config, "invalid cover: " + rep.violations.front());
  return cover;
}

int cmd_bounds(const RunConfig& c) {
  const auto g = make_lattice(c);
  const auto cover = make_valid_cover(c, g);
  Json j = to_json(w_tile(g, cover, model_params(c)));
  j["lattice"] = to_string(g.kind());
  j["n_sites"] = g.n_sites();
  emit_json(c, j);
  return kExitOk;
}

int cmd_gates(const RunConfig& c) {
  const auto g = make_lattice(c);
  const auto p = model_params(c);
  Json j;
  j["n_sites"] = g.n_sites();
  if (g.kind() == LatticeKind::periodic_hex) {
    Json steps = Json::array();
    const std::vector<std::string> alphas = c.alpha.empty() ? std::vector<std::string>{"0"} : c.alpha;
    for (const auto& a : alphas) {
      const count_t m = hwp_group_size(hwp_from_string(a), g.n_sites());
      const StepCost s = p.model == ModelKind::extended_hubbard ? step_cost_periodic_extended(g.n_sites(), m)
                         : p.model == ModelKind::ppp            ? step_cost_ppp(g.n_sites(), m > 1)
                                                                : step_cost_periodic_hubbard(g.n_sites(), m);
      steps.push_back(to_json(s));
    }
    j["steps"] = std::move(steps);
    if (p.model == ModelKind::hubbard) j["qubitization"] = to_json(walk_costs(c.L, p.tau, p.U, c.theta, c.gamma));
  } else {
    const auto cover = make_valid_cover(c, g);
    const StepCost s = step_cost_fragment(g, cover);
    j["step"] = to_json(s);
    j["boundary"] = to_json(boundary_overhead(s, g.n_sites()));
  }
  emit_json(c, j);
  return kExitOk;
}

int cmd_lattice(const RunConfig& c) {
  emit_json(c, to_json(make_lattice(c)));
  return kExitOk;
}

int cmd_cover(const RunConfig& c) {
  const auto g = make_lattice(c);
  const auto cover = make_cover(c, g);
  Json j = to_json(cover);
  j["validation"] = to_json(validate_cover(g, cover));
  Json census = Json::array();
  for (const auto& m : cover_tile_census(cover)) {
    Json e = Json::object();
    for (auto [k, n] : m) e[to_string(k)] = n;
    census.push_back(std::move(e));
  }
  j["census"] = std::move(census);
  emit_json(c, j);
  return j["validation"]["valid"].get<bool>() ? kExitOk : kExitCheck;
}

int cmd_verify(const RunConfig& c) {
  if (c.level != "fast" && c.level != "full") throw Error(ErrorKind::config, "level must be fast or full");
  const auto report = run_verification(c.level == "full" ? VerifyLevel::full : VerifyLevel::fast, c.bound_scale);
  {
    Output o(c.out);
    if (c.format == "csv")
      write_csv(o.stream(), report);
    else
      o.stream() << to_json(report).dump(2) << '\n';
  }
  int failed = 0;
  for (const auto& r : report)
    if (!r.pass) {
      ++failed;
      std::cerr << "FAILED " << r.check << " [" << r.instance << "] exact=" << format_number(r.exact)
                << " bound=" << format_number(r.bound) << '\n';
    }
  std::cerr << report.size() - static_cast<std::size_t>(failed) << "/" << report.size() << " checks passed\n";
  return failed ? kExitCheck : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tile Trotterization resource estimates and exact checks"};
  app.set_config("--config", "", "key = value configuration file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig c;
  app.add_option("--lattice", c.lattice,
                 "periodic_hex, rhombus, hexagon, patch_a, patch_b, square, ring or chain")
      ->capture_default_str();
  app.add_option("--lattice-file", c.lattice_file, "lattice JSON as written by the lattice command");
  app.add_option("--cover-file", c.cover_file, "section cover JSON, replaces the built-in cover");
  app.add_option("--L", c.L, "linear size")->capture_default_str();
  app.add_option("--model", c.model, "hubbard, extended or ppp")->capture_default_str();
  app.add_option("--U", c.U)->capture_default_str();
  app.add_option("--V", c.V, "ignored by the hubbard model")->capture_default_str();
  app.add_option("--tau", c.tau)->capture_default_str();
  app.add_option("--eps", c.eps, "energy error, or the per-site coefficient with --eps-rule per_site");
  app.add_option("--alpha", c.alpha, "HWP ancilla choices: 0, N/4-1, N/2-1, N-1");
  app.add_option("--theta", c.theta, "PREPARE rotation precision bits")->capture_default_str();
  app.add_option("--gamma", c.gamma, "PREPARE state-preparation bits")->capture_default_str();
  app.add_option("--out", c.out, "output path, stdout when absent");
  app.add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* table2 = app.add_subcommand("table2", "per-step resources next to the reference table");
  auto* qpe = app.add_subcommand("qpe", "QPE total cost sweep");
  qpe->add_option("--Ls", c.l_list, "even lattice sizes; default 4 6 ... 18, none gives an empty sweep")
      ->expected(0, 64);
  qpe->add_option("--eps-rule", c.eps_rule, "fixed or per_site")->capture_default_str();
  qpe->add_flag("--no-qubitized", c.no_qubitized, "omit the qubitization rows");
  auto* bounds = app.add_subcommand("bounds", "Trotter error norm breakdown");
  auto* gates = app.add_subcommand("gates", "per-step gate counts");
  auto* lattice = app.add_subcommand("lattice", "lattice graph as JSON");
  auto* cover = app.add_subcommand("cover", "section cover as JSON");
  auto* verify = app.add_subcommand("verify", "exact small-system checks");
  verify->add_option("--level", c.level, "fast or full")->capture_default_str();
  verify->add_option("--bound-scale", c.bound_scale, "multiply every bound (fault injection below 1)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (qpe->parsed()) {
    const auto* ls = qpe->get_option("--Ls");
    if (ls->count() == 0)
      c.l_list = {4, 6, 8, 10, 12, 14, 16, 18};
    else if (ls->results().empty() || (ls->results().size() == 1 && ls->results()[0].empty()))
      c.l_list.clear();
  }
  if (qpe->parsed() && c.alpha.empty()) c.alpha = {"0", "N/4-1", "N/2-1", "N-1"};
  if (qpe->parsed() && c.format == "json" && app.count("--format") == 0) c.format = "csv";

  try {
    if (table2->parsed()) return cmd_table2(c);
    if (qpe->parsed()) return cmd_qpe(c);
    if (bounds->parsed()) return cmd_bounds(c);
    if (gates->parsed()) return cmd_gates(c);
    if (lattice->parsed()) return cmd_lattice(c);
    if (cover->parsed()) return cmd_cover(c);
    if (verify->parsed()) return cmd_verify(c);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::config:
      case ErrorKind::invalid_parameter:
      case ErrorKind::unknown_kind:
      case ErrorKind::dimension_too_small:
      case ErrorKind::divisibility:
      case ErrorKind::size_limit:
      case ErrorKind::invalid_fragment:
      case ErrorKind::unsupported_lattice:
      case ErrorKind::unsupported_bound:
      case ErrorKind::non_regular_lattice:
      case ErrorKind::no_cover:
      case ErrorKind::section_count: return kExitConfig;
      default: return kExitCheck;
    }
  }
  return kExitConfig;
}
