#include "tiletrot/io.hpp"

#include <charconv>
#include <ostream>

#include "tiletrot/error.hpp"

namespace tiletrot {

Json to_json(const LatticeGraph& g) {
  Json j;
  j["kind"] = to_string(g.kind());
  j["n_sites"] = g.n_sites();
  if (g.dims()) j["dims"] = {g.dims()->first, g.dims()->second};
  Json sites = Json::array();
  for (int i = 0; i < g.n_sites(); ++i) {
    const auto& s = g.site(i);
    sites.push_back({{"i", i}, {"l_x", s.l_x}, {"l_y", s.l_y}, {"c", s.color}, {"role", to_string(s.role)}});
  }
  j["sites"] = std::move(sites);
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = std::move(edges);
  return j;
}

LatticeGraph lattice_from_json(const Json& j) {
  try {
    std::vector<SiteInfo> sites;
    const auto& js = j.at("sites");
    sites.resize(js.size());
    std::vector<bool> seen(js.size(), false);
    for (std::size_t n = 0; n < js.size(); ++n) {
      const auto& s = js[n];
      const auto i = s.contains("i") ? s["i"].get<std::size_t>() : n;
      if (i >= js.size() || seen[i]) throw Error(ErrorKind::config, "lattice JSON: bad site index");
      seen[i] = true;
      sites[i] = {s.at("l_x").get<int>(), s.at("l_y").get<int>(), s.value("c", 0), SiteRole::center};
    }
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::optional<std::pair<int, int>> dims;
    if (j.contains("dims")) dims = std::make_pair(j["dims"].at(0).get<int>(), j["dims"].at(1).get<int>());
    return LatticeGraph(lattice_kind_from_string(j.value("kind", "custom")), std::move(sites), std::move(edges), dims);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, std::string("lattice JSON: ") + e.what());
  }
}

Json to_json(const SectionCover& c) {
  Json sections = Json::array();
  for (const auto& s : c.sections) {
    Json tiles = Json::array();
    for (const auto& t : s.tiles) tiles.push_back({{"kind", to_string(t.kind)}, {"sites", t.sites}});
    sections.push_back({{"color", s.color}, {"tiles", std::move(tiles)}});
  }
  return {{"sections", std::move(sections)}};
}

SectionCover cover_from_json(const Json& j) {
  try {
    SectionCover c;
    for (const auto& js : j.at("sections")) {
      Section s;
      s.color = js.value("color", "");
      for (const auto& jt : js.at("tiles"))
        s.tiles.push_back({tile_kind_from_string(jt.at("kind").get<std::string>()),
                           jt.at("sites").get<std::vector<int>>()});
      c.sections.push_back(std::move(s));
    }
    return c;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::config, std::string("cover JSON: ") + e.what());
  }
}

Json to_json(const ValidationReport& r) { return {{"valid", r.valid}, {"violations", r.violations}}; }

Json to_json(const TrotterErrorBreakdown& b) {
  Json comp = Json::object();
  for (const auto& [k, v] : b.components) comp[k] = v;
  return {{"w_so2", b.w_so2}, {"w_h", b.w_h}, {"w_tile", b.w_tile}, {"components", std::move(comp)}};
}

Json to_json(const StepCost& s) {
  return {{"n_rot", s.n_rot},         {"n_t", s.n_t},
          {"n_toffoli", s.n_tof},     {"n_qubits", s.n_qubits},
          {"n_cnot", s.n_cnot},       {"n_h", s.n_h},
          {"n_s", s.n_s},             {"n_fswap", s.n_fswap},
          {"hwp_m", s.hwp_m},         {"alpha", s.alpha()},
          {"rotation_layers", s.rotation_layers}, {"cnot_layers", s.cnot_layers}};
}

Json to_json(const WalkCosts& w) {
  Json ledger = Json::array();
  for (const auto& r : w.element_ledger)
    ledger.push_back(
        {{"element", r.element}, {"toffoli", r.toffoli}, {"t", r.t}, {"ancilla", r.ancilla}, {"clamped", r.clamped}});
  return {{"c_select", w.c_select},   {"c_prepare", w.c_prepare},     {"c_reflect", w.c_reflect},
          {"per_walk_t", w.per_walk_t()}, {"lambda", w.lambda},      {"n_qubits_walk", w.n_qubits_walk},
          {"theta", w.theta},         {"gamma", w.gamma},             {"ledger", std::move(ledger)},
          {"warnings", w.warnings}};
}

Json to_json(const QpeEstimate& q) {
  Json j = {{"method", q.method == QpeMethod::trotter ? "trotter" : "qubitized"},
            {"total_t", q.total_t},
            {"total_rot", q.total_rot},
            {"n_qubits", q.n_qubits},
            {"eps", q.eps}};
  if (q.method == QpeMethod::trotter) {
    j["x"] = q.x;
    j["n_pe"] = q.n_pe;
    j["n_rt"] = q.n_rt;
    j["w_tile"] = q.w;
    j["step_rot"] = q.step_rot;
    j["step_t"] = q.step_t;
  } else {
    j["lambda"] = q.lambda;
    j["n_w"] = q.n_w;
    j["per_walk_t"] = q.per_walk_t;
    j["alpha_pe"] = q.alpha_pe;
  }
  return j;
}

Json to_json(const VerificationReport& r) {
  Json a = Json::array();
  for (const auto& c : r)
    a.push_back({{"check", c.check}, {"instance", c.instance}, {"exact", c.exact}, {"bound", c.bound}, {"pass", c.pass}});
  return a;
}

Json to_json(const std::vector<Table2Row>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"model", r.model},
                 {"quantity", r.quantity},
                 {"alpha", r.alpha},
                 {"L", r.l},
                 {"N", r.n_sites},
                 {"computed", r.computed},
                 {"reference", r.reference},
                 {"diff", r.diff()},
                 {"match", table2_row_matches(r)}});
  return a;
}

Json to_json(const std::vector<SweepRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back({{"method", r.method},
                 {"N", r.n_sites},
                 {"L", r.l},
                 {"eps", r.eps},
                 {"x", r.x},
                 {"alpha", r.alpha},
                 {"total_t", r.total_t},
                 {"total_rot", r.total_rot},
                 {"n_qubits", r.n_qubits},
                 {"n_pe_or_nw", r.n_pe_or_nw},
                 {"w_or_lambda", r.w_or_lambda}});
  return a;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<Table2Row>& rows) {
  os << "model,quantity,alpha,L,N,computed,reference,diff,match\n";
  for (const auto& r : rows)
    os << r.model << ',' << r.quantity << ',' << r.alpha << ',' << r.l << ',' << r.n_sites << ','
       << format_number(r.computed) << ',' << format_number(r.reference) << ',' << format_number(r.diff()) << ','
       << (table2_row_matches(r) ? "yes" : "no") << '\n';
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "method,N,L,eps,x,alpha,total_t,total_rot,n_qubits,n_pe_or_nw,w_or_lambda\n";
  for (const auto& r : rows)
    os << r.method << ',' << r.n_sites << ',' << r.l << ',' << format_number(r.eps) << ',' << format_number(r.x)
       << ',' << r.alpha << ',' << format_number(r.total_t) << ',' << format_number(r.total_rot) << ','
       << r.n_qubits << ',' << format_number(r.n_pe_or_nw) << ',' << format_number(r.w_or_lambda) << '\n';
}

void write_csv(std::ostream& os, const VerificationReport& r) {
  os << "check,instance,exact,bound,pass\n";
  for (const auto& c : r)
    os << csv_field(c.check) << ',' << csv_field(c.instance) << ',' << format_number(c.exact) << ','
       << format_number(c.bound) << ',' << (c.pass ? "yes" : "no") << '\n';
}

}  // namespace tiletrot
