#include "gfcech/report.hpp"

#include "gfcech/cech.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <utility>
#include <vector>

namespace gfcech {

namespace {

using nlohmann::ordered_json;

const char* verdict_name(CellVerdict v) {
  switch (v) {
    case CellVerdict::iso:
      return "iso";
    case CellVerdict::not_iso:
      return "not_iso";
    case CellVerdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

ordered_json json_cell(const HomologyCell& c, const char* spot_key = "spot") {
  ordered_json j;
  j[spot_key] = c.spot;
  j["degree"] = c.degree;
  j["dim"] = c.dim;
  j["stable"] = c.stable;
  j["level"] = c.level;
  j["level_dims"] = c.level_dims;
  j["image_ranks"] = c.image_ranks;
  j["representatives"] = c.representatives;
  return j;
}

ordered_json json_table(const HomologyTable& t, const char* spot_key = "spot") {
  ordered_json rows = ordered_json::array();
  for (const auto& [key, cell] : t) rows.push_back(json_cell(cell, spot_key));
  return rows;
}

ordered_json json_vectors(const std::vector<FreeVector>& vs) {
  ordered_json a = ordered_json::array();
  for (const auto& v : vs) a.push_back(v.to_string());
  return a;
}

ordered_json json_filter(const FilterRegularReport& r) {
  ordered_json j;
  j["verdict"] = r.verdict;
  ordered_json steps = ordered_json::array();
  for (const auto& s : r.steps) {
    ordered_json js;
    js["index"] = s.index;
    js["contained"] = s.contained;
    js["saturation_exponent"] = s.saturation_exponent;
    js["colon_generators"] = json_vectors(s.colon_generators);
    js["saturation_generators"] = json_vectors(s.saturation_generators);
    if (s.witness)
      js["witness"] = s.witness->to_string();
    else
      js["witness"] = nullptr;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

ordered_json json_order_check(const OrderCheckReport& r) {
  ordered_json j;
  j["verdict"] = r.verdict;
  j["orders_checked"] = r.orders_checked;
  j["failing_order"] = r.failing_order;
  if (!r.verdict) j["failing_report"] = json_filter(r.failing_report);
  return j;
}

ordered_json json_induced(const InducedCellResult& r) {
  ordered_json j;
  j["rank"] = r.rank;
  j["conclusive"] = r.conclusive;
  j["injective"] = r.injective;
  j["surjective"] = r.surjective;
  j["iso"] = r.iso;
  j["src"] = json_cell(r.src);
  j["tgt"] = json_cell(r.tgt);
  return j;
}

ordered_json json_comparison_cells(const std::vector<ComparisonCell>& cells) {
  ordered_json rows = ordered_json::array();
  for (const auto& c : cells) {
    ordered_json j;
    j["spot"] = c.spot;
    j["degree"] = c.degree;
    j["verdict"] = verdict_name(c.verdict);
    j["induced"] = json_induced(c.induced);
    rows.push_back(std::move(j));
  }
  return rows;
}

ordered_json poly_strings(const std::vector<Polynomial>& ps) {
  ordered_json a = ordered_json::array();
  for (const auto& p : ps) a.push_back(p.to_string());
  return a;
}

std::string numerator_str(const FreeVector& v) {
  return v.rank() == 1 ? v.comp(0).to_string() : v.to_string();
}

struct TaskInputs {
  const SessionSpec& spec;
  const TaskDecl& t;

  const GradedModule& module(int pos) const { return spec.find_module(t.names[pos])->value; }
  const std::vector<Polynomial>& seq(int pos) const { return spec.find_seq(t.names[pos])->polys; }
  std::vector<Polynomial> ambient_ideal() const {
    return t.ideal.empty() ? std::vector<Polynomial>{} : spec.find_ideal(t.ideal)->polys;
  }
};

bool all_cells_stable(const HomologyTable& table) {
  for (const auto& [key, cell] : table)
    if (!cell.stable) return false;
  return true;
}

bool run_homology(const TaskInputs& in, ordered_json& j, bool cech_side) {
  HomologyTable table =
      cech_side ? local_cohomology(in.seq(1), in.module(0), in.t.window, in.t.levels, in.t.margin)
                : genfrac_homology(in.seq(1), in.module(0), in.t.window, in.t.levels, in.t.margin);
  j["table"] = json_table(table);
  bool stable = all_cells_stable(table);
  j["all_stable"] = stable;
  return stable;
}

bool run_compare(const TaskInputs& in, ordered_json& j) {
  const std::vector<Polynomial>& x = in.seq(1);
  QuasiIsoReport r = verify_quasi_isomorphism(x, in.module(0), in.t.window, in.t.levels,
                                              in.t.margin, in.ambient_ideal());
  j["hypothesis_met"] = r.hypothesis_met;
  j["hypothesis"] = json_filter(r.hypothesis);
  j["global"] = verdict_name(r.global);
  j["identities_checked"] = r.identities_checked;
  j["cells"] = json_comparison_cells(r.cells);
  if (x.size() == 2) {
    TwoElementReport te = two_element_case(x, in.module(0), in.t.window, in.t.levels, in.t.margin,
                                           in.ambient_ideal());
    ordered_json certs;
    certs["conclusive"] = te.conclusive;
    certs["all_iso"] = te.all_iso;
    ordered_json surj = ordered_json::array();
    for (const auto& c : te.surjectivity) {
      ordered_json cj;
      cj["degree"] = c.degree;
      cj["target_fraction"] = c.target_fraction;
      cj["preimage"] = c.preimage;
      cj["level_star"] = c.level_star;
      cj["level_clear"] = c.level_clear;
      cj["preimage_verified"] = c.preimage_verified;
      cj["cycle_verified"] = c.cycle_verified;
      surj.push_back(std::move(cj));
    }
    certs["surjectivity"] = std::move(surj);
    ordered_json inj = ordered_json::array();
    for (const auto& c : te.injectivity) {
      ordered_json cj;
      cj["degree"] = c.degree;
      cj["cycle"] = c.cycle;
      cj["maps_to_zero"] = c.maps_to_zero;
      cj["is_boundary"] = c.is_boundary;
      cj["boundary_preimage"] = c.boundary_preimage;
      if (c.annihilator_power)
        cj["annihilator_power"] = *c.annihilator_power;
      else
        cj["annihilator_power"] = nullptr;
      inj.push_back(std::move(cj));
    }
    certs["injectivity"] = std::move(inj);
    j["certificates"] = std::move(certs);
  }
  return r.hypothesis_met && r.global == CellVerdict::iso;
}

bool run_filtreg(const TaskInputs& in, ordered_json& j) {
  const std::vector<Polynomial>& x = in.seq(1);
  std::vector<Polynomial> a = in.ambient_ideal();
  if (a.empty()) a = x;
  FilterRegularReport fr = is_filter_regular(x, in.module(0), a);
  OrderCheckReport oc = is_unconditioned(x, in.module(0), a);
  j["filter_regular"] = json_filter(fr);
  j["unconditioned"] = json_order_check(oc);
  return fr.verdict;
}

bool run_synth(const TaskInputs& in, ordered_json& j, const RunOptions& opts) {
  const std::vector<Polynomial>& a = in.spec.find_ideal(in.t.names[1])->polys;
  std::uint64_t seed = opts.seed_override.value_or(in.t.seed);
  SynthesisResult r = synthesize_generators(a, in.module(0), in.t.trials, seed);
  j["success"] = r.success;
  j["seed"] = seed;
  j["trials_used"] = r.trials;
  j["sequence"] = poly_strings(r.sequence);
  j["ideal_matches"] = r.ideal_matches;
  ordered_json v;
  v["verdict"] = r.verification.verdict;
  v["orders_checked"] = r.verification.orders_checked;
  j["verification"] = std::move(v);
  return r.success;
}

bool run_ses(const TaskInputs& in, ordered_json& j) {
  const NamedMap* f = in.spec.find_map(in.t.names[0]);
  const NamedMap* g = in.spec.find_map(in.t.names[1]);
  const GradedModule& a = in.spec.find_module(f->src)->value;
  const GradedModule& b = in.spec.find_module(f->tgt)->value;
  const GradedModule& c = in.spec.find_module(g->tgt)->value;
  SesGfApplication r = apply_gf_to_ses(a, b, c, f->images, g->images, in.seq(2), in.t.window,
                                       in.t.levels, in.t.margin);
  j["input_exact"] = r.input_exact;
  j["input_failures"] = r.input_failures;
  j["hypothesis_met"] = r.hypothesis_met;
  j["hypothesis"] = json_filter(r.hypothesis);
  j["last_entry_in_ideal"] = r.last_entry_in_ideal;
  j["exact_at_top"] = r.exact_at_top;
  j["conclusive"] = r.conclusive;
  std::string status;
  if (!r.input_exact)
    status = "input not exact";
  else if (!r.hypothesis_met)
    status = "hypothesis unmet";
  else if (r.exact_at_top)
    status = "exact";
  else
    status = r.conclusive ? "exactness failure" : "inconclusive";
  j["status"] = status;
  ordered_json cells = ordered_json::array();
  for (const auto& cell : r.colimit.cells) {
    ordered_json cj;
    cj["spot"] = cell.spot;
    cj["degree"] = cell.degree;
    cj["conclusive"] = cell.conclusive;
    cj["exact"] = cell.exact;
    cj["dims"] = ordered_json::array({cell.h[0].dim, cell.h[1].dim, cell.h[2].dim});
    cj["stable"] =
        ordered_json::array({cell.h[0].stable, cell.h[1].stable, cell.h[2].stable});
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  return r.input_exact && r.hypothesis_met && r.exact_at_top;
}

bool run_tor(const TaskInputs& in, ordered_json& j) {
  const GradedModule& m = in.module(0);
  FreeResolution res = [&]() -> FreeResolution {
    if (in.t.koszul.empty()) {
      j["resolution"] = "syzygy";
      return syzygy_resolution(m, in.t.auto_depth);
    }
    FreeResolution k = koszul_resolution(m.ring(), in.spec.find_ideal(in.t.koszul)->polys);
    bool shape = m.ambient().rank() == 1 && m.ambient().shifts == k.target.ambient().shifts;
    if (!shape || !equal_submodules(m.relations(), k.target.relations(), {}))
      throw std::invalid_argument("the named resolution does not present the module");
    j["resolution"] = "koszul " + in.t.koszul;
    return k;
  }();
  ordered_json ranks = ordered_json::array();
  for (const auto& f : res.modules) ranks.push_back(f.rank());
  j["resolution_ranks"] = std::move(ranks);
  TorReport r =
      tor_vanishing_check(res, in.seq(1), in.t.imax, in.t.window, in.t.levels, in.t.margin);
  j["resolution_length"] = r.resolution_length;
  j["i_max"] = r.i_max;
  j["tor"] = json_table(r.tor, "i");
  j["direct_top"] = json_table(r.direct_top);
  j["tor0_matches"] = r.tor0_matches;
  j["vanishing"] = r.vanishing;
  j["conclusive"] = r.conclusive;
  return r.vanishing && r.tor0_matches;
}

}  // namespace

RunResult run_session(const SessionSpec& spec, const RunOptions& opts) {
  RunResult out;
  ordered_json& rep = out.report;
  std::string ring_line = spec.ring.field().describe() + "[";
  for (int i = 0; i < spec.ring.nvars(); ++i) {
    if (i) ring_line += ",";
    ring_line += spec.ring.vars()[i];
  }
  ring_line += "] weights";
  for (int w : spec.ring.weights()) ring_line += " " + std::to_string(w);
  rep["version"] = "1.0.0";
  rep["ring"] = ring_line;
  rep["field"] = spec.ring.field().describe();
  rep["task_count"] = spec.tasks.size();

  ordered_json tasks = ordered_json::array();
  bool any_error = false;
  bool assert_fail = false;
  for (std::size_t idx = 0; idx < spec.tasks.size(); ++idx) {
    const TaskDecl& t = spec.tasks[idx];
    ordered_json j;
    j["task"] = idx;
    j["kind"] = task_kind_name(t.kind);
    j["names"] = t.names;
    j["window"] = ordered_json::array({t.window.first, t.window.second});
    j["levels"] = t.levels;
    j["margin"] = t.margin;
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    try {
      TaskInputs in{spec, t};
      switch (t.kind) {
        case TaskKind::localcohomology:
          ok = run_homology(in, j, true);
          break;
        case TaskKind::genfrac:
          ok = run_homology(in, j, false);
          break;
        case TaskKind::compare:
          ok = run_compare(in, j);
          break;
        case TaskKind::filtreg:
          ok = run_filtreg(in, j);
          break;
        case TaskKind::synth:
          ok = run_synth(in, j, opts);
          break;
        case TaskKind::ses:
          ok = run_ses(in, j);
          break;
        case TaskKind::tor:
          ok = run_tor(in, j);
          break;
      }
    } catch (const std::exception& ex) {
      j["error"] = ex.what();
      any_error = true;
      ok = false;
    }
    j["timing_ms"] = static_cast<long long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                std::chrono::steady_clock::now() - start)
                                                .count());
    tasks.push_back(std::move(j));
    if (!ok) assert_fail = true;
  }
  rep["tasks"] = std::move(tasks);
  out.exit_code = any_error ? 1 : (opts.assert_hypotheses && assert_fail ? 1 : 0);
  return out;
}

void write_csv_tables(const nlohmann::ordered_json& report, const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  if (!report.contains("tasks")) return;
  const auto& tasks = report["tasks"];
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& tj = tasks[i];
    std::string kind = tj.contains("kind") ? tj["kind"].get<std::string>() : "task";
    auto dump = [&](const ordered_json& rows, const char* key) {
      std::map<int, std::vector<const ordered_json*>> by_spot;
      for (const auto& row : rows) by_spot[row[key].get<int>()].push_back(&row);
      for (const auto& [spot, list] : by_spot) {
        std::ofstream f(fs::path(dir) /
                        ("task" + std::to_string(i) + "_" + kind + "_spot" + std::to_string(spot) +
                         ".csv"));
        f << "degree,dimension,stable,level\n";
        for (const ordered_json* row : list)
          f << (*row)["degree"].get<int>() << ',' << (*row)["dim"].get<int>() << ','
            << ((*row)["stable"].get<bool>() ? "true" : "false") << ','
            << (*row)["level"].get<int>() << '\n';
      }
    };
    if (tj.contains("table")) dump(tj["table"], "spot");
    if (tj.contains("tor")) dump(tj["tor"], "i");
  }
}

std::string render_certificate(const GfZeroCertificate& cert) {
  int rank = cert.multiplied_numerator.rank();
  std::string sum;
  for (std::size_t g = 0; g < cert.power_generator_count && g < cert.witness.gen_cofactors.size();
       ++g) {
    const Polynomial& cof = cert.witness.gen_cofactors[g];
    if (cof.is_zero()) continue;
    std::string term =
        "(" + cof.to_string() + ")*(" + cert.powers[g / rank].to_string() + ")";
    if (rank > 1) term += "*e" + std::to_string(g % rank + 1);
    if (!sum.empty()) sum += " + ";
    sum += std::move(term);
  }
  if (sum.empty()) sum = "0";
  bool uses_relations = false;
  for (std::size_t g = cert.power_generator_count; g < cert.witness.gen_cofactors.size(); ++g)
    if (!cert.witness.gen_cofactors[g].is_zero()) uses_relations = true;
  for (const auto& w : cert.witness.defining_cofactors)
    if (!w.is_zero()) uses_relations = true;
  return "delta=" + std::to_string(cert.level) + ": " +
         numerator_str(cert.multiplied_numerator) + " = " + sum +
         (uses_relations ? " [mod relations]" : "");
}

std::string render_certificate(const std::optional<GfZeroCertificate>& cert) {
  return cert ? render_certificate(*cert) : "—";
}

}  // namespace gfcech
