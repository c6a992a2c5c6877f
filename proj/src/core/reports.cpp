#include "core/reports.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "core/analytic.hpp"
#include "core/boundstates.hpp"
#include "core/chains.hpp"
#include "core/evolve.hpp"
#include "core/io.hpp"
#include "core/json_util.hpp"
#include "core/linalg.hpp"
#include "core/observables.hpp"
#include "core/operators.hpp"
#include "core/scars.hpp"

namespace lfsim {

namespace {

using namespace cfg;

const NameTable<BoundStateConfig::Kind> kBoundKinds{
    {{BoundStateConfig::Kind::Triplet, "triplet"},
     {BoundStateConfig::Kind::FiveTuplet, "five_tuplet"}}};

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

void write_json_file(const std::string& path, const ojson& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << j.dump(2) << "\n";
}

ojson constants_json() {
  const BoundStateConstants k = bound_state_constants();
  ojson j;
  j["b"] = k.b;
  j["energy"] = k.E;
  j["norm_inf"] = k.norm_inf;
  j["overlap3"] = k.overlap3;
  j["n_init_pm"] = k.n_init_pm;
  j["n_init3_inf"] = k.n_init3_inf;
  return j;
}

}  // namespace

// ---- bound states -----------------------------------------------------

BoundStateConfig parse_boundstate_config(const std::string& json_text) {
  const json j = parse_json_text(json_text);
  reject_unknown(j, {"schema", "name", "kind", "L", "output_prefix"}, "");
  BoundStateConfig c;
  c.schema = require_int(j, "schema", "");
  c.name = require_str(j, "name", "");
  c.kind = kBoundKinds.parse(opt_str(j, "kind", "triplet", ""), "kind");
  c.L = require_int(j, "L", "");
  c.output_prefix = opt_str(j, "output_prefix", c.name, "");
  validate_boundstate_config(c);
  return c;
}

std::string format_boundstate_config(const BoundStateConfig& c) {
  ojson j;
  j["schema"] = c.schema;
  j["name"] = c.name;
  j["kind"] = kBoundKinds.name(c.kind);
  j["L"] = c.L;
  j["output_prefix"] = c.output_prefix;
  return j.dump(2) + "\n";
}

void validate_boundstate_config(const BoundStateConfig& c) {
  if (c.schema != kConfigSchema)
    fail("schema",
         "unsupported schema (expected " + std::to_string(kConfigSchema) + ")");
  if (c.name.empty()) fail("name", "must be non-empty");
  if (c.L % 2 == 0) fail("L", "must be odd so the tuplet sits centered");
  if (c.kind == BoundStateConfig::Kind::Triplet) {
    if (c.L < 7 || c.L > 61) fail("L", "expected odd 7 <= L <= 61");
  } else {
    if (c.L < 11 || c.L > 29) fail("L", "expected odd 11 <= L <= 29");
  }
  if (c.output_prefix.empty()) fail("output_prefix", "must be non-empty");
}

BoundStateReport run_boundstates(const BoundStateConfig& c,
                                 const std::string& out_dir) {
  validate_boundstate_config(c);
  const bool five = c.kind == BoundStateConfig::Kind::FiveTuplet;
  const int N = five ? 5 : 3;
  const int j0 = (c.L - N) / 2;
  FockState seed{};
  seed.up = ((u64(1) << N) - 1) << j0;

  ModelParams p;
  p.L = c.L;
  p.boundary = Boundary::Open;

  Basis basis;
  std::vector<BoundEigenpair> bound;
  double overlap_plus = 0.0, overlap_minus = 0.0;
  double population_plus = 0.0, population_minus = 0.0;
  if (five) {
    FiveTupletResult r = five_tuplet_bound_states(c.L);
    basis = std::move(r.basis);
    bound = std::move(r.bound);
    overlap_plus = r.overlap_plus;
    overlap_minus = r.overlap_minus;
    population_plus = r.population_plus;
    population_minus = r.population_minus;
  } else {
    basis = reachable_effective(p, seed);
  }
  SparseOperator H = build_effective(p, basis);
  const int n = basis.dim();
  const int i0 = basis.index(seed);

  if (!five) {
    bound = find_bound_states(H, basis, default_criterion(c.L, N));
    if (bound.size() >= 2) {
      const BoundEigenpair& a = bound[0];
      const BoundEigenpair& b = bound[1];
      overlap_plus = std::norm((a.energy > 0 ? a : b).vector[i0]);
      overlap_minus = std::norm((a.energy > 0 ? b : a).vector[i0]);
      population_plus = (a.energy > 0 ? a : b).window_population;
      population_minus = (a.energy > 0 ? b : a).window_population;
    }
  }
  if (bound.size() < 2)
    throw std::runtime_error("boundstates: localized pair not found at L=" +
                             std::to_string(c.L));

  // full spectrum with per-level localization diagnostics
  EigReal e = eigh(H.dense_real(), n);
  const LocalizationCriterion crit = default_criterion(c.L, N);
  std::vector<std::vector<double>> levels;
  levels.reserve(size_t(n));
  for (int k = 0; k < n; ++k) {
    Vec v(size_t(n), cdouble(0.0));
    for (int r = 0; r < n; ++r) v[size_t(r)] = e.V[size_t(r) * n + k];
    DensityProfile d = density(v, basis);
    double inwin = 0.0, pop = 0.0;
    for (int j : crit.window) inwin += d.n[j];
    for (int j = j0; j < j0 + N; ++j) pop += d.n[j];
    levels.push_back(
        {double(k), e.w[k], inwin / double(N), pop, std::norm(v[size_t(i0)])});
  }

  const BoundEigenpair& plus = bound[0].energy > 0 ? bound[0] : bound[1];
  const BoundEigenpair& minus = bound[0].energy > 0 ? bound[1] : bound[0];
  DensityProfile dp = density(plus.vector, basis);
  DensityProfile dm = density(minus.vector, basis);

  BoundStateReport rep;
  rep.energies = {bound[0].energy, bound[1].energy};

  // prediction: bound channels trap their carried atoms, the rest leaks one
  const double pred =
      five ? predicted_localized_population_5(
                 0.5 * (overlap_plus + overlap_minus),
                 0.5 * (population_plus + population_minus),
                 1.0 / std::sqrt(2.0), 2.0 + 1.0 / std::sqrt(2.0))
           : predicted_localized_population();

  if (out_dir.empty()) return rep;

  Metadata meta;
  meta.emplace_back("name", c.name);
  meta.emplace_back("kind", kBoundKinds.name(c.kind));
  meta.emplace_back("L", std::to_string(c.L));
  meta.emplace_back("basis_dim", std::to_string(n));

  const std::string levels_path =
      join_path(out_dir, c.output_prefix + "-levels.csv");
  write_table_csv(levels_path, meta,
                  {"index", "energy", "window_fraction", "tuplet_population",
                   "tuplet_overlap"},
                  levels);
  rep.files.push_back(levels_path);

  Metadata pmeta = meta;
  pmeta.emplace_back("energy_plus", format_double(plus.energy));
  pmeta.emplace_back("energy_minus", format_double(minus.energy));
  std::vector<std::vector<double>> prof;
  std::vector<std::string> pcols = {"site", "n_plus", "n_minus"};
  if (!five) {
    pcols.push_back("n_ansatz");
    TripletBoundState phi = triplet_bound_state((c.L - 3) / 2, +1);
    DensityProfile da = density(phi.psi, phi.basis);
    for (int j = 0; j < c.L; ++j)
      prof.push_back({double(j), dp.n[j], dm.n[j], da.n[j]});
  } else {
    for (int j = 0; j < c.L; ++j)
      prof.push_back({double(j), dp.n[j], dm.n[j]});
  }
  const std::string profile_path =
      join_path(out_dir, c.output_prefix + "-profile.csv");
  write_table_csv(profile_path, pmeta, pcols, prof);
  rep.files.push_back(profile_path);

  ojson s;
  s["schema"] = kConfigSchema;
  s["name"] = c.name;
  s["kind"] = kBoundKinds.name(c.kind);
  s["L"] = c.L;
  s["basis_dim"] = n;
  s["constants"] = constants_json();
  s["localized"] = ojson::array();
  for (const auto& bp : bound) {
    ojson item;
    item["energy"] = bp.energy;
    item["window_fraction"] = bp.window_fraction;
    item["tuplet_population"] = bp.window_population;
    s["localized"].push_back(item);
  }
  s["overlap_plus"] = overlap_plus;
  s["overlap_minus"] = overlap_minus;
  s["population_plus"] = population_plus;
  s["population_minus"] = population_minus;
  s["predicted_localized_population"] = pred;
  const std::string summary_path =
      join_path(out_dir, c.output_prefix + "-summary.json");
  write_json_file(summary_path, s);
  rep.files.push_back(summary_path);
  return rep;
}

// ---- frozen-state census ------------------------------------------------

ScarReportConfig parse_scar_config(const std::string& json_text) {
  const json j = parse_json_text(json_text);
  reject_unknown(
      j, {"schema", "name", "L_min", "L_max", "list_up_to", "output_prefix"},
      "");
  ScarReportConfig c;
  c.schema = require_int(j, "schema", "");
  c.name = require_str(j, "name", "");
  c.L_min = opt_int(j, "L_min", 2, "");
  c.L_max = require_int(j, "L_max", "");
  c.list_up_to = opt_int(j, "list_up_to", std::min(c.L_max, 8), "");
  c.output_prefix = opt_str(j, "output_prefix", c.name, "");
  validate_scar_config(c);
  return c;
}

std::string format_scar_config(const ScarReportConfig& c) {
  ojson j;
  j["schema"] = c.schema;
  j["name"] = c.name;
  j["L_min"] = c.L_min;
  j["L_max"] = c.L_max;
  j["list_up_to"] = c.list_up_to;
  j["output_prefix"] = c.output_prefix;
  return j.dump(2) + "\n";
}

void validate_scar_config(const ScarReportConfig& c) {
  if (c.schema != kConfigSchema)
    fail("schema",
         "unsupported schema (expected " + std::to_string(kConfigSchema) + ")");
  if (c.name.empty()) fail("name", "must be non-empty");
  if (c.L_min < 2) fail("L_min", "expected L_min >= 2");
  if (c.L_max < c.L_min || c.L_max > 62)
    fail("L_max", "expected L_min <= L_max <= 62");
  if (c.list_up_to < 0 || c.list_up_to > 12)
    fail("list_up_to", "expected 0 <= list_up_to <= 12 (0 disables)");
  if (c.output_prefix.empty()) fail("output_prefix", "must be non-empty");
}

ScarReport run_scars(const ScarReportConfig& c, const std::string& out_dir) {
  validate_scar_config(c);
  ScarReport rep;
  if (out_dir.empty()) return rep;

  std::vector<ScarCountRow> rows;
  for (int L = c.L_min; L <= c.L_max; ++L) {
    const ScarCount s = scar_count(L);
    rows.push_back({L, s.ending_up, s.ending_empty, s.ending_doublon,
                    s.total()});
  }
  Metadata meta;
  meta.emplace_back("name", c.name);
  meta.emplace_back("L_min", std::to_string(c.L_min));
  meta.emplace_back("L_max", std::to_string(c.L_max));
  const std::string counts_path =
      join_path(out_dir, c.output_prefix + "-counts.csv");
  write_scar_csv(counts_path, meta, rows);
  rep.files.push_back(counts_path);

  if (c.list_up_to >= c.L_min) {
    ojson s;
    s["schema"] = kConfigSchema;
    s["name"] = c.name;
    const auto T = scar_transfer_matrix();
    s["transfer_matrix"] = ojson::array();
    for (const auto& row : T) s["transfer_matrix"].push_back(row);
    s["states"] = ojson::object();
    for (int L = c.L_min; L <= std::min(c.L_max, c.list_up_to); ++L) {
      const auto frozen = enumerate_frozen_states(L);
      if (std::int64_t(frozen.size()) != scar_count(L).total())
        throw std::runtime_error(
            "frozen-state enumeration disagrees with transfer-matrix count "
            "at L=" + std::to_string(L));
      ojson arr = ojson::array();
      for (const FockState& f : frozen) arr.push_back(format_loadout(f, L));
      s["states"][std::to_string(L)] = std::move(arr);
    }
    const std::string states_path =
        join_path(out_dir, c.output_prefix + "-states.json");
    write_json_file(states_path, s);
    rep.files.push_back(states_path);
  }
  return rep;
}

// ---- analytic transmission ----------------------------------------------

AnalyticReportConfig parse_analytic_config(const std::string& json_text) {
  const json j = parse_json_text(json_text);
  reject_unknown(
      j, {"schema", "name", "U_delta", "J", "k_points", "output_prefix"}, "");
  AnalyticReportConfig c;
  c.schema = require_int(j, "schema", "");
  c.name = require_str(j, "name", "");
  c.U_delta = require_num(j, "U_delta", "");
  c.J = opt_num(j, "J", 1.0, "");
  c.k_points = opt_int(j, "k_points", 257, "");
  c.output_prefix = opt_str(j, "output_prefix", c.name, "");
  validate_analytic_config(c);
  return c;
}

std::string format_analytic_config(const AnalyticReportConfig& c) {
  ojson j;
  j["schema"] = c.schema;
  j["name"] = c.name;
  j["U_delta"] = c.U_delta;
  j["J"] = c.J;
  j["k_points"] = c.k_points;
  j["output_prefix"] = c.output_prefix;
  return j.dump(2) + "\n";
}

void validate_analytic_config(const AnalyticReportConfig& c) {
  if (c.schema != kConfigSchema)
    fail("schema",
         "unsupported schema (expected " + std::to_string(kConfigSchema) + ")");
  if (c.name.empty()) fail("name", "must be non-empty");
  if (c.U_delta < 0.0) fail("U_delta", "must be nonnegative");
  if (!(c.J > 0)) fail("J", "must be positive");
  if (c.k_points < 2 || c.k_points > 100001)
    fail("k_points", "expected 2 <= k_points <= 100001");
  if (c.output_prefix.empty()) fail("output_prefix", "must be non-empty");
}

AnalyticReport run_analytic(const AnalyticReportConfig& c,
                            const std::string& out_dir) {
  validate_analytic_config(c);
  AnalyticReport rep;
  rep.total_quadrature = transmission_total(c.U_delta, c.J);
  rep.total_closed_form =
      1.0 - c.U_delta / std::sqrt(4.0 * c.J * c.J + c.U_delta * c.U_delta);
  if (out_dir.empty()) return rep;

  const double pi = std::acos(-1.0);
  std::vector<std::vector<double>> rows;
  rows.reserve(size_t(c.k_points));
  for (int i = 0; i < c.k_points; ++i) {
    const double k = pi * double(i) / double(c.k_points - 1);
    rows.push_back({k, transmission_at_k(k, c.U_delta, c.J)});
  }
  Metadata meta;
  meta.emplace_back("name", c.name);
  meta.emplace_back("U_delta", format_double(c.U_delta));
  meta.emplace_back("J", format_double(c.J));
  const std::string curve_path =
      join_path(out_dir, c.output_prefix + "-transmission.csv");
  write_table_csv(curve_path, meta, {"k", "t"}, rows);
  rep.files.push_back(curve_path);

  ojson s;
  s["schema"] = kConfigSchema;
  s["name"] = c.name;
  s["U_delta"] = c.U_delta;
  s["J"] = c.J;
  s["total_quadrature"] = rep.total_quadrature;
  s["total_closed_form"] = rep.total_closed_form;
  s["constants"] = constants_json();
  s["predicted_localized_population"] = predicted_localized_population();
  const std::string summary_path =
      join_path(out_dir, c.output_prefix + "-summary.json");
  write_json_file(summary_path, s);
  rep.files.push_back(summary_path);
  return rep;
}

// ---- scattering with surrogate overlay -----------------------------------

ScatterResult run_scatter(const ScenarioConfig& c, const std::string& out_dir) {
  const ObservableSpec* tr = nullptr;
  for (const auto& o : c.observables)
    if (o.kind == ObservableSpec::Kind::Transmitted) tr = &o;
  if (!tr) fail("observables", "scatter requires a transmitted observable");

  ScatterResult res;
  res.scenario = run_scenario(c, out_dir);
  res.files = res.scenario.files;

  // surrogate applies to the canonical collision: a 2-tuplet strictly left
  // of an isolated orphan at the transmitted cut, constrained model, open
  const FockState s = parse_loadout(c.loadout);
  if (c.model != ModelKind::Effective || c.params.boundary != Boundary::Open ||
      s.dn != 0)
    return res;
  std::vector<int> sites;
  for (int j = 0; j < c.params.L; ++j)
    if ((s.up >> j) & 1ull) sites.push_back(j);
  if (sites.size() != 3) return res;
  if (sites[1] != sites[0] + 1 || sites[2] <= sites[1] + 1) return res;
  if (tr->j0 != sites[2]) return res;

  // one walker on the impurity chain: the pair enters from 2*(gap) virtual
  // sites out; weight past the impurity counts twice (two atoms per pair)
  const double J = c.params.J;
  const int d_virtual = 2 * (sites[2] - sites[1]);
  const int M =
      std::max(120, int(std::ceil(2.0 * J * (c.plan.tf - c.plan.t0))) +
                        d_virtual + 20);
  const SparseOperator Hc = build_delta_chain(M, 2.0 * J, J);
  Vec p0(size_t(Hc.dim()), cdouble(0.0));
  p0[size_t(chain_index(-d_virtual, M))] = 1.0;
  evolve_grid(Hc, p0, c.plan, [&](double t, const Vec& psi) {
    double w = 0.0;
    for (int i = chain_index(1, M); i < 2 * M + 1; ++i) w += std::norm(psi[i]);
    res.surrogate_times.push_back(t);
    res.surrogate_values.push_back(2.0 * w);
  });
  res.surrogate = true;
  res.asymptote = transmission_total(2.0 * J, J);

  if (out_dir.empty()) return res;
  Metadata meta;
  meta.emplace_back("name", c.name);
  meta.emplace_back("observable", "transmitted_surrogate");
  meta.emplace_back("U_delta", format_double(2.0 * J));
  meta.emplace_back("M", std::to_string(M));
  meta.emplace_back("m_start", std::to_string(-d_virtual));
  meta.emplace_back("asymptote", format_double(res.asymptote));
  const std::string path =
      join_path(out_dir, c.output_prefix + "-surrogate.csv");
  write_series_csv(path, meta, res.surrogate_times, res.surrogate_values,
                   "transmitted_surrogate");
  res.files.push_back(path);
  return res;
}

}  // namespace lfsim
