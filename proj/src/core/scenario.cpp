#include "core/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "core/json_util.hpp"
#include "core/operators.hpp"

namespace lfsim {

namespace {

using namespace cfg;

const NameTable<ModelKind> kModels{{{ModelKind::LabFrame, "lab_frame"},
                                    {ModelKind::Gauged, "gauged"},
                                    {ModelKind::Effective, "effective"},
                                    {ModelKind::FluxError, "flux_error"}}};
const NameTable<Boundary> kBoundaries{
    {{Boundary::Open, "open"}, {Boundary::Periodic, "periodic"}}};
const NameTable<EvolveMethod> kMethods{{{EvolveMethod::Auto, "auto"},
                                        {EvolveMethod::Dense, "dense"},
                                        {EvolveMethod::Krylov, "krylov"}}};
const NameTable<ObservableSpec::Kind> kKinds{
    {{ObservableSpec::Kind::Density, "density"},
     {ObservableSpec::Kind::Doublon, "doublon"},
     {ObservableSpec::Kind::Transmitted, "transmitted"},
     {ObservableSpec::Kind::InitialPopulation, "initial_population"},
     {ObservableSpec::Kind::Overlaps, "overlaps"}}};
const NameTable<SweepParameter> kParameters{
    {{SweepParameter::UOverJ, "U_over_J"},
     {SweepParameter::DeltaPhi, "delta_phi"},
     {SweepParameter::DeltaOmega, "delta_omega"}}};
const NameTable<SweepReduction> kReductions{
    {{SweepReduction::DoublonError, "doublon_error"},
     {SweepReduction::SteadyStateDoublonRatio,
      "steady_state_doublon_ratio"}}};

void validate_scenario_ctx(const ScenarioConfig& c, const std::string& ctx) {
  if (c.schema != kConfigSchema)
    fail(sub(ctx, "schema"),
         "unsupported schema (expected " + std::to_string(kConfigSchema) + ")");
  if (c.name.empty()) fail(sub(ctx, "name"), "must be non-empty");
  if (c.params.L < 2 || c.params.L > 48)
    fail(sub(ctx, "L"), "expected 2 <= L <= 48");
  if (!(c.params.J > 0)) fail(sub(ctx, "J"), "must be positive");
  FockState s0;
  try {
    s0 = parse_loadout(c.loadout);
  } catch (const std::exception& e) {
    fail(sub(ctx, "loadout"), e.what());
  }
  if (int(c.loadout.size()) != c.params.L)
    fail(sub(ctx, "loadout"), "length must equal L");
  if (!(c.plan.dt > 0)) fail(sub(ctx, "dt"), "must be positive");
  if (c.plan.tf < c.plan.t0) fail(sub(ctx, "tf"), "must be >= t0");
  if (c.plan.krylov_dim < 2) fail(sub(ctx, "krylov_dim"), "must be >= 2");
  if (!(c.plan.tol > 0)) fail(sub(ctx, "tol"), "must be positive");
  bool seen[5] = {false, false, false, false, false};
  for (size_t i = 0; i < c.observables.size(); ++i) {
    const auto& o = c.observables[i];
    const std::string octx = sub(ctx, "observables[" + std::to_string(i) + "]");
    if (seen[int(o.kind)])
      fail(octx,
           std::string("duplicate observable '") + kKinds.name(o.kind) + "'");
    seen[int(o.kind)] = true;
    switch (o.kind) {
      case ObservableSpec::Kind::Transmitted:
        if (o.j0 < 0 || o.j0 >= c.params.L)
          fail(sub(octx, "j0"), "expected 0 <= j0 < L");
        break;
      case ObservableSpec::Kind::InitialPopulation:
        for (int s : o.sites)
          if (s < 0 || s >= c.params.L)
            fail(sub(octx, "sites"), "site outside [0, L)");
        break;
      case ObservableSpec::Kind::Overlaps: {
        FockState t;
        try {
          t = parse_loadout(o.target);
        } catch (const std::exception& e) {
          fail(sub(octx, "target"), e.what());
        }
        if (int(o.target.size()) != c.params.L)
          fail(sub(octx, "target"), "length must equal L");
        if (t.atoms() != s0.atoms())
          fail(sub(octx, "target"), "atom number differs from the loadout");
        break;
      }
      default:
        break;
    }
  }
  if (c.output_prefix.empty())
    fail(sub(ctx, "output_prefix"), "must be non-empty");
}

void validate_sweep_ctx(const SweepConfig& c, const std::string& ctx) {
  if (c.schema != kConfigSchema)
    fail(sub(ctx, "schema"),
         "unsupported schema (expected " + std::to_string(kConfigSchema) + ")");
  if (c.name.empty()) fail(sub(ctx, "name"), "must be non-empty");
  if (c.values.empty()) fail(sub(ctx, "values"), "must be non-empty");
  validate_scenario_ctx(c.base, sub(ctx, "base"));
  const bool detuning = c.parameter == SweepParameter::DeltaOmega;
  const bool ratio = c.reduction == SweepReduction::SteadyStateDoublonRatio;
  if (detuning != ratio)
    fail(sub(ctx, "reduction"),
         "steady_state_doublon_ratio pairs with delta_omega sweeps and "
         "doublon_error with the others");
  if (c.base.model == ModelKind::Effective)
    fail(sub(ctx, "base.model"),
         "sweeps perturb the full model; 'effective' has no swept parameter");
  if (c.parameter == SweepParameter::DeltaPhi &&
      c.base.model != ModelKind::FluxError)
    fail(sub(ctx, "base.model"), "delta_phi sweeps require model flux_error");
  if (ratio && c.base.plan.tf < 50.0)
    fail(sub(ctx, "base.tf"),
         "steady-state ratio averages tJ in [10, 50]; tf must be >= 50");
  if (c.output_prefix.empty())
    fail(sub(ctx, "output_prefix"), "must be non-empty");
}

ObservableSpec parse_observable(const json& j, const std::string& ctx) {
  if (!j.is_object()) fail(ctx, "expected an object");
  ObservableSpec spec;
  spec.kind = kKinds.parse(require_str(j, "kind", ctx), sub(ctx, "kind"));
  switch (spec.kind) {
    case ObservableSpec::Kind::Transmitted:
      reject_unknown(j, {"kind", "j0"}, ctx);
      spec.j0 = require_int(j, "j0", ctx);
      break;
    case ObservableSpec::Kind::InitialPopulation: {
      reject_unknown(j, {"kind", "sites"}, ctx);
      if (const json* v = find(j, "sites")) {
        if (!v->is_array()) fail(sub(ctx, "sites"), "expected an array");
        for (const auto& e : *v) {
          if (!e.is_number_integer())
            fail(sub(ctx, "sites"), "expected integers");
          spec.sites.push_back(e.get<int>());
        }
      }
      break;
    }
    case ObservableSpec::Kind::Overlaps:
      reject_unknown(j, {"kind", "target"}, ctx);
      spec.target = require_str(j, "target", ctx);
      break;
    default:
      reject_unknown(j, {"kind"}, ctx);
      break;
  }
  return spec;
}

ScenarioConfig parse_scenario_obj(const json& j, const std::string& ctx) {
  reject_unknown(j,
                 {"schema", "name", "model", "L", "boundary", "J", "U", "Omega",
                  "delta_phi", "loadout", "t0", "tf", "dt", "method",
                  "krylov_dim", "tol", "observables", "output_prefix"},
                 ctx);
  ScenarioConfig c;
  c.schema = require_int(j, "schema", ctx);
  c.name = require_str(j, "name", ctx);
  c.model = kModels.parse(require_str(j, "model", ctx), sub(ctx, "model"));
  c.params.L = require_int(j, "L", ctx);
  c.params.boundary = kBoundaries.parse(opt_str(j, "boundary", "open", ctx),
                                        sub(ctx, "boundary"));
  c.params.J = opt_num(j, "J", 1.0, ctx);
  c.params.U = opt_num(j, "U", 0.0, ctx);
  c.params.Omega = opt_num(j, "Omega", 0.0, ctx);
  c.params.delta_phi = opt_num(j, "delta_phi", 0.0, ctx);
  c.loadout = require_str(j, "loadout", ctx);
  c.plan.t0 = opt_num(j, "t0", 0.0, ctx);
  c.plan.tf = require_num(j, "tf", ctx);
  c.plan.dt = opt_num(j, "dt", 0.05, ctx);
  c.plan.method =
      kMethods.parse(opt_str(j, "method", "auto", ctx), sub(ctx, "method"));
  c.plan.krylov_dim = opt_int(j, "krylov_dim", 30, ctx);
  c.plan.tol = opt_num(j, "tol", 1e-9, ctx);
  const json* obs = find(j, "observables");
  if (!obs) fail(sub(ctx, "observables"), "missing required field");
  if (!obs->is_array()) fail(sub(ctx, "observables"), "expected an array");
  for (size_t i = 0; i < obs->size(); ++i)
    c.observables.push_back(parse_observable(
        (*obs)[i], sub(ctx, "observables[" + std::to_string(i) + "]")));
  c.output_prefix = opt_str(j, "output_prefix", c.name, ctx);
  validate_scenario_ctx(c, ctx);
  return c;
}

ojson observable_to_json(const ObservableSpec& o) {
  ojson j;
  j["kind"] = kKinds.name(o.kind);
  switch (o.kind) {
    case ObservableSpec::Kind::Transmitted:
      j["j0"] = o.j0;
      break;
    case ObservableSpec::Kind::InitialPopulation:
      if (!o.sites.empty()) j["sites"] = o.sites;
      break;
    case ObservableSpec::Kind::Overlaps:
      j["target"] = o.target;
      break;
    default:
      break;
  }
  return j;
}

ojson scenario_to_json(const ScenarioConfig& c) {
  ojson j;
  j["schema"] = c.schema;
  j["name"] = c.name;
  j["model"] = kModels.name(c.model);
  j["L"] = c.params.L;
  j["boundary"] = kBoundaries.name(c.params.boundary);
  j["J"] = c.params.J;
  j["U"] = c.params.U;
  j["Omega"] = c.params.Omega;
  j["delta_phi"] = c.params.delta_phi;
  j["loadout"] = c.loadout;
  j["t0"] = c.plan.t0;
  j["tf"] = c.plan.tf;
  j["dt"] = c.plan.dt;
  j["method"] = kMethods.name(c.plan.method);
  j["krylov_dim"] = c.plan.krylov_dim;
  j["tol"] = c.plan.tol;
  j["observables"] = ojson::array();
  for (const auto& o : c.observables)
    j["observables"].push_back(observable_to_json(o));
  j["output_prefix"] = c.output_prefix;
  return j;
}

const char* scalar_label(ObservableSpec::Kind k) {
  switch (k) {
    case ObservableSpec::Kind::Doublon: return "doublon";
    case ObservableSpec::Kind::Transmitted: return "transmitted";
    case ObservableSpec::Kind::InitialPopulation: return "initial_population";
    case ObservableSpec::Kind::Overlaps: return "overlap";
    default: return "density";
  }
}

Metadata scenario_meta(const ScenarioConfig& c, int dim, EvolveMethod used) {
  Metadata m;
  m.emplace_back("name", c.name);
  m.emplace_back("model", kModels.name(c.model));
  m.emplace_back("L", std::to_string(c.params.L));
  m.emplace_back("boundary", kBoundaries.name(c.params.boundary));
  m.emplace_back("J", format_double(c.params.J));
  m.emplace_back("U", format_double(c.params.U));
  m.emplace_back("Omega", format_double(c.params.Omega));
  m.emplace_back("delta_phi", format_double(c.params.delta_phi));
  m.emplace_back("loadout", c.loadout);
  m.emplace_back("t0", format_double(c.plan.t0));
  m.emplace_back("tf", format_double(c.plan.tf));
  m.emplace_back("dt", format_double(c.plan.dt));
  m.emplace_back("method", kMethods.name(used));
  m.emplace_back("basis_dim", std::to_string(dim));
  return m;
}

std::string join_path(const std::string& dir, const std::string& file) {
  return (std::filesystem::path(dir) / file).string();
}

EvolveMethod resolve_method(EvolveMethod m, int dim) {
  if (m != EvolveMethod::Auto) return m;
  return dim <= kDenseCutoffDim ? EvolveMethod::Dense : EvolveMethod::Krylov;
}

}  // namespace

const char* model_name(ModelKind m) { return kModels.name(m); }
const char* parameter_name(SweepParameter p) { return kParameters.name(p); }

void validate_scenario(const ScenarioConfig& c) {
  validate_scenario_ctx(c, "");
}

void validate_sweep(const SweepConfig& c) { validate_sweep_ctx(c, ""); }

ScenarioConfig parse_scenario(const std::string& json_text) {
  return parse_scenario_obj(parse_json_text(json_text), "");
}

SweepConfig parse_sweep(const std::string& json_text) {
  const json j = parse_json_text(json_text);
  reject_unknown(j,
                 {"schema", "name", "parameter", "values", "reduction", "base",
                  "output_prefix"},
                 "");
  SweepConfig c;
  c.schema = require_int(j, "schema", "");
  c.name = require_str(j, "name", "");
  c.parameter = kParameters.parse(require_str(j, "parameter", ""), "parameter");
  const json* vals = find(j, "values");
  if (!vals) fail("values", "missing required field");
  if (!vals->is_array()) fail("values", "expected an array");
  for (const auto& e : *vals) {
    if (!e.is_number()) fail("values", "expected numbers");
    c.values.push_back(e.get<double>());
  }
  c.reduction = kReductions.parse(require_str(j, "reduction", ""), "reduction");
  const json* base = find(j, "base");
  if (!base) fail("base", "missing required field");
  c.base = parse_scenario_obj(*base, "base");
  c.output_prefix = opt_str(j, "output_prefix", c.name, "");
  validate_sweep_ctx(c, "");
  return c;
}

std::string format_scenario(const ScenarioConfig& c) {
  return scenario_to_json(c).dump(2) + "\n";
}

std::string format_sweep(const SweepConfig& c) {
  ojson j;
  j["schema"] = c.schema;
  j["name"] = c.name;
  j["parameter"] = kParameters.name(c.parameter);
  j["values"] = c.values;
  j["reduction"] = kReductions.name(c.reduction);
  j["base"] = scenario_to_json(c.base);
  j["output_prefix"] = c.output_prefix;
  return j.dump(2) + "\n";
}

Basis scenario_basis(const ScenarioConfig& c) {
  const FockState s0 = parse_loadout(c.loadout);
  if (c.model == ModelKind::Effective) return reachable_effective(c.params, s0);
  return enumerate_basis(c.params.L, s0.atoms());
}

SparseOperator build_model(ModelKind model, const ModelParams& p,
                           const Basis& basis, SignMode mode) {
  switch (model) {
    case ModelKind::LabFrame: return build_lab_frame(p, basis, mode);
    case ModelKind::Gauged: return build_gauged(p, basis, mode);
    case ModelKind::FluxError: return build_flux_error(p, basis, mode);
    default: return build_effective(p, basis, mode);
  }
}

ScenarioResult run_scenario(const ScenarioConfig& c,
                            const std::string& out_dir) {
  validate_scenario(c);
  ScenarioResult res;
  res.basis = scenario_basis(c);
  const Basis& basis = res.basis;
  const SparseOperator H = build_model(c.model, c.params, basis);

  const FockState s0 = parse_loadout(c.loadout);
  const int i0 = basis.index(s0);
  if (i0 < 0) throw std::runtime_error("loadout state missing from sector");
  Vec psi0(basis.dim(), cdouble(0.0));
  psi0[i0] = 1.0;

  res.method_used = resolve_method(c.plan.method, basis.dim());

  bool want_density = false;
  std::vector<std::pair<ObservableSpec, std::string>> scalars;
  std::vector<int> init_sites;
  int target_index = -1;
  for (const auto& o : c.observables) {
    if (o.kind == ObservableSpec::Kind::Density) {
      want_density = true;
      continue;
    }
    if (o.kind == ObservableSpec::Kind::InitialPopulation) {
      init_sites = o.sites;
      if (init_sites.empty()) {
        for (int j = 0; j < c.params.L; ++j)
          if (s0.occ(j) != SiteOcc::Empty) init_sites.push_back(j);
      }
    }
    if (o.kind == ObservableSpec::Kind::Overlaps) {
      target_index = basis.index(parse_loadout(o.target));
      if (target_index < 0)
        fail("observables.target", "state is outside the run's sector");
    }
    scalars.emplace_back(o, scalar_label(o.kind));
    res.series[scalar_label(o.kind)];
  }

  evolve_grid(H, psi0, c.plan, [&](double t, const Vec& psi) {
    res.times.push_back(t);
    if (want_density) res.profiles.push_back(density(psi, basis));
    for (const auto& [o, label] : scalars) {
      double v = 0.0;
      switch (o.kind) {
        case ObservableSpec::Kind::Doublon:
          v = doublon_number(psi, basis);
          break;
        case ObservableSpec::Kind::Transmitted:
          v = transmitted(psi, basis, o.j0);
          break;
        case ObservableSpec::Kind::InitialPopulation:
          v = population(psi, basis, init_sites);
          break;
        case ObservableSpec::Kind::Overlaps:
          v = std::norm(psi[target_index]);
          break;
        default:
          break;
      }
      res.series[label].push_back(v);
    }
  });

  if (out_dir.empty()) return res;
  std::filesystem::create_directories(out_dir);
  const Metadata base_meta = scenario_meta(c, basis.dim(), res.method_used);
  for (const auto& o : c.observables) {
    Metadata meta = base_meta;
    std::string detail = kKinds.name(o.kind);
    if (o.kind == ObservableSpec::Kind::Transmitted)
      detail += " j0=" + std::to_string(o.j0);
    if (o.kind == ObservableSpec::Kind::InitialPopulation) {
      detail += " sites=";
      for (size_t k = 0; k < init_sites.size(); ++k)
        detail += (k ? " " : "") + std::to_string(init_sites[k]);
    }
    if (o.kind == ObservableSpec::Kind::Overlaps) detail += " target=" + o.target;
    meta.emplace_back("observable", detail);

    const std::string label = scalar_label(o.kind);
    const bool is_density = o.kind == ObservableSpec::Kind::Density;
    const std::string path = join_path(
        out_dir,
        c.output_prefix + "-" + (is_density ? "density" : label) + ".csv");
    if (is_density)
      write_profile_csv(path, meta, res.times, res.profiles);
    else
      write_series_csv(path, meta, res.times, res.series.at(label));
    res.files.push_back(path);
  }
  return res;
}

LorentzianFit fit_lorentzian(const std::vector<double>& x,
                             const std::vector<double>& y) {
  // amplitude is closed-form for a fixed width, so only the width is searched
  // (golden section on [0.5, 50]; the objective is smooth and unimodal here)
  auto sse = [&](double w, double* a_out) {
    double ff = 0.0, fy = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double f = 1.0 / (1.0 + (x[i] / w) * (x[i] / w));
      ff += f * f;
      fy += f * y[i];
    }
    const double a = fy / ff;
    double s = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
      const double f = 1.0 / (1.0 + (x[i] / w) * (x[i] / w));
      const double r = a * f - y[i];
      s += r * r;
    }
    if (a_out) *a_out = a;
    return s;
  };
  double lo = 0.5, hi = 50.0;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 120; ++it) {
    const double cc = hi - gr * (hi - lo);
    const double dd = lo + gr * (hi - lo);
    if (sse(cc, nullptr) < sse(dd, nullptr))
      hi = dd;
    else
      lo = cc;
  }
  LorentzianFit fit;
  fit.w = 0.5 * (lo + hi);
  sse(fit.w, &fit.a);
  fit.ok = std::isfinite(fit.a) && std::isfinite(fit.w) && fit.a > 0.0 &&
           fit.w - 0.5 > 1e-6 && 50.0 - fit.w > 1e-6;
  return fit;
}

namespace {

// doublon trajectory of one sweep point on the base scenario's time grid
std::vector<double> point_doublon_series(const ScenarioConfig& base,
                                         ModelKind model,
                                         const ModelParams& params,
                                         const Basis& basis) {
  const SparseOperator H = build_model(model, params, basis);
  const FockState s0 = parse_loadout(base.loadout);
  Vec psi0(basis.dim(), cdouble(0.0));
  psi0[basis.index(s0)] = 1.0;
  std::vector<double> out;
  evolve_grid(H, psi0, base.plan, [&](double, const Vec& psi) {
    out.push_back(doublon_number(psi, basis));
  });
  return out;
}

ModelParams point_params(const SweepConfig& c, double v) {
  ModelParams p = c.base.params;
  switch (c.parameter) {
    case SweepParameter::UOverJ:
      p.U = v;
      p.Omega = v;  // the drive tracks the interaction to stay on resonance
      break;
    case SweepParameter::DeltaPhi:
      p.delta_phi = v;
      break;
    case SweepParameter::DeltaOmega:
      p.Omega = p.U - v;
      break;
  }
  return p;
}

}  // namespace

SweepResult run_sweep(const SweepConfig& c, const std::string& out_dir,
                      int threads) {
  validate_sweep(c);
  SweepResult res;
  res.values = c.values;
  const size_t n = c.values.size();

  const Basis sector =
      enumerate_basis(c.base.params.L, parse_loadout(c.base.loadout).atoms());

  // the constrained-model reference trajectory for the error reduction
  std::vector<double> ideal;
  if (c.reduction == SweepReduction::DoublonError) {
    ScenarioConfig eff = c.base;
    eff.model = ModelKind::Effective;
    ideal = point_doublon_series(c.base, ModelKind::Effective, eff.params,
                                 scenario_basis(eff));
  }

  std::vector<std::vector<double>> series(n);
  std::atomic<size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= n) return;
      {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (first_error) return;
      }
      try {
        series[i] = point_doublon_series(c.base, c.base.model,
                                         point_params(c, c.values[i]), sector);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(threads, int(n)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  res.reduced.resize(n);
  if (c.reduction == SweepReduction::DoublonError) {
    for (size_t i = 0; i < n; ++i)
      res.reduced[i] = doublon_error(series[i], ideal, c.base.plan.dt);
  } else {
    // normalize the steady-state mean by its resonant (delta_omega = 0) value
    auto window = [&](const std::vector<double>& y) {
      return window_mean(y, c.base.plan.t0, c.base.plan.dt, 10.0, 50.0);
    };
    double base_mean = 0.0;
    bool have_base = false;
    for (size_t i = 0; i < n; ++i) {
      if (c.values[i] == 0.0) {
        base_mean = window(series[i]);
        have_base = true;
        break;
      }
    }
    if (!have_base)
      base_mean = window(point_doublon_series(c.base, c.base.model,
                                              point_params(c, 0.0), sector));
    if (base_mean == 0.0)
      throw std::runtime_error(
          "resonant doublon mean vanished; cannot normalize");
    for (size_t i = 0; i < n; ++i)
      res.reduced[i] = window(series[i]) / base_mean;
    res.fit = fit_lorentzian(res.values, res.reduced);
    res.fit.coefficient =
        res.fit.ok ? 2.0 * c.base.params.U / (res.fit.w * c.base.params.J)
                   : 0.0;
  }

  if (out_dir.empty()) return res;
  std::filesystem::create_directories(out_dir);
  Metadata meta =
      scenario_meta(c.base, sector.dim(),
                    resolve_method(c.base.plan.method, sector.dim()));
  meta.emplace_back("parameter", kParameters.name(c.parameter));
  meta.emplace_back("reduction", kReductions.name(c.reduction));
  const std::string csv_path = join_path(out_dir, c.output_prefix + "-sweep.csv");
  write_series_csv(csv_path, meta, res.values, res.reduced, "value",
                   kParameters.name(c.parameter));
  res.files.push_back(csv_path);

  ojson summary;
  summary["schema"] = kConfigSchema;
  summary["name"] = c.name;
  summary["parameter"] = kParameters.name(c.parameter);
  summary["reduction"] = kReductions.name(c.reduction);
  summary["U"] = c.base.params.U;
  summary["J"] = c.base.params.J;
  summary["values"] = res.values;
  summary["reduced"] = res.reduced;
  if (c.reduction == SweepReduction::SteadyStateDoublonRatio) {
    if (res.fit.ok) {
      ojson fit;
      fit["a"] = res.fit.a;
      fit["w"] = res.fit.w;
      fit["coefficient"] = res.fit.coefficient;
      summary["fit"] = fit;
    } else {
      summary["fit"] = nullptr;  // divergent fit: skipped, the data stands
    }
  }
  const std::string json_path =
      join_path(out_dir, c.output_prefix + "-sweep.json");
  {
    std::ofstream out(json_path);
    if (!out)
      throw std::runtime_error("cannot open for writing: " + json_path);
    out << summary.dump(2) << "\n";
  }
  res.files.push_back(json_path);
  return res;
}

}  // namespace lfsim
