// C interface over the simulation core. Exceptions stop at this boundary:
// every entry point traps, records the message in thread-local storage, and
// maps configuration faults / runtime faults onto the two error codes the
// command-line runner reuses as exit codes.

#include "lfsim.h"

#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "core/analytic.hpp"
#include "core/boundstates.hpp"
#include "core/chains.hpp"
#include "core/evolve.hpp"
#include "core/fock.hpp"
#include "core/io.hpp"
#include "core/observables.hpp"
#include "core/operators.hpp"
#include "core/reports.hpp"
#include "core/scars.hpp"
#include "core/scenario.hpp"
#include "core/verification.hpp"

using namespace lfsim;

extern "C" {

struct lfsim_basis {
  Basis b;
};
struct lfsim_operator {
  SparseOperator H;
};
struct lfsim_strings {
  std::vector<std::string> items;
};
struct lfsim_report {
  VerificationReport rep;
  std::string json_cache;
  std::vector<std::string> criterion_lines;
  std::vector<std::vector<std::string>> check_lines;
};

}  // extern "C"

namespace {

thread_local std::string g_error;

void clear_error() { g_error.clear(); }

// ConfigError and argument faults are the caller's input; the rest is ours
template <class F>
int guarded(F&& f) {
  clear_error();
  try {
    f();
    return LFSIM_OK;
  } catch (const ConfigError& e) {
    g_error = e.what();
    return LFSIM_ERR_CONFIG;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return LFSIM_ERR_CONFIG;
  } catch (const std::exception& e) {
    g_error = e.what();
    return LFSIM_ERR_RUNTIME;
  } catch (...) {
    g_error = "unknown failure";
    return LFSIM_ERR_RUNTIME;
  }
}

template <class F>
auto guarded_ptr(F&& f) -> decltype(f()) {
  clear_error();
  try {
    return f();
  } catch (const std::exception& e) {
    g_error = e.what();
    return nullptr;
  } catch (...) {
    g_error = "unknown failure";
    return nullptr;
  }
}

int require(bool cond, const char* msg) {
  if (cond) return LFSIM_OK;
  g_error = msg;
  return LFSIM_ERR_CONFIG;
}

Boundary to_boundary(int code) {
  switch (code) {
    case LFSIM_BOUNDARY_OPEN: return Boundary::Open;
    case LFSIM_BOUNDARY_PERIODIC: return Boundary::Periodic;
    default: throw std::invalid_argument("boundary: expected 0 (open) or 1 (periodic)");
  }
}

ModelKind to_model(int code) {
  switch (code) {
    case LFSIM_MODEL_LAB_FRAME: return ModelKind::LabFrame;
    case LFSIM_MODEL_GAUGED: return ModelKind::Gauged;
    case LFSIM_MODEL_EFFECTIVE: return ModelKind::Effective;
    case LFSIM_MODEL_FLUX_ERROR: return ModelKind::FluxError;
    default: throw std::invalid_argument("model: expected a LFSIM_MODEL_* code");
  }
}

ModelParams to_params(const lfsim_params* p) {
  if (!p) throw std::invalid_argument("params must not be NULL");
  ModelParams m;
  m.L = p->L;
  m.boundary = to_boundary(p->boundary);
  m.J = p->J;
  m.U = p->U;
  m.Omega = p->Omega;
  m.delta_phi = p->delta_phi;
  return m;
}

// interleaved re,im <-> std::complex<double> (identical memory layout)
Vec to_vec(const double* psi, int dim) {
  if (!psi) throw std::invalid_argument("state vector must not be NULL");
  Vec v(size_t(dim), cdouble(0.0));
  std::memcpy(reinterpret_cast<double*>(v.data()), psi,
              size_t(dim) * 2 * sizeof(double));
  return v;
}

lfsim_strings* to_strings(std::vector<std::string> items) {
  auto* s = new lfsim_strings;
  s->items = std::move(items);
  return s;
}

lfsim_report* to_report(VerificationReport rep) {
  auto* r = new lfsim_report;
  r->rep = std::move(rep);
  for (const auto& c : r->rep.criteria) {
    r->criterion_lines.push_back(format_criterion_line(c));
    std::vector<std::string> lines;
    lines.reserve(c.checks.size());
    for (const auto& k : c.checks) lines.push_back(format_check_line(k));
    r->check_lines.push_back(std::move(lines));
  }
  return r;
}

bool criterion_ok(const lfsim_report* r, int i) {
  return r && i >= 0 && size_t(i) < r->rep.criteria.size();
}

// shared by the six config-driven runners
template <class Run>
int run_from_json(const char* config_json, const char* out_dir,
                  lfsim_strings** files, Run&& run) {
  if (files) *files = nullptr;
  int rc = require(config_json != nullptr, "config text must not be NULL");
  if (rc != LFSIM_OK) return rc;
  return guarded([&] {
    std::vector<std::string> produced =
        run(std::string(config_json), std::string(out_dir ? out_dir : ""));
    if (files) *files = to_strings(std::move(produced));
  });
}

}  // namespace

extern "C" {

const char* lfsim_version(void) { return kVersionString; }

const char* lfsim_last_error(void) { return g_error.c_str(); }

/* ---- basis ---- */

lfsim_basis* lfsim_basis_sector(int L, int n_atoms) {
  return guarded_ptr([&]() -> lfsim_basis* {
    return new lfsim_basis{enumerate_basis(L, n_atoms)};
  });
}

lfsim_basis* lfsim_basis_reachable(const char* loadout, int boundary) {
  return guarded_ptr([&]() -> lfsim_basis* {
    if (!loadout) throw std::invalid_argument("loadout must not be NULL");
    ModelParams p;
    p.L = int(std::strlen(loadout));
    p.boundary = to_boundary(boundary);
    return new lfsim_basis{reachable_effective(p, parse_loadout(loadout))};
  });
}

long long lfsim_basis_dim(const lfsim_basis* b) { return b ? b->b.dim() : 0; }

int lfsim_basis_sites(const lfsim_basis* b) { return b ? b->b.L() : 0; }

long long lfsim_basis_index(const lfsim_basis* b, const char* loadout) {
  if (int rc = require(b && loadout, "basis and loadout must not be NULL"); rc != LFSIM_OK)
    return -1;
  long long idx = -1;
  int rc = guarded([&] {
    FockState s = parse_loadout(loadout);
    if (int(std::strlen(loadout)) != b->b.L())
      throw std::invalid_argument("loadout length must equal the basis L");
    idx = b->b.index(s);
  });
  return rc == LFSIM_OK ? idx : -1;
}

int lfsim_basis_state(const lfsim_basis* b, long long i, char* buf,
                      size_t buflen) {
  if (int rc = require(b && buf, "basis and buffer must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    if (i < 0 || i >= b->b.dim())
      throw std::invalid_argument("state index out of range");
    const std::string s = format_loadout(b->b.state(int(i)), b->b.L());
    if (buflen < s.size() + 1)
      throw std::invalid_argument("buffer must hold at least L+1 bytes");
    std::memcpy(buf, s.c_str(), s.size() + 1);
  });
}

void lfsim_basis_free(lfsim_basis* b) { delete b; }

/* ---- operators ---- */

lfsim_operator* lfsim_build(int model, const lfsim_params* p,
                            const lfsim_basis* b) {
  return guarded_ptr([&]() -> lfsim_operator* {
    if (!b) throw std::invalid_argument("basis must not be NULL");
    return new lfsim_operator{build_model(to_model(model), to_params(p), b->b)};
  });
}

long long lfsim_operator_dim(const lfsim_operator* h) {
  return h ? h->H.dim() : 0;
}

long long lfsim_operator_nnz(const lfsim_operator* h) {
  return h ? (long long)h->H.triplets().size() : 0;
}

int lfsim_operator_is_hermitian(const lfsim_operator* h) {
  return (h && h->H.is_hermitian()) ? 1 : 0;
}

int lfsim_operator_apply(const lfsim_operator* h, const double* x, double* y) {
  if (int rc = require(h && x && y, "operator and vectors must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    h->H.matvec(reinterpret_cast<const cdouble*>(x),
                reinterpret_cast<cdouble*>(y));
  });
}

void lfsim_operator_free(lfsim_operator* h) { delete h; }

/* ---- evolution ---- */

int lfsim_evolve(const lfsim_operator* h, double* psi, double t0, double tf,
                 double dt, lfsim_sample_fn on_sample, void* user) {
  if (int rc = require(h && psi, "operator and state must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    const int dim = h->H.dim();
    Vec v = to_vec(psi, dim);
    EvolutionPlan plan;
    plan.t0 = t0;
    plan.tf = tf;
    plan.dt = dt;
    Vec last;
    evolve_grid(h->H, v, plan, [&](double t, const Vec& sample) {
      if (on_sample)
        on_sample(t, reinterpret_cast<const double*>(sample.data()), dim,
                  user);
      last = sample;
    });
    std::memcpy(psi, last.data(), size_t(dim) * 2 * sizeof(double));
  });
}

/* ---- observables ---- */

int lfsim_density(const lfsim_basis* b, const double* psi, double* n_up,
                  double* n_dn, double* n_total) {
  if (int rc = require(b != nullptr, "basis must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    const DensityProfile d = density(to_vec(psi, b->b.dim()), b->b);
    const size_t L = size_t(b->b.L());
    if (n_up) std::memcpy(n_up, d.n_up.data(), L * sizeof(double));
    if (n_dn) std::memcpy(n_dn, d.n_dn.data(), L * sizeof(double));
    if (n_total) std::memcpy(n_total, d.n.data(), L * sizeof(double));
  });
}

int lfsim_doublon_number(const lfsim_basis* b, const double* psi,
                         double* out) {
  if (int rc = require(b && out, "basis and out must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] { *out = doublon_number(to_vec(psi, b->b.dim()), b->b); });
}

int lfsim_transmitted(const lfsim_basis* b, const double* psi, int j0,
                      double* out) {
  if (int rc = require(b && out, "basis and out must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    *out = transmitted(to_vec(psi, b->b.dim()), b->b, j0);
  });
}

int lfsim_population(const lfsim_basis* b, const double* psi, const int* sites,
                     int n_sites, double* out) {
  if (int rc = require(b && out && (sites || n_sites == 0),
                       "basis, sites, and out must not be NULL");
      rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    *out = population(to_vec(psi, b->b.dim()), b->b,
                      std::vector<int>(sites, sites + n_sites));
  });
}

int lfsim_overlap_sq(const double* a, const double* b, long long dim,
                     double* out) {
  if (int rc = require(a && b && out, "vectors and out must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    if (dim <= 0) throw std::invalid_argument("dim must be positive");
    *out = overlap_sq(to_vec(a, int(dim)), to_vec(b, int(dim)));
  });
}

/* ---- closed forms ---- */

double lfsim_bound_falloff(void) { return bound_state_constants().b; }

double lfsim_bound_energy(void) { return bound_state_constants().E; }

double lfsim_bound_overlap3(void) { return bound_state_constants().overlap3; }

double lfsim_predicted_localized_population(void) {
  return predicted_localized_population();
}

int lfsim_transmission_at_k(double k, double U_delta, double J, double* out) {
  if (int rc = require(out != nullptr, "out must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] { *out = transmission_at_k(k, U_delta, J); });
}

int lfsim_transmission_total(double U_delta, double J, double* out) {
  if (int rc = require(out != nullptr, "out must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] { *out = transmission_total(U_delta, J); });
}

int lfsim_anderson_mapping(int L, int* ok, double* max_abs_difference) {
  if (int rc = require(ok != nullptr, "ok must not be NULL"); rc != LFSIM_OK)
    return rc;
  return guarded([&] {
    const MappingReport r = verify_anderson_mapping(L);
    *ok = r.ok ? 1 : 0;
    if (max_abs_difference) *max_abs_difference = r.max_abs_difference;
  });
}

/* ---- frozen states ---- */

int lfsim_scar_count(int L, long long* ending_up, long long* ending_empty,
                     long long* ending_doublon, long long* total) {
  return guarded([&] {
    const ScarCount c = scar_count(L);
    if (ending_up) *ending_up = c.ending_up;
    if (ending_empty) *ending_empty = c.ending_empty;
    if (ending_doublon) *ending_doublon = c.ending_doublon;
    if (total) *total = c.total();
  });
}

lfsim_strings* lfsim_frozen_states(int L) {
  return guarded_ptr([&]() -> lfsim_strings* {
    std::vector<std::string> out;
    for (const FockState& s : enumerate_frozen_states(L))
      out.push_back(format_loadout(s, L));
    return to_strings(std::move(out));
  });
}

/* ---- string lists ---- */

long long lfsim_strings_count(const lfsim_strings* s) {
  return s ? (long long)s->items.size() : 0;
}

const char* lfsim_strings_get(const lfsim_strings* s, long long i) {
  if (!s || i < 0 || size_t(i) >= s->items.size()) return nullptr;
  return s->items[size_t(i)].c_str();
}

void lfsim_strings_free(lfsim_strings* s) { delete s; }

/* ---- runners ---- */

int lfsim_run_scenario(const char* config_json, const char* out_dir,
                       lfsim_strings** files) {
  return run_from_json(config_json, out_dir, files,
                       [](const std::string& text, const std::string& dir) {
                         return run_scenario(parse_scenario(text), dir).files;
                       });
}

int lfsim_run_scatter(const char* config_json, const char* out_dir,
                      lfsim_strings** files) {
  return run_from_json(config_json, out_dir, files,
                       [](const std::string& text, const std::string& dir) {
                         return run_scatter(parse_scenario(text), dir).files;
                       });
}

int lfsim_run_sweep(const char* config_json, const char* out_dir, int threads,
                    lfsim_strings** files) {
  return run_from_json(config_json, out_dir, files,
                       [threads](const std::string& text,
                                 const std::string& dir) {
                         return run_sweep(parse_sweep(text), dir, threads).files;
                       });
}

int lfsim_run_boundstates(const char* config_json, const char* out_dir,
                          lfsim_strings** files) {
  return run_from_json(
      config_json, out_dir, files,
      [](const std::string& text, const std::string& dir) {
        return run_boundstates(parse_boundstate_config(text), dir).files;
      });
}

int lfsim_run_scars(const char* config_json, const char* out_dir,
                    lfsim_strings** files) {
  return run_from_json(config_json, out_dir, files,
                       [](const std::string& text, const std::string& dir) {
                         return run_scars(parse_scar_config(text), dir).files;
                       });
}

int lfsim_run_analytic(const char* config_json, const char* out_dir,
                       lfsim_strings** files) {
  return run_from_json(
      config_json, out_dir, files,
      [](const std::string& text, const std::string& dir) {
        return run_analytic(parse_analytic_config(text), dir).files;
      });
}

/* ---- verification ---- */

lfsim_report* lfsim_verify_run(int threads) {
  return guarded_ptr([&]() -> lfsim_report* {
    return to_report(run_verification_suite(threads));
  });
}

lfsim_report* lfsim_verify_run_one(int id, int threads) {
  return guarded_ptr([&]() -> lfsim_report* {
    VerificationReport rep;
    rep.criteria.push_back(run_criterion(id, threads));
    return to_report(std::move(rep));
  });
}

int lfsim_report_count(const lfsim_report* r) {
  return r ? int(r->rep.criteria.size()) : 0;
}

int lfsim_report_all_pass(const lfsim_report* r) {
  return (r && r->rep.all_pass()) ? 1 : 0;
}

int lfsim_report_criterion_id(const lfsim_report* r, int i) {
  return criterion_ok(r, i) ? r->rep.criteria[size_t(i)].id : -1;
}

const char* lfsim_report_criterion_name(const lfsim_report* r, int i) {
  return criterion_ok(r, i) ? r->rep.criteria[size_t(i)].name.c_str() : nullptr;
}

int lfsim_report_criterion_pass(const lfsim_report* r, int i) {
  return (criterion_ok(r, i) && r->rep.criteria[size_t(i)].pass) ? 1 : 0;
}

double lfsim_report_criterion_seconds(const lfsim_report* r, int i) {
  return criterion_ok(r, i) ? r->rep.criteria[size_t(i)].seconds : 0.0;
}

const char* lfsim_report_criterion_error(const lfsim_report* r, int i) {
  return criterion_ok(r, i) ? r->rep.criteria[size_t(i)].error.c_str()
                            : nullptr;
}

const char* lfsim_report_criterion_line(const lfsim_report* r, int i) {
  return criterion_ok(r, i) ? r->criterion_lines[size_t(i)].c_str() : nullptr;
}

int lfsim_report_check_count(const lfsim_report* r, int i) {
  return criterion_ok(r, i) ? int(r->rep.criteria[size_t(i)].checks.size())
                            : 0;
}

const char* lfsim_report_check_line(const lfsim_report* r, int i, int j) {
  if (!criterion_ok(r, i)) return nullptr;
  const auto& lines = r->check_lines[size_t(i)];
  if (j < 0 || size_t(j) >= lines.size()) return nullptr;
  return lines[size_t(j)].c_str();
}

const char* lfsim_report_json(lfsim_report* r) {
  if (!r) return nullptr;
  if (r->json_cache.empty()) r->json_cache = format_report_json(r->rep);
  return r->json_cache.c_str();
}

void lfsim_report_free(lfsim_report* r) { delete r; }

}  // extern "C"
