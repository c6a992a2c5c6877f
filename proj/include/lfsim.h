/* lfsim: resonance-constrained lattice fermion dynamics.
 *
 * C interface to the simulation core. All functions are thread-compatible:
 * distinct handles may be used from distinct threads; a single handle must
 * not be shared without external synchronization. Functions returning int
 * yield an LFSIM_* code; on failure lfsim_last_error() describes the cause
 * for the calling thread. Functions returning pointers yield NULL on
 * failure under the same convention.
 *
 * State vectors cross this interface as interleaved re,im doubles of length
 * 2*dim, index-aligned with the owning basis.
 */
#ifndef LFSIM_H
#define LFSIM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* error codes; the command-line runner reuses them as exit codes */
#define LFSIM_OK 0
#define LFSIM_ERR_CONFIG 1  /* invalid configuration, argument, or input */
#define LFSIM_ERR_RUNTIME 2 /* numerical or I/O failure */
#define LFSIM_ERR_VERIFY 3  /* verification ran and failures are present */

/* "lfsim <semver>" */
const char* lfsim_version(void);

/* message for the last failed call on this thread; "" after a success */
const char* lfsim_last_error(void);

/* ---- model selection ---------------------------------------------------- */

#define LFSIM_BOUNDARY_OPEN 0
#define LFSIM_BOUNDARY_PERIODIC 1

#define LFSIM_MODEL_LAB_FRAME 0  /* driven frame: spin-conserving hops */
#define LFSIM_MODEL_GAUGED 1     /* rotated frame: spin-flip hops */
#define LFSIM_MODEL_EFFECTIVE 2  /* resonance-constrained moves only */
#define LFSIM_MODEL_FLUX_ERROR 3 /* gauged frame with a phase-slip delta_phi */

typedef struct lfsim_params {
  int L;           /* lattice sites */
  int boundary;    /* LFSIM_BOUNDARY_* */
  double J;        /* hop amplitude, > 0 */
  double U;        /* on-site interaction */
  double Omega;    /* drive strength */
  double delta_phi; /* phase slip; read by LFSIM_MODEL_FLUX_ERROR only */
} lfsim_params;

/* ---- handles -------------------------------------------------------------- */

typedef struct lfsim_basis lfsim_basis;       /* ordered set of Fock states */
typedef struct lfsim_operator lfsim_operator; /* sparse Hamiltonian */
typedef struct lfsim_strings lfsim_strings;   /* immutable string list */
typedef struct lfsim_report lfsim_report;     /* verification results */

/* ---- basis ---------------------------------------------------------------- */

/* every state of n_atoms atoms (any spin mix, doublons allowed) on L sites */
lfsim_basis* lfsim_basis_sector(int L, int n_atoms);

/* states reachable from the loadout under the constrained model; loadout
 * characters: '.' empty, 'u' up, 'd' down, 'D' doublon; L = strlen(loadout) */
lfsim_basis* lfsim_basis_reachable(const char* loadout, int boundary);

long long lfsim_basis_dim(const lfsim_basis* b);
int lfsim_basis_sites(const lfsim_basis* b);

/* index of the loadout's state within the basis; -1 when absent */
long long lfsim_basis_index(const lfsim_basis* b, const char* loadout);

/* writes state i as a loadout string; buflen must be at least L+1 */
int lfsim_basis_state(const lfsim_basis* b, long long i, char* buf,
                      size_t buflen);

void lfsim_basis_free(lfsim_basis* b);

/* ---- operators ------------------------------------------------------------ */

/* Hamiltonian of the selected model over the basis; p->L must match */
lfsim_operator* lfsim_build(int model, const lfsim_params* p,
                            const lfsim_basis* b);

long long lfsim_operator_dim(const lfsim_operator* h);
long long lfsim_operator_nnz(const lfsim_operator* h);
int lfsim_operator_is_hermitian(const lfsim_operator* h);

/* y = H x (x, y interleaved re,im of length 2*dim; distinct buffers) */
int lfsim_operator_apply(const lfsim_operator* h, const double* x, double* y);

void lfsim_operator_free(lfsim_operator* h);

/* ---- evolution ------------------------------------------------------------ */

/* called at t0, every dt, and tf; psi is read-only and owned by the callee */
typedef void (*lfsim_sample_fn)(double t, const double* psi, long long dim,
                                void* user);

/* evolves psi (in place, interleaved re,im) under exp(-i H t) from t0 to tf,
 * sampling every dt; dense propagation below ~4k states, Krylov stepping
 * above. on_sample may be NULL. */
int lfsim_evolve(const lfsim_operator* h, double* psi, double t0, double tf,
                 double dt, lfsim_sample_fn on_sample, void* user);

/* ---- observables (psi interleaved re,im over basis b) ---------------------- */

/* per-site densities; each out array has length L (any may be NULL) */
int lfsim_density(const lfsim_basis* b, const double* psi, double* n_up,
                  double* n_dn, double* n_total);

/* doublon count per site, averaged over the lattice */
int lfsim_doublon_number(const lfsim_basis* b, const double* psi, double* out);

/* atoms strictly right of site j0 */
int lfsim_transmitted(const lfsim_basis* b, const double* psi, int j0,
                      double* out);

/* atoms on the listed sites */
int lfsim_population(const lfsim_basis* b, const double* psi, const int* sites,
                     int n_sites, double* out);

/* |<a|b>|^2 for two vectors of the given dimension */
int lfsim_overlap_sq(const double* a, const double* b, long long dim,
                     double* out);

/* ---- closed forms ---------------------------------------------------------- */

double lfsim_bound_falloff(void);     /* b = sqrt(1 + sqrt(2)) per virtual site */
double lfsim_bound_energy(void);      /* sqrt(2) * b, in units of J */
double lfsim_bound_overlap3(void);    /* squared 3-tuplet overlap 1/(2 sqrt 2) */
double lfsim_predicted_localized_population(void); /* 3/2 + 1/sqrt(2) */

/* delta-impurity transmission t(k) and its band average */
int lfsim_transmission_at_k(double k, double U_delta, double J, double* out);
int lfsim_transmission_total(double U_delta, double J, double* out);

/* element-wise comparison of the restricted three-atom model against its
 * virtual-chain image; *ok is 1 on exact agreement */
int lfsim_anderson_mapping(int L, int* ok, double* max_abs_difference);

/* ---- frozen states ---------------------------------------------------------- */

/* product states annihilated by the constrained model, counted by final
 * site; any out pointer may be NULL */
int lfsim_scar_count(int L, long long* ending_up, long long* ending_empty,
                     long long* ending_doublon, long long* total);

/* the frozen configurations themselves, as loadout strings (L <= 12) */
lfsim_strings* lfsim_frozen_states(int L);

/* ---- string lists ----------------------------------------------------------- */

long long lfsim_strings_count(const lfsim_strings* s);
const char* lfsim_strings_get(const lfsim_strings* s, long long i);
void lfsim_strings_free(lfsim_strings* s);

/* ---- runners (JSON config text in, artifact files out) ----------------------- */
/* out_dir "" computes without writing; files (may be NULL) receives the
 * paths written. threads parallelizes independent sweep points. */

int lfsim_run_scenario(const char* config_json, const char* out_dir,
                       lfsim_strings** files);
int lfsim_run_scatter(const char* config_json, const char* out_dir,
                      lfsim_strings** files);
int lfsim_run_sweep(const char* config_json, const char* out_dir, int threads,
                    lfsim_strings** files);
int lfsim_run_boundstates(const char* config_json, const char* out_dir,
                          lfsim_strings** files);
int lfsim_run_scars(const char* config_json, const char* out_dir,
                    lfsim_strings** files);
int lfsim_run_analytic(const char* config_json, const char* out_dir,
                       lfsim_strings** files);

/* ---- verification ------------------------------------------------------------ */

/* runs every release criterion (or one, by 1-based id) */
lfsim_report* lfsim_verify_run(int threads);
lfsim_report* lfsim_verify_run_one(int id, int threads);

int lfsim_report_count(const lfsim_report* r);
int lfsim_report_all_pass(const lfsim_report* r);
int lfsim_report_criterion_id(const lfsim_report* r, int i);
const char* lfsim_report_criterion_name(const lfsim_report* r, int i);
int lfsim_report_criterion_pass(const lfsim_report* r, int i);
double lfsim_report_criterion_seconds(const lfsim_report* r, int i);
/* "" when the criterion's measurements all ran */
const char* lfsim_report_criterion_error(const lfsim_report* r, int i);
/* preformatted "criterion N [name]: pass|FAIL (T s)" line */
const char* lfsim_report_criterion_line(const lfsim_report* r, int i);
int lfsim_report_check_count(const lfsim_report* r, int i);
/* preformatted "ok/FAIL label: measured=... expected=..." line */
const char* lfsim_report_check_line(const lfsim_report* r, int i, int j);
/* full machine-readable report; owned by the handle */
const char* lfsim_report_json(lfsim_report* r);
void lfsim_report_free(lfsim_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LFSIM_H */
