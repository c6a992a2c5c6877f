#pragma once
// Unitary time evolution under a fixed Hermitian operator: a dense spectral
// path for small problems and a Lanczos (Krylov) exponential with adaptive
// substepping for large ones. Method "auto" switches on basis dimension.

#include <functional>
#include <vector>

#include "core/operators.hpp"

namespace lfsim {

enum class EvolveMethod { Auto, Dense, Krylov };

struct EvolutionPlan {
  double t0 = 0.0;
  double tf = 0.0;
  double dt = 0.05;                       // observable grid spacing
  EvolveMethod method = EvolveMethod::Auto;
  int krylov_dim = 30;
  double tol = 1e-9;                      // per-step local error target

  bool operator==(const EvolutionPlan&) const = default;
};

inline constexpr int kDenseCutoffDim = 4096;

// spectral propagator: diagonalize once, then any t in O(dim^2)
class DensePropagator {
 public:
  DensePropagator(const SparseOperator& H);
  // psi(t) = exp(-i H t) psi0
  Vec apply(const Vec& psi0, double t) const;
  int dim() const { return dim_; }

 private:
  int dim_;
  bool real_;
  std::vector<double> w_;
  std::vector<double> Vr_;    // row-major eigenvectors (real path)
  std::vector<cdouble> Vc_;   // (complex path)
};

// single adaptive Krylov step: advances psi by dt in place, returns the
// number of substeps taken
int krylov_step(const SparseOperator& H, Vec& psi, double dt, int m,
                double tol);

// evolve and invoke on_sample(t, psi) at t0, t0+dt, ..., tf (inclusive, with
// a final short step when (tf - t0) is not a multiple of dt)
void evolve_grid(const SparseOperator& H, const Vec& psi0,
                 const EvolutionPlan& plan,
                 const std::function<void(double, const Vec&)>& on_sample);

struct EigenPairs {
  std::vector<double> values;
  std::vector<Vec> vectors;     // normalized, deterministic phase
  std::vector<double> residuals;
};

// extremal_k = 0: all eigenpairs by dense solve (dimension capped at the
// dense cutoff), values ascending. extremal_k > 0: the k largest-magnitude
// pairs by Lanczos, residuals below 1e-8 or the call throws.
EigenPairs eigensolve(const SparseOperator& H, int extremal_k = 0);

}  // namespace lfsim
