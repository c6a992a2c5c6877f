#include "core/evolve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "core/linalg.hpp"

namespace lfsim {

DensePropagator::DensePropagator(const SparseOperator& H) : dim_(H.dim()), real_(H.is_real()) {
  if (!H.is_hermitian()) throw std::invalid_argument("DensePropagator: operator not Hermitian");
  if (real_) {
    EigReal e = eigh(H.dense_real(), dim_);
    w_ = std::move(e.w);
    Vr_ = std::move(e.V);
  } else {
    EigComplex e = eigh(H.dense_complex(), dim_);
    w_ = std::move(e.w);
    Vc_ = std::move(e.V);
  }
}

Vec DensePropagator::apply(const Vec& psi0, double t) const {
  if (static_cast<int>(psi0.size()) != dim_) throw std::invalid_argument("DensePropagator: size mismatch");
  const int n = dim_;
  Vec c(n, 0.0), out(n, 0.0);
  if (real_) {
    for (int k = 0; k < n; ++k) {
      cdouble s = 0.0;
      for (int i = 0; i < n; ++i) s += Vr_[size_t(i) * n + k] * psi0[i];
      c[k] = s * std::polar(1.0, -w_[k] * t);
    }
    for (int i = 0; i < n; ++i) {
      cdouble s = 0.0;
      for (int k = 0; k < n; ++k) s += Vr_[size_t(i) * n + k] * c[k];
      out[i] = s;
    }
  } else {
    for (int k = 0; k < n; ++k) {
      cdouble s = 0.0;
      for (int i = 0; i < n; ++i) s += std::conj(Vc_[size_t(i) * n + k]) * psi0[i];
      c[k] = s * std::polar(1.0, -w_[k] * t);
    }
    for (int i = 0; i < n; ++i) {
      cdouble s = 0.0;
      for (int k = 0; k < n; ++k) s += Vc_[size_t(i) * n + k] * c[k];
      out[i] = s;
    }
  }
  return out;
}

namespace {

double vec_norm(const Vec& a) {
  double s = 0.0;
  for (const cdouble& x : a) s += std::norm(x);
  return std::sqrt(s);
}

// one Lanczos exponential substep of size tau; returns estimated local error
double krylov_substep(const SparseOperator& H, double shift, Vec& psi,
                      double tau, int m) {
  const int n = static_cast<int>(psi.size());
  double nrm = vec_norm(psi);
  if (nrm == 0.0) return 0.0;

  std::vector<Vec> V;
  std::vector<double> alpha, beta;
  Vec v0(n);
  for (int i = 0; i < n; ++i) v0[i] = psi[i] / nrm;
  V.push_back(std::move(v0));

  Vec w(n);
  int built = 0;
  double h_last = 0.0;
  for (int j = 0; j < m; ++j) {
    H.matvec(V[j].data(), w.data());
    for (int i = 0; i < n; ++i) w[i] -= shift * V[j][i];
    double a = 0.0;
    {
      cdouble s = 0.0;
      for (int i = 0; i < n; ++i) s += std::conj(V[j][i]) * w[i];
      a = s.real();
    }
    alpha.push_back(a);
    for (int i = 0; i < n; ++i) w[i] -= a * V[j][i];
    if (j > 0)
      for (int i = 0; i < n; ++i) w[i] -= beta[j - 1] * V[j - 1][i];
    double b = vec_norm(w);
    built = j + 1;
    if (b < 1e-14 || built == m) { h_last = b; break; }
    beta.push_back(b);
    Vec next(n);
    for (int i = 0; i < n; ++i) next[i] = w[i] / b;
    V.push_back(std::move(next));
    h_last = b;
  }

  // exp(-i tau T) e1 through the tridiagonal eigensolve
  std::vector<double> tw, Z;
  tridiag_eigh(alpha,
               std::vector<double>(beta.begin(),
                                   beta.begin() + std::max(0, built - 1)),
               tw, Z);
  std::vector<cdouble> y(built, 0.0);
  for (int k = 0; k < built; ++k) {
    cdouble ph = std::polar(1.0, -tw[k] * tau);
    for (int j = 0; j < built; ++j)
      y[j] += Z[size_t(j) * built + k] * ph * Z[size_t(0) * built + k];
  }

  Vec out(n, 0.0);
  for (int j = 0; j < built; ++j) {
    cdouble c = nrm * y[j];
    for (int i = 0; i < n; ++i) out[i] += c * V[j][i];
  }
  psi = std::move(out);

  // a-posteriori estimate: weight leaking past the last basis vector
  double err = (built < m) ? 0.0 : nrm * h_last * std::abs(y[built - 1]);
  return err;
}

}  // namespace

int krylov_step(const SparseOperator& H, Vec& psi, double dt, int m,
                double tol) {
  if (H.dim() != static_cast<int>(psi.size()))
    throw std::invalid_argument("krylov_step: size mismatch");
  if (dt == 0.0) return 0;
  // shift by the diagonal center so stiff diagonals (large U) do not force
  // tiny substeps; exp(-i(H-s)t) differs from exp(-iHt) by a global phase
  double s = 0.0;
  {
    double lo = 0.0, hi = 0.0;
    bool first = true;
    for (const Triplet& t : H.triplets())
      if (t.r == t.c) {
        double d = t.v.real();
        if (first) { lo = hi = d; first = false; }
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
    s = first ? 0.0 : 0.5 * (lo + hi);
  }

  double remaining = dt;
  double tau = dt;
  int taken = 0;
  while (std::abs(remaining) > 1e-15 * std::abs(dt)) {
    if (std::abs(tau) > std::abs(remaining)) tau = remaining;
    Vec trial = psi;
    double err = krylov_substep(H, s, trial, tau, m);
    double budget = tol * std::abs(tau) / std::abs(dt);
    if (err > budget && std::abs(tau) > 1e-12) {
      tau *= 0.5;
      continue;
    }
    psi = std::move(trial);
    remaining -= tau;
    ++taken;
    if (err < 0.1 * budget) tau *= 1.5;
  }
  // restore the global phase removed by the diagonal shift
  cdouble ph = std::polar(1.0, -s * dt);
  for (auto& x : psi) x *= ph;
  return taken;
}

void evolve_grid(const SparseOperator& H, const Vec& psi0,
                 const EvolutionPlan& plan,
                 const std::function<void(double, const Vec&)>& on_sample) {
  if (plan.dt <= 0.0) throw std::invalid_argument("evolve_grid: dt must be positive");
  if (plan.tf < plan.t0) throw std::invalid_argument("evolve_grid: tf < t0");
  if (!H.is_hermitian()) throw std::invalid_argument("evolve_grid: operator not Hermitian");

  EvolveMethod method = plan.method;
  if (method == EvolveMethod::Auto)
    method = (H.dim() <= kDenseCutoffDim) ? EvolveMethod::Dense : EvolveMethod::Krylov;

  const double span = plan.tf - plan.t0;
  const long nsteps = std::lround(std::floor(span / plan.dt + 1e-9));

  if (method == EvolveMethod::Dense) {
    DensePropagator prop(H);
    on_sample(plan.t0, psi0);
    for (long k = 1; k <= nsteps; ++k) {
      double t = plan.t0 + double(k) * plan.dt;
      Vec psi = prop.apply(psi0, t - plan.t0);
      on_sample(t, psi);
    }
    double t_last = plan.t0 + double(nsteps) * plan.dt;
    if (plan.tf - t_last > 1e-9 * plan.dt) {
      Vec psi = prop.apply(psi0, span);
      on_sample(plan.tf, psi);
    }
    return;
  }

  Vec psi = psi0;
  on_sample(plan.t0, psi);
  double t = plan.t0;
  for (long k = 1; k <= nsteps; ++k) {
    double target = plan.t0 + double(k) * plan.dt;
    krylov_step(H, psi, target - t, plan.krylov_dim, plan.tol);
    t = target;
    on_sample(t, psi);
  }
  if (plan.tf - t > 1e-9 * plan.dt) {
    krylov_step(H, psi, plan.tf - t, plan.krylov_dim, plan.tol);
    on_sample(plan.tf, psi);
  }
}

EigenPairs eigensolve(const SparseOperator& H, int extremal_k) {
  if (!H.is_hermitian()) throw std::invalid_argument("eigensolve: operator not Hermitian");
  EigenPairs out;
  const int n = H.dim();
  if (extremal_k == 0) {
    if (n > kDenseCutoffDim)
      throw std::invalid_argument("eigensolve: full mode capped at the dense cutoff dimension");
    if (H.is_real()) {
      EigReal e = eigh(H.dense_real(), n);
      out.values = std::move(e.w);
      out.vectors.assign(n, Vec(n));
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) out.vectors[k][i] = e.V[size_t(i) * n + k];
    } else {
      EigComplex e = eigh(H.dense_complex(), n);
      out.values = std::move(e.w);
      out.vectors.assign(n, Vec(n));
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) out.vectors[k][i] = e.V[size_t(i) * n + k];
    }
    out.residuals.assign(n, 0.0);
    Vec w(n);
    for (int k = 0; k < n; ++k) {
      H.matvec(out.vectors[k].data(), w.data());
      double r = 0.0;
      for (int i = 0; i < n; ++i) r += std::norm(w[i] - out.values[k] * out.vectors[k][i]);
      out.residuals[k] = std::sqrt(r);
    }
    return out;
  }
  const double tol = 1e-8;
  int iters = 0;   // 0 = solver default
  for (;;) {
    ExtremalPairs ep = eigensolve_extremal(H, extremal_k, tol, iters);
    double worst = 0.0;
    for (double r : ep.residuals) worst = std::max(worst, r);
    int used = iters > 0 ? iters : std::min(n, std::max(4 * extremal_k + 40, 120));
    if (worst <= tol || used >= n) {
      if (worst > tol)
        throw std::runtime_error("eigensolve: extremal residual " + std::to_string(worst) +
                                 " above tolerance after exhausting the space");
      out.values = std::move(ep.values);
      out.vectors = std::move(ep.vectors);
      out.residuals = std::move(ep.residuals);
      return out;
    }
    iters = std::min(n, 2 * used);
  }
}

}  // namespace lfsim
