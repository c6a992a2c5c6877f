#include "core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace lfsim {

namespace {

void check_info(lapack_int info, const char* what) {
  if (info != 0)
    throw std::runtime_error(std::string(what) + " failed, info=" +
                             std::to_string(info));
}

}  // namespace

EigReal eigh(std::vector<double> A, int n) {
  if (static_cast<int>(A.size()) != n * n) throw std::invalid_argument("eigh: bad matrix size");
  EigReal r;
  r.w.resize(n);
  lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'U', n, A.data(), n,
                                   r.w.data());
  check_info(info, "dsyevd");
  r.V = std::move(A);
  for (int k = 0; k < n; ++k) {
    // column k is eigenvector k; fix its phase in place
    int best = 0;
    double mx = -1.0;
    for (int i = 0; i < n; ++i) {
      double a = std::abs(r.V[size_t(i) * n + k]);
      if (a > mx) { mx = a; best = i; }
    }
    if (r.V[size_t(best) * n + k] < 0.0)
      for (int i = 0; i < n; ++i) r.V[size_t(i) * n + k] = -r.V[size_t(i) * n + k];
  }
  return r;
}

EigComplex eigh(std::vector<cdouble> A, int n) {
  if (static_cast<int>(A.size()) != n * n) throw std::invalid_argument("eigh: bad matrix size");
  EigComplex r;
  r.w.resize(n);
  lapack_int info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'V', 'U', n, A.data(), n,
                                   r.w.data());
  check_info(info, "zheevd");
  r.V = std::move(A);
  for (int k = 0; k < n; ++k) {
    int best = 0;
    double mx = -1.0;
    for (int i = 0; i < n; ++i) {
      double a = std::abs(r.V[size_t(i) * n + k]);
      if (a > mx) { mx = a; best = i; }
    }
    cdouble piv = r.V[size_t(best) * n + k];
    if (std::abs(piv) > 0.0) {
      cdouble ph = std::conj(piv) / std::abs(piv);
      for (int i = 0; i < n; ++i) r.V[size_t(i) * n + k] *= ph;
    }
  }
  return r;
}

void tridiag_eigh(std::vector<double> alpha, std::vector<double> beta,
                  std::vector<double>& w, std::vector<double>& Z) {
  int m = static_cast<int>(alpha.size());
  if (static_cast<int>(beta.size()) < m - 1)
    throw std::invalid_argument("tridiag_eigh: beta too short");
  Z.assign(size_t(m) * m, 0.0);
  lapack_int info = LAPACKE_dstev(LAPACK_ROW_MAJOR, 'V', m, alpha.data(),
                                  beta.data(), Z.data(), m);
  check_info(info, "dstev");
  w = std::move(alpha);
}

std::vector<double> solve_spd(std::vector<double> A, std::vector<double> b,
                              int n) {
  if (static_cast<int>(A.size()) != n * n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("solve_spd: bad sizes");
  lapack_int info = LAPACKE_dposv(LAPACK_ROW_MAJOR, 'U', n, 1, A.data(), n,
                                  b.data(), 1);
  check_info(info, "dposv");
  return b;
}

void fix_phase(double* v, int n) {
  int best = 0;
  double mx = -1.0;
  for (int i = 0; i < n; ++i) {
    double a = std::abs(v[i]);
    if (a > mx) { mx = a; best = i; }
  }
  if (v[best] < 0.0)
    for (int i = 0; i < n; ++i) v[i] = -v[i];
}

void fix_phase(cdouble* v, int n) {
  int best = 0;
  double mx = -1.0;
  for (int i = 0; i < n; ++i) {
    double a = std::abs(v[i]);
    if (a > mx) { mx = a; best = i; }
  }
  if (std::abs(v[best]) > 0.0) {
    cdouble ph = std::conj(v[best]) / std::abs(v[best]);
    for (int i = 0; i < n; ++i) v[i] *= ph;
  }
}

namespace {

double dot_re(const Vec& a, const Vec& b) {
  cdouble s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s.real();
}

cdouble dot_c(const Vec& a, const Vec& b) {
  cdouble s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double norm2(const Vec& a) {
  double s = 0.0;
  for (const cdouble& x : a) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace

ExtremalPairs eigensolve_extremal(const SparseOperator& H, int k, double tol,
                                  int max_iter) {
  const int n = H.dim();
  if (k < 1 || k > n) throw std::invalid_argument("eigensolve_extremal: bad k");
  if (max_iter <= 0) max_iter = std::min(n, std::max(4 * k + 40, 120));
  max_iter = std::min(max_iter, n);

  SplitMix64 rng(0x5ca1ab1eull);
  Vec v0(n);
  for (int i = 0; i < n; ++i) v0[i] = 2.0 * rng.uniform() - 1.0;
  double nv = norm2(v0);
  for (auto& x : v0) x /= nv;

  std::vector<Vec> V;        // orthonormal Lanczos vectors
  std::vector<double> alpha, beta;
  V.push_back(std::move(v0));

  Vec w(n);
  int m = 0;
  for (int j = 0; j < max_iter; ++j) {
    H.matvec(V[j].data(), w.data());
    double a = dot_re(V[j], w);
    alpha.push_back(a);
    for (int i = 0; i < n; ++i) w[i] -= a * V[j][i];
    if (j > 0)
      for (int i = 0; i < n; ++i) w[i] -= beta[j - 1] * V[j - 1][i];
    // full reorthogonalization, twice for numerical safety
    for (int pass = 0; pass < 2; ++pass)
      for (const Vec& q : V) {
        cdouble c = dot_c(q, w);
        for (int i = 0; i < n; ++i) w[i] -= c * q[i];
      }
    double b = norm2(w);
    m = j + 1;
    if (m == max_iter || b < 1e-14) break;
    beta.push_back(b);
    Vec next(n);
    for (int i = 0; i < n; ++i) next[i] = w[i] / b;
    V.push_back(std::move(next));
  }

  std::vector<double> tw, Z;
  tridiag_eigh(alpha, std::vector<double>(beta.begin(), beta.begin() + (m - 1)),
               tw, Z);

  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (std::abs(tw[a]) != std::abs(tw[b])) return std::abs(tw[a]) > std::abs(tw[b]);
    return tw[a] > tw[b];
  });

  ExtremalPairs out;
  int take = std::min(k, m);
  for (int t = 0; t < take; ++t) {
    int col = order[t];
    Vec x(n, 0.0);
    for (int j = 0; j < m; ++j) {
      double y = Z[size_t(j) * m + col];
      for (int i = 0; i < n; ++i) x[i] += y * V[j][i];
    }
    double nx = norm2(x);
    for (auto& e : x) e /= nx;
    fix_phase(x.data(), n);
    H.matvec(x.data(), w.data());
    double lam = tw[col];
    double res = 0.0;
    for (int i = 0; i < n; ++i) res += std::norm(w[i] - lam * x[i]);
    res = std::sqrt(res);
    out.values.push_back(lam);
    out.vectors.push_back(std::move(x));
    out.residuals.push_back(res);
  }
  // tol is a target for the caller to inspect via residuals; the subspace is
  // grown to max_iter which the defaults size generously for chain problems
  (void)tol;
  return out;
}

}  // namespace lfsim
