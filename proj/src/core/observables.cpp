#include "core/observables.hpp"

#include <cmath>
#include <stdexcept>

namespace lfsim {

DensityProfile density(const Vec& psi, const Basis& basis) {
  if (static_cast<int>(psi.size()) != basis.dim())
    throw std::invalid_argument("density: size mismatch");
  const int L = basis.L();
  DensityProfile p;
  p.n_up.assign(L, 0.0);
  p.n_dn.assign(L, 0.0);
  p.n.assign(L, 0.0);
  for (int i = 0; i < basis.dim(); ++i) {
    double w = std::norm(psi[i]);
    if (w == 0.0) continue;
    const FockState& s = basis.state(i);
    for (int j = 0; j < L; ++j) {
      if ((s.up >> j) & 1ull) p.n_up[j] += w;
      if ((s.dn >> j) & 1ull) p.n_dn[j] += w;
    }
  }
  for (int j = 0; j < L; ++j) p.n[j] = p.n_up[j] + p.n_dn[j];
  return p;
}

double doublon_number(const Vec& psi, const Basis& basis) {
  if (static_cast<int>(psi.size()) != basis.dim())
    throw std::invalid_argument("doublon_number: size mismatch");
  double total = 0.0;
  for (int i = 0; i < basis.dim(); ++i) {
    double w = std::norm(psi[i]);
    if (w == 0.0) continue;
    total += w * double(basis.state(i).doublons());
  }
  return total / double(basis.L());
}

std::vector<double> doublon_profile(const Vec& psi, const Basis& basis) {
  if (static_cast<int>(psi.size()) != basis.dim())
    throw std::invalid_argument("doublon_profile: size mismatch");
  const int L = basis.L();
  std::vector<double> d(L, 0.0);
  for (int i = 0; i < basis.dim(); ++i) {
    double w = std::norm(psi[i]);
    if (w == 0.0) continue;
    u64 both = basis.state(i).up & basis.state(i).dn;
    for (int j = 0; j < L; ++j)
      if ((both >> j) & 1ull) d[j] += w;
  }
  return d;
}

double transmitted(const Vec& psi, const Basis& basis, int j0) {
  DensityProfile p = density(psi, basis);
  double total = 0.0;
  for (int j = j0 + 1; j < basis.L(); ++j) total += p.n[j];
  return total;
}

double population(const Vec& psi, const Basis& basis,
                  const std::vector<int>& sites) {
  DensityProfile p = density(psi, basis);
  double total = 0.0;
  for (int j : sites) {
    if (j < 0 || j >= basis.L()) throw std::invalid_argument("population: site out of range");
    total += p.n[j];
  }
  return total;
}

cdouble overlap(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("overlap: size mismatch");
  cdouble s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

double overlap_sq(const Vec& a, const Vec& b) { return std::norm(overlap(a, b)); }

double doublon_error(const std::vector<double>& n_d,
                     const std::vector<double>& n_id, double dt,
                     double floor) {
  if (n_d.size() != n_id.size()) throw std::invalid_argument("doublon_error: grid mismatch");
  if (n_d.size() < 2) throw std::invalid_argument("doublon_error: need at least two samples");
  // points where the reference is below the floor contribute zero to the
  // integrand; the normalization keeps the full span
  size_t n = n_d.size();
  std::vector<double> f(n, 0.0);
  bool any = false;
  for (size_t i = 0; i < n; ++i)
    if (std::abs(n_id[i]) >= floor) {
      double r = (n_d[i] - n_id[i]) / n_id[i];
      f[i] = r * r;
      any = true;
    }
  if (!any) throw std::runtime_error("doublon_error: reference signal below floor everywhere");
  double integral = 0.0;
  for (size_t i = 0; i + 1 < n; ++i) integral += 0.5 * (f[i] + f[i + 1]) * dt;
  double span = double(n - 1) * dt;
  return std::sqrt(integral / span);
}

double window_mean(const std::vector<double>& y, double t0, double dt,
                   double t_lo, double t_hi) {
  if (dt <= 0.0) throw std::invalid_argument("window_mean: dt must be positive");
  double sum = 0.0;
  long count = 0;
  for (size_t i = 0; i < y.size(); ++i) {
    double t = t0 + double(i) * dt;
    if (t >= t_lo - 1e-9 && t <= t_hi + 1e-9) {
      sum += y[i];
      ++count;
    }
  }
  if (count == 0) throw std::invalid_argument("window_mean: empty window");
  return sum / double(count);
}

}  // namespace lfsim
