#pragma once
// Diagonal observables of a state vector over a Fock basis: site-resolved
// densities, doublon counts, population in site windows, transmitted weight,
// overlaps, and the time-integrated relative doublon error used by the
// robustness sweeps.

#include <vector>

#include "core/fock.hpp"
#include "core/operators.hpp"

namespace lfsim {

struct DensityProfile {
  std::vector<double> n_up, n_dn, n;   // per site; n = n_up + n_dn
};

DensityProfile density(const Vec& psi, const Basis& basis);

// average doublon number <sum_j n_up,j n_dn,j> / L
double doublon_number(const Vec& psi, const Basis& basis);
// per-site doublon density <n_up,j n_dn,j>
std::vector<double> doublon_profile(const Vec& psi, const Basis& basis);

// total atom number strictly right of site j0: sum_{j>j0} <n_j>
double transmitted(const Vec& psi, const Basis& basis, int j0);

// sum of <n_j> over an explicit site window
double population(const Vec& psi, const Basis& basis,
                  const std::vector<int>& sites);

cdouble overlap(const Vec& a, const Vec& b);
double overlap_sq(const Vec& a, const Vec& b);

// eps = sqrt( (1/T) * integral |(n_d(t) - n_id(t)) / n_id(t)|^2 dt ) on a
// shared uniform grid (trapezoid); grid points with |n_id| < floor are
// excluded from both the integrand and the normalization span. Throws if
// every point is below the floor.
double doublon_error(const std::vector<double>& n_d,
                     const std::vector<double>& n_id, double dt,
                     double floor = 1e-6);

// mean of samples y(t) on t in [t_lo, t_hi] given a uniform grid starting at
// t0 with spacing dt (inclusive endpoints, half-open tolerance)
double window_mean(const std::vector<double>& y, double t0, double dt,
                   double t_lo, double t_hi);

}  // namespace lfsim
