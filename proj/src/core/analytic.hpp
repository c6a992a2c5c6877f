#pragma once
// Closed-form results for the three-atom problem: the localized bound-state
// pair on the virtual chain, predicted trapped populations, and the
// single-impurity transmission coefficient with its quasimomentum average.

#include <vector>

#include "core/fock.hpp"
#include "core/operators.hpp"

namespace lfsim {

// b is the localization length (per virtual site), E the bound energy in
// units of J; norm/overlap constants are the infinite-padding limits
struct BoundStateConstants {
  double b;            // sqrt(1 + sqrt(2))
  double E;            // sqrt(2) * b = sqrt(2(1+sqrt(2)))
  double norm_inf;     // 1/sqrt(2 sqrt(2))
  double overlap3;     // 1/(2 sqrt(2)) squared overlap with the 3-tuplet
  double n_init_pm;    // 2 + 1/sqrt(2) atoms carried per bound channel
  double n_init3_inf;  // 3/2 + 1/sqrt(2) predicted trapped population
};
BoundStateConstants bound_state_constants();

// free parameters of the localized ansatz (weights, signs, falloff)
struct AnsatzParams {
  double A = 1.0, B = 1.0;
  int D = 1, S = 1;      // in {+1, -1}
  double b = 0.0;
};

struct TripletBoundState {
  Basis basis;          // reachable space of the centered 3-tuplet
  Vec psi;              // normalized eigenvector of the effective model
  double energy;        // sign * E
  int center_index;     // basis index of the 3-tuplet
};

// The |phi_pm> bound state on a chain of L = 2*L_d + 3 sites with the
// 3-tuplet centered. Amplitude magnitudes: 1 on the tuplet, 1/(sqrt(2) b) on
// each stuck state, b^-(2j-1) on doublon states, b^-2j on pair states; the
// sign pattern is produced in the gauge of the supplied sign mode so the
// vector is an eigenvector of build_effective as constructed (tree gauge
// from the operator itself). sign=+1 selects energy +E, sign=-1 energy -E.
TripletBoundState triplet_bound_state(int L_d, int sign,
                                      SignMode mode = SignMode::Fermionic);

// same construction with the 3-tuplet at sites (center-1, center, center+1)
// of an open L-site chain; used when the bound complex is off-center
TripletBoundState triplet_bound_state_at(int L, int center, int sign,
                                         SignMode mode = SignMode::Fermionic);

// bound/unbound decomposition: two bound channels of weight `channel_weight`
// each carrying `bound_atoms` atoms in the initial window, the remaining
// weight carrying exactly the one orphan atom
double predicted_localized_population(double channel_weight,
                                      double bound_atoms);
// with the closed-form channel weight 1/(2 sqrt(2)) and 2 + 1/sqrt(2) atoms
double predicted_localized_population();

// t(k) = 4 J^2 sin^2 k / (4 J^2 sin^2 k + U_delta^2); band edges k in
// {0, pi} return the limit 0 and set *band_edge when provided
double transmission_at_k(double k, double U_delta, double J = 1.0,
                         bool* band_edge = nullptr);

// quasimomentum average (1/2pi) Int_0^2pi t(k) dk by adaptive quadrature
double transmission_total(double U_delta, double J = 1.0);

}  // namespace lfsim
