#pragma once
// Numerical bound-state pipeline for N-tuplets: restricted-space eigensolve
// with a density-localization criterion, the 5-atom bound pair, dressed
// (3-body bound + outgoing 2-tuplet) states, and the localized-population
// prediction assembled from the channel weights.

#include <string>
#include <vector>

#include "core/fock.hpp"
#include "core/operators.hpp"

namespace lfsim {

struct LocalizationCriterion {
  std::vector<int> window;       // central site set
  double min_fraction = 0.6;     // of total density inside the window
  double zero_energy_floor = 1e-10;  // |E| at or below this is excluded
};

// central N+2 sites of an L-chain for an N-atom problem
LocalizationCriterion default_criterion(int L, int N);

struct BoundEigenpair {
  double energy;
  Vec vector;
  double window_fraction;    // in-window share of total density
  double window_population;  // atoms on the N tuplet sites (central N)
};

// Dense eigensolve of H over `basis`, canonical rotation within degenerate
// blocks (window-density operator diagonalized), then filter: in-window
// density fraction >= criterion and |E| above the zero-energy floor (the
// dark states that decouple from the dynamics always pass any density
// window). Sorted by |E| descending.
std::vector<BoundEigenpair> find_bound_states(const SparseOperator& H,
                                              const Basis& basis,
                                              const LocalizationCriterion& c);

struct FiveTupletResult {
  Basis basis;                    // reachable space of the centered 5-tuplet
  std::vector<BoundEigenpair> bound;  // criterion-passing states
  double overlap_plus = 0.0;      // squared 5-tuplet overlaps of the top pair
  double overlap_minus = 0.0;
  double population_plus = 0.0;   // central-5-site populations of the pair
  double population_minus = 0.0;
};

// full Appendix-style pipeline at L (open, 5-tuplet centered)
FiveTupletResult five_tuplet_bound_states(int L,
                                          SignMode mode = SignMode::Fermionic);

enum class TupletKind { DoublonAt, PairAt };
enum class Side { Left, Right };

struct DressedState {
  Side side;
  int branch;        // +1 / -1: which 3-body bound branch
  TupletKind kind;
  int j_m;
  Vec psi;           // normalized, over the 5-atom reachable basis
  double conflict_weight;  // amplitude weight zeroed by occupied targets
  double missing_weight;   // weight on states absent from the 5-atom basis
};

struct DressedFamily {
  std::vector<DressedState> states;
  std::vector<int> skipped_j_m;   // inside the bound window
};

// All dressed states for one (side, branch) on the L-site 5-atom problem:
// the 3-body bound state occupies the three tuplet sites nearest that side,
// and a doublon (j_m) or up-pair (j_m, j_m+1) is created on every admissible
// site beyond it, conflicts zeroed, vector renormalized.
DressedFamily build_dressed_states(Side side, int branch, int L,
                                   const Basis& basis5,
                                   SignMode mode = SignMode::Fermionic);

// Sum_d |<d|psi>|^2 over a dressed family, optionally Gram-corrected
// (overlap matrix inverse applied, turning the sum into a true projector
// weight for the non-orthogonal family)
double dressed_overlap_sum(const std::vector<DressedState>& family,
                           const Vec& psi, bool gram_corrected = false);

// three-term decomposition: two 5-body bound channels of weight w5 each
// carrying n5 atoms, total 3-body dressed weight w3 carrying n3 atoms, and
// the remainder carrying the single orphan atom
double predicted_localized_population_5(double w5_channel, double n5,
                                        double w3_total, double n3);
// with the measured L=19 channel inputs and the closed-form 1/sqrt(2)
// three-body weight and 2 + 1/sqrt(2) three-body population
double predicted_localized_population_5();

}  // namespace lfsim
