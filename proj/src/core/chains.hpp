#pragma once
// Single-particle chains for the three-atom problem: the virtual chain with
// two impurity levels (bound-state physics) and the single-impurity delta
// chain (scattering), plus the explicit mapping between the three-atom
// reachable space and the virtual chain.

#include <string>
#include <vector>

#include "core/fock.hpp"
#include "core/operators.hpp"

namespace lfsim {

// 2M+1 chain sites (virtual index m in {-M..M} at storage index m+M) with
// hopping -J, plus two impurity levels Left (index 2M+1) and Right (2M+2)
// coupled only to the center site with amplitude -J; dimension 2M+3
SparseOperator build_anderson_chain(int M, double J = 1.0);

// 2M+1 chain sites, hopping -J, on-site energy -U_delta at m = 0
SparseOperator build_delta_chain(int M, double U_delta, double J = 1.0);

inline int chain_index(int m, int M) { return m + M; }
inline int impurity_left_index(int M) { return 2 * M + 1; }
inline int impurity_right_index(int M) { return 2 * M + 2; }

// bijection between virtual-chain storage indices and the three-atom
// reachable basis; `gauge` carries the per-state sign making the mapped
// operator's tree edges all equal to -J
struct VirtualChain {
  int M = 0;
  Basis basis;                     // reachable space, 3-tuplet centered
  std::vector<int> to_basis;       // storage index -> basis index
  std::vector<int> to_virtual;     // basis index -> storage index
  std::vector<double> gauge;       // per basis index, in {+1, -1}
};

// L odd, L >= 7: the 3-tuplet sits at the central three sites; M = L - 2
VirtualChain map_virtual_chain(int L, SignMode mode = SignMode::Fermionic);

struct MappingReport {
  bool ok = false;
  int dim_effective = 0;
  int dim_chain = 0;
  double max_abs_difference = 0.0;
  std::string detail;
};

// builds the effective model on the 3-tuplet reachable space, permutes and
// gauges it onto the virtual chain, and compares element-wise against
// build_anderson_chain; `perturbation` is added to one chain hopping element
// first (comparator sensitivity hook)
MappingReport verify_anderson_mapping(int L, SignMode mode = SignMode::Fermionic,
                                      double perturbation = 0.0);

}  // namespace lfsim
