#pragma once
// Frozen product states ("perfect scars") of the constrained model in the
// no-down-singlon subspace: transfer-matrix counting and brute-force
// enumeration, plus an operator-annihilation cross-check.

#include <array>
#include <cstdint>
#include <vector>

#include "core/fock.hpp"
#include "core/operators.hpp"

namespace lfsim {

struct ScarCount {
  std::int64_t ending_up = 0;       // frozen states ending in an up singlon
  std::int64_t ending_empty = 0;
  std::int64_t ending_doublon = 0;
  std::int64_t total() const { return ending_up + ending_empty + ending_doublon; }
};

// the append-rule transfer matrix acting on (N_up, N_0, N_d)
std::array<std::array<std::int64_t, 3>, 3> scar_transfer_matrix();

// (2,2,2) at L = 2, advanced by the transfer matrix; total is 6 * 2^(L-2)
ScarCount scar_count(int L);

// all product states over {empty, up, doublon}^L with no frozen-breaking
// bond, i.e. no bond in {(up,up), (doublon,empty), (empty,doublon)};
// brute force over 3^L candidates, capped at L = 12
std::vector<FockState> enumerate_frozen_states(int L);

// the same set obtained from the operator: product states annihilated by H
// (zero column in the zero-diagonal effective model) over `basis`
std::vector<FockState> enumerate_frozen_states(const SparseOperator& H,
                                               const Basis& basis);

// every state of the full mixed-occupation basis over L sites (4^L states);
// enumeration helper for the operator-based check on small L
Basis full_mixed_basis(int L);

}  // namespace lfsim
