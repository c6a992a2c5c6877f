#include "core/scars.hpp"

#include <stdexcept>

namespace lfsim {

std::array<std::array<std::int64_t, 3>, 3> scar_transfer_matrix() {
  // rows/cols ordered (N_up, N_0, N_d): up may follow empty or doublon,
  // empty may follow up or empty, doublon may follow up or doublon
  return {{{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}};
}

ScarCount scar_count(int L) {
  if (L < 2) throw std::invalid_argument("scar_count: L must be >= 2");
  if (L > 62) throw std::invalid_argument("scar_count: count overflows 64-bit at L > 62");
  std::array<std::int64_t, 3> v = {2, 2, 2};
  const auto T = scar_transfer_matrix();
  for (int step = 2; step < L; ++step) {
    std::array<std::int64_t, 3> nv = {0, 0, 0};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) nv[r] += T[r][c] * v[c];
    v = nv;
  }
  return ScarCount{v[0], v[1], v[2]};
}

namespace {

// occupation codes along the candidate string: 0 empty, 1 up, 2 doublon
bool bond_frozen(int a, int b) {
  if (a == 1 && b == 1) return false;  // up pair collapses into a doublon
  if (a == 2 && b == 0) return false;  // doublon spills into the hole
  if (a == 0 && b == 2) return false;
  return true;
}

FockState from_codes(const std::vector<int>& codes) {
  FockState s{};
  for (size_t j = 0; j < codes.size(); ++j) {
    if (codes[j] == 1) s.up |= (1ull << j);
    if (codes[j] == 2) {
      s.up |= (1ull << j);
      s.dn |= (1ull << j);
    }
  }
  return s;
}

}  // namespace

std::vector<FockState> enumerate_frozen_states(int L) {
  if (L < 1) throw std::invalid_argument("enumerate_frozen_states: L must be >= 1");
  if (L > 12) throw std::invalid_argument("enumerate_frozen_states: brute force capped at L = 12");
  std::vector<FockState> out;
  std::vector<int> codes(L, 0);
  std::int64_t total = 1;
  for (int j = 0; j < L; ++j) total *= 3;
  for (std::int64_t n = 0; n < total; ++n) {
    std::int64_t v = n;
    bool ok = true;
    for (int j = 0; j < L; ++j) {
      codes[j] = int(v % 3);
      v /= 3;
    }
    for (int j = 0; j + 1 < L && ok; ++j) ok = bond_frozen(codes[j], codes[j + 1]);
    if (ok) out.push_back(from_codes(codes));
  }
  return out;
}

std::vector<FockState> enumerate_frozen_states(const SparseOperator& H,
                                               const Basis& basis) {
  if (H.dim() != basis.dim())
    throw std::invalid_argument("enumerate_frozen_states: dimension mismatch");
  // a product state is an eigenstate of the zero-diagonal operator iff its
  // column is empty
  std::vector<bool> coupled(basis.dim(), false);
  for (const Triplet& t : H.triplets())
    if (t.r != t.c) coupled[t.c] = true;
  std::vector<FockState> out;
  for (int i = 0; i < basis.dim(); ++i) {
    const FockState& s = basis.state(i);
    if (s.dn & ~s.up) continue;  // down singlons excluded from the count
    if (!coupled[i]) out.push_back(s);
  }
  return out;
}

Basis full_mixed_basis(int L) {
  if (L < 1 || L > 15) throw std::invalid_argument("full_mixed_basis: L outside [1, 15]");
  std::vector<FockState> states;
  states.reserve(size_t(1) << (2 * L));
  const u64 top = u64(1) << (2 * L);
  for (u64 key = 0; key < top; ++key)
    states.push_back(state_from_key(u128(key), L));
  return Basis(L, std::move(states));
}

}  // namespace lfsim
