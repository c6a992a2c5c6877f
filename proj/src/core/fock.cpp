#include "core/fock.hpp"

#include <algorithm>
#include <stdexcept>

namespace lfsim {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Basis::Basis(int L, std::vector<FockState> states) : L_(L), states_(std::move(states)) {
  std::sort(states_.begin(), states_.end(), [L](const FockState& a, const FockState& b) {
    return state_key(a, L) < state_key(b, L);
  });
  for (size_t i = 1; i < states_.size(); ++i) {
    if (states_[i] == states_[i - 1]) throw std::invalid_argument("basis: duplicate state");
  }
}

int Basis::index(const FockState& s) const {
  const u128 key = state_key(s, L_);
  auto it = std::lower_bound(states_.begin(), states_.end(), key,
                             [this](const FockState& a, u128 k) { return state_key(a, L_) < k; });
  if (it == states_.end() || !(*it == s)) return -1;
  return int(it - states_.begin());
}

Basis enumerate_basis(int L, int N) {
  if (L < 1 || L > 41) throw std::invalid_argument("enumerate_basis: L out of range");
  if (N < 0 || N > 2 * L) throw std::invalid_argument("enumerate_basis: N out of range");
  std::vector<FockState> states;
  // iterate N-subsets of the 2L modes in colex order; sort handles key order
  const int M = 2 * L;
  std::vector<int> modes(N);
  for (int i = 0; i < N; ++i) modes[i] = i;
  auto emit = [&] {
    FockState s;
    for (int m : modes) {
      if (m % 2 == 0) s.up |= 1ull << (m / 2);
      else s.dn |= 1ull << (m / 2);
    }
    states.push_back(s);
  };
  if (N == 0) {
    states.push_back(FockState{});
  } else {
    while (true) {
      emit();
      int i = N - 1;
      while (i >= 0 && modes[i] == M - N + i) --i;
      if (i < 0) break;
      ++modes[i];
      for (int k = i + 1; k < N; ++k) modes[k] = modes[k - 1] + 1;
    }
  }
  return Basis(L, std::move(states));
}

FockState parse_loadout(const std::string& spec) {
  if (spec.empty() || spec.size() > 41) throw std::invalid_argument("loadout: length must be 1..41");
  FockState s;
  for (size_t j = 0; j < spec.size(); ++j) {
    switch (spec[j]) {
      case '.': break;
      case 'u': s.up |= 1ull << j; break;
      case 'd': s.dn |= 1ull << j; break;
      case 'D': s.up |= 1ull << j; s.dn |= 1ull << j; break;
      default:
        throw std::invalid_argument("loadout: illegal character '" + std::string(1, spec[j]) +
                                    "' at position " + std::to_string(j));
    }
  }
  return s;
}

std::string format_loadout(const FockState& s, int L) {
  std::string out(L, '.');
  for (int j = 0; j < L; ++j) {
    switch (s.occ(j)) {
      case SiteOcc::Empty: break;
      case SiteOcc::Up: out[j] = 'u'; break;
      case SiteOcc::Down: out[j] = 'd'; break;
      case SiteOcc::Doublon: out[j] = 'D'; break;
    }
  }
  return out;
}

}  // namespace lfsim
