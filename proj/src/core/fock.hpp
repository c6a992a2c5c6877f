#pragma once
// Fock states of two-species fermions on an L-site chain, and indexed bases.
//
// Site occupation is one of {empty, up, down, doublon}. States are stored as
// two bitmasks (up, dn) with site j at bit j. The integer key dn*2^L + up is a
// bijection used for deterministic (ascending) basis order; it needs 2L bits,
// so a 128-bit integer covers every lattice used here (L <= 41).
//
// Fermionic modes are site-major: mode 2j is (j, up), mode 2j+1 is (j, down).
// Operator application signs are the parity of occupied modes strictly
// between the two acted modes ("fermionic"), or +1 everywhere ("hardcore"),
// the latter kept as a cross-validation mode.

#include <cstdint>
#include <string>
#include <vector>

namespace lfsim {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

enum class SiteOcc : int { Empty = 0, Up = 1, Down = 2, Doublon = 3 };
enum class Boundary { Open, Periodic };
enum class SignMode { Fermionic, Hardcore };

struct FockState {
  u64 up = 0;
  u64 dn = 0;

  bool operator==(const FockState&) const = default;

  SiteOcc occ(int j) const {
    return SiteOcc(((up >> j) & 1u) | (((dn >> j) & 1u) << 1));
  }
  int n_up() const { return __builtin_popcountll(up); }
  int n_dn() const { return __builtin_popcountll(dn); }
  int atoms() const { return n_up() + n_dn(); }
  int doublons() const { return __builtin_popcountll(up & dn); }
  // conserved charge of the effective model: D + (N_up - N_dn)/2, doubled to
  // stay integer
  int charge2() const { return 2 * doublons() + n_up() - n_dn(); }
};

inline u128 state_key(const FockState& s, int L) {
  return (u128(s.dn) << L) | u128(s.up);
}
inline FockState state_from_key(u128 key, int L) {
  const u64 mask = (L == 64) ? ~0ull : ((1ull << L) - 1);
  return FockState{u64(key) & mask, u64(key >> L) & mask};
}

std::string u128_to_string(u128 v);

struct ModelParams {
  int L = 0;
  Boundary boundary = Boundary::Open;
  double J = 1.0;       // sets the energy unit
  double U = 0.0;       // units of J
  double Omega = 0.0;   // units of J
  double delta_phi = 0.0;
  double delta_omega() const { return U - Omega; }

  bool operator==(const ModelParams&) const = default;
};

// Ordered, indexed sector basis. States ascend by key; index() inverts the
// ordering by binary search, so lookups never allocate.
class Basis {
 public:
  Basis() = default;
  Basis(int L, std::vector<FockState> states);

  int L() const { return L_; }
  int dim() const { return int(states_.size()); }
  const FockState& state(int i) const { return states_[i]; }
  const std::vector<FockState>& states() const { return states_; }
  // position of s, or -1 if absent
  int index(const FockState& s) const;
  bool contains(const FockState& s) const { return index(s) >= 0; }

 private:
  int L_ = 0;
  std::vector<FockState> states_;
};

// All states with N_up + N_dn = N, key-ascending.
Basis enumerate_basis(int L, int N);

// Loadout strings: '.' empty, 'u' up, 'd' down, 'D' doublon.
FockState parse_loadout(const std::string& spec);
std::string format_loadout(const FockState& s, int L);

}  // namespace lfsim
