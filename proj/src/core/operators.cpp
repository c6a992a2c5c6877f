#include "core/operators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace lfsim {

void SparseOperator::finalize() {
  std::sort(triplets_.begin(), triplets_.end(), [](const Triplet& a, const Triplet& b) {
    return a.r != b.r ? a.r < b.r : a.c < b.c;
  });
  std::vector<Triplet> merged;
  merged.reserve(triplets_.size());
  for (const auto& t : triplets_) {
    if (!merged.empty() && merged.back().r == t.r && merged.back().c == t.c) {
      merged.back().v += t.v;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Triplet& t) { return t.v == cdouble(0.0, 0.0); });
  triplets_ = std::move(merged);

  real_ = true;
  for (const auto& t : triplets_) {
    if (t.v.imag() != 0.0) { real_ = false; break; }
  }
  row_ptr_.assign(dim_ + 1, 0);
  col_.resize(triplets_.size());
  val_.resize(triplets_.size());
  for (const auto& t : triplets_) ++row_ptr_[t.r + 1];
  for (int r = 0; r < dim_; ++r) row_ptr_[r + 1] += row_ptr_[r];
  for (size_t i = 0; i < triplets_.size(); ++i) {
    col_[i] = triplets_[i].c;
    val_[i] = triplets_[i].v;
  }
}

bool SparseOperator::is_hermitian() const {
  // triplets are sorted; binary-search the mirror of each entry
  for (const auto& t : triplets_) {
    Triplet probe{t.c, t.r, 0.0};
    auto it = std::lower_bound(triplets_.begin(), triplets_.end(), probe,
                               [](const Triplet& a, const Triplet& b) {
                                 return a.r != b.r ? a.r < b.r : a.c < b.c;
                               });
    if (it == triplets_.end() || it->r != t.c || it->c != t.r) return false;
    if (it->v != std::conj(t.v)) return false;
  }
  return true;
}

void SparseOperator::matvec(const cdouble* x, cdouble* y) const {
  for (int r = 0; r < dim_; ++r) {
    cdouble acc = 0.0;
    for (int k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k) acc += val_[k] * x[col_[k]];
    y[r] = acc;
  }
}

Vec SparseOperator::apply(const Vec& x) const {
  if (int(x.size()) != dim_) throw std::invalid_argument("apply: dimension mismatch");
  Vec y(dim_);
  matvec(x.data(), y.data());
  return y;
}

std::vector<double> SparseOperator::dense_real() const {
  if (!real_) throw std::logic_error("dense_real: operator has complex entries");
  std::vector<double> A(size_t(dim_) * dim_, 0.0);
  for (const auto& t : triplets_) A[size_t(t.r) * dim_ + t.c] = t.v.real();
  return A;
}

std::vector<cdouble> SparseOperator::dense_complex() const {
  std::vector<cdouble> A(size_t(dim_) * dim_, 0.0);
  for (const auto& t : triplets_) A[size_t(t.r) * dim_ + t.c] = t.v;
  return A;
}

double SparseOperator::norm_inf() const {
  std::vector<double> row(dim_, 0.0);
  for (const auto& t : triplets_) row[t.r] += std::abs(t.v);
  double m = 0.0;
  for (double r : row) m = std::max(m, r);
  return m;
}

// fermionic machinery ---------------------------------------------------------

namespace {

inline bool mode_occupied(const FockState& s, int m) {
  return ((m % 2 == 0 ? s.up : s.dn) >> (m / 2)) & 1u;
}

// parity of occupied modes strictly between m1 and m2 (site-major order)
inline int jw_sign(const FockState& s, int m1, int m2) {
  int lo = std::min(m1, m2), hi = std::max(m1, m2);
  int count = 0;
  for (int m = lo + 1; m < hi; ++m) count += mode_occupied(s, m);
  return (count & 1) ? -1 : 1;
}

// c†_dst c_src; returns false if the move annihilates
inline bool hop(const FockState& s, int src, int dst, SignMode mode, FockState& out, double& sign) {
  if (!mode_occupied(s, src) || mode_occupied(s, dst)) return false;
  out = s;
  auto flip = [&out](int m) {
    if (m % 2 == 0) out.up ^= 1ull << (m / 2);
    else out.dn ^= 1ull << (m / 2);
  };
  flip(src);
  flip(dst);
  sign = (mode == SignMode::Fermionic) ? jw_sign(s, src, dst) : 1.0;
  return true;
}

inline int mode_of(int j, int spin) { return 2 * j + spin; }  // spin: 0 up, 1 down

std::vector<std::pair<int, int>> bonds_of(const ModelParams& p) {
  std::vector<std::pair<int, int>> bonds;
  for (int j = 0; j + 1 < p.L; ++j) bonds.push_back({j, j + 1});
  if (p.boundary == Boundary::Periodic && p.L > 2) bonds.push_back({p.L - 1, 0});
  return bonds;
}

double diag_gauged(const ModelParams& p, const FockState& s) {
  return p.U * s.doublons() + 0.5 * p.Omega * (s.n_up() - s.n_dn());
}

}  // namespace

SparseOperator build_lab_frame(const ModelParams& p, const Basis& basis, SignMode mode) {
  SparseOperator H(basis.dim());
  const auto bonds = bonds_of(p);
  for (int i = 0; i < basis.dim(); ++i) {
    const FockState& s = basis.state(i);
    double diag = p.U * s.doublons();
    if (diag != 0.0) H.add(i, i, diag);
    FockState t;
    double sg;
    for (auto [a, b] : bonds) {
      for (int spin : {0, 1}) {
        for (auto [src, dst] : {std::pair{mode_of(a, spin), mode_of(b, spin)},
                                std::pair{mode_of(b, spin), mode_of(a, spin)}}) {
          if (hop(s, src, dst, mode, t, sg)) H.add(basis.index(t), i, -p.J * sg);
        }
      }
    }
    // staggered on-site coupling between the species; adjacent modes, no string
    for (int j = 0; j < p.L; ++j) {
      const double amp = 0.5 * p.Omega * (j % 2 == 0 ? 1.0 : -1.0);
      for (auto [src, dst] : {std::pair{mode_of(j, 0), mode_of(j, 1)},
                              std::pair{mode_of(j, 1), mode_of(j, 0)}}) {
        if (hop(s, src, dst, mode, t, sg)) H.add(basis.index(t), i, amp * sg);
      }
    }
  }
  H.finalize();
  return H;
}

SparseOperator build_gauged(const ModelParams& p, const Basis& basis, SignMode mode) {
  SparseOperator H(basis.dim());
  const auto bonds = bonds_of(p);
  for (int i = 0; i < basis.dim(); ++i) {
    const FockState& s = basis.state(i);
    const double diag = diag_gauged(p, s);
    if (diag != 0.0) H.add(i, i, diag);
    FockState t;
    double sg;
    for (auto [a, b] : bonds) {
      for (int spin : {0, 1}) {
        // every hop flips the spin
        for (auto [src, dst] : {std::pair{mode_of(a, spin), mode_of(b, 1 - spin)},
                                std::pair{mode_of(b, spin), mode_of(a, 1 - spin)}}) {
          if (hop(s, src, dst, mode, t, sg)) H.add(basis.index(t), i, -p.J * sg);
        }
      }
    }
  }
  H.finalize();
  return H;
}

namespace {

// the four resonant moves of the effective model on bond (a, b), as
// (src_mode, dst_mode) pairs; the projector structure is encoded by the
// source-state pattern
template <typename F>
void effective_moves(const FockState& s, int a, int b, F&& emit) {
  const SiteOcc pa = s.occ(a), pb = s.occ(b);
  if (pa == SiteOcc::Up && pb == SiteOcc::Up) {
    emit(mode_of(a, 0), mode_of(b, 1));  // a's atom joins b as a doublon
    emit(mode_of(b, 0), mode_of(a, 1));  // b's atom joins a
  } else if (pa == SiteOcc::Doublon && pb == SiteOcc::Empty) {
    emit(mode_of(a, 1), mode_of(b, 0));  // doublon sheds onto b
  } else if (pa == SiteOcc::Empty && pb == SiteOcc::Doublon) {
    emit(mode_of(b, 1), mode_of(a, 0));  // doublon sheds onto a
  }
}

}  // namespace

SparseOperator build_effective(const ModelParams& p, const Basis& basis, SignMode mode) {
  SparseOperator H(basis.dim());
  const auto bonds = bonds_of(p);
  for (int i = 0; i < basis.dim(); ++i) {
    const FockState& s = basis.state(i);
    FockState t;
    double sg;
    for (auto [a, b] : bonds) {
      effective_moves(s, a, b, [&](int src, int dst) {
        if (hop(s, src, dst, mode, t, sg)) H.add(basis.index(t), i, -p.J * sg);
      });
    }
  }
  H.finalize();
  return H;
}

SparseOperator build_flux_error(const ModelParams& p, const Basis& basis, SignMode mode) {
  SparseOperator H(basis.dim());
  const auto bonds = bonds_of(p);
  const cdouble phase = std::polar(1.0, -p.delta_phi);
  const cdouble keep = -0.5 * p.J * (1.0 - phase);   // spin-conserving
  const cdouble flipv = -0.5 * p.J * (1.0 + phase);  // spin-flipping
  for (int i = 0; i < basis.dim(); ++i) {
    const FockState& s = basis.state(i);
    const double diag = diag_gauged(p, s);
    if (diag != 0.0) H.add(i, i, diag);
    FockState t;
    double sg;
    for (auto [a, b] : bonds) {
      for (int spin : {0, 1}) {
        // rightward a -> b carries the phase; leftward is the conjugate
        if (hop(s, mode_of(a, spin), mode_of(b, spin), mode, t, sg))
          H.add(basis.index(t), i, keep * sg);
        if (hop(s, mode_of(b, spin), mode_of(a, spin), mode, t, sg))
          H.add(basis.index(t), i, std::conj(keep) * sg);
        if (hop(s, mode_of(a, spin), mode_of(b, 1 - spin), mode, t, sg))
          H.add(basis.index(t), i, flipv * sg);
        if (hop(s, mode_of(b, spin), mode_of(a, 1 - spin), mode, t, sg))
          H.add(basis.index(t), i, std::conj(flipv) * sg);
      }
    }
  }
  H.finalize();
  return H;
}

Basis reachable_subspace(const SparseOperator& H, const Basis& basis,
                         const std::vector<FockState>& support) {
  std::vector<char> seen(basis.dim(), 0);
  std::deque<int> queue;
  for (const auto& s : support) {
    const int i = basis.index(s);
    if (i < 0) throw std::invalid_argument("reachable_subspace: support state not in basis");
    if (!seen[i]) { seen[i] = 1; queue.push_back(i); }
  }
  // adjacency from triplets, walked breadth-first
  std::vector<std::vector<int>> adj(basis.dim());
  for (const auto& t : H.triplets()) {
    if (t.r != t.c) adj[t.c].push_back(t.r);
  }
  while (!queue.empty()) {
    const int i = queue.front();
    queue.pop_front();
    for (int j : adj[i]) {
      if (!seen[j]) { seen[j] = 1; queue.push_back(j); }
    }
  }
  std::vector<FockState> states;
  for (int i = 0; i < basis.dim(); ++i) {
    if (seen[i]) states.push_back(basis.state(i));
  }
  return Basis(basis.L(), std::move(states));
}

Basis reachable_effective(const ModelParams& p, const FockState& start) {
  const auto bonds = bonds_of(p);
  std::vector<FockState> order{start};
  std::vector<std::pair<u128, char>> seen{{state_key(start, p.L), 1}};
  auto visited = [&](const FockState& s) {
    const u128 k = state_key(s, p.L);
    auto it = std::lower_bound(seen.begin(), seen.end(), k,
                               [](const auto& a, u128 key) { return a.first < key; });
    if (it != seen.end() && it->first == k) return true;
    seen.insert(it, {k, 1});
    return false;
  };
  std::deque<FockState> queue{start};
  while (!queue.empty()) {
    const FockState s = queue.front();
    queue.pop_front();
    FockState t;
    double sg;
    for (auto [a, b] : bonds) {
      effective_moves(s, a, b, [&](int src, int dst) {
        if (hop(s, src, dst, SignMode::Hardcore, t, sg) && !visited(t)) {
          order.push_back(t);
          queue.push_back(t);
        }
      });
    }
  }
  return Basis(p.L, std::move(order));
}

int connectivity(const FockState& state, const SparseOperator& H, const Basis& basis) {
  const int i = basis.index(state);
  if (i < 0) throw std::invalid_argument("connectivity: state not in basis");
  int count = 0;
  for (const auto& t : H.triplets()) {
    if (t.c == i && t.r != i && t.v != cdouble(0.0, 0.0)) ++count;
  }
  return count;
}

}  // namespace lfsim
