#include "core/boundstates.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "core/analytic.hpp"
#include "core/linalg.hpp"
#include "core/observables.hpp"

namespace lfsim {

LocalizationCriterion default_criterion(int L, int N) {
  LocalizationCriterion c;
  int w = N + 2;
  if (w > L) throw std::invalid_argument("default_criterion: window exceeds lattice");
  int j0 = (L - w) / 2;
  c.window.resize(w);
  std::iota(c.window.begin(), c.window.end(), j0);
  return c;
}

namespace {

// atoms a basis state carries inside the window (doublon counts twice)
std::vector<double> window_weights(const Basis& basis,
                                   const std::vector<int>& window) {
  std::vector<double> w(basis.dim(), 0.0);
  for (int i = 0; i < basis.dim(); ++i) {
    const FockState& s = basis.state(i);
    double a = 0.0;
    for (int j : window)
      a += double(((s.up >> j) & 1ull) + ((s.dn >> j) & 1ull));
    w[i] = a;
  }
  return w;
}

}  // namespace

std::vector<BoundEigenpair> find_bound_states(const SparseOperator& H,
                                              const Basis& basis,
                                              const LocalizationCriterion& c) {
  if (H.dim() != basis.dim()) throw std::invalid_argument("find_bound_states: dimension mismatch");
  if (c.min_fraction <= 0.0 || c.min_fraction > 1.0)
    throw std::invalid_argument("find_bound_states: fraction outside (0, 1]");
  if (!H.is_real()) throw std::invalid_argument("find_bound_states: operator must be real");

  const int n = H.dim();
  EigReal e = eigh(H.dense_real(), n);
  std::vector<double> wgt = window_weights(basis, c.window);

  // canonical rotation inside degenerate blocks: diagonalize the window
  // density so the returned representatives do not depend on backend
  // eigenvector choices
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && e.w[j + 1] - e.w[i] <= 1e-9) ++j;
    int k = j - i + 1;
    if (k > 1) {
      std::vector<double> W(size_t(k) * k, 0.0);
      for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
          double s = 0.0;
          for (int r = 0; r < n; ++r)
            s += e.V[size_t(r) * n + (i + a)] * e.V[size_t(r) * n + (i + b)] * wgt[r];
          W[size_t(a) * k + b] = s;
          W[size_t(b) * k + a] = s;
        }
      EigReal blk = eigh(std::move(W), k);
      std::vector<double> rot(size_t(n) * k, 0.0);
      for (int r = 0; r < n; ++r)
        for (int bcol = 0; bcol < k; ++bcol) {
          double s = 0.0;
          for (int a = 0; a < k; ++a)
            s += e.V[size_t(r) * n + (i + a)] * blk.V[size_t(a) * k + bcol];
          rot[size_t(r) * k + bcol] = s;
        }
      for (int r = 0; r < n; ++r)
        for (int bcol = 0; bcol < k; ++bcol)
          e.V[size_t(r) * n + (i + bcol)] = rot[size_t(r) * k + bcol];
    }
    i = j + 1;
  }

  // population window: the central N sites (tuplet footprint)
  const int N_atoms = basis.dim() > 0 ? basis.state(0).atoms() : 0;
  std::vector<int> tuplet_sites;
  {
    int j0 = (basis.L() - N_atoms) / 2;
    for (int j = 0; j < N_atoms; ++j) tuplet_sites.push_back(j0 + j);
  }
  std::vector<double> pop_w = window_weights(basis, tuplet_sites);

  std::vector<BoundEigenpair> out;
  for (int k2 = 0; k2 < n; ++k2) {
    if (std::abs(e.w[k2]) <= c.zero_energy_floor) continue;
    double inwin = 0.0, pop = 0.0;
    for (int r = 0; r < n; ++r) {
      double p = e.V[size_t(r) * n + k2] * e.V[size_t(r) * n + k2];
      inwin += p * wgt[r];
      pop += p * pop_w[r];
    }
    double frac = inwin / double(N_atoms);
    if (frac < c.min_fraction) continue;
    BoundEigenpair bp;
    bp.energy = e.w[k2];
    bp.window_fraction = frac;
    bp.window_population = pop;
    bp.vector.resize(n);
    for (int r = 0; r < n; ++r) bp.vector[r] = e.V[size_t(r) * n + k2];
    out.push_back(std::move(bp));
  }
  std::sort(out.begin(), out.end(), [](const BoundEigenpair& a, const BoundEigenpair& b) {
    if (std::abs(a.energy) != std::abs(b.energy))
      return std::abs(a.energy) > std::abs(b.energy);
    return a.energy > b.energy;
  });
  return out;
}

FiveTupletResult five_tuplet_bound_states(int L, SignMode mode) {
  if (L < 11) throw std::invalid_argument("five_tuplet_bound_states: L too small");
  const int j0 = (L - 5) / 2;
  FockState seed{};
  seed.up = (31ull << j0);
  ModelParams p;
  p.L = L;
  p.boundary = Boundary::Open;
  Basis basis = reachable_effective(p, seed);
  SparseOperator H = build_effective(p, basis, mode);

  FiveTupletResult res;
  res.bound = find_bound_states(H, basis, default_criterion(L, 5));
  if (res.bound.size() >= 2) {
    int i0 = basis.index(seed);
    const BoundEigenpair& a = res.bound[0];
    const BoundEigenpair& b = res.bound[1];
    const BoundEigenpair& plus = (a.energy > 0) ? a : b;
    const BoundEigenpair& minus = (a.energy > 0) ? b : a;
    res.overlap_plus = std::norm(plus.vector[i0]);
    res.overlap_minus = std::norm(minus.vector[i0]);
    res.population_plus = plus.window_population;
    res.population_minus = minus.window_population;
  }
  res.basis = std::move(basis);
  return res;
}

DressedFamily build_dressed_states(Side side, int branch, int L,
                                   const Basis& basis5, SignMode mode) {
  if (branch != 1 && branch != -1)
    throw std::invalid_argument("build_dressed_states: branch must be +1 or -1");
  const int j0 = (L - 5) / 2;
  const int center3 = (side == Side::Right) ? j0 + 1 : j0 + 3;
  const int lo3 = center3 - 1, hi3 = center3 + 1;  // bound window

  TripletBoundState phi3 = triplet_bound_state_at(L, center3, branch, mode);

  DressedFamily fam;
  auto admissible = [&](int jm, TupletKind kind) {
    int last = (kind == TupletKind::PairAt) ? jm + 1 : jm;
    if (jm < 0 || last >= L) return false;           // off lattice: not a candidate
    return (side == Side::Right) ? (jm > hi3) : (last < lo3);
  };
  auto in_window = [&](int jm, TupletKind kind) {
    int last = (kind == TupletKind::PairAt) ? jm + 1 : jm;
    return last >= lo3 && jm <= hi3;
  };

  for (TupletKind kind : {TupletKind::DoublonAt, TupletKind::PairAt}) {
    int lo = (side == Side::Right) ? j0 : 0;
    int hi = (side == Side::Right) ? L - 1 : j0 + 4;
    for (int jm = lo; jm <= hi; ++jm) {
      if (in_window(jm, kind)) {
        fam.skipped_j_m.push_back(jm);
        continue;
      }
      if (!admissible(jm, kind)) continue;

      DressedState d;
      d.side = side;
      d.branch = branch;
      d.kind = kind;
      d.j_m = jm;
      d.conflict_weight = 0.0;
      d.missing_weight = 0.0;
      d.psi.assign(basis5.dim(), 0.0);
      double norm2 = 0.0;
      for (int i = 0; i < phi3.basis.dim(); ++i) {
        double amp = phi3.psi[i].real();
        if (amp == 0.0) continue;
        FockState s = phi3.basis.state(i);
        bool conflict;
        if (kind == TupletKind::DoublonAt) {
          conflict = (((s.up | s.dn) >> jm) & 1ull) != 0;
          if (!conflict) {
            s.up |= (1ull << jm);
            s.dn |= (1ull << jm);
          }
        } else {
          conflict = ((((s.up | s.dn) >> jm) & 1ull) != 0) ||
                     ((((s.up | s.dn) >> (jm + 1)) & 1ull) != 0);
          if (!conflict) s.up |= (3ull << jm);
        }
        // creating the added atoms on fully empty sites crosses pairs of
        // modes, so the fermionic string sign is +1 in both sign modes
        if (conflict) {
          d.conflict_weight += amp * amp;
          continue;
        }
        int idx = basis5.index(s);
        if (idx < 0) {
          d.missing_weight += amp * amp;
          continue;
        }
        d.psi[idx] += amp;
        norm2 += amp * amp;
      }
      if (norm2 <= 0.0) throw std::runtime_error("build_dressed_states: empty dressed vector");
      double nrm = std::sqrt(norm2);
      for (auto& x : d.psi) x /= nrm;
      fam.states.push_back(std::move(d));
    }
  }
  return fam;
}

double dressed_overlap_sum(const std::vector<DressedState>& family,
                           const Vec& psi, bool gram_corrected) {
  if (family.empty()) return 0.0;
  const int m = int(family.size());
  std::vector<cdouble> c(m);
  for (int i = 0; i < m; ++i) c[i] = overlap(family[i].psi, psi);
  if (!gram_corrected) {
    double s = 0.0;
    for (const cdouble& x : c) s += std::norm(x);
    return s;
  }
  std::vector<double> G(size_t(m) * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      G[size_t(i) * m + j] = overlap(family[i].psi, family[j].psi).real();
  std::vector<double> re(m), im(m);
  for (int i = 0; i < m; ++i) {
    re[i] = c[i].real();
    im[i] = c[i].imag();
  }
  std::vector<double> xr = solve_spd(G, re, m);
  std::vector<double> xi = solve_spd(G, im, m);
  double s = 0.0;
  for (int i = 0; i < m; ++i) s += re[i] * xr[i] + im[i] * xi[i];
  return s;
}

double predicted_localized_population_5(double w5_channel, double n5,
                                        double w3_total, double n3) {
  double w5 = 2.0 * w5_channel;
  if (w5 < 0.0 || w3_total < 0.0 || w5 + w3_total > 1.0)
    throw std::invalid_argument("predicted_localized_population_5: weights outside [0, 1]");
  return w5 * n5 + w3_total * n3 + (1.0 - w5 - w3_total) * 1.0;
}

double predicted_localized_population_5() {
  FiveTupletResult r = five_tuplet_bound_states(19);
  if (r.bound.size() < 2)
    throw std::runtime_error("predicted_localized_population_5: bound pair not found");
  double w5 = 0.5 * (r.overlap_plus + r.overlap_minus);
  double n5 = 0.5 * (r.population_plus + r.population_minus);
  double w3 = 1.0 / std::sqrt(2.0);
  double n3 = 2.0 + 1.0 / std::sqrt(2.0);
  return predicted_localized_population_5(w5, n5, w3, n3);
}

}  // namespace lfsim
