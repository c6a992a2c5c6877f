#include "core/chains.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace lfsim {

SparseOperator build_anderson_chain(int M, double J) {
  if (M < 1) throw std::invalid_argument("build_anderson_chain: M must be >= 1");
  const int n = 2 * M + 3;
  SparseOperator H(n);
  for (int i = 0; i + 1 <= 2 * M; ++i) {
    H.add(i, i + 1, -J);
    H.add(i + 1, i, -J);
  }
  int c = chain_index(0, M);
  for (int imp : {impurity_left_index(M), impurity_right_index(M)}) {
    H.add(c, imp, -J);
    H.add(imp, c, -J);
  }
  H.finalize();
  return H;
}

SparseOperator build_delta_chain(int M, double U_delta, double J) {
  if (M < 1) throw std::invalid_argument("build_delta_chain: M must be >= 1");
  const int n = 2 * M + 1;
  SparseOperator H(n);
  for (int i = 0; i + 1 < n; ++i) {
    H.add(i, i + 1, -J);
    H.add(i + 1, i, -J);
  }
  if (U_delta != 0.0) H.add(chain_index(0, M), chain_index(0, M), -U_delta);
  H.finalize();
  return H;
}

namespace {

// lowest set bit position
int bit_site(u64 bits) {
  return __builtin_ctzll(bits);
}

}  // namespace

VirtualChain map_virtual_chain(int L, SignMode mode) {
  if (L < 7 || L % 2 == 0)
    throw std::invalid_argument("map_virtual_chain: L must be odd and >= 7");
  const int c = (L - 1) / 2;
  FockState seed{};
  seed.up = (7ull << (c - 1));
  seed.dn = 0;

  ModelParams p;
  p.L = L;
  p.boundary = Boundary::Open;
  Basis basis = reachable_effective(p, seed);
  SparseOperator H = build_effective(p, basis, mode);
  const int n = basis.dim();
  const int M = L - 2;
  if (n != 2 * M + 3) throw std::runtime_error("map_virtual_chain: unexpected reachable dimension");

  std::vector<std::vector<std::pair<int, double>>> adj(n);
  std::vector<int> degree(n, 0);
  for (const Triplet& t : H.triplets())
    if (t.r != t.c) {
      adj[t.r].push_back({t.c, t.v.real()});
      ++degree[t.r];
    }

  int root = basis.index(seed);
  std::vector<int> depth(n, -1);
  VirtualChain vc;
  vc.M = M;
  vc.gauge.assign(n, 0.0);
  vc.to_basis.assign(n, -1);
  vc.to_virtual.assign(n, -1);

  depth[root] = 0;
  vc.gauge[root] = 1.0;
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, h] : adj[u])
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        vc.gauge[v] = (h < 0.0) ? vc.gauge[u] : -vc.gauge[u];
        q.push(v);
      }
  }

  auto place = [&](int storage, int bi) {
    if (storage < 0 || storage >= n || vc.to_basis[storage] != -1)
      throw std::runtime_error("map_virtual_chain: mapping not injective");
    vc.to_basis[storage] = bi;
    vc.to_virtual[bi] = storage;
  };

  for (int i = 0; i < n; ++i) {
    if (depth[i] < 0) throw std::runtime_error("map_virtual_chain: disconnected state");
    const FockState& s = basis.state(i);
    if (i == root) {
      place(chain_index(0, M), i);
      continue;
    }
    if (depth[i] == 1 && degree[i] == 1) {
      // stuck: doublon on the center site, hole on one side
      bool hole_left = ((s.up >> (c - 1)) & 1ull) == 0;
      place(hole_left ? impurity_left_index(M) : impurity_right_index(M), i);
      continue;
    }
    int m;
    if (s.dn != 0) {
      // doublon plus orphan: complex left of the orphan means m < 0
      int qd = bit_site(s.dn);
      int orphan = bit_site(s.up & ~s.dn);
      m = (orphan > qd) ? -depth[i] : depth[i];
    } else {
      // adjacent pair plus isolated orphan
      u64 up = s.up;
      int o = -1;
      while (up) {
        int j = bit_site(up);
        up &= up - 1;
        bool adj_occ = (j > 0 && ((s.up >> (j - 1)) & 1ull)) ||
                       (j + 1 < L && ((s.up >> (j + 1)) & 1ull));
        if (!adj_occ) { o = j; break; }
      }
      if (o < 0) throw std::runtime_error("map_virtual_chain: unrecognized pair state");
      u64 pair = s.up & ~(1ull << o);
      int pmax = 63 - __builtin_clzll(pair);
      m = (o > pmax) ? -depth[i] : depth[i];
    }
    place(chain_index(m, M), i);
  }

  vc.basis = std::move(basis);
  return vc;
}

MappingReport verify_anderson_mapping(int L, SignMode mode,
                                      double perturbation) {
  MappingReport rep;
  VirtualChain vc = map_virtual_chain(L, mode);
  ModelParams p;
  p.L = L;
  p.boundary = Boundary::Open;
  SparseOperator H = build_effective(p, vc.basis, mode);

  SparseOperator A = build_anderson_chain(vc.M);
  rep.dim_effective = H.dim();
  rep.dim_chain = A.dim();
  if (rep.dim_effective != rep.dim_chain) {
    rep.ok = false;
    rep.detail = "dimension mismatch";
    return rep;
  }
  const int n = H.dim();
  std::vector<double> D(size_t(n) * n, 0.0);
  for (const Triplet& t : H.triplets()) {
    int vr = vc.to_virtual[t.r], vcl = vc.to_virtual[t.c];
    D[size_t(vr) * n + vcl] += vc.gauge[t.r] * vc.gauge[t.c] * t.v.real();
  }
  for (const Triplet& t : A.triplets()) D[size_t(t.r) * n + t.c] -= t.v.real();
  if (perturbation != 0.0)
    D[size_t(chain_index(0, vc.M)) * n + chain_index(1, vc.M)] -= perturbation;

  double mx = 0.0;
  for (double d : D) mx = std::max(mx, std::abs(d));
  rep.max_abs_difference = mx;
  rep.ok = (mx == 0.0);
  rep.detail = rep.ok ? "exact match" : "element-wise difference present";
  return rep;
}

}  // namespace lfsim
