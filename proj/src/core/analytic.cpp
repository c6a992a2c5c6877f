#include "core/analytic.hpp"

#include <cmath>
#include <queue>
#include <stdexcept>

namespace lfsim {

BoundStateConstants bound_state_constants() {
  BoundStateConstants c;
  c.b = std::sqrt(1.0 + std::sqrt(2.0));
  c.E = std::sqrt(2.0) * c.b;
  c.norm_inf = 1.0 / std::sqrt(2.0 * std::sqrt(2.0));
  c.overlap3 = 1.0 / (2.0 * std::sqrt(2.0));
  c.n_init_pm = 2.0 + 1.0 / std::sqrt(2.0);
  c.n_init3_inf = 1.5 + 1.0 / std::sqrt(2.0);
  return c;
}

TripletBoundState triplet_bound_state_at(int L, int center, int sign,
                                         SignMode mode) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("triplet_bound_state_at: sign must be +1 or -1");
  if (center - 1 < 0 || center + 1 >= L)
    throw std::invalid_argument("triplet_bound_state_at: tuplet does not fit");
  if (std::min(center - 1, L - 2 - center) < 2)
    throw std::invalid_argument("triplet_bound_state_at: need at least 2 empty sites per side");

  FockState seed{};
  seed.up = (7ull << (center - 1));
  ModelParams p;
  p.L = L;
  p.boundary = Boundary::Open;
  Basis basis = reachable_effective(p, seed);
  SparseOperator H = build_effective(p, basis, mode);
  const int n = basis.dim();

  // BFS over the operator graph (a tree): the graph distance from the tuplet
  // is the virtual-site distance, degree 1 at depth 1 marks a stuck state;
  // the gauge g makes every tree edge -J, so the closed-form magnitudes form
  // an exact eigenvector of this operator in this gauge
  std::vector<std::vector<std::pair<int, double>>> adjacency(n);
  std::vector<int> degree(n, 0), depth(n, -1);
  std::vector<double> gauge(n, 0.0);
  for (const Triplet& t : H.triplets())
    if (t.r != t.c) {
      adjacency[t.r].push_back({t.c, t.v.real()});
      ++degree[t.r];
    }
  int root = basis.index(seed);
  depth[root] = 0;
  gauge[root] = 1.0;
  std::queue<int> bfs;
  bfs.push(root);
  while (!bfs.empty()) {
    int u = bfs.front();
    bfs.pop();
    for (auto [v, h] : adjacency[u])
      if (depth[v] < 0) {
        depth[v] = depth[u] + 1;
        gauge[v] = (h < 0.0) ? gauge[u] : -gauge[u];
        bfs.push(v);
      }
  }

  const BoundStateConstants k = bound_state_constants();
  const double parity = (sign > 0) ? -1.0 : 1.0;  // +E partner flips per level
  Vec psi(n, 0.0);
  double norm2 = 0.0;
  for (int i = 0; i < n; ++i) {
    if (depth[i] < 0) throw std::runtime_error("triplet_bound_state_at: disconnected state");
    double mag;
    if (depth[i] == 0)
      mag = 1.0;
    else if (depth[i] == 1 && degree[i] == 1)
      mag = 1.0 / (std::sqrt(2.0) * k.b);
    else
      mag = std::pow(k.b, -double(depth[i]));
    double a = gauge[i] * std::pow(parity, double(depth[i])) * mag;
    psi[i] = a;
    norm2 += a * a;
  }
  double nrm = std::sqrt(norm2);
  for (auto& x : psi) x /= nrm;

  return TripletBoundState{std::move(basis), std::move(psi),
                           double(sign) * k.E, root};
}

TripletBoundState triplet_bound_state(int L_d, int sign, SignMode mode) {
  if (L_d < 2) throw std::invalid_argument("triplet_bound_state: L_d must be >= 2");
  return triplet_bound_state_at(2 * L_d + 3, L_d + 1, sign, mode);
}

double predicted_localized_population(double channel_weight,
                                      double bound_atoms) {
  double bound_weight = 2.0 * channel_weight;
  if (bound_weight < 0.0 || bound_weight > 1.0)
    throw std::invalid_argument("predicted_localized_population: weight outside [0, 1/2]");
  return bound_weight * bound_atoms + (1.0 - bound_weight) * 1.0;
}

double predicted_localized_population() {
  const BoundStateConstants k = bound_state_constants();
  return predicted_localized_population(k.overlap3, k.n_init_pm);
}

double transmission_at_k(double k, double U_delta, double J, bool* band_edge) {
  if (band_edge) *band_edge = false;
  double s = std::sin(k);
  double num = 4.0 * J * J * s * s;
  // k = pi is an edge by contract even though sin(pi) rounds to ~1e-16
  if (num == 0.0 || k == 0.0 || k == M_PI) {
    if (band_edge) *band_edge = true;
    return U_delta == 0.0 ? 1.0 : 0.0;
  }
  return num / (num + U_delta * U_delta);
}

namespace {

double t_of_k(double k, double U, double J) {
  return transmission_at_k(k, U, J, nullptr);
}

double simpson(double a, double b, double fa, double fm, double fb, double eps,
               double U, double J, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = t_of_k(lm, U, J), frm = t_of_k(rm, U, J);
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) < 15.0 * eps)
    return left + right + (left + right - whole) / 15.0;
  return simpson(a, m, fa, flm, fm, 0.5 * eps, U, J, depth - 1) +
         simpson(m, b, fm, frm, fb, 0.5 * eps, U, J, depth - 1);
}

}  // namespace

double transmission_total(double U_delta, double J) {
  // t depends only on sin^2 k, so the average over [0, pi/2] equals the full
  // one; the band-edge endpoint contributes its (integrable) limit value
  const double a = 0.0, b = std::acos(-1.0) / 2.0;
  double fa = t_of_k(a, U_delta, J);
  double fb = t_of_k(b, U_delta, J);
  double fm = t_of_k(0.5 * (a + b), U_delta, J);
  double integral = simpson(a, b, fa, fm, fb, 1e-10, U_delta, J, 48);
  return integral / (b - a);
}

}  // namespace lfsim
