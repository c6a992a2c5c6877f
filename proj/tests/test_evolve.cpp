#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "core/chains.hpp"
#include "core/evolve.hpp"
#include "core/linalg.hpp"
#include "core/operators.hpp"
#include "doctest.h"

using namespace lfsim;

namespace {

SparseOperator two_site_hop() {
  SparseOperator H(2);
  H.add(0, 1, cdouble(-1.0));
  H.add(1, 0, cdouble(-1.0));
  H.finalize();
  return H;
}

Basis centered_triplet(int L, ModelParams& p) {
  p = ModelParams{};
  p.L = L;
  FockState s;
  s.up = 7ull << ((L - 3) / 2);
  return reachable_effective(p, s);
}

Vec seeded_state(int dim, u64 seed) {
  SplitMix64 rng(seed);
  Vec psi(dim);
  double n2 = 0.0;
  for (auto& a : psi) {
    a = cdouble(rng.uniform() - 0.5, rng.uniform() - 0.5);
    n2 += std::norm(a);
  }
  for (auto& a : psi) a /= std::sqrt(n2);
  return psi;
}

double max_diff(const Vec& a, const Vec& b) {
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace

TEST_CASE("zero generator is the identity on both paths") {
  SparseOperator H(3);
  H.finalize();
  const Vec psi0 = {cdouble(0.6), cdouble(0.0, 0.8), cdouble(0.0)};
  for (EvolveMethod m : {EvolveMethod::Dense, EvolveMethod::Krylov}) {
    EvolutionPlan plan;
    plan.tf = 2.0;
    plan.dt = 1.0;
    plan.method = m;
    Vec last;
    evolve_grid(H, psi0, plan, [&](double, const Vec& p) { last = p; });
    CHECK(max_diff(last, psi0) < 1e-14);
  }
}

TEST_CASE("two-site hop rotates at the hop frequency") {
  // exp(+i t sigma_x) on (1, 0): amplitudes (cos t, i sin t)
  SparseOperator H = two_site_hop();
  const double t = 0.7;
  for (EvolveMethod m : {EvolveMethod::Dense, EvolveMethod::Krylov}) {
    EvolutionPlan plan;
    plan.tf = t;
    plan.dt = t;
    plan.method = m;
    Vec last;
    evolve_grid(H, {cdouble(1.0), cdouble(0.0)}, plan,
                [&](double, const Vec& p) { last = p; });
    CHECK(std::abs(last[0] - cdouble(std::cos(t), 0.0)) < 1e-12);
    CHECK(std::abs(last[1] - cdouble(0.0, std::sin(t))) < 1e-12);
  }
}

TEST_CASE("free walker spreads with Bessel amplitudes") {
  // open chain, single particle launched at the center: |<m|psi(t)>|^2 equals
  // J_m(2Jt)^2 until the front reaches the walls
  const int M = 50;
  SparseOperator H = build_delta_chain(M, 0.0);
  Vec psi0(H.dim(), cdouble(0.0));
  psi0[chain_index(0, M)] = 1.0;
  EvolutionPlan plan;
  plan.tf = 5.0;
  plan.dt = 5.0;
  Vec last;
  evolve_grid(H, psi0, plan, [&](double, const Vec& p) { last = p; });
  for (int m : {0, 1, -1, 3, -3, 7, -7}) {
    const double jm = std::cyl_bessel_j(std::abs(m), 2.0 * plan.tf);
    CHECK(std::fabs(std::norm(last[chain_index(m, M)]) - jm * jm) < 1e-6);
  }
}

TEST_CASE("sampling grid appends a short final step") {
  SparseOperator H = two_site_hop();
  EvolutionPlan plan;
  plan.tf = 1.2;
  plan.dt = 0.5;
  std::vector<double> ts;
  evolve_grid(H, {cdouble(1.0), cdouble(0.0)}, plan,
              [&](double t, const Vec&) { ts.push_back(t); });
  REQUIRE(ts.size() == 4);
  CHECK(ts[0] == 0.0);
  CHECK(ts[1] == doctest::Approx(0.5));
  CHECK(ts[2] == doctest::Approx(1.0));
  CHECK(ts[3] == doctest::Approx(1.2));
}

TEST_CASE("krylov matches the spectral propagator over long times") {
  ModelParams p;
  Basis b = centered_triplet(7, p);
  REQUIRE(b.dim() == 13);
  SparseOperator H = build_effective(p, b);
  Vec psi0(b.dim(), cdouble(0.0));
  psi0[b.index(FockState{7ull << 2, 0})] = 1.0;

  DensePropagator prop(H);
  Vec dense = prop.apply(psi0, 20.0);

  EvolutionPlan plan;
  plan.tf = 20.0;
  plan.dt = 0.5;
  plan.method = EvolveMethod::Krylov;
  Vec kry;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) { kry = ps; });
  CHECK(max_diff(dense, kry) < 1e-9);
}

TEST_CASE("krylov conserves norm and energy") {
  ModelParams p;
  Basis b = centered_triplet(11, p);
  SparseOperator H = build_effective(p, b);
  const Vec psi0 = seeded_state(b.dim(), 3);
  Vec Hpsi0 = H.apply(psi0);
  double e0 = 0.0;
  for (int i = 0; i < b.dim(); ++i) e0 += (std::conj(psi0[i]) * Hpsi0[i]).real();

  EvolutionPlan plan;
  plan.tf = 10.0;
  plan.dt = 0.25;
  plan.method = EvolveMethod::Krylov;
  double norm_dev = 0.0, energy_dev = 0.0;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) {
    double n2 = 0.0, e = 0.0;
    Vec Hps = H.apply(ps);
    for (int i = 0; i < b.dim(); ++i) {
      n2 += std::norm(ps[i]);
      e += (std::conj(ps[i]) * Hps[i]).real();
    }
    norm_dev = std::max(norm_dev, std::fabs(n2 - 1.0));
    energy_dev = std::max(energy_dev, std::fabs(e - e0));
  });
  CHECK(norm_dev < 1e-9);
  CHECK(energy_dev < 1e-8 * H.norm_inf());
}

TEST_CASE("spectral propagator reverses in time") {
  ModelParams p;
  Basis b = centered_triplet(7, p);
  SparseOperator H = build_effective(p, b);
  const Vec psi0 = seeded_state(b.dim(), 5);
  DensePropagator prop(H);
  Vec forward = prop.apply(psi0, 13.7);
  Vec back = prop.apply(forward, -13.7);
  CHECK(max_diff(back, psi0) < 1e-8);
  double n2 = 0.0;
  for (const cdouble& a : forward) n2 += std::norm(a);
  CHECK(std::fabs(n2 - 1.0) < 1e-12);
}

TEST_CASE("eigensolve residuals stay below the advertised bound") {
  ModelParams p;
  Basis b = centered_triplet(7, p);
  SparseOperator H = build_effective(p, b);

  EigenPairs full = eigensolve(H);
  REQUIRE(int(full.values.size()) == b.dim());
  for (int i = 1; i < b.dim(); ++i) CHECK(full.values[i - 1] <= full.values[i]);
  for (double r : full.residuals) CHECK(r <= 1e-8);

  EigenPairs top = eigensolve(H, 2);
  REQUIRE(top.values.size() == 2);
  for (double r : top.residuals) CHECK(r <= 1e-8);
  // largest-|E| pair of the dense solve, in magnitude
  CHECK(std::fabs(top.values[0]) ==
        doctest::Approx(std::max(std::fabs(full.values.front()),
                                 std::fabs(full.values.back())))
            .epsilon(1e-10));
}

TEST_CASE("auto method picks the dense path for small problems") {
  ModelParams p;
  Basis b = centered_triplet(7, p);
  SparseOperator H = build_effective(p, b);
  Vec psi0(b.dim(), cdouble(0.0));
  psi0[0] = 1.0;
  EvolutionPlan plan;
  plan.tf = 3.0;
  plan.dt = 1.0;
  plan.method = EvolveMethod::Auto;
  Vec a, d;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) { a = ps; });
  plan.method = EvolveMethod::Dense;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) { d = ps; });
  CHECK(max_diff(a, d) == 0.0);
}
