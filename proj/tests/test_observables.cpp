#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/analytic.hpp"
#include "core/evolve.hpp"
#include "core/observables.hpp"
#include "doctest.h"

using namespace lfsim;

namespace {

Vec unit_at(const Basis& b, const char* loadout) {
  Vec psi(b.dim(), cdouble(0.0));
  const int i = b.index(parse_loadout(loadout));
  REQUIRE(i >= 0);
  psi[i] = 1.0;
  return psi;
}

}  // namespace

TEST_CASE("density of a product state reads off its occupations") {
  ModelParams p;
  p.L = 7;
  Basis b = reachable_effective(p, parse_loadout("..uuu.."));
  DensityProfile d = density(unit_at(b, "..uuu.."), b);
  const double expect[7] = {0, 0, 1, 1, 1, 0, 0};
  for (int j = 0; j < 7; ++j) {
    CHECK(d.n[j] == doctest::Approx(expect[j]));
    CHECK(d.n_up[j] == doctest::Approx(expect[j]));
    CHECK(d.n_dn[j] == doctest::Approx(0.0));
  }
}

TEST_CASE("density splits a delocalized doublon evenly") {
  Basis b = enumerate_basis(2, 2);
  Vec psi(b.dim(), cdouble(0.0));
  const double r = 1.0 / std::sqrt(2.0);
  psi[b.index(parse_loadout("D."))] = r;
  psi[b.index(parse_loadout(".D"))] = r;
  DensityProfile d = density(psi, b);
  CHECK(d.n[0] == doctest::Approx(1.0));
  CHECK(d.n[1] == doctest::Approx(1.0));
  CHECK(d.n_up[0] == doctest::Approx(0.5));
  CHECK(d.n_dn[0] == doctest::Approx(0.5));
  CHECK(doublon_number(psi, b) == doctest::Approx(0.5));
  auto prof = doublon_profile(psi, b);
  CHECK(prof[0] == doctest::Approx(0.5));
  CHECK(prof[1] == doctest::Approx(0.5));
}

TEST_CASE("doublon observables on a pinned doublon") {
  Basis b = enumerate_basis(2, 2);
  Vec psi = unit_at(b, "D.");
  CHECK(doublon_number(psi, b) == doctest::Approx(0.5));  // one doublon over L = 2
  auto prof = doublon_profile(psi, b);
  CHECK(prof[0] == doctest::Approx(1.0));
  CHECK(prof[1] == doctest::Approx(0.0));
  CHECK(doublon_number(unit_at(b, "uu"), b) == doctest::Approx(0.0));
}

TEST_CASE("density totals equal the atom number") {
  Basis b = enumerate_basis(3, 2);
  SplitMix64 rng(9);
  Vec psi(b.dim());
  double n2 = 0.0;
  for (auto& a : psi) {
    a = cdouble(rng.uniform() - 0.5, rng.uniform() - 0.5);
    n2 += std::norm(a);
  }
  for (auto& a : psi) a /= std::sqrt(n2);
  DensityProfile d = density(psi, b);
  double tot = 0.0;
  for (int j = 0; j < 3; ++j) {
    tot += d.n[j];
    CHECK(d.n[j] == doctest::Approx(d.n_up[j] + d.n_dn[j]));
  }
  CHECK(tot == doctest::Approx(2.0));
}

TEST_CASE("transmitted weight of a free walker follows the Bessel sum") {
  // everything strictly right of the launch site carries (1 - J_0(2Jt)^2)/2
  ModelParams p;
  p.L = 41;
  Basis b = enumerate_basis(41, 1);
  SparseOperator H = build_lab_frame(p, b);
  Vec psi0(b.dim(), cdouble(0.0));
  FockState start;
  start.up = 1ull << 20;
  psi0[b.index(start)] = 1.0;

  CHECK(transmitted(psi0, b, 20) == doctest::Approx(0.0));

  EvolutionPlan plan;
  plan.tf = 1.5;
  plan.dt = 1.5;
  Vec last;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) { last = ps; });
  const double j0 = std::cyl_bessel_j(0, 2.0 * plan.tf);
  CHECK(std::fabs(transmitted(last, b, 20) - 0.5 * (1.0 - j0 * j0)) < 1e-9);
}

TEST_CASE("window population counts doublons twice") {
  Basis b = enumerate_basis(4, 4);
  Vec psi = unit_at(b, "DD..");
  CHECK(population(psi, b, {0, 1}) == doctest::Approx(4.0));
  CHECK(population(psi, b, {0}) == doctest::Approx(2.0));
  CHECK(population(psi, b, {2, 3}) == doctest::Approx(0.0));
}

TEST_CASE("bound pair carries its closed-form population on the tuplet") {
  TripletBoundState t = triplet_bound_state(16, +1);
  const int L = t.basis.L();
  const int c0 = (L - 3) / 2;
  const double pop = population(t.psi, t.basis, {c0, c0 + 1, c0 + 2});
  CHECK(std::fabs(pop - (2.0 + 1.0 / std::sqrt(2.0))) < 1e-9);
}

TEST_CASE("overlaps distinguish the bound pair") {
  TripletBoundState tp = triplet_bound_state(16, +1);
  TripletBoundState tm = triplet_bound_state(16, -1);
  CHECK(std::abs(overlap(tp.psi, tp.psi) - cdouble(1.0)) < 1e-12);
  CHECK(std::abs(overlap(tp.psi, tm.psi)) < 1e-3);  // opposite-energy partner
  Vec tuplet(tp.basis.dim(), cdouble(0.0));
  tuplet[tp.center_index] = 1.0;
  CHECK(std::fabs(overlap_sq(tp.psi, tuplet) - 0.353553390593) < 1e-9);
}

TEST_CASE("relative doublon error") {
  const std::vector<double> ideal = {0.3, 0.4, 0.5, 0.4, 0.3};
  SUBCASE("identical trajectories") {
    CHECK(doublon_error(ideal, ideal, 0.1) == doctest::Approx(0.0));
  }
  SUBCASE("uniform relative offset is returned verbatim") {
    std::vector<double> off = ideal;
    for (double& v : off) v *= 1.02;
    CHECK(doublon_error(off, ideal, 0.1) == doctest::Approx(0.02));
  }
  SUBCASE("joint rescaling cancels") {
    std::vector<double> a = ideal, b = ideal;
    for (size_t i = 0; i < a.size(); ++i) a[i] *= 1.0 + 0.01 * double(i);
    double e1 = doublon_error(a, b, 0.1);
    for (size_t i = 0; i < a.size(); ++i) {
      a[i] *= 2.7;
      b[i] *= 2.7;
    }
    CHECK(doublon_error(a, b, 0.1) == doctest::Approx(e1).epsilon(1e-12));
  }
  SUBCASE("points under the floor are excluded") {
    std::vector<double> id = {1.0, 1e-9, 1.0};
    std::vector<double> nd = {1.0, 42.0, 1.0};
    CHECK(doublon_error(nd, id, 0.1) == doctest::Approx(0.0));
  }
  SUBCASE("all points under the floor throw") {
    std::vector<double> id = {1e-9, 1e-9};
    CHECK_THROWS_AS(doublon_error(id, id, 0.1), std::runtime_error);
  }
}

TEST_CASE("window mean averages inclusive endpoints") {
  const std::vector<double> y = {0.0, 1.0, 2.0, 3.0, 4.0};
  CHECK(window_mean(y, 0.0, 1.0, 1.0, 3.0) == doctest::Approx(2.0));
  CHECK(window_mean(y, 0.0, 1.0, 0.0, 4.0) == doctest::Approx(2.0));
  CHECK(window_mean(y, 0.0, 1.0, 4.0, 4.0) == doctest::Approx(4.0));
}
