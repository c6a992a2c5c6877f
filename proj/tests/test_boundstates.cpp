#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>
#include <vector>

#include "core/boundstates.hpp"
#include "core/evolve.hpp"
#include "core/observables.hpp"
#include "doctest.h"

using namespace lfsim;

TEST_CASE("default criterion windows the central N+2 sites") {
  LocalizationCriterion c = default_criterion(19, 3);
  REQUIRE(c.window.size() == 5);
  for (int i = 0; i < 5; ++i) CHECK(c.window[i] == 7 + i);
  CHECK(c.min_fraction == doctest::Approx(0.6));
  CHECK_THROWS_AS(default_criterion(3, 3), std::invalid_argument);
}

TEST_CASE("centered 3-tuplet binds exactly one symmetric pair") {
  ModelParams p;
  p.L = 19;
  FockState seed;
  seed.up = 7ull << 8;
  Basis b = reachable_effective(p, seed);
  SparseOperator H = build_effective(p, b);
  auto bound = find_bound_states(H, b, default_criterion(19, 3));
  REQUIRE(bound.size() == 2);
  CHECK(std::fabs(bound[0].energy - 2.19736814402) < 1e-9);
  CHECK(std::fabs(bound[0].energy + bound[1].energy) < 1e-9);  // mirror pair
  CHECK(std::fabs(bound[0].energy - 2.19736822693562) < 1e-6);  // near the infinite-chain value
  for (const auto& s : bound) {
    CHECK(s.window_fraction >= 0.6);
    CHECK(std::fabs(s.window_fraction - 0.983250788624) < 1e-9);
    CHECK(std::fabs(s.window_population - 2.70711152873) < 1e-9);
  }
}

TEST_CASE("extended spectra produce no localized states") {
  ModelParams p;
  p.L = 19;
  Basis b = enumerate_basis(19, 1);
  SparseOperator H = build_lab_frame(p, b);
  CHECK(find_bound_states(H, b, default_criterion(19, 1)).empty());
}

TEST_CASE("5-atom pipeline reproduces its channel numbers") {
  FiveTupletResult r = five_tuplet_bound_states(19);
  CHECK(r.basis.dim() == 645);
  REQUIRE(r.bound.size() >= 2);
  CHECK(r.bound.size() == 82);  // localized pair plus the dark tower
  // branch symmetry
  CHECK(std::fabs(r.overlap_plus - r.overlap_minus) < 1e-6);
  CHECK(std::fabs(r.population_plus - r.population_minus) < 1e-6);
  // frozen channel inputs
  CHECK(std::fabs(r.overlap_plus - 0.0618014984337) < 1e-9);
  CHECK(std::fabs(r.population_plus - 3.73109683625) < 1e-9);
  // the pair tops the |E| ordering
  CHECK(std::fabs(r.bound[0].energy) >= std::fabs(r.bound[1].energy));

  // a tuplet shifted by 6 sites leaves the reachable sector entirely, so its
  // overlap with every bound state is exactly zero
  FockState shifted;
  shifted.up = 31ull << 13;
  CHECK(r.basis.index(shifted) == -1);
}

TEST_CASE("dressed family is near-orthogonal and atom-complete") {
  const int L = 19;
  FockState seed;
  seed.up = 31ull << 7;
  ModelParams p;
  p.L = L;
  Basis b5 = reachable_effective(p, seed);
  DressedFamily fam = build_dressed_states(Side::Right, -1, L, b5);
  REQUIRE(fam.states.size() == 17);
  CHECK(fam.skipped_j_m.size() == 6);

  std::vector<int> all_sites(L);
  for (int j = 0; j < L; ++j) all_sites[j] = j;

  double same = 0.0, cross = 0.0;
  for (size_t i = 0; i < fam.states.size(); ++i) {
    CHECK(std::fabs(population(fam.states[i].psi, b5, all_sites) - 5.0) < 1e-9);
    for (size_t j = i + 1; j < fam.states.size(); ++j) {
      const double o = std::abs(overlap(fam.states[i].psi, fam.states[j].psi));
      double& slot = (fam.states[i].kind == fam.states[j].kind) ? same : cross;
      slot = std::max(slot, o);
    }
  }
  // adjacent doublon placements nearest the bound window set the maximum
  CHECK(std::fabs(same - 0.011039) < 1e-4);
  CHECK(same < 0.02);
  CHECK(cross < 0.01);
}

TEST_CASE("dressed overlap of the evolving 5-tuplet plateaus near 0.17") {
  const int L = 19;
  FockState seed;
  seed.up = 31ull << 7;
  ModelParams p;
  p.L = L;
  Basis b5 = reachable_effective(p, seed);
  DressedFamily fam = build_dressed_states(Side::Right, -1, L, b5);
  SparseOperator H = build_effective(p, b5);
  Vec psi0(b5.dim(), cdouble(0.0));
  psi0[b5.index(seed)] = 1.0;
  EvolutionPlan plan;
  plan.tf = 14.0;
  plan.dt = 0.25;
  std::vector<double> plain, gram;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) {
    plain.push_back(dressed_overlap_sum(fam.states, ps));
    gram.push_back(dressed_overlap_sum(fam.states, ps, true));
  });
  const double mp = window_mean(plain, 0.0, 0.25, 8.0, 14.0);
  const double mg = window_mean(gram, 0.0, 0.25, 8.0, 14.0);
  CHECK(std::fabs(mp - 0.169954227028) < 1e-6);
  CHECK(std::fabs(mp - 0.17) < 0.005);
  // near-orthogonality makes the projector correction a sub-percent effect
  CHECK(std::fabs(mg - 0.169508602615) < 1e-6);
  CHECK(std::fabs(mp - mg) < 0.01);
}

TEST_CASE("dressed construction rejects bad branches") {
  ModelParams p;
  p.L = 19;
  FockState seed;
  seed.up = 31ull << 7;
  Basis b5 = reachable_effective(p, seed);
  CHECK_THROWS_AS(build_dressed_states(Side::Right, 0, 19, b5),
                  std::invalid_argument);
}

TEST_CASE("three-term localized-population prediction") {
  // all weight in the 5-body channels
  CHECK(predicted_localized_population_5(0.5, 4.0, 0.0, 0.0) ==
        doctest::Approx(4.0));
  // no bound weight at all: the orphan atom remains
  CHECK(predicted_localized_population_5(0.0, 4.0, 0.0, 0.0) ==
        doctest::Approx(1.0));
  // weights above unity are rejected
  CHECK_THROWS_AS(predicted_localized_population_5(0.3, 4.0, 0.5, 2.7),
                  std::invalid_argument);
  // measured channels: 2 * 0.0618 * 3.731 + (1/sqrt 2)(2 + 1/sqrt 2) + rest
  CHECK(std::fabs(predicted_localized_population_5() - 2.54467853488) < 1e-9);
  CHECK(std::fabs(predicted_localized_population_5() - 2.54) < 0.05);
}
