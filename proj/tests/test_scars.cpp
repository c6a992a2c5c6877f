#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/evolve.hpp"
#include "core/linalg.hpp"
#include "core/observables.hpp"
#include "core/scars.hpp"
#include "doctest.h"

using namespace lfsim;

namespace {

std::set<std::string> loadouts(const std::vector<FockState>& states, int L) {
  std::set<std::string> out;
  for (const FockState& s : states) out.insert(format_loadout(s, L));
  return out;
}

}  // namespace

TEST_CASE("append-rule transfer matrix and its spectrum") {
  auto T = scar_transfer_matrix();
  const std::int64_t expect[3][3] = {{0, 1, 1}, {1, 1, 0}, {1, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(T[r][c] == expect[r][c]);
  std::vector<double> dense(9);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) dense[size_t(r) * 3 + c] = double(T[r][c]);
  auto e = eigh(dense, 3);
  CHECK(e.w[0] == doctest::Approx(-1.0));
  CHECK(e.w[1] == doctest::Approx(1.0));
  CHECK(e.w[2] == doctest::Approx(2.0));  // doubling rate of the census
}

TEST_CASE("frozen-state census doubles with each added site") {
  ScarCount c2 = scar_count(2);
  CHECK(c2.ending_up == 2);
  CHECK(c2.ending_empty == 2);
  CHECK(c2.ending_doublon == 2);
  CHECK(c2.total() == 6);
  CHECK(scar_count(3).total() == 12);
  CHECK(scar_count(6).total() == 96);
  for (int L = 2; L <= 30; ++L) {
    ScarCount c = scar_count(L);
    CHECK(c.total() == std::int64_t(6) << (L - 2));
    // the transfer matrix preserves the uniform start vector
    CHECK(c.ending_up == std::int64_t(1) << (L - 1));
    CHECK(c.ending_empty == c.ending_up);
    CHECK(c.ending_doublon == c.ending_up);
  }
  CHECK(scar_count(62).total() == std::int64_t(6) << 60);
  CHECK_THROWS_AS(scar_count(1), std::invalid_argument);
  CHECK_THROWS_AS(scar_count(63), std::invalid_argument);
}

TEST_CASE("two-site frozen states are the six bond-stable products") {
  auto frozen = enumerate_frozen_states(2);
  CHECK(loadouts(frozen, 2) ==
        std::set<std::string>{"..", ".u", "u.", "uD", "Du", "DD"});
  // the up pair and the lone doublon both sit on an active bond
  CHECK(loadouts(frozen, 2).count("uu") == 0);
  CHECK(loadouts(frozen, 2).count("D.") == 0);
  CHECK(loadouts(frozen, 2).count(".D") == 0);
}

TEST_CASE("brute-force census matches the transfer matrix") {
  for (int L = 2; L <= 8; ++L)
    CHECK(std::int64_t(enumerate_frozen_states(L).size()) ==
          scar_count(L).total());
  CHECK_THROWS_AS(enumerate_frozen_states(13), std::invalid_argument);
}

TEST_CASE("operator annihilation finds the same frozen set") {
  const int L = 3;
  Basis full = full_mixed_basis(L);
  REQUIRE(full.dim() == 64);
  ModelParams p;
  p.L = L;
  SparseOperator H = build_effective(p, full);
  auto from_op = enumerate_frozen_states(H, full);
  auto brute = enumerate_frozen_states(L);
  CHECK(loadouts(from_op, L) == loadouts(brute, L));
}

TEST_CASE("frozen states are annihilated by the constrained model") {
  const int L = 8;
  Basis full = full_mixed_basis(L);
  ModelParams p;
  p.L = L;
  SparseOperator H = build_effective(p, full);
  auto frozen = enumerate_frozen_states(L);
  REQUIRE(frozen.size() == 384);
  for (size_t k = 0; k < frozen.size(); k += 38) {
    Vec e(full.dim(), cdouble(0.0));
    e[full.index(frozen[k])] = 1.0;
    double r2 = 0.0;
    for (const cdouble& v : H.apply(e)) r2 += std::norm(v);
    CHECK(r2 == 0.0);
  }
  // control: the up pair moves
  FockState pair = parse_loadout("uu......");
  Vec e(full.dim(), cdouble(0.0));
  e[full.index(pair)] = 1.0;
  double r2 = 0.0;
  for (const cdouble& v : H.apply(e)) r2 += std::norm(v);
  CHECK(r2 > 1.0);
}

TEST_CASE("frozen product states keep a constant density profile") {
  const int L = 6;
  Basis b = enumerate_basis(L, 3);
  ModelParams p;
  p.L = L;
  SparseOperator H = build_effective(p, b);
  FockState s = parse_loadout("u.u.u.");
  Vec psi0(b.dim(), cdouble(0.0));
  psi0[b.index(s)] = 1.0;
  DensityProfile d0 = density(psi0, b);
  EvolutionPlan plan;
  plan.tf = 20.0;
  plan.dt = 2.0;
  double drift = 0.0;
  evolve_grid(H, psi0, plan, [&](double, const Vec& ps) {
    DensityProfile d = density(ps, b);
    for (int j = 0; j < L; ++j)
      drift = std::max(drift, std::fabs(d.n[j] - d0.n[j]));
  });
  CHECK(drift <= 1e-10);
}
