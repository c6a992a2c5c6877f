#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <vector>

#include "core/analytic.hpp"
#include "core/observables.hpp"
#include "doctest.h"

using namespace lfsim;

namespace {

double residual(const TripletBoundState& t, const ModelParams& p, SignMode mode) {
  SparseOperator H = build_effective(p, t.basis, mode);
  Vec Hpsi = H.apply(t.psi);
  double r2 = 0.0;
  for (size_t i = 0; i < Hpsi.size(); ++i)
    r2 += std::norm(Hpsi[i] - t.energy * t.psi[i]);
  return std::sqrt(r2);
}

}  // namespace

TEST_CASE("closed-form constants") {
  BoundStateConstants c = bound_state_constants();
  CHECK(c.b == doctest::Approx(std::sqrt(1.0 + std::sqrt(2.0))).epsilon(1e-14));
  CHECK(c.E == doctest::Approx(std::sqrt(2.0) * c.b).epsilon(1e-14));
  CHECK(c.E == doctest::Approx(2.19736822693562).epsilon(1e-13));
  CHECK(c.norm_inf ==
        doctest::Approx(1.0 / std::sqrt(2.0 * std::sqrt(2.0))).epsilon(1e-14));
  CHECK(c.overlap3 == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
  CHECK(c.n_init_pm == doctest::Approx(2.0 + 1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(c.n_init3_inf == doctest::Approx(1.5 + 1.0 / std::sqrt(2.0)).epsilon(1e-14));
  // the squared tuplet overlap is the squared infinite-chain norm constant
  CHECK(c.overlap3 == doctest::Approx(c.norm_inf * c.norm_inf).epsilon(1e-14));
}

TEST_CASE("localized ansatz is an eigenvector up to the truncated tail") {
  const BoundStateConstants c = bound_state_constants();
  double prev = 1e300;
  for (int L_d : {4, 8, 16}) {
    TripletBoundState t = triplet_bound_state(L_d, +1);
    ModelParams p;
    p.L = t.basis.L();
    const double r = residual(t, p, SignMode::Fermionic);
    CHECK(r <= 10.0 * std::pow(c.b, -2.0 * L_d));
    CHECK(r < prev);  // padding tightens the tail
    prev = r;
    CHECK(t.energy == doctest::Approx(c.E).epsilon(1e-14));
  }
  TripletBoundState m = triplet_bound_state(16, -1);
  ModelParams p;
  p.L = m.basis.L();
  CHECK(m.energy == doctest::Approx(-c.E).epsilon(1e-14));
  CHECK(residual(m, p, SignMode::Fermionic) <= 10.0 * std::pow(c.b, -32.0));
}

TEST_CASE("ansatz construction respects the hop gauge it is built in") {
  TripletBoundState t = triplet_bound_state(8, +1, SignMode::Hardcore);
  ModelParams p;
  p.L = t.basis.L();
  CHECK(residual(t, p, SignMode::Hardcore) <=
        10.0 * std::pow(bound_state_constants().b, -16.0));
}

TEST_CASE("branch states are orthogonal and share the tuplet weight") {
  TripletBoundState tp = triplet_bound_state(16, +1);
  TripletBoundState tm = triplet_bound_state(16, -1);
  CHECK(std::abs(overlap(tp.psi, tm.psi)) <= 1e-3);
  CHECK(std::fabs(std::norm(tp.psi[tp.center_index]) - 0.353553390593) < 1e-4);
  CHECK(std::fabs(std::norm(tm.psi[tm.center_index]) - 0.353553390593) < 1e-4);
}

TEST_CASE("off-center placement keeps the eigenvector property") {
  TripletBoundState t = triplet_bound_state_at(19, 5, +1);
  ModelParams p;
  p.L = 19;
  CHECK(residual(t, p, SignMode::Fermionic) < 0.01);  // tail cut at 4 sites
  CHECK(t.energy == doctest::Approx(bound_state_constants().E).epsilon(1e-14));
}

TEST_CASE("predicted localized population") {
  // two bound channels of weight w keep their atoms; the rest keeps one atom
  CHECK(predicted_localized_population(0.0, 2.7) == doctest::Approx(1.0));
  CHECK(predicted_localized_population(0.5, 2.0 + 1.0 / std::sqrt(2.0)) ==
        doctest::Approx(2.0 + 1.0 / std::sqrt(2.0)));
  CHECK(predicted_localized_population() ==
        doctest::Approx(1.5 + 1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(predicted_localized_population() == doctest::Approx(2.20710678118655));
}

TEST_CASE("transmission coefficient across the band") {
  CHECK(transmission_at_k(M_PI / 2.0, 2.0) == doctest::Approx(0.5).epsilon(1e-14));
  bool edge = false;
  CHECK(transmission_at_k(0.0, 2.0, 1.0, &edge) == doctest::Approx(0.0));
  CHECK(edge);
  edge = false;
  CHECK(transmission_at_k(M_PI, 2.0, 1.0, &edge) == doctest::Approx(0.0));
  CHECK(edge);
  for (int i = 1; i < 32; ++i) {
    const double k = M_PI * i / 32.0;
    const double t = transmission_at_k(k, 2.0);
    CHECK(t >= 0.0);
    CHECK(t <= 1.0);
    CHECK(t == doctest::Approx(transmission_at_k(M_PI - k, 2.0)).epsilon(1e-13));
  }
  // dimensionless: only U_delta / J matters
  CHECK(transmission_at_k(0.9, 3.0, 1.5) ==
        doctest::Approx(transmission_at_k(0.9, 2.0, 1.0)).epsilon(1e-13));
}

TEST_CASE("band-averaged transmission matches the closed form") {
  CHECK(transmission_total(2.0) ==
        doctest::Approx(1.0 - 1.0 / std::sqrt(2.0)).epsilon(1e-9));
  for (double u : {0.5, 1.0, 2.0, 5.0})
    CHECK(transmission_total(u) ==
          doctest::Approx(1.0 - u / std::sqrt(4.0 + u * u)).epsilon(1e-8));
  CHECK(transmission_total(0.0) == doctest::Approx(1.0).epsilon(1e-10));
  double prev = 1.0;
  for (double u : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double t = transmission_total(u);
    CHECK(t < prev);
    prev = t;
  }
}
