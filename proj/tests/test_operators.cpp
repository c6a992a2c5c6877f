#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "core/chains.hpp"
#include "core/linalg.hpp"
#include "core/operators.hpp"
#include "doctest.h"

using namespace lfsim;

namespace {

// <bra| H |ket> via one column application
cdouble element(const SparseOperator& H, const Basis& b, const char* bra,
                const char* ket) {
  Vec e(b.dim(), cdouble(0.0));
  const int ic = b.index(parse_loadout(ket));
  const int ir = b.index(parse_loadout(bra));
  REQUIRE(ic >= 0);
  REQUIRE(ir >= 0);
  e[ic] = 1.0;
  return H.apply(e)[ir];
}

ModelParams open_params(int L, double U = 0.0, double Omega = 0.0) {
  ModelParams p;
  p.L = L;
  p.U = U;
  p.Omega = Omega;
  return p;
}

}  // namespace

TEST_CASE("constrained hops split an up pair into both doublon placements") {
  Basis b = enumerate_basis(2, 2);
  ModelParams p = open_params(2);
  SparseOperator Hf = build_effective(p, b, SignMode::Fermionic);
  SparseOperator Hh = build_effective(p, b, SignMode::Hardcore);
  // mode ordering puts a parity sign on one of the two placements
  CHECK(element(Hf, b, "D.", "uu") == cdouble(-1.0));
  CHECK(element(Hf, b, ".D", "uu") == cdouble(1.0));
  CHECK(element(Hh, b, "D.", "uu") == cdouble(-1.0));
  CHECK(element(Hh, b, ".D", "uu") == cdouble(-1.0));
  // no other channel out of the pair
  CHECK(element(Hf, b, "du", "uu") == cdouble(0.0));
  CHECK(element(Hf, b, "dd", "uu") == cdouble(0.0));
  CHECK(Hf.is_hermitian());
  CHECK(Hh.is_hermitian());
}

TEST_CASE("constrained model has zero diagonal") {
  Basis b = enumerate_basis(3, 3);
  SparseOperator H = build_effective(open_params(3), b);
  for (const Triplet& t : H.triplets()) CHECK(t.r != t.c);
}

TEST_CASE("constrained hops conserve the doubled charge") {
  Basis b = enumerate_basis(4, 3);
  SparseOperator H = build_effective(open_params(4), b);
  for (const Triplet& t : H.triplets())
    CHECK(b.state(t.r).charge2() == b.state(t.c).charge2());
}

TEST_CASE("rotated single-atom block is field diagonal plus spin-flip hops") {
  Basis b = enumerate_basis(2, 1);
  SparseOperator H = build_gauged(open_params(2, 0.0, 4.0), b);
  CHECK(element(H, b, "u.", "u.") == cdouble(2.0));  // +Omega/2
  CHECK(element(H, b, ".u", ".u") == cdouble(2.0));
  CHECK(element(H, b, "d.", "d.") == cdouble(-2.0));
  CHECK(element(H, b, ".d", ".d") == cdouble(-2.0));
  CHECK(element(H, b, ".d", "u.") == cdouble(-1.0));  // hop flips the spin
  CHECK(element(H, b, "d.", ".u") == cdouble(-1.0));
  CHECK(element(H, b, ".u", "u.") == cdouble(0.0));  // no spin-conserving hop
  CHECK(H.is_hermitian());
}

TEST_CASE("rotated pair block couples the up pair to both doublons") {
  Basis b = enumerate_basis(2, 2);
  SparseOperator H = build_gauged(open_params(2, 8.0, 8.0), b);
  CHECK(element(H, b, "D.", "uu") == cdouble(-1.0));
  CHECK(element(H, b, ".D", "uu") == cdouble(1.0));
  CHECK(element(H, b, "dd", "D.") == cdouble(1.0));
  CHECK(element(H, b, "dd", ".D") == cdouble(-1.0));
  // diagonal: U on the doublon, (Omega/2)(N_up - N_dn) on the rest
  CHECK(element(H, b, "uu", "uu") == cdouble(8.0));
  CHECK(element(H, b, "D.", "D.") == cdouble(8.0));
  CHECK(element(H, b, ".D", ".D") == cdouble(8.0));
  CHECK(element(H, b, "dd", "dd") == cdouble(-8.0));
}

TEST_CASE("flux error at zero is exactly the rotated frame") {
  Basis b = enumerate_basis(3, 2);
  ModelParams p = open_params(3, 5.0, 5.0);
  std::vector<cdouble> F = build_flux_error(p, b).dense_complex();
  std::vector<double> G = build_gauged(p, b).dense_real();
  for (size_t i = 0; i < F.size(); ++i) {
    CHECK(F[i].imag() == 0.0);
    CHECK(F[i].real() == G[i]);
  }
}

TEST_CASE("flux error at pi restores spin-conserving hops") {
  // at delta_phi = pi the spin-flip channel closes; with Omega = 0 the
  // operator coincides with the undriven laboratory frame
  Basis b = enumerate_basis(3, 2);
  ModelParams p = open_params(3, 5.0, 0.0);
  p.delta_phi = M_PI;
  std::vector<cdouble> F = build_flux_error(p, b).dense_complex();
  std::vector<double> Lab = build_lab_frame(p, b).dense_real();
  for (size_t i = 0; i < F.size(); ++i) {
    CHECK(std::fabs(F[i].imag()) < 1e-15);
    CHECK(F[i].real() == doctest::Approx(Lab[i]).epsilon(1e-14));
  }
}

TEST_CASE("intermediate flux error is complex yet hermitian") {
  Basis b = enumerate_basis(2, 2);
  ModelParams p = open_params(2, 5.0, 5.0);
  p.delta_phi = 0.7;
  SparseOperator H = build_flux_error(p, b);
  CHECK(H.is_hermitian());
  CHECK_FALSE(H.is_real());
  CHECK_THROWS_AS(H.dense_real(), std::invalid_argument);
}

TEST_CASE("laboratory drive is staggered") {
  Basis b = enumerate_basis(2, 1);
  SparseOperator H = build_lab_frame(open_params(2, 0.0, 4.0), b);
  // (Omega/2)(-1)^j couples the species on site, sign alternating
  CHECK(element(H, b, "d.", "u.") == cdouble(2.0));
  CHECK(element(H, b, ".d", ".u") == cdouble(-2.0));
  CHECK(element(H, b, ".u", "u.") == cdouble(-1.0));  // spin-conserving hop
  CHECK(element(H, b, ".d", "d.") == cdouble(-1.0));
  CHECK(element(H, b, ".d", "u.") == cdouble(0.0));
  CHECK(H.is_hermitian());
}

TEST_CASE("connectivity counts coupled basis states") {
  ModelParams p = open_params(7);
  Basis sector = enumerate_basis(7, 3);
  SparseOperator H = build_effective(p, sector);
  // centered 3-tuplet: two pair bonds, each opening two doublon placements
  CHECK(connectivity(parse_loadout("..uuu.."), H, sector) == 4);
  // an isolated up atom cannot move at all
  Basis one = enumerate_basis(7, 1);
  SparseOperator H1 = build_effective(p, one);
  CHECK(connectivity(parse_loadout("...u..."), H1, one) == 0);
  // a 2-tuplet with a far orphan keeps only its own two channels
  CHECK(connectivity(parse_loadout("uu...u."), H, sector) == 2);
}

TEST_CASE("reachable component sizes for the standard preparations") {
  auto dim3 = [](int L) {
    ModelParams p = open_params(L);
    FockState s;
    s.up = 7ull << ((L - 3) / 2);
    return reachable_effective(p, s).dim();
  };
  CHECK(dim3(7) == 13);
  CHECK(dim3(11) == 21);
  CHECK(dim3(19) == 37);

  ModelParams p4 = open_params(4);
  CHECK(reachable_effective(p4, parse_loadout("uu..")).dim() == 7);
  ModelParams p30 = open_params(30);
  FockState pair;
  pair.up = 3ull << 14;
  CHECK(reachable_effective(p30, pair).dim() == 59);

  // collision geometry: adjacent pair at (12, 13), orphan at 20
  ModelParams p41 = open_params(41);
  FockState coll;
  coll.up = (3ull << 12) | (1ull << 20);
  CHECK(reachable_effective(p41, coll).dim() == 81);

  // a ring mixes the components that open boundaries keep apart
  ModelParams p8 = open_params(8);
  p8.boundary = Boundary::Periodic;
  CHECK(reachable_effective(p8, parse_loadout("u.uu.uuu")).dim() == 448);
}

TEST_CASE("graph walk and operator reachability agree") {
  ModelParams p = open_params(7);
  FockState s;
  s.up = 7ull << 2;
  Basis walked = reachable_effective(p, s);
  Basis sector = enumerate_basis(7, 3);
  SparseOperator H = build_effective(p, sector);
  Basis component = reachable_subspace(H, sector, {s});
  REQUIRE(component.dim() == walked.dim());
  for (int i = 0; i < component.dim(); ++i)
    CHECK(walked.index(component.state(i)) == i);
}

TEST_CASE("mode choice never moves the open-sector spectrum") {
  // parity signs are a gauge on the hop graph: spectra must match exactly
  ModelParams p = open_params(6);
  FockState s;
  s.up = 7ull << 1;
  Basis b = reachable_effective(p, s);
  auto wf = eigh(build_effective(p, b, SignMode::Fermionic).dense_real(), b.dim());
  auto wh = eigh(build_effective(p, b, SignMode::Hardcore).dense_real(), b.dim());
  for (int i = 0; i < b.dim(); ++i)
    CHECK(wf.w[i] == doctest::Approx(wh.w[i]).epsilon(1e-13));

  ModelParams pg = open_params(2, 8.0, 8.0);
  Basis pair = enumerate_basis(2, 2);
  auto gf = eigh(build_gauged(pg, pair, SignMode::Fermionic).dense_real(), pair.dim());
  auto gh = eigh(build_gauged(pg, pair, SignMode::Hardcore).dense_real(), pair.dim());
  for (int i = 0; i < pair.dim(); ++i)
    CHECK(gf.w[i] == doctest::Approx(gh.w[i]).epsilon(1e-13));
}

TEST_CASE("finalize merges duplicates and drops exact zeros") {
  SparseOperator H(2);
  H.add(0, 1, cdouble(-0.5));
  H.add(0, 1, cdouble(-0.5));
  H.add(1, 0, cdouble(-1.0));
  H.add(0, 0, cdouble(0.25));
  H.add(0, 0, cdouble(-0.25));
  H.finalize();
  CHECK(H.nnz() == 2);
  CHECK(H.is_hermitian());
  CHECK(H.norm_inf() == 1.0);
  Vec y = H.apply({cdouble(0.0), cdouble(1.0)});
  CHECK(y[0] == cdouble(-1.0));
  CHECK(y[1] == cdouble(0.0));
}

TEST_CASE("impurity chain with two levels has the symmetric spectrum") {
  // one site, two impurity levels: eigenvalues {-2, 0, 0, 0, 2}
  SparseOperator H = build_anderson_chain(1);
  REQUIRE(H.dim() == 5);
  auto e = eigh(H.dense_real(), 5);
  const double expect[5] = {-2.0, 0.0, 0.0, 0.0, 2.0};
  for (int i = 0; i < 5; ++i) CHECK(std::fabs(e.w[i] - expect[i]) < 1e-12);
}

TEST_CASE("single-impurity chain bound level at U_delta = 2J") {
  // symmetric-sector reduction at M = 1: eigenvalues {-1-sqrt(3), 0, sqrt(3)-1}
  SparseOperator H = build_delta_chain(1, 2.0);
  REQUIRE(H.dim() == 3);
  auto e = eigh(H.dense_real(), 3);
  CHECK(e.w[0] == doctest::Approx(-1.0 - std::sqrt(3.0)).epsilon(1e-13));
  CHECK(std::fabs(e.w[1]) < 1e-13);
  CHECK(e.w[2] == doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-13));
}

TEST_CASE("virtual-chain mapping is exact and feels a seeded defect") {
  MappingReport clean = verify_anderson_mapping(11);
  CHECK(clean.ok);
  CHECK(clean.dim_effective == 21);
  CHECK(clean.dim_chain == 21);
  CHECK(clean.max_abs_difference == 0.0);

  MappingReport bumped = verify_anderson_mapping(11, SignMode::Fermionic, 1e-6);
  CHECK_FALSE(bumped.ok);
  CHECK(bumped.max_abs_difference == doctest::Approx(1e-6).epsilon(1e-9));

  CHECK(verify_anderson_mapping(11, SignMode::Hardcore).ok);
}
