#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>
#include <vector>

#include "core/chains.hpp"
#include "core/linalg.hpp"
#include "doctest.h"

using namespace lfsim;

namespace {

// symmetric matrix with entries drawn from a fixed stream
std::vector<double> random_symmetric(int n, u64 seed) {
  SplitMix64 rng(seed);
  std::vector<double> A(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      A[size_t(i) * n + j] = A[size_t(j) * n + i] = rng.uniform() - 0.5;
  return A;
}

}  // namespace

TEST_CASE("real eigensolve on the 2x2 hop") {
  auto e = eigh(std::vector<double>{0.0, -1.0, -1.0, 0.0}, 2);
  CHECK(e.w[0] == doctest::Approx(-1.0));
  CHECK(e.w[1] == doctest::Approx(1.0));
  const double r = 1.0 / std::sqrt(2.0);
  // ground state (1,1)/sqrt(2); phase fix makes the top component positive
  CHECK(e.V[0 * 2 + 0] == doctest::Approx(r));
  CHECK(e.V[1 * 2 + 0] == doctest::Approx(r));
  CHECK(e.V[0 * 2 + 1] == doctest::Approx(r));
  CHECK(e.V[1 * 2 + 1] == doctest::Approx(-r));
}

TEST_CASE("complex eigensolve on the 2x2 chiral hop") {
  const cdouble i(0.0, 1.0);
  auto e = eigh(std::vector<cdouble>{0.0, -i, i, 0.0}, 2);
  CHECK(e.w[0] == doctest::Approx(-1.0));
  CHECK(e.w[1] == doctest::Approx(1.0));
  // eigenvectors (1, -i)/sqrt(2) and (1, i)/sqrt(2) after the phase fix
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(e.V[0 * 2 + 0] - cdouble(r)) < 1e-12);
  CHECK(std::abs(e.V[1 * 2 + 0] - cdouble(0.0, -r)) < 1e-12);
  CHECK(std::abs(e.V[0 * 2 + 1] - cdouble(r)) < 1e-12);
  CHECK(std::abs(e.V[1 * 2 + 1] - cdouble(0.0, r)) < 1e-12);
}

TEST_CASE("eigensolve returns an orthonormal diagonalizing frame") {
  const int n = 8;
  std::vector<double> A = random_symmetric(n, 7);
  auto e = eigh(A, n);
  for (int i = 1; i < n; ++i) CHECK(e.w[i - 1] <= e.w[i]);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) {
      double dot = 0.0;
      for (int r = 0; r < n; ++r) dot += e.V[size_t(r) * n + k] * e.V[size_t(r) * n + l];
      CHECK(std::fabs(dot - (k == l ? 1.0 : 0.0)) < 1e-12);
    }
  // A v_k = w_k v_k
  for (int k = 0; k < n; ++k)
    for (int r = 0; r < n; ++r) {
      double acc = 0.0;
      for (int c = 0; c < n; ++c) acc += A[size_t(r) * n + c] * e.V[size_t(c) * n + k];
      CHECK(std::fabs(acc - e.w[k] * e.V[size_t(r) * n + k]) < 1e-12);
    }
}

TEST_CASE("tridiagonal solver matches the dense path") {
  const int m = 10;
  SplitMix64 rng(11);
  std::vector<double> alpha(m), beta(m - 1);
  for (double& a : alpha) a = rng.uniform() - 0.5;
  for (double& b : beta) b = rng.uniform() + 0.1;
  std::vector<double> w, Z;
  tridiag_eigh(alpha, beta, w, Z);
  std::vector<double> A(size_t(m) * m, 0.0);
  for (int i = 0; i < m; ++i) A[size_t(i) * m + i] = alpha[i];
  for (int i = 0; i + 1 < m; ++i)
    A[size_t(i) * m + i + 1] = A[size_t(i + 1) * m + i] = beta[i];
  auto dense = eigh(A, m);
  for (int i = 0; i < m; ++i) CHECK(w[i] == doctest::Approx(dense.w[i]).epsilon(1e-12));
}

TEST_CASE("phase fix pins the largest component") {
  double v[2] = {0.3, -0.8};
  fix_phase(v, 2);
  CHECK(v[0] == doctest::Approx(-0.3));
  CHECK(v[1] == doctest::Approx(0.8));

  cdouble c[2] = {cdouble(0.3, 0.0), cdouble(0.0, 0.8)};
  fix_phase(c, 2);
  CHECK(std::abs(c[1] - cdouble(0.8, 0.0)) < 1e-14);
  CHECK(std::abs(c[0] - cdouble(0.0, -0.3)) < 1e-14);
}

TEST_CASE("positive definite solve") {
  std::vector<double> A = {2.0, 1.0, 1.0, 2.0};
  std::vector<double> x = solve_spd(A, {3.0, 3.0}, 2);
  CHECK(x[0] == doctest::Approx(1.0));
  CHECK(x[1] == doctest::Approx(1.0));
}

TEST_CASE("extremal pairs find the impurity bound level") {
  // -U_delta well at the center: deepest level pinned at -2 sqrt(2) J when
  // U_delta = 2J, far below the band edge -2J
  SparseOperator H = build_delta_chain(200, 2.0);
  ExtremalPairs e = eigensolve_extremal(H, 1);
  REQUIRE(e.values.size() == 1);
  CHECK(e.values[0] == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(e.residuals[0] < 1e-8);
}

TEST_CASE("extremal pairs find the symmetric two-level pair") {
  SparseOperator H = build_anderson_chain(200);
  ExtremalPairs e = eigensolve_extremal(H, 2);
  REQUIRE(e.values.size() == 2);
  CHECK(std::fabs(e.values[0]) >= std::fabs(e.values[1]));
  CHECK(std::fabs(std::fabs(e.values[0]) - 2.19736822693562) < 1e-8);
  CHECK(std::fabs(e.values[0] + e.values[1]) < 1e-8);
  CHECK(e.residuals[0] < 1e-8);
  CHECK(e.residuals[1] < 1e-8);
  // eigenvector normalization
  double n0 = 0.0;
  for (const cdouble& v : e.vectors[0]) n0 += std::norm(v);
  CHECK(n0 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("seeded stream is deterministic and uniform-ranged") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  SplitMix64 c(42);
  for (int i = 0; i < 1000; ++i) {
    double u = c.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
