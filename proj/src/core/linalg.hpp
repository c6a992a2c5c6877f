#pragma once
// Dense symmetric/Hermitian eigensolves (LAPACK divide and conquer), a
// tridiagonal solver for Krylov exponentials, and an extremal Lanczos with
// full reorthogonalization. Eigenvector phases are fixed deterministically:
// the largest-magnitude component (first such index on ties) is made real
// positive.

#include <vector>

#include "core/operators.hpp"

namespace lfsim {

struct EigReal {
  std::vector<double> w;   // ascending
  std::vector<double> V;   // row-major: V[i*n + k] = component i of vector k
};
struct EigComplex {
  std::vector<double> w;
  std::vector<cdouble> V;
};

EigReal eigh(std::vector<double> A, int n);
EigComplex eigh(std::vector<cdouble> A, int n);

// symmetric tridiagonal (alpha diagonal, beta off-diagonal); Z row-major m x m
void tridiag_eigh(std::vector<double> alpha, std::vector<double> beta,
                  std::vector<double>& w, std::vector<double>& Z);

void fix_phase(double* v, int n);
void fix_phase(cdouble* v, int n);

// solve A x = b for symmetric positive definite A (row-major n x n)
std::vector<double> solve_spd(std::vector<double> A, std::vector<double> b,
                              int n);

struct ExtremalPairs {
  std::vector<double> values;       // by descending |value|
  std::vector<Vec> vectors;
  std::vector<double> residuals;    // ||Hv - w v||
};

// k largest-magnitude eigenpairs by Lanczos with full reorthogonalization and
// a fixed integer-seeded start vector (deterministic across platforms)
ExtremalPairs eigensolve_extremal(const SparseOperator& H, int k,
                                  double tol = 1e-10, int max_iter = 0);

// deterministic pseudo-random stream for start vectors
struct SplitMix64 {
  u64 state;
  explicit SplitMix64(u64 seed) : state(seed) {}
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return double(next() >> 11) * 0x1.0p-53; }  // [0, 1)
};

}  // namespace lfsim
