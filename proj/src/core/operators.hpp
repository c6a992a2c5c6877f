#pragma once
// Sparse Hermitian operators over a Basis, and builders for every model:
// lab-frame driven chain, gauged frame, effective density-dependent
// tunneling, and the flux-error model. Tight-binding virtual chains live in
// chains.hpp.

#include <complex>
#include <vector>

#include "core/fock.hpp"

namespace lfsim {

using cdouble = std::complex<double>;
using Vec = std::vector<cdouble>;

struct Triplet {
  int r = 0, c = 0;
  cdouble v;
};

class SparseOperator {
 public:
  SparseOperator() = default;
  explicit SparseOperator(int dim) : dim_(dim) {}

  void add(int r, int c, cdouble v) { triplets_.push_back({r, c, v}); }
  // sort, merge duplicates, drop exact zeros, build CSR, set flags
  void finalize();

  int dim() const { return dim_; }
  int nnz() const { return int(triplets_.size()); }
  bool is_real() const { return real_; }
  // exact check: for every (r,c,v) the transposed conjugate triplet exists
  bool is_hermitian() const;
  const std::vector<Triplet>& triplets() const { return triplets_; }

  void matvec(const cdouble* x, cdouble* y) const;
  Vec apply(const Vec& x) const;
  std::vector<double> dense_real() const;   // row-major, throws if complex
  std::vector<cdouble> dense_complex() const;
  // sum_j max_i |H_ij| style bound is overkill; infinity norm serves as the
  // scale for tolerance checks
  double norm_inf() const;

 private:
  int dim_ = 0;
  bool real_ = true;
  std::vector<Triplet> triplets_;
  std::vector<int> row_ptr_, col_;
  std::vector<cdouble> val_;
};

// model builders ------------------------------------------------------------

// spin-conserving hopping -J, on-site U, staggered on-site Rabi coupling
// (Omega/2)(-1)^j between the two species
SparseOperator build_lab_frame(const ModelParams& p, const Basis& basis,
                               SignMode mode = SignMode::Fermionic);

// spin-flip hopping -J, on-site U, uniform field (Omega/2)(N_up - N_dn)
SparseOperator build_gauged(const ModelParams& p, const Basis& basis,
                            SignMode mode = SignMode::Fermionic);

// resonant limit: an up atom may hop only onto a site already holding an up
// atom (forming a doublon) and only off a site with no down atom; amplitude
// -J, zero diagonal. Valid for times tJ much below U/J.
SparseOperator build_effective(const ModelParams& p, const Basis& basis,
                               SignMode mode = SignMode::Fermionic);

// imperfect flux: spin-conserving amplitude -(J/2)(1 - e^{-i dphi}) and
// spin-flip amplitude -(J/2)(1 + e^{-i dphi}); U and field terms as gauged.
// dphi = 0 reproduces build_gauged triplet for triplet.
SparseOperator build_flux_error(const ModelParams& p, const Basis& basis,
                                SignMode mode = SignMode::Fermionic);

// reachability and connectivity ---------------------------------------------

// connected component of the operator's adjacency graph containing the
// support states
Basis reachable_subspace(const SparseOperator& H, const Basis& basis,
                         const std::vector<FockState>& support);

// same component, walked from the effective-model hop rules directly; never
// assembles a full-sector operator
Basis reachable_effective(const ModelParams& p, const FockState& start);

// number of distinct basis states coupled to `state` by H
int connectivity(const FockState& state, const SparseOperator& H, const Basis& basis);

}  // namespace lfsim
