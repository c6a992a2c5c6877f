#pragma once
// Artifact formats: CSV emission with metadata headers, operator and basis
// text exports, and binary wavefunction checkpoints with a JSON sidecar.
// All floats print via format_double (12 significant digits) so identical
// runs produce byte-identical files.

#include <map>
#include <string>
#include <vector>

#include "core/fock.hpp"
#include "core/observables.hpp"
#include "core/operators.hpp"

namespace lfsim {

inline constexpr const char* kVersionString = "lfsim 1.0.0";

std::string format_double(double v);

// '#'-prefixed metadata lines (key: value), insertion-ordered
using Metadata = std::vector<std::pair<std::string, std::string>>;

// rows "t,site,n_up,n_down,n_total" for a sequence of timed profiles
void write_profile_csv(const std::string& path, const Metadata& meta,
                       const std::vector<double>& times,
                       const std::vector<DensityProfile>& profiles);

// rows "t,value"; sweeps override x_label with the swept parameter's name
void write_series_csv(const std::string& path, const Metadata& meta,
                      const std::vector<double>& times,
                      const std::vector<double>& values,
                      const std::string& value_label = "value",
                      const std::string& x_label = "t");

// generic numeric table: one header row of column names, %.12g cells
void write_table_csv(const std::string& path, const Metadata& meta,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows);

// rows "L,count_up,count_empty,count_doublon,total"
struct ScarCountRow {
  int L;
  long long up, empty, doublon, total;
};
void write_scar_csv(const std::string& path, const Metadata& meta,
                    const std::vector<ScarCountRow>& rows);

// header "dim nnz hermitian", then one "row col re im" line per stored entry
void write_operator(const std::string& path, const SparseOperator& H);

// header "# L=<L> N=<N> boundary=<open|periodic>", then one decimal state
// key per line in basis order
void write_basis(const std::string& path, const Basis& basis,
                 Boundary boundary);

// amplitudes as little-endian complex doubles (re, im interleaved), plus
// path + ".json" sidecar carrying the basis reference and time stamp
void write_checkpoint(const std::string& path, const Vec& psi,
                      const std::string& basis_ref, double time);
Vec read_checkpoint(const std::string& path);

}  // namespace lfsim
