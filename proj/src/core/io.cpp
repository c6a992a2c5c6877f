#include "core/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace lfsim {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

namespace {

std::ofstream open_out(const std::string& path, bool binary = false) {
  std::ofstream out(path, binary ? (std::ios::out | std::ios::binary)
                                 : std::ios::out);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

void emit_meta(std::ofstream& out, const Metadata& meta) {
  out << "# version: " << kVersionString << "\n";
  for (const auto& [k, v] : meta) out << "# " << k << ": " << v << "\n";
}

}  // namespace

void write_profile_csv(const std::string& path, const Metadata& meta,
                       const std::vector<double>& times,
                       const std::vector<DensityProfile>& profiles) {
  if (times.size() != profiles.size())
    throw std::invalid_argument("profile csv: times/profiles length mismatch");
  auto out = open_out(path);
  emit_meta(out, meta);
  out << "t,site,n_up,n_down,n_total\n";
  for (size_t i = 0; i < times.size(); ++i) {
    const auto& p = profiles[i];
    const std::string t = format_double(times[i]);
    for (size_t j = 0; j < p.n.size(); ++j) {
      out << t << ',' << j << ',' << format_double(p.n_up[j]) << ','
          << format_double(p.n_dn[j]) << ',' << format_double(p.n[j]) << "\n";
    }
  }
}

void write_series_csv(const std::string& path, const Metadata& meta,
                      const std::vector<double>& times,
                      const std::vector<double>& values,
                      const std::string& value_label, const std::string& x_label) {
  if (times.size() != values.size())
    throw std::invalid_argument("series csv: times/values length mismatch");
  auto out = open_out(path);
  emit_meta(out, meta);
  out << x_label << ',' << value_label << "\n";
  for (size_t i = 0; i < times.size(); ++i)
    out << format_double(times[i]) << ',' << format_double(values[i]) << "\n";
}

void write_table_csv(const std::string& path, const Metadata& meta,
                     const std::vector<std::string>& columns,
                     const std::vector<std::vector<double>>& rows) {
  auto out = open_out(path);
  emit_meta(out, meta);
  for (size_t c = 0; c < columns.size(); ++c)
    out << (c ? "," : "") << columns[c];
  out << "\n";
  for (const auto& row : rows) {
    if (row.size() != columns.size())
      throw std::invalid_argument("table csv: row width mismatch");
    for (size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << format_double(row[c]);
    out << "\n";
  }
}

void write_scar_csv(const std::string& path, const Metadata& meta,
                    const std::vector<ScarCountRow>& rows) {
  auto out = open_out(path);
  emit_meta(out, meta);
  out << "L,count_up,count_empty,count_doublon,total\n";
  for (const auto& r : rows)
    out << r.L << ',' << r.up << ',' << r.empty << ',' << r.doublon << ','
        << r.total << "\n";
}

void write_operator(const std::string& path, const SparseOperator& H) {
  auto out = open_out(path);
  const auto& t = H.triplets();
  out << H.dim() << ' ' << t.size() << ' ' << (H.is_hermitian() ? 1 : 0)
      << "\n";
  for (const auto& e : t)
    out << e.r << ' ' << e.c << ' ' << format_double(e.v.real()) << ' '
        << format_double(e.v.imag()) << "\n";
}

void write_basis(const std::string& path, const Basis& basis,
                 Boundary boundary) {
  auto out = open_out(path);
  const int L = basis.L();
  const int N = basis.dim() > 0 ? basis.state(0).atoms() : 0;
  out << "# L=" << L << " N=" << N << " boundary="
      << (boundary == Boundary::Open ? "open" : "periodic") << "\n";
  for (int i = 0; i < basis.dim(); ++i)
    out << u128_to_string(state_key(basis.state(i), L)) << "\n";
}

void write_checkpoint(const std::string& path, const Vec& psi,
                      const std::string& basis_ref, double time) {
  static_assert(sizeof(cdouble) == 16, "complex<double> layout");
  {
    auto out = open_out(path, /*binary=*/true);
    // x86-64/aarch64 are little-endian; refuse elsewhere rather than emit
    // byte-swapped data
    const uint16_t probe = 1;
    uint8_t lo;
    std::memcpy(&lo, &probe, 1);
    if (lo != 1) throw std::runtime_error("checkpoint requires little-endian host");
    out.write(reinterpret_cast<const char*>(psi.data()),
              std::streamsize(psi.size() * sizeof(cdouble)));
  }
  nlohmann::json side;
  side["schema"] = 1;
  side["version"] = kVersionString;
  side["basis"] = basis_ref;
  side["time"] = time;
  side["dim"] = psi.size();
  side["dtype"] = "complex128-le";
  auto out = open_out(path + ".json");
  out << side.dump(2) << "\n";
}

Vec read_checkpoint(const std::string& path) {
  std::ifstream side_in(path + ".json");
  if (!side_in) throw std::runtime_error("missing checkpoint sidecar: " + path + ".json");
  nlohmann::json side = nlohmann::json::parse(side_in);
  const size_t dim = side.at("dim").get<size_t>();
  std::ifstream in(path, std::ios::in | std::ios::binary);
  if (!in) throw std::runtime_error("cannot open checkpoint: " + path);
  Vec psi(dim);
  in.read(reinterpret_cast<char*>(psi.data()),
          std::streamsize(dim * sizeof(cdouble)));
  if (in.gcount() != std::streamsize(dim * sizeof(cdouble)))
    throw std::runtime_error("checkpoint truncated: " + path);
  return psi;
}

}  // namespace lfsim
