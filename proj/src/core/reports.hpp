#pragma once
// Report generators behind the non-evolution CLI surfaces: bound-state
// spectra and profiles, the frozen-state census, analytic transmission
// tables, and scattering runs with the single-particle surrogate overlay.

#include <string>
#include <vector>

#include "core/scenario.hpp"

namespace lfsim {

// ---- bound states -----------------------------------------------------

struct BoundStateConfig {
  int schema = kConfigSchema;
  std::string name;
  enum class Kind { Triplet, FiveTuplet } kind = Kind::Triplet;
  int L = 19;                 // open chain, odd so the tuplet sits centered
  std::string output_prefix;  // defaults to name
  bool operator==(const BoundStateConfig&) const = default;
};

BoundStateConfig parse_boundstate_config(const std::string& json_text);
std::string format_boundstate_config(const BoundStateConfig& c);
void validate_boundstate_config(const BoundStateConfig& c);

struct BoundStateReport {
  std::vector<double> energies;           // localized pair, descending |E|
  std::vector<std::string> files;
};

// Solves the centered-tuplet reachable sector at L sites and writes
//   <prefix>-levels.csv    every eigenvalue with window fraction/population
//   <prefix>-profile.csv   per-site density of the localized pair (triplet
//                          kind adds the closed-form ansatz profile)
//   <prefix>-summary.json  constants, localized energies, overlaps,
//                          predicted trapped populations
BoundStateReport run_boundstates(const BoundStateConfig& c,
                                 const std::string& out_dir);

// ---- frozen-state census ------------------------------------------------

struct ScarReportConfig {
  int schema = kConfigSchema;
  std::string name;
  int L_min = 2;
  int L_max = 12;
  int list_up_to = 8;         // explicit state lists for L <= this; 0 = none
  std::string output_prefix;
  bool operator==(const ScarReportConfig&) const = default;
};

ScarReportConfig parse_scar_config(const std::string& json_text);
std::string format_scar_config(const ScarReportConfig& c);
void validate_scar_config(const ScarReportConfig& c);

struct ScarReport {
  std::vector<std::string> files;
};

// Writes <prefix>-counts.csv (transfer-matrix counts per L) and, when
// list_up_to >= L_min, <prefix>-states.json with the enumerated frozen
// configurations checked against those counts.
ScarReport run_scars(const ScarReportConfig& c, const std::string& out_dir);

// ---- analytic transmission ----------------------------------------------

struct AnalyticReportConfig {
  int schema = kConfigSchema;
  std::string name;
  double U_delta = 2.0;
  double J = 1.0;
  int k_points = 257;         // samples of t(k) across the band [0, pi]
  std::string output_prefix;
  bool operator==(const AnalyticReportConfig&) const = default;
};

AnalyticReportConfig parse_analytic_config(const std::string& json_text);
std::string format_analytic_config(const AnalyticReportConfig& c);
void validate_analytic_config(const AnalyticReportConfig& c);

struct AnalyticReport {
  double total_quadrature = 0.0;
  double total_closed_form = 0.0;  // 1 - U_delta / sqrt(4 J^2 + U_delta^2)
  std::vector<std::string> files;
};

// Writes <prefix>-transmission.csv (k, t(k)) and <prefix>-summary.json with
// band-averaged transmission (quadrature and closed form) plus the
// bound-state constants and predicted trapped populations.
AnalyticReport run_analytic(const AnalyticReportConfig& c,
                            const std::string& out_dir);

// ---- scattering with surrogate overlay -----------------------------------

struct ScatterResult {
  ScenarioResult scenario;
  bool surrogate = false;     // overlay emitted (pair-orphan geometry found)
  double asymptote = 0.0;     // band-averaged transmitted atom number
  std::vector<double> surrogate_times;
  std::vector<double> surrogate_values;
  std::vector<std::string> files;
};

// Runs the scenario (which must declare a transmitted observable) and, when
// the loadout is a 2-tuplet strictly left of an isolated orphan at the
// transmitted cut j0 under the constrained model on an open chain, also
// evolves the equivalent single walker against a -2J impurity site and emits
// <prefix>-surrogate.csv with the transmitted weight doubled back to atoms.
ScatterResult run_scatter(const ScenarioConfig& c, const std::string& out_dir);

}  // namespace lfsim
