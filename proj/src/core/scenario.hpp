#pragma once
// Declarative runs: a scenario evolves one prepared state under one model and
// records observables; a sweep repeats a base scenario over a parameter grid
// and reduces each point to a single number. Configs are JSON with a
// versioned schema; unknown keys are rejected and every diagnostic names the
// offending field. parse/format round-trip exactly.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/evolve.hpp"
#include "core/fock.hpp"
#include "core/io.hpp"
#include "core/observables.hpp"

namespace lfsim {

inline constexpr int kConfigSchema = 1;

struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string f, const std::string& msg)
      : std::runtime_error("config field '" + f + "': " + msg),
        field(std::move(f)) {}
};

enum class ModelKind { LabFrame, Gauged, Effective, FluxError };

struct ObservableSpec {
  enum class Kind { Density, Doublon, Transmitted, InitialPopulation, Overlaps };
  Kind kind = Kind::Density;
  int j0 = -1;             // Transmitted: count atoms strictly right of j0
  std::vector<int> sites;  // InitialPopulation: empty = sites occupied in the loadout
  std::string target;      // Overlaps: loadout of the reference state

  bool operator==(const ObservableSpec&) const = default;
};

struct ScenarioConfig {
  int schema = kConfigSchema;
  std::string name;
  ModelKind model = ModelKind::Effective;
  ModelParams params;
  std::string loadout;
  EvolutionPlan plan;
  std::vector<ObservableSpec> observables;
  std::string output_prefix;  // defaults to name

  bool operator==(const ScenarioConfig&) const = default;
};

enum class SweepParameter { UOverJ, DeltaPhi, DeltaOmega };
enum class SweepReduction { DoublonError, SteadyStateDoublonRatio };

struct SweepConfig {
  int schema = kConfigSchema;
  std::string name;
  SweepParameter parameter = SweepParameter::UOverJ;
  std::vector<double> values;
  SweepReduction reduction = SweepReduction::DoublonError;
  ScenarioConfig base;  // its observable list is ignored; the reduction decides
  std::string output_prefix;

  bool operator==(const SweepConfig&) const = default;
};

// throws ConfigError on any malformed or unknown field
ScenarioConfig parse_scenario(const std::string& json_text);
SweepConfig parse_sweep(const std::string& json_text);
std::string format_scenario(const ScenarioConfig& c);
std::string format_sweep(const SweepConfig& c);

// re-checks invariants (loadout length, site ranges, grid sanity) for
// programmatically built configs; parse_* already enforce them
void validate_scenario(const ScenarioConfig& c);
void validate_sweep(const SweepConfig& c);

const char* model_name(ModelKind m);
const char* parameter_name(SweepParameter p);

// sector basis and operator a scenario runs in: the reachable component of
// the loadout for the constrained model, the full N-atom sector otherwise
Basis scenario_basis(const ScenarioConfig& c);
SparseOperator build_model(ModelKind model, const ModelParams& p,
                           const Basis& basis,
                           SignMode mode = SignMode::Fermionic);

struct ScenarioResult {
  Basis basis;
  EvolveMethod method_used = EvolveMethod::Dense;
  std::vector<double> times;
  std::vector<DensityProfile> profiles;              // when density is requested
  std::map<std::string, std::vector<double>> series; // label -> per-sample value
  std::vector<std::string> files;                    // artifacts written
};

// out_dir empty: compute only, write nothing
ScenarioResult run_scenario(const ScenarioConfig& c,
                            const std::string& out_dir);

struct LorentzianFit {
  bool ok = false;       // false: fit diverged; grid data is still valid
  double a = 0.0;        // amplitude of a / (1 + (x/w)^2)
  double w = 0.0;        // half width
  double coefficient = 0.0;  // 2 U / (w J), the resonance-width figure
};

struct SweepResult {
  std::vector<double> values;   // the grid, in config order
  std::vector<double> reduced;  // one number per grid point
  LorentzianFit fit;            // detuning sweeps only
  std::vector<std::string> files;
};

// threads > 1 runs grid points concurrently; output order stays the grid
// order regardless
SweepResult run_sweep(const SweepConfig& c, const std::string& out_dir,
                      int threads = 1);

// least-squares fit of y ~ a / (1 + (x/w)^2); exposed for testing
LorentzianFit fit_lorentzian(const std::vector<double>& x,
                             const std::vector<double>& y);

}  // namespace lfsim
