#pragma once
// Release gate: re-measures every shipped numerical claim against its
// tolerance. The CLI `verify` subcommand and the acceptance runner both call
// run_verification_suite and render the same report.

#include <string>
#include <vector>

namespace lfsim {

struct CheckValue {
  std::string label;
  double measured = 0.0;
  double expected = 0.0;   // reference value or bound
  double tolerance = 0.0;  // half-width for op "abs_diff"; unused otherwise
  std::string op;          // "abs_diff" | "==" | ">=" | "<" | "<="
  bool pass = false;
};

CheckValue abs_check(const std::string& label, double measured,
                     double expected, double tolerance);
CheckValue exact_check(const std::string& label, double measured,
                       double expected);
CheckValue ge_check(const std::string& label, double measured, double bound);
CheckValue lt_check(const std::string& label, double measured, double bound);
CheckValue le_check(const std::string& label, double measured, double bound);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::vector<CheckValue> checks;
  std::string error;  // nonempty when the measurement itself threw
};

struct VerificationReport {
  std::vector<CriterionResult> criteria;
  bool all_pass() const;
};

// runs all criteria; `threads` parallelizes the robustness sweep points
VerificationReport run_verification_suite(int threads = 1);

// one criterion by id (1-based); throws on unknown id
CriterionResult run_criterion(int id, int threads = 1);

std::string format_report_json(const VerificationReport& r);

// one-line renderings shared by the CLI and the acceptance runner
std::string format_criterion_line(const CriterionResult& r);
std::string format_check_line(const CheckValue& c);

}  // namespace lfsim
