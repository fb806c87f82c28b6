#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algroup/numeric.hpp"

namespace algroup {

// One named numeric check.  Invariants: passed == (max_error <= tol of the
// owning report), and counterexample is nonempty exactly when the check
// failed (it holds a JSON object fragment describing the witness).
struct CheckResult {
  std::string name;
  bool passed = false;
  double max_error = 0.0;
  std::string counterexample;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  double tol = kDefaultTol;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  // Byte-deterministic for fixed inputs (fixed key order, %.17g floats).
  std::string to_json() const;
  std::string to_text() const;
};

// Helper for accumulating a max-error check over many samples.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, double tol);

  // Records an error sample; `witness` must be a JSON object fragment and is
  // kept only for the first sample that exceeds the tolerance.
  void sample(double error, const std::string& witness = "{}");

  CheckResult finish() const;

 private:
  std::string name_;
  double tol_;
  double max_error_ = 0.0;
  std::string counterexample_;
};

// Combined document for multi-suite runs:
// {"schema":1,"suite":"all",...,"reports":[...],"all_passed":...}.
std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            std::uint64_t seed, int trials, double tol);
std::string reports_to_text(const std::vector<VerificationReport>& reports);
bool reports_all_passed(const std::vector<VerificationReport>& reports);

}  // namespace algroup
