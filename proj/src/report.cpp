#include "algroup/report.hpp"

#include <utility>

#include "algroup/jsonio.hpp"

namespace algroup {

bool VerificationReport::all_passed() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string VerificationReport::to_json() const {
  std::string out = "{\"schema\":1";
  out += ",\"suite\":\"" + json_escape(suite) + "\"";
  out += ",\"seed\":" + std::to_string(seed);
  out += ",\"trials\":" + std::to_string(trials);
  out += ",\"tol\":" + json_double(tol);
  out += ",\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CheckResult& c = checks[i];
    if (i) out += ",";
    out += "{\"name\":\"" + json_escape(c.name) + "\"";
    out += ",\"passed\":";
    out += c.passed ? "true" : "false";
    out += ",\"max_error\":" + json_double(c.max_error);
    if (!c.counterexample.empty()) {
      out += ",\"counterexample\":" + c.counterexample;
    }
    out += "}";
  }
  out += "]";
  out += ",\"all_passed\":";
  out += all_passed() ? "true" : "false";
  out += "}";
  return out;
}

std::string VerificationReport::to_text() const {
  std::string out = "suite " + suite + " (seed=" + std::to_string(seed) +
                    ", trials=" + std::to_string(trials) +
                    ", tol=" + json_double(tol) + ")\n";
  for (const CheckResult& c : checks) {
    out += c.passed ? "  [PASS] " : "  [FAIL] ";
    out += c.name + "  max_error=" + json_double(c.max_error) + "\n";
    if (!c.counterexample.empty()) {
      out += "         counterexample: " + c.counterexample + "\n";
    }
  }
  out += all_passed() ? "  => all checks passed\n" : "  => FAILURES\n";
  return out;
}

CheckBuilder::CheckBuilder(std::string name, double tol)
    : name_(std::move(name)), tol_(tol) {}

void CheckBuilder::sample(double error, const std::string& witness) {
  if (error > max_error_) max_error_ = error;
  if (error > tol_ && counterexample_.empty()) counterexample_ = witness;
}

CheckResult CheckBuilder::finish() const {
  CheckResult r;
  r.name = name_;
  r.max_error = max_error_;
  r.passed = max_error_ <= tol_;
  if (!r.passed) r.counterexample = counterexample_;
  return r;
}

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            std::uint64_t seed, int trials, double tol) {
  if (reports.size() == 1) return reports[0].to_json();
  std::string out = "{\"schema\":1,\"suite\":\"all\"";
  out += ",\"seed\":" + std::to_string(seed);
  out += ",\"trials\":" + std::to_string(trials);
  out += ",\"tol\":" + json_double(tol);
  out += ",\"reports\":[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    if (i) out += ",";
    out += reports[i].to_json();
  }
  out += "],\"all_passed\":";
  out += reports_all_passed(reports) ? "true" : "false";
  out += "}";
  return out;
}

std::string reports_to_text(const std::vector<VerificationReport>& reports) {
  std::string out;
  for (const VerificationReport& r : reports) out += r.to_text();
  return out;
}

bool reports_all_passed(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) {
    if (!r.all_passed()) return false;
  }
  return true;
}

}  // namespace algroup
