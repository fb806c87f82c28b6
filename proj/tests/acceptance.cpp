// End-to-end acceptance runner.  Each numbered criterion prints one PASS or
// FAIL line; the exit code is the number of failing criteria.

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "algroup/endo.hpp"
#include "algroup/groups.hpp"
#include "algroup/rng.hpp"
#include "algroup/sampling.hpp"
#include "algroup/spacetime.hpp"
#include "algroup/suites.hpp"

namespace {

constexpr std::uint64_t kSeed = 42;
constexpr int kTrials = 1000;
constexpr double kTol = 1e-9;

constexpr double kCosh1 = 1.5430806348152437;
constexpr double kSinh1 = 1.1752011936438014;

struct Outcome {
  bool ok = true;
  std::string detail;  // shown on failure
};

void note(Outcome& out, bool ok, const std::string& what) {
  if (ok) return;
  out.ok = false;
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += what;
}

void require_suite(Outcome& out, const algroup::VerificationReport& report) {
  for (const algroup::CheckResult& c : report.checks) {
    note(out, c.passed,
         report.suite + "/" + c.name +
             " max_error=" + std::to_string(c.max_error));
  }
}

Outcome criterion_group_axioms() {
  Outcome out;
  require_suite(out, algroup::run_group_axioms(kSeed, kTrials, kTol));
  return out;
}

Outcome criterion_representations() {
  Outcome out;
  require_suite(out, algroup::run_matrix_reps(kSeed, kTrials, kTol));
  return out;
}

Outcome criterion_star_involution() {
  Outcome out;
  require_suite(out, algroup::run_star_involution(kSeed, kTrials, kTol));
  return out;
}

Outcome criterion_minkowski() {
  Outcome out;
  require_suite(out, algroup::run_minkowski(kSeed, kTrials, kTol));
  return out;
}

Outcome criterion_lorentz_cover() {
  Outcome out;
  require_suite(out, algroup::run_lorentz_cover(kSeed, kTrials, kTol));
  // Unit-rapidity boost along the third axis, applied to (1,0,0,0).
  algroup::Vec4 image = algroup::apply_spin(algroup::make_boost(3, 1.0),
                                            algroup::Vec4::real(1, 0, 0, 0));
  algroup::Vec4 expected = algroup::Vec4::real(kCosh1, 0, 0, kSinh1);
  double err = algroup::residual(image, expected);
  note(out, err <= kTol, "unit boost image off by " + std::to_string(err));
  return out;
}

Outcome criterion_so4c() {
  Outcome out;
  require_suite(out, algroup::run_so4c(kSeed, kTrials, kTol));
  return out;
}

Outcome criterion_quasiring() {
  Outcome out;
  constexpr int kTrees = 500;  // five sample points per tree
  require_suite(out, algroup::check_quasiring(
                         algroup::group_T(algroup::pauli_spec()), kTrees,
                         kSeed, kTol));
  return out;
}

Outcome criterion_reconstruction_positive() {
  Outcome out;
  require_suite(out, algroup::run_restore_D(kSeed, kTrials, kTol));

  algroup::SpecPtr spec = algroup::pauli_spec();
  algroup::GroupDescriptor d = algroup::group_D(spec);
  std::vector<algroup::TElement> gens;
  for (int i = 0; i < spec->dim(); ++i) {
    gens.push_back(embed_D(algroup::DElement(zero_element(spec),
                                             basis_element(spec, i))));
  }
  algroup::ReconstructedAlgebra rec = algroup::reconstruct(d, gens, spec, kTol);
  note(out, rec.span_dim == 4,
       "span dim " + std::to_string(rec.span_dim) + " != 4");
  note(out, rec.closed, "generator span is not multiplicatively closed");
  note(out, rec.compared && rec.max_deviation <= kTol,
       "structure constants deviate by " + std::to_string(rec.max_deviation));

  // Unit-determinant generators reach the same verdict.
  algroup::Rng rng(kSeed);
  std::vector<algroup::TElement> sl2_gens;
  for (int k = 0; k < 8; ++k) {
    sl2_gens.push_back(embed_D(algroup::DElement(
        zero_element(spec), from_matrix(spec, algroup::random_sl2(rng)))));
  }
  algroup::ReconstructedAlgebra sl2_rec =
      algroup::reconstruct(d, sl2_gens, spec, kTol);
  note(out, sl2_rec.span_dim == 4,
       "unit-det span dim " + std::to_string(sl2_rec.span_dim) + " != 4");
  note(out, sl2_rec.closed, "unit-det span is not closed");
  note(out, sl2_rec.compared && sl2_rec.max_deviation <= kTol,
       "unit-det structure constants deviate by " +
           std::to_string(sl2_rec.max_deviation));

  // The two-sided group generates the full 16-dimensional endomorphism span.
  algroup::GroupDescriptor t_grp = algroup::group_T(spec);
  std::vector<algroup::TElement> t_gens;
  for (int k = 0; k < 20; ++k) {
    t_gens.push_back(random_group_element(t_grp, rng));
  }
  int span = algroup::span_dimension(t_grp, t_gens);
  note(out, span == 16, "two-sided span " + std::to_string(span) + " != 16");
  return out;
}

Outcome criterion_reconstruction_negative() {
  Outcome out;
  require_suite(out, algroup::run_star_counterexamples(kSeed, kTrials, kTol));

  algroup::SpecPtr spec = algroup::pauli_spec();
  algroup::GroupDescriptor s_grp = algroup::group_star_D(spec);
  algroup::AlgebraElement one = unit_element(spec);
  auto conj_by = [&](algroup::Scalar mu) {
    return ad_endo(embed_star_D(make_star_D(zero_element(spec),
                                            alg_scalar_mul(mu, one))),
                   s_grp);
  };

  // Pointwise square of conjugation-by-1 sends b to 2b; conjugation by 2
  // sends b to 4b.
  algroup::LinearEndo unit_conj = conj_by(algroup::Scalar(1, 0));
  algroup::LinearEndo two_conj = conj_by(algroup::Scalar(2, 0));
  double additivity_gap = algroup::operator_norm(
      endo_smile(unit_conj, unit_conj).matrix() - two_conj.matrix());
  note(out, additivity_gap > 0.5 && std::abs(additivity_gap - 2.0) <= kTol,
       "additivity gap " + std::to_string(additivity_gap));

  // Scaling by i inside the conjugator cancels; scaling outside does not.
  algroup::LinearEndo i_conj = conj_by(algroup::Scalar(0, 1));
  double homogeneity_gap = algroup::operator_norm(
      algroup::Scalar(0, 1) * algroup::Mat::Identity(4, 4) - i_conj.matrix());
  note(out,
       homogeneity_gap > 0.5 &&
           std::abs(homogeneity_gap - std::sqrt(2.0)) <= kTol,
       "homogeneity gap " + std::to_string(homogeneity_gap));
  return out;
}

struct CliRun {
  bool ran = false;
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args) {
  CliRun result;
  const std::string cmd = std::string(ALGROUP_CLI_PATH) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
    result.output.append(buf, n);
  }
  const int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) {
    result.ran = true;
    result.exit_code = WEXITSTATUS(status);
  }
  return result;
}

Outcome criterion_cli_determinism() {
  Outcome out;
  CliRun first = run_cli("verify all --seed 42");
  CliRun second = run_cli("verify all --seed 42");
  note(out, first.ran && second.ran, "could not launch the CLI");
  if (!out.ok) return out;
  note(out, first.exit_code == 0,
       "first run exited " + std::to_string(first.exit_code));
  note(out, second.exit_code == 0,
       "second run exited " + std::to_string(second.exit_code));
  note(out, !first.output.empty(), "no output captured");
  note(out, first.output == second.output, "outputs differ between runs");
  note(out, first.output.find("\"suite\":\"all\"") != std::string::npos,
       "combined document missing");
  note(out, first.output.find("\"all_passed\":true") != std::string::npos,
       "combined verdict is not a pass");
  return out;
}

struct Criterion {
  const char* description;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"group axioms hold for the one- and two-sided products",
       criterion_group_axioms},
      {"block, affine, and spin representations are matching homomorphisms",
       criterion_representations},
      {"star is an involutive automorphism with a star-fixed subgroup",
       criterion_star_involution},
      {"determinant realizes the quadratic form; Hermitian actions preserve it",
       criterion_minkowski},
      {"unit-determinant action covers the proper orthochronous component",
       criterion_lorentz_cover},
      {"matrix pairs act as complex-orthogonal transformations",
       criterion_so4c},
      {"pointwise-product laws hold over random function trees",
       criterion_quasiring},
      {"conjugation actions reconstruct the algebra and its tensor square",
       criterion_reconstruction_positive},
      {"star-fixed subgroup breaks both ring identities by a wide margin",
       criterion_reconstruction_negative},
      {"verify all --seed 42 is byte-identical across runs and exits 0",
       criterion_cli_determinism},
  };

  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome out;
    try {
      out = criteria[k].run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    if (!out.ok) ++failures;
    std::printf("[%2zu] %s %s\n", k + 1, out.ok ? "PASS" : "FAIL",
                criteria[k].description);
    if (!out.ok) std::printf("      %s\n", out.detail.c_str());
  }
  std::printf("acceptance: %zu/%zu criteria passed\n",
              criteria.size() - static_cast<std::size_t>(failures),
              criteria.size());
  return failures;
}
