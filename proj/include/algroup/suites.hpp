#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "algroup/report.hpp"

namespace algroup {

// Randomized verification suites over the Pauli algebra.  Each is
// deterministic for a fixed (seed, trials, tol).
VerificationReport run_group_axioms(std::uint64_t seed, int trials, double tol);
VerificationReport run_matrix_reps(std::uint64_t seed, int trials, double tol);
VerificationReport run_star_involution(std::uint64_t seed, int trials, double tol);
VerificationReport run_minkowski(std::uint64_t seed, int trials, double tol);
VerificationReport run_lorentz_cover(std::uint64_t seed, int trials, double tol);
VerificationReport run_so4c(std::uint64_t seed, int trials, double tol);
VerificationReport run_quasiring(std::uint64_t seed, int trials, double tol);
VerificationReport run_restore_D(std::uint64_t seed, int trials, double tol);
VerificationReport run_restore_T(std::uint64_t seed, int trials, double tol);
VerificationReport run_star_counterexamples(std::uint64_t seed, int trials, double tol);

const std::vector<std::string>& suite_names();

// Runs one named suite, or every suite for "all"; throws
// std::invalid_argument for an unknown name.
std::vector<VerificationReport> run_suites(const std::string& name,
                                           std::uint64_t seed, int trials,
                                           double tol);

}  // namespace algroup
