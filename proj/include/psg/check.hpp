#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "psg/model.hpp"

// Self-contained invariant suites wired to the `check` CLI command: the
// closed-form payoff against the brute-force pmf oracle, definiteness of the
// curvature matrices, finite-difference agreement, extremality of best
// responses, and the analytic solvers against the grid oracles.

namespace psg {

struct CheckConfig {
  long trials = 1000;
  std::uint64_t seed = 42;
  double tol = 1e-9;
};

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

std::vector<SuiteResult> run_check_suites(const CheckConfig& config);

// Shared samplers (also used by tests).
JointPrior random_prior(std::mt19937_64& rng);
EncoderStrategy random_general_encoder(std::mt19937_64& rng);
DecoderYStrategy random_decoder_y(std::mt19937_64& rng);
DecoderXStrategy random_decoder_x(std::mt19937_64& rng);

}  // namespace psg
