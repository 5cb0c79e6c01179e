#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psg/best_response.hpp"
#include "psg/model.hpp"
#include "psg/objectives.hpp"

// Brute-force grid experiments used as ground truth for the analytic solvers:
// best-response histograms over decoder/encoder grids, payoff surfaces, and
// an exhaustive no-deviation check for pure equilibria.
//
// Each sweep comes in two versions: the default OpenMP kernel and a plain
// serial reference (`*_serial`) kept for testing; both produce identical
// output for the same inputs because per-point work is independent and
// tie-breaking is salted by grid index, never by evaluation order. Grids are
// evenly spaced and include both endpoints 0 and 1; scans add the four
// extreme points explicitly so ties against the analytic solvers are exact.

namespace psg::oracle {

// Winner counts keyed by extreme label ("00".."11"); a winner that is not an
// extreme point (which would contradict the convexity results) is binned
// under its coordinates "k1,k2".
struct Histogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t trials = 0;
};

// For every decoder tuple (delta1, delta2, eps1, eps2) on the inclusive
// decoder_grid_n^4 grid, finds the encoder payoff maximizer among the four
// symmetric extremes plus a 21x21 safety grid of non-corner points and bins
// it. Ties prefer extreme points (an extreme always attains the maximum);
// the tie-break picks among the tied extremes.
Histogram grid_encoder_br_histogram(const JointPrior& prior, PrivacyWeight rho,
                                    int decoder_grid_n, const TieBreak& tb);
Histogram grid_encoder_br_histogram_serial(const JointPrior& prior,
                                           PrivacyWeight rho,
                                           int decoder_grid_n,
                                           const TieBreak& tb);

struct DecoderBrHistograms {
  Histogram delta_hist;
  Histogram epsilon_hist;
  // Row-major decision map over the encoder grid (kappa1 outer).
  std::vector<ExtremeLabel> epsilon_map;
  int grid_n = 0;
};

// For every (kappa1, kappa2) on the inclusive encoder_grid_n^2 grid, bins the
// decoder-y best response (scan over a delta grid plus the four extremes;
// the winner is drawn from the tied informative pair {01, 10}, which always
// attains the maximum) and the decoder-x best response (exact affine
// minimization over the four extremes, first tied label in order).
DecoderBrHistograms grid_decoder_br_histograms(const JointPrior& prior,
                                               int encoder_grid_n,
                                               const TieBreak& tb);
DecoderBrHistograms grid_decoder_br_histograms_serial(const JointPrior& prior,
                                                      int encoder_grid_n,
                                                      const TieBreak& tb);

struct SweepRow {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double mutual_info = 0.0;
  double distortion = 0.0;
  double encoder_payoff = 0.0;
  double decoder_payoff = 0.0;
};

struct FixedFollower {
  DecoderYStrategy dy;
  DecoderXStrategy dx;
};

// Payoff surface over the inclusive grid_n^2 encoder grid, row-major with
// kappa1 outer. With a fixed follower the given decoders are used verbatim;
// otherwise both decoders best-respond pointwise (informative delta, minimal
// distortion eps).
std::vector<SweepRow> payoff_surface(const JointPrior& prior,
                                     PrivacyWeight rho, int grid_n,
                                     const std::optional<FixedFollower>& fixed);
std::vector<SweepRow> payoff_surface_serial(
    const JointPrior& prior, PrivacyWeight rho, int grid_n,
    const std::optional<FixedFollower>& fixed);

struct NashOracleResult {
  bool exists = false;
  std::vector<std::pair<ExtremeLabel, ExtremeLabel>> profiles;  // (kappa, eps)
};

// Checks each of the 16 extreme (encoder, decoder-x) profiles, with the
// decoder-y component at its informative best response, for profitable
// unilateral deviations over full grid_n^2 deviation grids (plus extremes).
NashOracleResult nash_oracle(const JointPrior& prior, PrivacyWeight rho,
                             int grid_n);

}  // namespace psg::oracle
