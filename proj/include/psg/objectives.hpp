#pragma once

#include <array>

#include "psg/model.hpp"

// Payoff evaluation for a strategy profile: mutual information between the
// public message and its estimate (bits, base-2 logs throughout), expected
// Hamming distortion on the private message, and the two players' payoffs
//   encoder: I + rho * E      (information out, privacy up)
//   decoder: I - E            (information out, estimation error down)

namespace psg {

// x * log2(x) with the convention that masses at or below 1e-15 (including
// tiny negatives from cancellation) contribute zero.
double xlog2(double x);

// Binary entropy in bits. Throws OutOfRangeError outside [0,1].
double binary_entropy(double p);

// Distributions induced by (prior, encoder, decoder-y). Matrix layout:
// px_given_y[x][y], pyhat_given_y[yhat][y]; columns are conditionals.
struct InducedDistributions {
  std::array<double, 2> py{};
  std::array<std::array<double, 2>, 2> px_given_y{};
  std::array<std::array<double, 2>, 2> pyhat_given_y{};
  std::array<double, 2> pyhat{};
};

// Throws DegenerateMarginalError when q1 is 0 or 1 within 1e-12 (the
// conditional column for the zero-mass y is undefined); callers that only
// need I(y; yhat) should use mutual_information, which treats that case as 0.
InducedDistributions induced_distributions(const JointPrior& prior,
                                           const EncoderStrategy& enc,
                                           const DecoderYStrategy& dy);

// Closed-form I(y; yhat) as a function of the joint masses p1 = P(yhat=0,y=0),
// p2 = P(yhat=0,y=1) and the marginal q1 = P(y=0):
//   H(q1) + H(p1+p2) + p1 log p1 + p2 log p2
//        + (q1-p1) log(q1-p1) + (1-q1-p2) log(1-q1-p2)
double mutual_information_from_masses(double p1, double p2, double q1);

// Closed-form I(y; yhat) for a profile; accepts general encoders. Returns 0
// when y is deterministic (q1 in {0,1}).
double mutual_information(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderYStrategy& dy);

// Independent brute-force route: builds the 4-point joint pmf of (y, yhat) by
// explicit marginalization over (x, z) and sums p * log(p / (py * pyhat)).
// Kept deliberately free of the t/p shortcuts used by the closed form.
double mutual_information_oracle(const JointPrior& prior,
                                 const EncoderStrategy& enc,
                                 const DecoderYStrategy& dy);

// Expected Hamming distortion E{d_H(x, xhat)}; affine in every strategy
// parameter. Accepts general encoders.
double hamming_distortion(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderXStrategy& dx);

struct PayoffPair {
  double mutual_info = 0.0;
  double distortion = 0.0;
  double encoder_payoff = 0.0;  // mutual_info + rho * distortion
  double decoder_payoff = 0.0;  // mutual_info - distortion
};

PayoffPair evaluate_profile(const JointPrior& prior,
                            const EncoderStrategy& enc,
                            const DecoderYStrategy& dy,
                            const DecoderXStrategy& dx, PrivacyWeight rho);

PayoffPair encoder_payoff(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderYStrategy& dy,
                          const DecoderXStrategy& dx, PrivacyWeight rho);

// Same pair with rho fixed to zero; the decoder payoff never depends on rho.
PayoffPair decoder_payoff(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderYStrategy& dy,
                          const DecoderXStrategy& dx);

}  // namespace psg
