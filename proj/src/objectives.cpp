#include "psg/objectives.hpp"

#include <algorithm>
#include <cmath>

namespace psg {

namespace {

constexpr double kZeroMass = 1e-15;
constexpr double kDegenerateTol = 1e-12;

}  // namespace

double xlog2(double x) {
  if (x <= kZeroMass) return 0.0;
  return x * std::log2(x);
}

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw OutOfRangeError("binary_entropy argument must lie in [0,1], got " +
                          std::to_string(p));
  }
  return -xlog2(p) - xlog2(1.0 - p);
}

InducedDistributions induced_distributions(const JointPrior& prior,
                                           const EncoderStrategy& enc,
                                           const DecoderYStrategy& dy) {
  const double q1 = prior.q1();
  if (q1 <= kDegenerateTol || q1 >= 1.0 - kDegenerateTol) {
    throw DegenerateMarginalError("P(y) is degenerate: q1 = " +
                                  std::to_string(q1));
  }
  const DerivedQuantities dq =
      derived_quantities(prior, enc, dy, DecoderXStrategy{});

  InducedDistributions out;
  out.py = {q1, 1.0 - q1};
  out.px_given_y[0][0] = prior.a / q1;
  out.px_given_y[1][0] = prior.c / q1;
  out.px_given_y[0][1] = prior.b / (1.0 - q1);
  out.px_given_y[1][1] = prior.d / (1.0 - q1);

  const double yhat0_y0 = dq.p1 / q1;
  const double yhat0_y1 = dq.p2 / (1.0 - q1);
  out.pyhat_given_y[0][0] = yhat0_y0;
  out.pyhat_given_y[1][0] = 1.0 - yhat0_y0;
  out.pyhat_given_y[0][1] = yhat0_y1;
  out.pyhat_given_y[1][1] = 1.0 - yhat0_y1;

  const double yhat0 = dq.p1 + dq.p2;
  out.pyhat = {yhat0, 1.0 - yhat0};
  return out;
}

double mutual_information_from_masses(double p1, double p2, double q1) {
  const double value = binary_entropy(std::clamp(q1, 0.0, 1.0)) +
                       binary_entropy(std::clamp(p1 + p2, 0.0, 1.0)) +
                       xlog2(p1) + xlog2(p2) + xlog2(q1 - p1) +
                       xlog2(1.0 - q1 - p2);
  return std::max(value, 0.0);
}

double mutual_information(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderYStrategy& dy) {
  const double q1 = prior.q1();
  if (q1 <= kDegenerateTol || q1 >= 1.0 - kDegenerateTol) return 0.0;
  const DerivedQuantities dq =
      derived_quantities(prior, enc, dy, DecoderXStrategy{});
  return mutual_information_from_masses(dq.p1, dq.p2, q1);
}

double mutual_information_oracle(const JointPrior& prior,
                                 const EncoderStrategy& enc,
                                 const DecoderYStrategy& dy) {
  const double pxy[2][2] = {{prior.a, prior.b}, {prior.c, prior.d}};
  double joint[2][2] = {{0.0, 0.0}, {0.0, 0.0}};  // [y][yhat]
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const double kappa = enc.kappa[2 * x + y];
      for (int z = 0; z < 2; ++z) {
        const double pz = z == 0 ? kappa : 1.0 - kappa;
        const double d0 = z == 0 ? dy.delta1 : dy.delta2;
        joint[y][0] += pxy[x][y] * pz * d0;
        joint[y][1] += pxy[x][y] * pz * (1.0 - d0);
      }
    }
  }
  const double py[2] = {joint[0][0] + joint[0][1], joint[1][0] + joint[1][1]};
  const double pyhat[2] = {joint[0][0] + joint[1][0],
                           joint[0][1] + joint[1][1]};
  double info = 0.0;
  for (int y = 0; y < 2; ++y) {
    for (int yh = 0; yh < 2; ++yh) {
      const double p = joint[y][yh];
      if (p > 1e-15) {
        const double denom = std::max(py[y] * pyhat[yh], 1e-300);
        info += p * std::log2(p / denom);
      }
    }
  }
  return std::max(info, 0.0);
}

double hamming_distortion(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderXStrategy& dx) {
  const DerivedQuantities dq =
      derived_quantities(prior, enc, DecoderYStrategy{}, dx);
  return prior.a * (1.0 - dq.n[0]) + prior.b * (1.0 - dq.n[1]) +
         prior.c * dq.n[2] + prior.d * dq.n[3];
}

PayoffPair evaluate_profile(const JointPrior& prior,
                            const EncoderStrategy& enc,
                            const DecoderYStrategy& dy,
                            const DecoderXStrategy& dx, PrivacyWeight rho) {
  PayoffPair pp;
  pp.mutual_info = mutual_information(prior, enc, dy);
  pp.distortion = hamming_distortion(prior, enc, dx);
  pp.encoder_payoff = pp.mutual_info + rho.rho * pp.distortion;
  pp.decoder_payoff = pp.mutual_info - pp.distortion;
  return pp;
}

PayoffPair encoder_payoff(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderYStrategy& dy,
                          const DecoderXStrategy& dx, PrivacyWeight rho) {
  return evaluate_profile(prior, enc, dy, dx, rho);
}

PayoffPair decoder_payoff(const JointPrior& prior, const EncoderStrategy& enc,
                          const DecoderYStrategy& dy,
                          const DecoderXStrategy& dx) {
  return evaluate_profile(prior, enc, dy, dx, PrivacyWeight{0.0});
}

}  // namespace psg
