#include "psg/model.hpp"

#include <cmath>

namespace psg {

namespace {

double clamp_mass(double v, const char* name) {
  if (v < -kMassNoiseTol) {
    throw NegativeMassError(std::string(name) + " is negative: " +
                            std::to_string(v));
  }
  return v < 0.0 ? 0.0 : v;
}

double checked_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw OutOfRangeError(std::string(name) + " must lie in [0,1], got " +
                          std::to_string(v));
  }
  return v;
}

}  // namespace

JointPrior make_prior(double a, double b, double c, std::optional<double> d) {
  JointPrior prior;
  prior.a = clamp_mass(a, "a");
  prior.b = clamp_mass(b, "b");
  prior.c = clamp_mass(c, "c");
  if (d.has_value()) {
    prior.d = clamp_mass(*d, "d");
    const double sum = prior.a + prior.b + prior.c + prior.d;
    if (std::abs(sum - 1.0) > kNormalizationTol) {
      throw NotNormalizedError("prior sums to " + std::to_string(sum));
    }
  } else {
    const double rest = 1.0 - (prior.a + prior.b + prior.c);
    if (rest < -kMassNoiseTol) {
      throw NotNormalizedError("derived d = " + std::to_string(rest) +
                               " is negative");
    }
    prior.d = rest < 0.0 ? 0.0 : rest;
  }
  return prior;
}

bool is_uniform(const JointPrior& prior, double tol) {
  return std::abs(prior.a - 0.25) <= tol && std::abs(prior.b - 0.25) <= tol &&
         std::abs(prior.c - 0.25) <= tol && std::abs(prior.d - 0.25) <= tol;
}

EncoderStrategy symmetric_encoder(double kappa1, double kappa2) {
  EncoderStrategy enc;
  enc.kind = EncoderKind::symmetric;
  enc.kappa = {checked_unit(kappa1, "kappa1"), checked_unit(kappa2, "kappa2"),
               1.0 - kappa2, 1.0 - kappa1};
  return enc;
}

EncoderStrategy general_encoder(double kappa1, double kappa2, double kappa3,
                                double kappa4) {
  EncoderStrategy enc;
  enc.kind = EncoderKind::general;
  enc.kappa = {checked_unit(kappa1, "kappa1"), checked_unit(kappa2, "kappa2"),
               checked_unit(kappa3, "kappa3"), checked_unit(kappa4, "kappa4")};
  return enc;
}

EncoderStrategy symmetric_to_general(double kappa1, double kappa2) {
  EncoderStrategy enc = symmetric_encoder(kappa1, kappa2);
  enc.kind = EncoderKind::general;
  return enc;
}

DecoderYStrategy make_decoder_y(double delta1, double delta2) {
  return {checked_unit(delta1, "delta1"), checked_unit(delta2, "delta2")};
}

DecoderXStrategy make_decoder_x(double eps1, double eps2) {
  return {checked_unit(eps1, "eps1"), checked_unit(eps2, "eps2")};
}

PrivacyWeight make_privacy_weight(double rho) {
  if (!(rho >= 0.0)) {
    throw OutOfRangeError("rho must be nonnegative, got " +
                          std::to_string(rho));
  }
  return {rho};
}

DerivedQuantities derived_quantities(const JointPrior& prior,
                                     const EncoderStrategy& enc,
                                     const DecoderYStrategy& dy,
                                     const DecoderXStrategy& dx) {
  DerivedQuantities dq;
  dq.q1 = prior.q1();
  for (int i = 0; i < 4; ++i) {
    dq.t[i] = dy.delta1 * enc.kappa[i] + dy.delta2 * (1.0 - enc.kappa[i]);
    dq.n[i] = dx.eps1 * enc.kappa[i] + dx.eps2 * (1.0 - enc.kappa[i]);
  }
  dq.p1 = prior.a * dq.t[0] + prior.c * dq.t[2];
  dq.p2 = prior.b * dq.t[1] + prior.d * dq.t[3];
  dq.theta = enc.kappa[0] * (prior.a + prior.d) +
             enc.kappa[1] * (prior.b + prior.c);
  return dq;
}

}  // namespace psg
