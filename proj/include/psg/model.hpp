#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

// Domain types for the binary privacy signaling game: the joint source prior,
// the stochastic encoder/decoder strategies, and the scalar quantities every
// payoff formula is built from.
//
// Conventions: the source pair (x, y) is binary; the joint pmf is stored as
// the column vector (a, b, c, d) = P(0,0), P(0,1), P(1,0), P(1,1). Encoder
// columns are indexed by (x, y) in that same order, and kappa_i = P(z=0 |
// column i). Decoder parameters are P(estimate = 0 | z).

namespace psg {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NegativeMassError : public ModelError {
 public:
  using ModelError::ModelError;
};

class NotNormalizedError : public ModelError {
 public:
  using ModelError::ModelError;
};

class OutOfRangeError : public ModelError {
 public:
  using ModelError::ModelError;
};

class DegenerateMarginalError : public ModelError {
 public:
  using ModelError::ModelError;
};

class BoundaryPointError : public ModelError {
 public:
  using ModelError::ModelError;
};

class NotSymmetricError : public ModelError {
 public:
  using ModelError::ModelError;
};

// Normalization slack for priors and the floating-noise clamp threshold.
inline constexpr double kNormalizationTol = 1e-9;
inline constexpr double kMassNoiseTol = 1e-12;

struct JointPrior {
  double a = 0.0;  // P(x=0, y=0)
  double b = 0.0;  // P(x=0, y=1)
  double c = 0.0;  // P(x=1, y=0)
  double d = 0.0;  // P(x=1, y=1)

  double q1() const { return a + c; }  // P(y=0)
};

// Builds a validated prior. When d is omitted it is derived as 1-(a+b+c);
// when supplied it is validated against the normalization constraint, not
// overwritten. Entries in (-1e-12, 0) are clamped to zero.
JointPrior make_prior(double a, double b, double c,
                      std::optional<double> d = std::nullopt);

bool is_uniform(const JointPrior& prior, double tol = kNormalizationTol);

enum class EncoderKind { symmetric, general };

// Stochastic encoder P(z | x, y). The symmetric kind stores only (kappa1,
// kappa2) conceptually; its general coordinates are always available via the
// expansion kappa3 = 1 - kappa2, kappa4 = 1 - kappa1.
struct EncoderStrategy {
  EncoderKind kind = EncoderKind::symmetric;
  std::array<double, 4> kappa{};  // P(z=0 | column i), i = 1..4

  double kappa1() const { return kappa[0]; }
  double kappa2() const { return kappa[1]; }
  double kappa3() const { return kappa[2]; }
  double kappa4() const { return kappa[3]; }
};

EncoderStrategy symmetric_encoder(double kappa1, double kappa2);
EncoderStrategy general_encoder(double kappa1, double kappa2, double kappa3,
                                double kappa4);

// Expands a symmetric parameter pair into explicit general coordinates.
EncoderStrategy symmetric_to_general(double kappa1, double kappa2);

struct DecoderYStrategy {
  double delta1 = 0.0;  // P(yhat=0 | z=0)
  double delta2 = 0.0;  // P(yhat=0 | z=1)
};

struct DecoderXStrategy {
  double eps1 = 0.0;  // P(xhat=0 | z=0)
  double eps2 = 0.0;  // P(xhat=0 | z=1)
};

DecoderYStrategy make_decoder_y(double delta1, double delta2);
DecoderXStrategy make_decoder_x(double eps1, double eps2);

// Nonnegative weight on the privacy (distortion) term of the encoder payoff.
// Zero is allowed and collapses the payoff to pure mutual information.
struct PrivacyWeight {
  double rho = 0.0;
};

PrivacyWeight make_privacy_weight(double rho);

// Scalars shared by the payoff formulas:
//   t_i = delta1*kappa_i + delta2*(1-kappa_i)   P(yhat=0 | column i)
//   n_i = eps1*kappa_i + eps2*(1-kappa_i)       P(xhat=0 | column i)
//   p1  = a*t1 + c*t3                           P(yhat=0, y=0)
//   p2  = b*t2 + d*t4                           P(yhat=0, y=1)
//   theta = kappa1*(a+d) + kappa2*(b+c)
struct DerivedQuantities {
  double q1 = 0.0;
  std::array<double, 4> t{};
  std::array<double, 4> n{};
  double p1 = 0.0;
  double p2 = 0.0;
  double theta = 0.0;
};

DerivedQuantities derived_quantities(const JointPrior& prior,
                                     const EncoderStrategy& enc,
                                     const DecoderYStrategy& dy,
                                     const DecoderXStrategy& dx);

}  // namespace psg
