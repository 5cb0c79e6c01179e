#include "psg/analysis.hpp"

#include <cmath>

namespace psg {

namespace {

constexpr double kBoundaryTol = 1e-12;

void require_interior(double p1, double p2, double q1) {
  const bool interior = p1 > kBoundaryTol && p2 > kBoundaryTol &&
                        q1 - p1 > kBoundaryTol &&
                        (1.0 - q1) - p2 > kBoundaryTol &&
                        p1 + p2 > kBoundaryTol && 1.0 - (p1 + p2) > kBoundaryTol;
  if (!interior) {
    throw BoundaryPointError("(p1, p2) = (" + std::to_string(p1) + ", " +
                             std::to_string(p2) + ") is not strictly interior "
                             "for q1 = " + std::to_string(q1));
  }
}

}  // namespace

std::array<double, 2> symmetric_eigenvalues(const Matrix2& m, double tol) {
  if (std::abs(m.m12 - m.m21) > tol) {
    throw NotSymmetricError("matrix is not symmetric within " +
                            std::to_string(tol));
  }
  const double mean = 0.5 * (m.m11 + m.m22);
  const double off = 0.5 * (m.m12 + m.m21);
  const double radius =
      std::sqrt(0.25 * (m.m11 - m.m22) * (m.m11 - m.m22) + off * off);
  return {mean - radius, mean + radius};
}

bool is_positive_semidefinite(const Matrix2& m, double tol) {
  return symmetric_eigenvalues(m, tol)[0] >= -tol;
}

std::array<double, 2> grad_I_in_P(double p1, double p2, double q1) {
  require_interior(p1, p2, q1);
  const double common = -std::log2(p1 + p2) + std::log2(1.0 - (p1 + p2));
  return {common + std::log2(p1) - std::log2(q1 - p1),
          common + std::log2(p2) - std::log2(1.0 - q1 - p2)};
}

Matrix2 hessian_I_in_P(double p1, double p2, double q1) {
  require_interior(p1, p2, q1);
  const double s = p1 + p2;
  const double a = 1.0 / s + 1.0 / (1.0 - s);
  const double b = 1.0 / p1 + 1.0 / (q1 - p1);
  const double c = 1.0 / p2 + 1.0 / (1.0 - q1 - p2);
  const double inv_ln2 = 1.0 / std::log(2.0);
  return {inv_ln2 * (-a + b), inv_ln2 * -a, inv_ln2 * -a, inv_ln2 * (-a + c)};
}

Matrix2 jacobian_P_in_kappa(const JointPrior& prior, double delta1,
                            double delta2) {
  const double slope = delta1 - delta2;
  return {slope * prior.a, slope * -prior.c, slope * -prior.d,
          slope * prior.b};
}

Matrix2 hessian_I_in_kappa(const JointPrior& prior, const EncoderStrategy& enc,
                           const DecoderYStrategy& dy) {
  if (enc.kind != EncoderKind::symmetric) {
    throw NotSymmetricError("hessian_I_in_kappa requires a symmetric encoder");
  }
  const DerivedQuantities dq =
      derived_quantities(prior, enc, dy, DecoderXStrategy{});
  const Matrix2 h = hessian_I_in_P(dq.p1, dq.p2, dq.q1);
  const Matrix2 j = jacobian_P_in_kappa(prior, dy.delta1, dy.delta2);
  // J^T H J for 2x2 blocks, written out.
  const double h11 = h.m11 * j.m11 + h.m12 * j.m21;
  const double h12 = h.m11 * j.m12 + h.m12 * j.m22;
  const double h21 = h.m21 * j.m11 + h.m22 * j.m21;
  const double h22 = h.m21 * j.m12 + h.m22 * j.m22;
  return {j.m11 * h11 + j.m21 * h21, j.m11 * h12 + j.m21 * h22,
          j.m12 * h11 + j.m22 * h21, j.m12 * h12 + j.m22 * h22};
}

}  // namespace psg
