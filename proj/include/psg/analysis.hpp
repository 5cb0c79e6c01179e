#pragma once

#include <array>

#include "psg/model.hpp"

// Second-order machinery behind the convexity claims: the Hessian of the
// mutual information in the joint masses (p1, p2), the Jacobian of (p1, p2)
// in the symmetric encoder parameters, the pushed-forward Hessian, and a
// closed-form 2x2 definiteness test.

namespace psg {

struct Matrix2 {
  double m11 = 0.0;
  double m12 = 0.0;
  double m21 = 0.0;
  double m22 = 0.0;
};

// Eigenvalues of a symmetric 2x2 matrix from the trace/determinant formula,
// returned ascending. Throws NotSymmetricError when |m12 - m21| > tol.
std::array<double, 2> symmetric_eigenvalues(const Matrix2& m,
                                            double tol = 1e-9);

// True iff both eigenvalues are >= -tol.
bool is_positive_semidefinite(const Matrix2& m, double tol);

// Gradient of I(y;yhat) in (p1, p2), in bits:
//   dI/dp1 = -log(p1+p2) + log(1-(p1+p2)) + log(p1) - log(q1-p1)
//   dI/dp2 = -log(p1+p2) + log(1-(p1+p2)) + log(p2) - log(1-q1-p2)
// Requires a strictly interior point (same precondition as hessian_I_in_P).
std::array<double, 2> grad_I_in_P(double p1, double p2, double q1);

// Hessian of I(y;yhat) in (p1, p2), in bits:
//   (1/ln 2) * [ -A+B  -A ]      A = 1/(p1+p2) + 1/(1-(p1+p2))
//              [ -A   -A+C ]     B = 1/p1 + 1/(q1-p1)
//                                C = 1/p2 + 1/(1-q1-p2)
// Requires 0 < p1 < q1, 0 < p2 < 1-q1, 0 < p1+p2 < 1 strictly; throws
// BoundaryPointError when any strict inequality fails within 1e-12.
Matrix2 hessian_I_in_P(double p1, double p2, double q1);

// Jacobian of (p1, p2) in (kappa1, kappa2) under the symmetric encoder:
//   (delta1 - delta2) * [ a  -c ]
//                       [ -d  b ]
Matrix2 jacobian_P_in_kappa(const JointPrior& prior, double delta1,
                            double delta2);

// Hessian of I(y;yhat) in (kappa1, kappa2): J^T * hessian_I_in_P * J.
// Requires a symmetric encoder whose induced (p1, p2) is strictly interior;
// BoundaryPointError propagates from hessian_I_in_P.
Matrix2 hessian_I_in_kappa(const JointPrior& prior, const EncoderStrategy& enc,
                           const DecoderYStrategy& dy);

}  // namespace psg
