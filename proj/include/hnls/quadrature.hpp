#pragma once

#include <Eigen/Dense>

namespace hnls {

/// Largest supported rule degree. Beyond this the Gaussian factor
/// exp(-x^2/2) at the extreme nodes leaves the range of double precision
/// and the weighted recurrences degrade.
inline constexpr int kMaxDegree = 700;

/// Gauss--Hermite rule for the weight exp(-x^2).
///
/// `weights` are the classical weights (they underflow to zero at the
/// extreme nodes once degree exceeds a few hundred); `christoffel` holds
/// the modified weights w_m * exp(x_m^2), evaluated stably through the
/// Christoffel-function identity, which is what every transform in this
/// library actually uses.
struct QuadratureRule {
    Eigen::VectorXd nodes;        // ascending, symmetric about 0
    Eigen::VectorXd weights;      // sum = sqrt(pi)
    Eigen::VectorXd christoffel;  // 1 / sum_j h_j(x_m)^2

    int degree() const { return static_cast<int>(nodes.size()); }
};

/// Golub--Welsch construction from the symmetric tridiagonal Jacobi matrix.
/// Throws std::invalid_argument unless 1 <= degree <= kMaxDegree.
QuadratureRule gauss_hermite_rule(int degree);

}  // namespace hnls
