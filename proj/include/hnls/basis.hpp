#pragma once

#include <Eigen/Dense>

#include "hnls/field.hpp"
#include "hnls/quadrature.hpp"

namespace hnls {

/// Orthonormal Hermite functions h_k (weight already absorbed,
/// h_0 = pi^{-1/4} exp(-x^2/2)) evaluated by the weighted three-term
/// recurrence. Row k of the result holds h_k at each point.
/// Requires 1 <= modes <= kMaxDegree and |point| <= 40.
Eigen::MatrixXd eval_hermite_functions(const Eigen::VectorXd& points, int modes);

/// Evaluate a coefficient field at arbitrary points.
Eigen::VectorXcd synthesize(const SpectralField& field, const Eigen::VectorXd& points);

/// Coefficient-equivalent Sigma^k norm, sqrt(sum (m+1/2)^k |a_m|^2).
/// k = 0 is the plain l2 coefficient norm. Requires 0 <= k <= 10.
double sigma_norm(const SpectralField& field, int k);

/// Nodal <-> coefficient transforms for one quadrature rule. Caches the
/// basis matrix B[k][m] = h_k(x_m); the forward transform acts as
/// B * diag(christoffel) on plain function values, which stays O(1)-scaled
/// for every degree the rule construction accepts.
class HermiteBasis {
  public:
    explicit HermiteBasis(QuadratureRule rule);

    int modes() const { return rule_.degree(); }
    const QuadratureRule& rule() const { return rule_; }
    const Eigen::MatrixXd& matrix() const { return basis_; }

    /// Hermite coefficients from nodal values; exact (to roundoff) on
    /// the span of the first `modes` Hermite functions.
    SpectralField analyze(const NodalField& values) const;

    /// Interpolation onto the Hermite space: same linear map as analyze,
    /// and the result reproduces the input values at the nodes.
    SpectralField interpolate(const NodalField& values) const { return analyze(values); }

    /// Values of the represented function at the quadrature nodes.
    NodalField values_at_nodes(const SpectralField& field) const;

    /// Real-data variants used by the density pipeline.
    Eigen::VectorXd analyze_real(const Eigen::VectorXd& values) const;
    Eigen::VectorXd values_at_nodes_real(const Eigen::VectorXd& coeffs) const;

    /// Christoffel-weighted nodal L2 norm; equals the coefficient norm of
    /// the interpolant.
    double nodal_l2_norm(const NodalField& values) const;

  private:
    QuadratureRule rule_;
    Eigen::MatrixXd basis_;  // modes x modes
};

/// y = A x for real A and complex x without forming a complex matrix.
Eigen::VectorXcd real_matrix_apply(const Eigen::MatrixXd& a, const Eigen::VectorXcd& x);

}  // namespace hnls
