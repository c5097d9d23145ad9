#pragma once

#include <Eigen/Dense>

#include "hnls/basis.hpp"
#include "hnls/field.hpp"

namespace hnls {

/// Smooth step Phi(x) = (1 + erf(x/sqrt(2)))/2, the standard normal CDF.
double smooth_step(double x);

/// Cumulative mass F(x_m) = integral of |f|^2 over (-inf, x_m], evaluated
/// at the quadrature nodes of the basis that produced it.
struct CumulativeMass {
    Eigen::VectorXd values;  // non-decreasing along the ascending nodes
    double total_mass = 0.0;  // ||f||_{L2}^2
};

/// Corrected-primitive evaluation of F: the nodal density is expanded in
/// the basis, the non-decaying part mass*Phi is subtracted through its
/// h_0 coefficient, the remaining decaying primitive is obtained by a
/// backward (Miller) recurrence on the decoupled parity chains of the
/// differentiation operator, and the step is added back.
/// Requires basis.modes() >= 4.
CumulativeMass cumulative_mass(const SpectralField& f, const HermiteBasis& basis);

/// exp(i * power * delta * F(x_m)) at each node; unit modulus by
/// construction. power must be one of {-2, -1, 1, 2}.
NodalField gauge_factor(const SpectralField& u, double delta, int power,
                        const HermiteBasis& basis);

/// Same phase factor from an already computed cumulative mass.
NodalField gauge_from_cumulative(const CumulativeMass& f, double delta, int power);

}  // namespace hnls
