#include "hnls/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "hnls/erf.hpp"

namespace hnls {

double smooth_step(double x) { return 0.5 * (1.0 + hnls::erf(x * M_SQRT1_2)); }

CumulativeMass cumulative_mass(const SpectralField& f, const HermiteBasis& basis) {
    const int m = basis.modes();
    if (m < 4) {
        throw std::invalid_argument("cumulative_mass: rule degree must be >= 4");
    }
    if (f.modes() != m) {
        throw std::invalid_argument("cumulative_mass: field/rule size mismatch");
    }

    const Eigen::VectorXcd nodal = real_matrix_apply(basis.matrix().transpose(), f.coeffs);
    Eigen::VectorXd density(m);
    for (int j = 0; j < m; ++j) density[j] = std::norm(nodal[j]);

    const double mass = basis.rule().christoffel.cwiseProduct(density).sum();

    // Density coefficients, with the h_0 component of mass * Phi'(x)
    // removed so the primitive decays at both ends.
    Eigen::VectorXd rho = basis.analyze_real(density);
    rho[0] -= mass / std::sqrt(2.0 * std::sqrt(M_PI));

    // Backward recurrence for the decaying solution of A_d eta = rho on
    // each parity chain, zero-seeded above the truncation.
    Eigen::VectorXd eta = Eigen::VectorXd::Zero(m);
    for (int n = m - 1; n >= 1; --n) {
        const double above = (n + 1 < m) ? eta[n + 1] : 0.0;
        eta[n - 1] = (std::sqrt(0.5 * (n + 1)) * above - rho[n]) / std::sqrt(0.5 * n);
    }

    CumulativeMass out;
    out.total_mass = mass;
    out.values = basis.values_at_nodes_real(eta);
    for (int j = 0; j < m; ++j) {
        out.values[j] += smooth_step(basis.rule().nodes[j]) * mass;
    }
    return out;
}

NodalField gauge_from_cumulative(const CumulativeMass& f, double delta, int power) {
    if (power != -2 && power != -1 && power != 1 && power != 2) {
        throw std::invalid_argument("gauge factor: power must be in {-2, -1, 1, 2}");
    }
    const auto n = f.values.size();
    Eigen::VectorXcd phase(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        phase[j] = std::polar(1.0, power * delta * f.values[j]);
    }
    return NodalField(std::move(phase));
}

NodalField gauge_factor(const SpectralField& u, double delta, int power,
                        const HermiteBasis& basis) {
    return gauge_from_cumulative(cumulative_mass(u, basis), delta, power);
}

}  // namespace hnls
