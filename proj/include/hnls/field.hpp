#pragma once

#include <complex>

#include <Eigen/Dense>

namespace hnls {

using Complex = std::complex<double>;

/// Hermite coefficient vector: f = sum_m coeffs[m] * h_m.
struct SpectralField {
    Eigen::VectorXcd coeffs;

    SpectralField() = default;
    explicit SpectralField(Eigen::VectorXcd c) : coeffs(std::move(c)) {}
    static SpectralField zero(int modes) {
        return SpectralField(Eigen::VectorXcd::Zero(modes));
    }

    int modes() const { return static_cast<int>(coeffs.size()); }

    /// L2 norm of the represented function (Parseval).
    double l2_norm() const { return coeffs.norm(); }
};

/// Function values at the quadrature nodes of a rule of matching degree.
struct NodalField {
    Eigen::VectorXcd values;

    NodalField() = default;
    explicit NodalField(Eigen::VectorXcd v) : values(std::move(v)) {}

    int size() const { return static_cast<int>(values.size()); }
};

}  // namespace hnls
