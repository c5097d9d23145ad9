#include "hnls/operators.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "hnls/basis.hpp"
#include "hnls/quadrature.hpp"

namespace hnls {

namespace {

// Entry coupling modes n and n+2 in the Galerkin Laplacian.
double laplacian_band(int n) { return 0.5 * std::sqrt(double(n + 1) * double(n + 2)); }

void check_modes(int modes) {
    if (modes < 1 || modes > kMaxDegree) {
        throw std::invalid_argument("operator: mode count out of range");
    }
}

}  // namespace

SpectralField apply_position(const SpectralField& field) {
    const int m = field.modes();
    SpectralField out = SpectralField::zero(m);
    for (int n = 0; n < m; ++n) {
        Complex acc = 0.0;
        if (n >= 1) acc += std::sqrt(0.5 * n) * field.coeffs[n - 1];
        if (n + 1 < m) acc += std::sqrt(0.5 * (n + 1)) * field.coeffs[n + 1];
        out.coeffs[n] = acc;
    }
    return out;
}

SpectralField differentiate(const SpectralField& field) {
    const int m = field.modes();
    SpectralField out = SpectralField::zero(m);
    for (int n = 0; n < m; ++n) {
        Complex acc = 0.0;
        if (n + 1 < m) acc += std::sqrt(0.5 * (n + 1)) * field.coeffs[n + 1];
        if (n >= 1) acc -= std::sqrt(0.5 * n) * field.coeffs[n - 1];
        out.coeffs[n] = acc;
    }
    return out;
}

SpectralField laplacian_apply(const SpectralField& field) {
    const int m = field.modes();
    SpectralField out = SpectralField::zero(m);
    for (int n = 0; n < m; ++n) {
        Complex acc = -(n + 0.5) * field.coeffs[n];
        if (n >= 2) acc += laplacian_band(n - 2) * field.coeffs[n - 2];
        if (n + 2 < m) acc += laplacian_band(n) * field.coeffs[n + 2];
        out.coeffs[n] = acc;
    }
    return out;
}

LaplacianSpectrum::LaplacianSpectrum(int modes) : modes_(modes) {
    check_modes(modes);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    for (int parity = 0; parity < 2; ++parity) {
        const int size = (modes - parity + 1) / 2;
        if (size == 0) {
            vectors_[parity].resize(0, 0);
            values_[parity].resize(0);
            continue;
        }
        Eigen::VectorXd diag(size);
        Eigen::VectorXd sub(std::max(size - 1, 0));
        for (int j = 0; j < size; ++j) {
            diag[j] = -(2 * j + parity + 0.5);
            if (j + 1 < size) sub[j] = laplacian_band(2 * j + parity);
        }
        solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("LaplacianSpectrum: eigensolver failed for modes=" +
                                     std::to_string(modes));
        }
        vectors_[parity] = solver.eigenvectors();
        values_[parity] = solver.eigenvalues();
    }
}

Eigen::VectorXcd LaplacianSpectrum::apply_multiplier(const Eigen::VectorXcd& coeffs,
                                                     const Eigen::VectorXcd& even_mult,
                                                     const Eigen::VectorXcd& odd_mult) const {
    if (coeffs.size() != modes_) {
        throw std::invalid_argument("LaplacianSpectrum: field/spectrum size mismatch");
    }
    Eigen::VectorXcd out(modes_);
    for (int parity = 0; parity < 2; ++parity) {
        const int size = (modes_ - parity + 1) / 2;
        if (size == 0) continue;
        Eigen::VectorXcd part(size);
        for (int j = 0; j < size; ++j) part[j] = coeffs[2 * j + parity];
        Eigen::VectorXcd modal = real_matrix_apply(vectors_[parity].transpose(), part);
        modal.array() *= (parity == 0 ? even_mult : odd_mult).array();
        Eigen::VectorXcd back = real_matrix_apply(vectors_[parity], modal);
        for (int j = 0; j < size; ++j) out[2 * j + parity] = back[j];
    }
    return out;
}

FreePropagator::FreePropagator(std::shared_ptr<const LaplacianSpectrum> spectrum, double tau)
    : spectrum_(std::move(spectrum)), tau_(tau) {
    if (!std::isfinite(tau)) {
        throw std::invalid_argument("FreePropagator: tau must be finite");
    }
    for (int parity = 0; parity < 2; ++parity) {
        const Eigen::VectorXd& lambda = spectrum_->values(parity);
        phase_[parity].resize(lambda.size());
        for (Eigen::Index j = 0; j < lambda.size(); ++j) {
            phase_[parity][j] = std::polar(1.0, tau * lambda[j]);
        }
    }
}

FreePropagator::FreePropagator(int modes, double tau)
    : FreePropagator(std::make_shared<LaplacianSpectrum>(modes), tau) {}

SpectralField FreePropagator::apply(const SpectralField& field) const {
    if (field.modes() != modes()) {
        throw std::invalid_argument("FreePropagator: field/propagator size mismatch");
    }
    return SpectralField(spectrum_->apply_multiplier(field.coeffs, phase_[0], phase_[1]));
}

}  // namespace hnls
