#pragma once

#include <memory>

#include <Eigen/Dense>

#include "hnls/field.hpp"

namespace hnls {

/// Coefficients of x*f from the Jacobi three-term recurrence; mode `modes`
/// is truncated away.
SpectralField apply_position(const SpectralField& field);

/// Coefficients of f'; skew-symmetric tridiagonal in coefficient space.
SpectralField differentiate(const SpectralField& field);

/// Galerkin truncation of the Laplacian: diagonal -(n+1/2), bands coupling
/// n and n+-2 with entries sqrt((n+1)(n+2))/2. Even and odd mode chains
/// decouple.
SpectralField laplacian_apply(const SpectralField& field);

/// Eigendecomposition of the truncated Laplacian, stored per parity chain.
/// Built once per mode count and shared by every linear factor derived
/// from it (free propagators of any step size, Crank-Nicolson factors).
class LaplacianSpectrum {
  public:
    explicit LaplacianSpectrum(int modes);

    int modes() const { return modes_; }
    const Eigen::VectorXd& values(int parity) const { return values_[parity]; }

    /// Applies Q diag(g(lambda)) Q^T with the supplied per-eigenvalue
    /// multipliers (one vector per parity chain).
    Eigen::VectorXcd apply_multiplier(const Eigen::VectorXcd& coeffs,
                                      const Eigen::VectorXcd& even_mult,
                                      const Eigen::VectorXcd& odd_mult) const;

  private:
    int modes_;
    Eigen::MatrixXd vectors_[2];
    Eigen::VectorXd values_[2];
};

/// exp(i tau Laplacian) on the truncated space; unitary since the
/// generator is real symmetric. Negative tau gives the adjoint.
class FreePropagator {
  public:
    FreePropagator(std::shared_ptr<const LaplacianSpectrum> spectrum, double tau);
    FreePropagator(int modes, double tau);

    int modes() const { return spectrum_->modes(); }
    double tau() const { return tau_; }
    const std::shared_ptr<const LaplacianSpectrum>& spectrum() const { return spectrum_; }

    SpectralField apply(const SpectralField& field) const;

  private:
    std::shared_ptr<const LaplacianSpectrum> spectrum_;
    double tau_;
    Eigen::VectorXcd phase_[2];
};

}  // namespace hnls
