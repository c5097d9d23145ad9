#pragma once

#include <memory>
#include <stdexcept>
#include <string>

#include "hnls/basis.hpp"
#include "hnls/field.hpp"
#include "hnls/operators.hpp"

namespace hnls {

/// Thrown when a time stepper detects blow-up (l2 norm above 1e6).
/// Drivers annotate the failing step index before rethrowing.
class DivergenceError : public std::runtime_error {
  public:
    explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct CubicParams {
    double mu = 1.0;   // nonlinearity strength
    double tau = 0.0;  // time step
    int modes = 0;
};

struct DnlseParams {
    double delta = 1.0;  // derivative-nonlinearity coefficient
    double tau = 0.0;
    int modes = 0;
};

/// Gauge-transformed pair evolving under the coupled system; u and v share
/// the mode count.
struct DnlseState {
    SpectralField u;
    SpectralField v;
    double time = 0.0;
};

/// Pointwise phase rotation exp(-i tau_mu |psi|^2) psi; preserves the
/// modulus at every node.
NodalField cubic_phase_kick(const NodalField& values, double tau_mu);

/// Exact flow of the coupled nonlinear system over "time" a:
/// u <- exp(2 a u conj(v)) u, v <- exp(-2 a conj(u) v) v.
/// The product u*conj(v) is invariant at every node.
void dnlse_pair_kick(NodalField& u, NodalField& v, double a);

/// First-order splitting for cubic NLS: nodal kick, interpolation, free
/// flight. `prop` must be built for the full step p.tau.
SpectralField lie_step_cubic(const SpectralField& psi, const CubicParams& p,
                             const FreePropagator& prop, const HermiteBasis& basis);

/// Symmetric second-order version; `half_prop` must be built for p.tau/2.
SpectralField strang_step_cubic(const SpectralField& psi, const CubicParams& p,
                                const FreePropagator& half_prop, const HermiteBasis& basis);

/// True when the trailing tenth of the coefficients is below 1e-8 of the
/// largest one; the gauge pipeline warns (but proceeds) otherwise.
bool well_resolved(const SpectralField& field);

/// Gauge transform of the initial data into the coupled variables
/// (u, v) = (G^2 psi, G d/dx(G psi)) with the nodal phase G built from the
/// cumulative mass of psi0.
DnlseState dnlse_forward_transform(const SpectralField& psi0, double delta,
                                   const HermiteBasis& basis);

/// One Strang step of the coupled system: half free flight, exact nodal
/// nonlinear flow re-expanded by interpolation, half free flight.
DnlseState dnlse_strang_step(const DnlseState& state, const DnlseParams& p,
                             const FreePropagator& half_prop, const HermiteBasis& basis);

/// Inverse gauge transform back to psi from the cumulative mass of u
/// (|u| and |psi| agree at the nodes).
SpectralField dnlse_reconstruct(const DnlseState& state, double delta,
                                const HermiteBasis& basis);

/// Classical RK4 on the method-of-lines form
/// d/dt psi = i Lap psi + 2 delta d/dx Q(|psi|^2 psi).
/// Explicit: stable only for tau below roughly 1/modes.
SpectralField rk4_reference_step(const SpectralField& psi, const DnlseParams& p,
                                 const HermiteBasis& basis);

/// Prefactored Crank-Nicolson linear solve: Cayley transform
/// (I - i tau/2 Lap)^{-1} (I + i tau/2 Lap) plus the bare resolvent, both
/// diagonal in the Laplacian eigenbasis.
class CrankNicolsonFactor {
  public:
    CrankNicolsonFactor(std::shared_ptr<const LaplacianSpectrum> spectrum, double tau);
    CrankNicolsonFactor(int modes, double tau);

    int modes() const { return spectrum_->modes(); }
    double tau() const { return tau_; }

    SpectralField cayley(const SpectralField& field) const;
    SpectralField resolvent(const SpectralField& field) const;

  private:
    std::shared_ptr<const LaplacianSpectrum> spectrum_;
    double tau_;
    Eigen::VectorXcd cayley_[2];
    Eigen::VectorXcd resolvent_[2];
};

/// Representative Crank-Nicolson baseline: exact Cayley linear part, the
/// derivative nonlinearity handled by a two-iteration fixed point at the
/// midpoint. Subject to a CFL restriction tau <~ modes^{-2}.
SpectralField cn_baseline_step(const SpectralField& psi, const DnlseParams& p,
                               const CrankNicolsonFactor& factor, const HermiteBasis& basis);

}  // namespace hnls
