#include <doctest.h>

#include <cmath>

#include "hnls/basis.hpp"
#include "hnls/erf.hpp"
#include "hnls/gauge.hpp"
#include "hnls/operators.hpp"
#include "hnls/quadrature.hpp"
#include "oracles.hpp"

using namespace hnls;

TEST_CASE("erf against a quadrature oracle of its defining integral") {
    // erf(x) = 2/sqrt(pi) * integral of exp(-t^2) over [0, x].
    for (double x : {0.05, 0.3, 0.46875, 0.5, 1.0, 1.7, 2.9, 4.0, 4.7, 6.0}) {
        const double oracle_value =
            2.0 / std::sqrt(M_PI) *
            oracle::integrate([](double t) { return std::exp(-t * t); }, 0.0, x, 0.1);
        CHECK(std::abs(hnls::erf(x) - oracle_value) <= 1e-14);
        CHECK(std::abs(hnls::erf(-x) + oracle_value) <= 1e-14);
    }
    CHECK(hnls::erf(0.0) == 0.0);
    CHECK(hnls::erf(30.0) == 1.0);
    CHECK(hnls::erfc(0.3) == doctest::Approx(1.0 - hnls::erf(0.3)).epsilon(1e-15));
}

TEST_CASE("smooth step is the standard normal CDF") {
    CHECK(smooth_step(0.0) == 0.5);
    for (double x : {0.3, 1.7, 5.0}) {
        CHECK(smooth_step(x) + smooth_step(-x) == doctest::Approx(1.0).epsilon(1e-15));
    }
    // CDF(1) via quadrature of the density.
    const double cdf1 = 0.5 + oracle::integrate(
                                  [](double t) {
                                      return std::exp(-0.5 * t * t) / std::sqrt(2.0 * M_PI);
                                  },
                                  0.0, 1.0, 0.05);
    CHECK(smooth_step(1.0) == doctest::Approx(cdf1).epsilon(1e-13));
    CHECK(smooth_step(1.0) == doctest::Approx(0.8413447460685429).epsilon(1e-12));
    CHECK(smooth_step(-40.0) == 0.0);
    CHECK(smooth_step(40.0) == 1.0);
}

TEST_CASE("cumulative mass of the ground state is the erf ramp") {
    const int modes = 128;
    const HermiteBasis basis(gauss_hermite_rule(modes));
    SpectralField f = SpectralField::zero(modes);
    f.coeffs[0] = 1.0;
    const CumulativeMass cm = cumulative_mass(f, basis);
    CHECK(cm.total_mass == doctest::Approx(1.0).epsilon(1e-12));
    for (int m = 0; m < modes; ++m) {
        const double exact = 0.5 * (1.0 + hnls::erf(basis.rule().nodes[m]));
        CHECK(std::abs(cm.values[m] - exact) <= 1e-8);
    }
}

TEST_CASE("odd-degree rule pins the half mass at the origin") {
    const int modes = 129;
    const HermiteBasis basis(gauss_hermite_rule(modes));
    SpectralField f = SpectralField::zero(modes);
    f.coeffs[0] = 1.0;
    const CumulativeMass cm = cumulative_mass(f, basis);
    CHECK(cm.values[modes / 2] == doctest::Approx(0.5).epsilon(1e-10));
    // F(1) for the e^{-x^2}/sqrt(pi) density.
    CHECK(0.5 * (1.0 + hnls::erf(1.0)) == doctest::Approx(0.9213503964748574).epsilon(1e-12));
}

TEST_CASE("cumulative mass of the zero field vanishes") {
    const HermiteBasis basis(gauss_hermite_rule(16));
    const CumulativeMass cm = cumulative_mass(SpectralField::zero(16), basis);
    CHECK(cm.total_mass == 0.0);
    CHECK(cm.values.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("tiny rules are rejected") {
    const HermiteBasis basis(gauss_hermite_rule(3));
    CHECK_THROWS_AS(cumulative_mass(SpectralField::zero(3), basis), std::invalid_argument);
}

TEST_CASE("cumulative mass agrees with dense quadrature on random smooth fields") {
    const int modes = 96;
    const HermiteBasis basis(gauss_hermite_rule(modes));
    oracle::Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        const SpectralField f = rng.field(modes, 0.55);
        const CumulativeMass cm = cumulative_mass(f, basis);

        // Composite Gauss-Legendre of |f|^2 between consecutive breakpoints.
        const auto density = [&](double x) {
            Eigen::VectorXd pt(1);
            pt[0] = x;
            return std::norm(synthesize(f, pt)[0]);
        };
        double running = 0.0;
        double previous = -40.0;
        double worst = 0.0;
        for (int m = 0; m < modes; ++m) {
            const double x = basis.rule().nodes[m];
            running += oracle::integrate(density, previous, x, 0.2);
            previous = x;
            worst = std::max(worst, std::abs(running - cm.values[m]));
        }
        CAPTURE(trial);
        CHECK(worst <= 1e-8);

        // Monotone, bounded by the total mass.
        for (int m = 0; m < modes; ++m) {
            CHECK(cm.values[m] >= -1e-9);
            CHECK(cm.values[m] <= cm.total_mass + 1e-9);
            if (m) CHECK(cm.values[m] + 1e-9 >= cm.values[m - 1]);
        }
    }
}

TEST_CASE("corrected primitive is flat at both ends") {
    const int modes = 96;
    const HermiteBasis basis(gauss_hermite_rule(modes));
    oracle::Rng rng(32);
    const SpectralField f = rng.field(modes, 0.55);
    const CumulativeMass cm = cumulative_mass(f, basis);
    const double left =
        cm.values[0] - smooth_step(basis.rule().nodes[0]) * cm.total_mass;
    const double right =
        cm.values[modes - 1] - smooth_step(basis.rule().nodes[modes - 1]) * cm.total_mass;
    CHECK(std::abs(left) <= 1e-8);
    CHECK(std::abs(right) <= 1e-8);
    CHECK(cm.values[modes - 1] == doctest::Approx(cm.total_mass).epsilon(1e-8));
}

TEST_CASE("derivative of the corrected primitive recombines to the density") {
    // d/dx F~ = |f|^2 - mass * Phi'; checked at every node after adding the
    // analytic step derivative back. (Interpolating the uncorrected F and
    // differentiating is exactly the unstable route the correction avoids.)
    const int modes = 128;
    const HermiteBasis basis(gauss_hermite_rule(modes));
    SpectralField f = SpectralField::zero(modes);
    f.coeffs[0] = 1.0;
    f.coeffs[3] = 0.5;
    const CumulativeMass cm = cumulative_mass(f, basis);

    Eigen::VectorXcd corrected(modes);
    for (int m = 0; m < modes; ++m) {
        corrected[m] = cm.values[m] - smooth_step(basis.rule().nodes[m]) * cm.total_mass;
    }
    const SpectralField eta = basis.interpolate(NodalField(corrected));
    const NodalField derivative = basis.values_at_nodes(differentiate(eta));
    const NodalField f_nodal = basis.values_at_nodes(f);
    for (int m = 0; m < modes; ++m) {
        const double x = basis.rule().nodes[m];
        const double step_rate = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
        const double recombined = derivative.values[m].real() + cm.total_mass * step_rate;
        CHECK(std::abs(recombined - std::norm(f_nodal.values[m])) <= 1e-7);
    }
}

TEST_CASE("gauge factor has unit modulus and reciprocal powers") {
    const int modes = 64;
    const HermiteBasis basis(gauss_hermite_rule(modes));
    oracle::Rng rng(33);
    const SpectralField u = rng.field(modes, 0.7);

    const NodalField plus2 = gauge_factor(u, 0.85, 2, basis);
    const NodalField minus2 = gauge_factor(u, 0.85, -2, basis);
    for (int m = 0; m < modes; ++m) {
        CHECK(std::abs(std::abs(plus2.values[m]) - 1.0) <= 1e-15);
        CHECK(std::abs(plus2.values[m] * minus2.values[m] - 1.0) <= 1e-15);
    }

    const NodalField trivial = gauge_factor(SpectralField::zero(modes), 0.85, 1, basis);
    for (int m = 0; m < modes; ++m) {
        CHECK(trivial.values[m] == Complex(1.0, 0.0));
    }

    CHECK_THROWS_AS(gauge_factor(u, 0.85, 3, basis), std::invalid_argument);
    CHECK_THROWS_AS(gauge_factor(u, 0.85, 0, basis), std::invalid_argument);
}
