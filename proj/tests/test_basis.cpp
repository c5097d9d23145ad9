#include <doctest.h>

#include <cmath>

#include "hnls/basis.hpp"
#include "hnls/quadrature.hpp"
#include "oracles.hpp"

using namespace hnls;

namespace {
const double kPiQuarterInv = std::pow(M_PI, -0.25);

HermiteBasis make_basis(int modes) { return HermiteBasis(gauss_hermite_rule(modes)); }
}  // namespace

TEST_CASE("weighted Hermite function values at the origin") {
    Eigen::VectorXd pts(1);
    pts[0] = 0.0;
    const Eigen::MatrixXd h = eval_hermite_functions(pts, 4);
    CHECK(h(0, 0) == doctest::Approx(kPiQuarterInv).epsilon(1e-14));
    CHECK(h(1, 0) == 0.0);
    CHECK(h(3, 0) == 0.0);
}

TEST_CASE("evaluation domain is guarded") {
    Eigen::VectorXd pts(1);
    pts[0] = 41.0;
    CHECK_THROWS_AS(eval_hermite_functions(pts, 4), std::domain_error);
    pts[0] = 0.0;
    CHECK_THROWS_AS(eval_hermite_functions(pts, 0), std::domain_error);
    CHECK_THROWS_AS(eval_hermite_functions(pts, kMaxDegree + 1), std::domain_error);
}

TEST_CASE("values stay finite at the edge of the domain for the deepest basis") {
    Eigen::VectorXd pts(3);
    pts << -40.0, 12.3, 40.0;
    const Eigen::MatrixXd h = eval_hermite_functions(pts, kMaxDegree);
    CHECK(h.allFinite());
}

TEST_CASE("h_3 is normalized under the discrete inner product at degree 8") {
    const HermiteBasis basis = make_basis(8);
    double acc = 0.0;
    for (int m = 0; m < 8; ++m) {
        const double v = basis.matrix()(3, m);
        acc += basis.rule().christoffel[m] * v * v;
    }
    CHECK(acc == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("analyze recovers a pure basis function") {
    const HermiteBasis basis = make_basis(16);
    NodalField values(basis.matrix().row(0).transpose().cast<Complex>());
    const SpectralField alpha = basis.analyze(values);
    CHECK(std::abs(alpha.coeffs[0] - 1.0) <= 1e-12);
    for (int m = 1; m < 16; ++m) {
        CHECK(std::abs(alpha.coeffs[m]) <= 1e-12);
    }
}

TEST_CASE("analyze of x exp(-x^2/2) lands on mode one with the Gaussian norm") {
    const HermiteBasis basis = make_basis(16);
    Eigen::VectorXcd values(16);
    for (int m = 0; m < 16; ++m) {
        const double x = basis.rule().nodes[m];
        values[m] = x * std::exp(-0.5 * x * x);
    }
    const SpectralField alpha = basis.analyze(NodalField(values));
    const double expected = std::sqrt(0.5 * std::sqrt(M_PI));  // ||x e^{-x^2/2}||_{L2}
    CHECK(std::abs(alpha.coeffs[1] - expected) <= 1e-12);
    for (int m = 0; m < 16; ++m) {
        if (m == 1) continue;
        CHECK(std::abs(alpha.coeffs[m]) <= 1e-12);
    }
}

TEST_CASE("analyze is the left inverse of nodal synthesis") {
    oracle::Rng rng(11);
    for (int modes : {64, 256}) {
        CAPTURE(modes);
        const HermiteBasis basis = make_basis(modes);
        const SpectralField alpha = rng.field(modes);
        const SpectralField back = basis.analyze(basis.values_at_nodes(alpha));
        CHECK((back.coeffs - alpha.coeffs).cwiseAbs().maxCoeff() <= 1e-11);
    }
}

TEST_CASE("synthesize at scattered points agrees with the nodal path") {
    const HermiteBasis basis = make_basis(32);
    oracle::Rng rng(12);
    const SpectralField alpha = rng.field(32);
    const Eigen::VectorXcd values = synthesize(alpha, basis.rule().nodes);
    const SpectralField back = basis.analyze(NodalField(values));
    CHECK((back.coeffs - alpha.coeffs).cwiseAbs().maxCoeff() <= 1e-12);

    const SpectralField zero = SpectralField::zero(32);
    Eigen::VectorXd pts(3);
    pts << -1.5, 0.0, 2.25;
    CHECK(synthesize(zero, pts).cwiseAbs().maxCoeff() == 0.0);

    SpectralField e0 = SpectralField::zero(32);
    e0.coeffs[0] = 1.0;
    Eigen::VectorXd origin(1);
    origin[0] = 0.0;
    CHECK(std::abs(synthesize(e0, origin)[0] - kPiQuarterInv) <= 1e-14);
}

TEST_CASE("interpolation reproduces arbitrary nodal data") {
    const HermiteBasis basis = make_basis(64);
    oracle::Rng rng(13);
    Eigen::VectorXcd data(64);
    for (int m = 0; m < 64; ++m) data[m] = Complex(rng.uniform(), rng.uniform());
    const SpectralField q = basis.interpolate(NodalField(data));
    const NodalField back = basis.values_at_nodes(q);
    CHECK((back.values - data).cwiseAbs().maxCoeff() <= 1e-11);
}

TEST_CASE("interpolating the zero function gives the zero field") {
    const HermiteBasis basis = make_basis(16);
    const SpectralField q = basis.interpolate(NodalField(Eigen::VectorXcd::Zero(16)));
    CHECK(q.coeffs.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("interpolation error of exp(-x^2) collapses as the basis doubles") {
    // Dense-grid L2 oracle on [-12, 12].
    double previous = -1.0;
    for (int modes : {16, 32, 64}) {
        const HermiteBasis basis = make_basis(modes);
        Eigen::VectorXcd values(modes);
        for (int m = 0; m < modes; ++m) {
            const double x = basis.rule().nodes[m];
            values[m] = std::exp(-x * x);
        }
        const SpectralField q = basis.interpolate(NodalField(values));
        const double err2 = oracle::integrate(
            [&](double x) {
                Eigen::VectorXd pt(1);
                pt[0] = x;
                const Complex approx = synthesize(q, pt)[0];
                return std::norm(approx - Complex(std::exp(-x * x)));
            },
            -12.0, 12.0);
        const double err = std::sqrt(err2);
        if (previous >= 0.0) {
            CHECK(err <= previous / 10.0);
        }
        previous = err;
    }
}

TEST_CASE("Parseval ties the coefficient norm to discrete quadrature") {
    const HermiteBasis basis = make_basis(48);
    oracle::Rng rng(14);
    const SpectralField alpha = rng.field(48);
    const NodalField nodal = basis.values_at_nodes(alpha);
    CHECK(basis.nodal_l2_norm(nodal) == doctest::Approx(alpha.l2_norm()).epsilon(1e-11));
}

TEST_CASE("analyze rejects mismatched sizes") {
    const HermiteBasis basis = make_basis(8);
    CHECK_THROWS_AS(basis.analyze(NodalField(Eigen::VectorXcd::Zero(9))),
                    std::invalid_argument);
}

TEST_CASE("sigma norm on basis vectors") {
    SpectralField e0 = SpectralField::zero(8);
    e0.coeffs[0] = 1.0;
    CHECK(sigma_norm(e0, 0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(sigma_norm(e0, 2) == doctest::Approx(0.5).epsilon(1e-15));

    SpectralField e3 = SpectralField::zero(8);
    e3.coeffs[3] = 1.0;
    CHECK(sigma_norm(e3, 1) == doctest::Approx(std::sqrt(3.5)).epsilon(1e-15));
}

TEST_CASE("sigma norm properties") {
    oracle::Rng rng(15);
    SpectralField f = rng.field(32);
    CHECK(sigma_norm(f, 0) == doctest::Approx(f.l2_norm()).epsilon(1e-15));

    f.coeffs[0] = 0.0;  // every remaining weight is >= 3/2
    for (int k = 0; k < 4; ++k) {
        CHECK(sigma_norm(f, k) <= sigma_norm(f, k + 1));
    }
    CHECK_THROWS_AS(sigma_norm(f, 11), std::invalid_argument);
}

TEST_CASE("basis matrix satisfies B diag(christoffel) B^T = I") {
    const HermiteBasis basis = make_basis(64);
    const Eigen::MatrixXd gram = basis.matrix() *
                                 basis.rule().christoffel.asDiagonal() *
                                 basis.matrix().transpose();
    const Eigen::MatrixXd identity = Eigen::MatrixXd::Identity(64, 64);
    CHECK((gram - identity).cwiseAbs().maxCoeff() <= 1e-10);
}
