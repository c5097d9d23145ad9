#include <doctest.h>

#include <cmath>

#include "hnls/basis.hpp"
#include "hnls/quadrature.hpp"
#include "oracles.hpp"

using hnls::gauss_hermite_rule;
using hnls::QuadratureRule;

TEST_CASE("degree 1 rule is the midpoint of the Gaussian weight") {
    const QuadratureRule rule = gauss_hermite_rule(1);
    CHECK(rule.nodes[0] == 0.0);
    CHECK(rule.weights[0] == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(rule.christoffel[0] == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("degree 2 rule matches the hand-computed Hermite roots") {
    const QuadratureRule rule = gauss_hermite_rule(2);
    CHECK(rule.nodes[0] == doctest::Approx(-M_SQRT1_2).epsilon(1e-14));
    CHECK(rule.nodes[1] == doctest::Approx(M_SQRT1_2).epsilon(1e-14));
    CHECK(rule.weights[0] == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(rule.weights[1] == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-14));
}

TEST_CASE("invalid degrees are rejected") {
    CHECK_THROWS_AS(gauss_hermite_rule(0), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite_rule(-3), std::invalid_argument);
    CHECK_THROWS_AS(gauss_hermite_rule(hnls::kMaxDegree + 1), std::invalid_argument);
}

TEST_CASE("nodes are symmetric, ascending, with positive weights") {
    for (int degree : {5, 64, 129, 256}) {
        CAPTURE(degree);
        const QuadratureRule rule = gauss_hermite_rule(degree);
        for (int m = 0; m + 1 < degree; ++m) {
            CHECK(rule.nodes[m] < rule.nodes[m + 1]);
        }
        for (int m = 0; m < degree; ++m) {
            CHECK(std::abs(rule.nodes[m] + rule.nodes[degree - 1 - m]) <= 1e-13);
            CHECK(rule.weights[m] > 0.0);
            CHECK(rule.christoffel[m] > 0.0);
        }
        CHECK(rule.weights.sum() ==
              doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    }
}

TEST_CASE("christoffel weights match w * exp(x^2)") {
    for (int degree : {16, 64, 256}) {
        CAPTURE(degree);
        const QuadratureRule rule = gauss_hermite_rule(degree);
        for (int m = 0; m < degree; ++m) {
            const double direct = rule.weights[m] * std::exp(rule.nodes[m] * rule.nodes[m]);
            CHECK(rule.christoffel[m] == doctest::Approx(direct).epsilon(1e-10));
        }
    }
}

TEST_CASE("moments of x^p exp(-x^2) are exact up to degree 2M-1") {
    for (int degree : {2, 8, 64}) {
        CAPTURE(degree);
        const QuadratureRule rule = gauss_hermite_rule(degree);
        for (int p = 0; p <= 2 * degree - 1; ++p) {
            double acc = 0.0;
            for (int m = 0; m < degree; ++m) {
                acc += rule.weights[m] * std::pow(rule.nodes[m], p);
            }
            const double exact = oracle::gaussian_moment(p);
            if (p % 2 == 1) {
                CHECK(std::abs(acc) <= 1e-11 * oracle::gaussian_moment(p - 1));
            } else {
                CHECK(acc == doctest::Approx(exact).epsilon(1e-11));
            }
        }
    }
}

TEST_CASE("x^2 moment at degree 64 hits sqrt(pi)/2") {
    const QuadratureRule rule = gauss_hermite_rule(64);
    double acc = 0.0;
    for (int m = 0; m < 64; ++m) {
        acc += rule.weights[m] * rule.nodes[m] * rule.nodes[m];
    }
    CHECK(acc == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-12));
}

TEST_CASE("discrete orthonormality of the weighted basis") {
    const int degree = 64;
    const QuadratureRule rule = gauss_hermite_rule(degree);
    const Eigen::MatrixXd h = hnls::eval_hermite_functions(rule.nodes, degree);
    double worst = 0.0;
    for (int j = 0; j < degree; ++j) {
        for (int k = j; k < degree; ++k) {
            double acc = 0.0;
            for (int m = 0; m < degree; ++m) {
                acc += rule.christoffel[m] * h(j, m) * h(k, m);
            }
            worst = std::max(worst, std::abs(acc - (j == k ? 1.0 : 0.0)));
        }
    }
    CHECK(worst <= 1e-10);
}
