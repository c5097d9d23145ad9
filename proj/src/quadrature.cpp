#include "hnls/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "hnls/basis.hpp"

namespace hnls {

QuadratureRule gauss_hermite_rule(int degree) {
    if (degree < 1 || degree > kMaxDegree) {
        throw std::invalid_argument("gauss_hermite_rule: degree must be in [1, " +
                                    std::to_string(kMaxDegree) + "], got " +
                                    std::to_string(degree));
    }

    const double sqrt_pi = std::sqrt(M_PI);

    // Jacobi matrix for the weight exp(-x^2): zero diagonal, off-diagonal
    // entries sqrt(m/2).
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(degree);
    Eigen::VectorXd sub(std::max(degree - 1, 0));
    for (int m = 1; m < degree; ++m) {
        sub[m - 1] = std::sqrt(0.5 * m);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("gauss_hermite_rule: tridiagonal eigensolver failed");
    }

    QuadratureRule rule;
    rule.nodes = solver.eigenvalues();  // ascending

    // The rule is symmetric about the origin; averaging the paired
    // eigenvalues enforces x_m = -x_{degree-1-m} exactly.
    for (int m = 0; m < degree / 2; ++m) {
        const int j = degree - 1 - m;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[m]);
        rule.nodes[m] = -x;
        rule.nodes[j] = x;
    }
    if (degree % 2 == 1) {
        rule.nodes[degree / 2] = 0.0;
    }

    // Modified weights via the Christoffel-function identity. The classical
    // first-eigenvector-component formula keeps only absolute accuracy, so
    // the tiny extreme-node weights come out with O(1e16) relative error and
    // spoil high moments; the identity keeps full relative accuracy at every
    // node. The plain weights follow as christoffel * exp(-x^2), which
    // underflows gracefully where they are no longer representable.
    const Eigen::MatrixXd h = eval_hermite_functions(rule.nodes, degree);
    rule.christoffel.resize(degree);
    rule.weights.resize(degree);
    for (int m = 0; m < degree; ++m) {
        rule.christoffel[m] = 1.0 / h.col(m).squaredNorm();
        rule.weights[m] = rule.christoffel[m] * std::exp(-rule.nodes[m] * rule.nodes[m]);
    }

    // Paired weights are equal by symmetry; make that exact too.
    for (int m = 0; m < degree / 2; ++m) {
        const int j = degree - 1 - m;
        const double w = 0.5 * (rule.weights[m] + rule.weights[j]);
        rule.weights[m] = w;
        rule.weights[j] = w;
        const double c = 0.5 * (rule.christoffel[m] + rule.christoffel[j]);
        rule.christoffel[m] = c;
        rule.christoffel[j] = c;
    }

    // Residual scale drift of the recurrence-based weights is removed by
    // pinning the total mass, integral of exp(-x^2), exactly.
    rule.weights *= sqrt_pi / rule.weights.sum();

    return rule;
}

}  // namespace hnls
