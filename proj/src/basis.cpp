#include "hnls/basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hnls {

namespace {
constexpr double kQuarterRootPiInv = 0.7511255444649425;  // pi^{-1/4}
constexpr double kMaxPoint = 40.0;
}  // namespace

Eigen::MatrixXd eval_hermite_functions(const Eigen::VectorXd& points, int modes) {
    if (modes < 1 || modes > kMaxDegree) {
        throw std::domain_error("eval_hermite_functions: modes must be in [1, " +
                                std::to_string(kMaxDegree) + "]");
    }
    const auto n = points.size();
    for (Eigen::Index j = 0; j < n; ++j) {
        if (!(std::abs(points[j]) <= kMaxPoint)) {
            throw std::domain_error("eval_hermite_functions: |point| must be <= 40");
        }
    }

    Eigen::MatrixXd h(modes, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double x = points[j];
        double hm = kQuarterRootPiInv * std::exp(-0.5 * x * x);
        h(0, j) = hm;
        if (modes == 1) continue;
        double hp = std::sqrt(2.0) * x * hm;  // h_1
        h(1, j) = hp;
        for (int m = 1; m + 1 < modes; ++m) {
            const double next =
                (x * hp - std::sqrt(0.5 * m) * hm) / std::sqrt(0.5 * (m + 1));
            hm = hp;
            hp = next;
            h(m + 1, j) = next;
        }
    }
    return h;
}

Eigen::VectorXcd synthesize(const SpectralField& field, const Eigen::VectorXd& points) {
    const int modes = field.modes();
    if (modes < 1) {
        throw std::invalid_argument("synthesize: empty field");
    }
    const auto n = points.size();
    Eigen::VectorXcd out(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        const double x = points[j];
        if (!(std::abs(x) <= kMaxPoint)) {
            throw std::domain_error("synthesize: |point| must be <= 40");
        }
        double hm = kQuarterRootPiInv * std::exp(-0.5 * x * x);
        Complex acc = field.coeffs[0] * hm;
        if (modes > 1) {
            double hp = std::sqrt(2.0) * x * hm;
            acc += field.coeffs[1] * hp;
            for (int m = 1; m + 1 < modes; ++m) {
                const double next =
                    (x * hp - std::sqrt(0.5 * m) * hm) / std::sqrt(0.5 * (m + 1));
                hm = hp;
                hp = next;
                acc += field.coeffs[m + 1] * next;
            }
        }
        out[j] = acc;
    }
    return out;
}

double sigma_norm(const SpectralField& field, int k) {
    if (k < 0 || k > 10) {
        throw std::invalid_argument("sigma_norm: k must be in [0, 10]");
    }
    double acc = 0.0;
    for (int m = 0; m < field.modes(); ++m) {
        acc += std::pow(m + 0.5, k) * std::norm(field.coeffs[m]);
    }
    return std::sqrt(acc);
}

Eigen::VectorXcd real_matrix_apply(const Eigen::MatrixXd& a, const Eigen::VectorXcd& x) {
    const Eigen::VectorXd re = a * x.real().matrix();
    const Eigen::VectorXd im = a * x.imag().matrix();
    Eigen::VectorXcd y(re.size());
    y.real() = re;
    y.imag() = im;
    return y;
}

HermiteBasis::HermiteBasis(QuadratureRule rule)
    : rule_(std::move(rule)), basis_(eval_hermite_functions(rule_.nodes, rule_.degree())) {}

SpectralField HermiteBasis::analyze(const NodalField& values) const {
    if (values.size() != modes()) {
        throw std::invalid_argument("analyze: nodal data has " +
                                    std::to_string(values.size()) + " entries, rule degree is " +
                                    std::to_string(modes()));
    }
    Eigen::VectorXcd scaled = rule_.christoffel.cast<Complex>().cwiseProduct(values.values);
    return SpectralField(real_matrix_apply(basis_, scaled));
}

NodalField HermiteBasis::values_at_nodes(const SpectralField& field) const {
    if (field.modes() != modes()) {
        throw std::invalid_argument("values_at_nodes: field/rule size mismatch");
    }
    return NodalField(real_matrix_apply(basis_.transpose(), field.coeffs));
}

Eigen::VectorXd HermiteBasis::analyze_real(const Eigen::VectorXd& values) const {
    if (values.size() != modes()) {
        throw std::invalid_argument("analyze_real: data/rule size mismatch");
    }
    return basis_ * rule_.christoffel.cwiseProduct(values).matrix();
}

Eigen::VectorXd HermiteBasis::values_at_nodes_real(const Eigen::VectorXd& coeffs) const {
    if (coeffs.size() != modes()) {
        throw std::invalid_argument("values_at_nodes_real: data/rule size mismatch");
    }
    return basis_.transpose() * coeffs;
}

double HermiteBasis::nodal_l2_norm(const NodalField& values) const {
    if (values.size() != modes()) {
        throw std::invalid_argument("nodal_l2_norm: data/rule size mismatch");
    }
    double acc = 0.0;
    for (int m = 0; m < modes(); ++m) {
        acc += rule_.christoffel[m] * std::norm(values.values[m]);
    }
    return std::sqrt(acc);
}

}  // namespace hnls
