#include "hnls/erf.hpp"

#include <cmath>

namespace hnls {

namespace {

// Coefficient tables from Cody's CALERF (netlib specfun), double precision.
constexpr double kA[5] = {3.16112374387056560e0, 1.13864154151050156e2,
                          3.77485237685302021e2, 3.20937758913846947e3,
                          1.85777706184603153e-1};
constexpr double kB[4] = {2.36012909523441209e1, 2.44024637934444173e2,
                          1.28261652607737228e3, 2.84423683343917062e3};
constexpr double kC[9] = {5.64188496988670089e-1, 8.88314979438837594e0,
                          6.61191906371416295e1,  2.98635138197400131e2,
                          8.81952221241769090e2,  1.71204761263407058e3,
                          2.05107837782607147e3,  1.23033935479799725e3,
                          2.15311535474403846e-8};
constexpr double kD[8] = {1.57449261107098347e1, 1.17693950891312499e2,
                          5.37181101862009858e2, 1.62138957456669019e3,
                          3.29079923573345963e3, 4.36261909014324716e3,
                          3.43936767414372164e3, 1.23033935480374942e3};
constexpr double kP[6] = {3.05326634961232344e-1, 3.60344899949804439e-1,
                          1.25781726111229246e-1, 1.60837851487422766e-2,
                          6.58749161529837803e-4, 1.63153871373020978e-2};
constexpr double kQ[5] = {2.56852019228982242e0, 1.87295284992346047e0,
                          5.27905102951428412e-1, 6.05183413124413191e-2,
                          2.33520497626869185e-3};

constexpr double kThreshold = 0.46875;
constexpr double kInvSqrtPi = 5.6418958354775628695e-1;

// erf(x) for |x| <= 0.46875.
double erf_small(double x) {
    const double y = std::abs(x);
    double ysq = 0.0;
    if (y > 1.11e-16) ysq = y * y;
    double xnum = kA[4] * ysq;
    double xden = ysq;
    for (int i = 0; i < 3; ++i) {
        xnum = (xnum + kA[i]) * ysq;
        xden = (xden + kB[i]) * ysq;
    }
    return x * (xnum + kA[3]) / (xden + kB[3]);
}

// exp(-y^2) split to preserve accuracy in the scaled erfc branches.
double exp_neg_square(double y) {
    const double ysq = std::trunc(y * 16.0) / 16.0;
    const double del = (y - ysq) * (y + ysq);
    return std::exp(-ysq * ysq) * std::exp(-del);
}

// erfc(y) for y > 0.46875.
double erfc_large(double y) {
    if (y > 26.5) return 0.0;
    double result;
    if (y <= 4.0) {
        double xnum = kC[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + kC[i]) * y;
            xden = (xden + kD[i]) * y;
        }
        result = (xnum + kC[7]) / (xden + kD[7]);
    } else {
        const double ysq = 1.0 / (y * y);
        double xnum = kP[5] * ysq;
        double xden = ysq;
        for (int i = 0; i < 4; ++i) {
            xnum = (xnum + kP[i]) * ysq;
            xden = (xden + kQ[i]) * ysq;
        }
        result = ysq * (xnum + kP[4]) / (xden + kQ[4]);
        result = (kInvSqrtPi - result) / y;
    }
    return exp_neg_square(y) * result;
}

}  // namespace

double erf(double x) {
    if (std::isnan(x)) return x;
    const double y = std::abs(x);
    if (y <= kThreshold) return erf_small(x);
    const double result = 1.0 - erfc_large(y);
    return x < 0.0 ? -result : result;
}

double erfc(double x) {
    if (std::isnan(x)) return x;
    const double y = std::abs(x);
    if (y <= kThreshold) return 1.0 - erf_small(x);
    const double result = erfc_large(y);
    return x < 0.0 ? 2.0 - result : result;
}

}  // namespace hnls
