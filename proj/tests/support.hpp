// support.hpp — shared helpers for the test suites: finite-difference and
// contour oracles, random batteries, and tolerance helpers.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <random>

#include "gsamp/coefficients.hpp"
#include "gsamp/group_models.hpp"
#include "gsamp/random_states.hpp"

namespace testsupport {

using gsamp::cplx;
using gsamp::kPi;

// n-th derivative by Richardson-extrapolated central differences
// (binomial stencil at steps h, h/2, h/4 -> O(h^6)).  Step tuned for
// n <= 4 and |f| = O(1); accuracy ~1e-7 in double.
inline double fd_derivative(const std::function<double(double)>& f, int n, double x,
                            double h = 0.05) {
    auto binom = [](int nn, int kk) {
        double b = 1.0;
        for (int i = 1; i <= kk; ++i) b = b * (nn - kk + i) / i;
        return b;
    };
    auto central = [&](double step) {
        double acc = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double sign = (i % 2 == 0) ? 1.0 : -1.0;
            acc += sign * binom(n, i) * f(x + (n / 2.0 - i) * step);
        }
        return acc / std::pow(step, n);
    };
    const double d1 = central(h);
    const double d2 = central(h / 2);
    const double d3 = central(h / 4);
    const double r1 = (4.0 * d2 - d1) / 3.0;
    const double r2 = (4.0 * d3 - d2) / 3.0;
    return (16.0 * r2 - r1) / 15.0;
}

// Cauchy-integral oracle for derivatives of an entire function:
//   f^{(n)}(x) = n!/(2 pi r^n) * int_0^{2pi} f(x + r e^{i t}) e^{-i n t} dt,
// trapezoid-discretized (geometric convergence for analytic integrands).
inline double contour_derivative(const std::function<cplx(cplx)>& f, int n, double x,
                                 double r = 1.0, int points = 256) {
    cplx acc{0.0, 0.0};
    double fact = 1.0;
    for (int i = 2; i <= n; ++i) fact *= i;
    for (int m = 0; m < points; ++m) {
        const double th = 2.0 * kPi * m / points;
        acc += f(x + std::polar(r, th)) * std::polar(1.0, -n * th);
    }
    return (fact * acc / static_cast<double>(points) / std::pow(r, n)).real();
}

inline double rel_error(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

inline double state_rel_error(const gsamp::SpectralState& got, const gsamp::SpectralState& want) {
    return (got - want).norm() / std::max(want.norm(), 1e-300);
}

inline double state_rel_error(const gsamp::ExpSumSignal& got, const gsamp::ExpSumSignal& want) {
    return (got - want).norm() / std::max(want.norm(), 1e-300);
}

}  // namespace testsupport
