#include "gsamp/coefficients.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsamp/summation.hpp"

namespace gsamp {

namespace {

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

// Taylor evaluation of sinc^{(n)}(x):
//   sinc^{(n)}(x) = sum_{2m>=n} (-1)^m pi^{2m} x^{2m-n} / ((2m+1)(2m-n)!)
// Entire series; converges for all x, numerically sound while pi|x| stays
// moderate (the largest term grows like e^{pi|x|}).
double sinc_derivative_taylor(int n, double x) {
    const int m0 = (n + 1) / 2;
    double term;
    if (n % 2 == 0) {
        term = ((n / 2) % 2 == 0 ? 1.0 : -1.0) * std::pow(kPi, n) / (n + 1);
    } else {
        term = (m0 % 2 == 0 ? 1.0 : -1.0) * std::pow(kPi, n + 1) * x / (n + 2);
    }
    KahanSum acc;
    acc.add(term);
    const double x2 = x * x;
    for (int m = m0; m < m0 + 256; ++m) {
        term *= -kPi * kPi * x2 * (2 * m + 1)
                / ((2.0 * m + 3) * (2 * m - n + 1) * (2 * m - n + 2));
        acc.add(term);
        if (std::abs(term) <= 1e-18 * (std::abs(acc.value()) + 1e-300)) break;
    }
    return acc.value();
}

// Closed-form evaluation, valid away from the origin:
//   sinc^{(n)}(x) = sum_{j=0}^{n} C(n,j) (sin pi x)^{(j)} (1/(pi x))^{(n-j)}
// with (sin pi x)^{(j)} = pi^j sin(pi x + j pi/2) and
// (1/(pi x))^{(m)} = (-1)^m m! / (pi x^{m+1}).
double sinc_derivative_closed(int n, double x) {
    const double s = std::sin(kPi * x);
    const double c = std::cos(kPi * x);
    KahanSum acc;
    for (int j = 0; j <= n; ++j) {
        double trig;
        switch (j % 4) {
            case 0: trig = s; break;
            case 1: trig = c; break;
            case 2: trig = -s; break;
            default: trig = -c; break;
        }
        const double sign = ((n - j) % 2 == 0) ? 1.0 : -1.0;
        acc.add(binomial(n, j) * std::pow(kPi, j) * trig * sign *
                factorial(n - j) / (kPi * std::pow(x, n - j + 1)));
    }
    return acc.value();
}

}  // namespace

double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        // Taylor to x^4; error below 1e-24 on this range.
        const double y = kPi * x;
        const double y2 = y * y;
        return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
    }
    return std::sin(kPi * x) / (kPi * x);
}

std::complex<double> sinc(std::complex<double> z) {
    if (std::abs(z) < 1e-4) {
        const std::complex<double> y = kPi * z;
        const std::complex<double> y2 = y * y;
        return 1.0 - y2 / 6.0 * (1.0 - y2 / 20.0);
    }
    return std::sin(kPi * z) / (kPi * z);
}

double sinc_derivative(int n, double x) {
    if (n < 0) throw std::domain_error("sinc_derivative: order must be >= 0");
    if (n == 0) return sinc(x);
    const double ax = std::abs(x);
    // The closed form cancels catastrophically when pi|x| is small compared
    // with n (the 1/x^{n+1} term dominates a bounded result).  The entire
    // Taylor series covers that regime.
    if (ax < 0.1 || kPi * ax < n + 6.0) return sinc_derivative_taylor(n, x);
    return sinc_derivative_closed(n, x);
}

double boas_coeff_a(int m, long k) {
    if (m < 1 || m > kMaxBoasOrderM)
        throw std::domain_error("boas_coeff_a: m out of supported range");
    const double km = static_cast<double>(k) - 0.5;
    const double y = kPi * km;
    KahanSum s;
    double term = 1.0;  // j = 0
    s.add(term);
    for (int j = 1; j < m; ++j) {
        term *= -y * y / ((2.0 * j - 1) * (2.0 * j));
        s.add(term);
    }
    return factorial(2 * m - 1) / (kPi * std::pow(km, 2.0 * m)) * s.value();
}

double boas_coeff_b(int m, long k) {
    if (m < 1 || m > kMaxBoasOrderM)
        throw std::domain_error("boas_coeff_b: m out of supported range");
    if (k == 0) {
        const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^{m+1}
        return sign * std::pow(kPi, 2.0 * m) / (2.0 * m + 1);
    }
    const double kd = static_cast<double>(k);
    const double y = kPi * kd;
    KahanSum s;
    double term = y;  // j = 0
    s.add(term);
    for (int j = 1; j < m; ++j) {
        term *= -y * y / ((2.0 * j) * (2.0 * j + 1));
        s.add(term);
    }
    return factorial(2 * m) / (kPi * std::pow(kd, 2.0 * m + 1)) * s.value();
}

// For k > K the coefficient magnitudes are dominated by their top closed-form
// term; consecutive terms shrink at least geometrically once pi*k exceeds the
// polynomial degree, giving
//   |A_{m,k}| <= (2m-1) pi^{2m-3} / ((k-1/2)^2 (1-q)),
//   |B_{m,k}| <= 2m pi^{2m-2} / (k^2 (1-q)),
// and the index sums telescope against the integral bound.
double boas_abs_tail_a(int m, long K) {
    if (m < 1 || m > kMaxBoasOrderM || K < 1)
        throw std::domain_error("boas_abs_tail_a: bad arguments");
    const double y_min = kPi * (static_cast<double>(K) + 0.5);
    const double q = (2.0 * m - 2) * (2.0 * m - 3) / (y_min * y_min);
    if (q >= 0.5) throw std::domain_error("boas_abs_tail_a: K too small for certified tail");
    const double per_side = 1.0 / (static_cast<double>(K) - 0.5) +
                            1.0 / (static_cast<double>(K) + 0.5);
    return (2.0 * m - 1) * std::pow(kPi, 2.0 * m - 3) / (1.0 - q) * per_side;
}

double boas_abs_tail_b(int m, long K) {
    if (m < 1 || m > kMaxBoasOrderM || K < 1)
        throw std::domain_error("boas_abs_tail_b: bad arguments");
    const double y_min = kPi * (static_cast<double>(K) + 1.0);
    const double q = (2.0 * m - 1) * (2.0 * m - 2) / (y_min * y_min);
    if (q >= 0.5) throw std::domain_error("boas_abs_tail_b: K too small for certified tail");
    return 2.0 * m * std::pow(kPi, 2.0 * m - 2) / (1.0 - q) * 2.0 /
           static_cast<double>(K);
}

double CoefficientTable::dropped_abs() const {
    const double cushion = 64.0 * std::numeric_limits<double>::epsilon() * abs_total;
    const double gap = abs_total - abs_partial_sum;
    return std::max(0.0, gap) + cushion;
}

CoefficientTable build_coefficient_table(int m, long K, bool odd_family) {
    if (K < 1) throw std::domain_error("build_coefficient_table: K must be >= 1");
    CoefficientTable t;
    t.m = m;
    t.K = K;
    t.odd_family = odd_family;
    t.values.resize(static_cast<std::size_t>(2 * K + 1));
    KahanSum abs_sum;
    for (long k = -K; k <= K; ++k) {
        const double v = odd_family ? boas_coeff_a(m, k) : boas_coeff_b(m, k);
        t.values[static_cast<std::size_t>(k + K)] = v;
        abs_sum.add(std::abs(v));
    }
    t.abs_partial_sum = abs_sum.value();
    t.abs_total = std::pow(kPi, odd_family ? 2.0 * m - 1 : 2.0 * m);
    return t;
}

// Convergence acceleration for alternating series with totally monotone
// terms (Cohen, Rodriguez Villegas, Zagier).  n_terms evaluations give an
// error below ~(3+sqrt 8)^{-n}; the returned bound adds a rounding floor.
AlternatingSum alternating_series(const std::function<double(long)>& a, int n_terms) {
    const int n = n_terms;
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = (d + 1.0 / d) / 2.0;
    double b = -1.0;
    double c = -d;
    KahanSum s;
    for (long k = 0; k < n; ++k) {
        c = b - c;
        s.add(c * a(k));
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0));
    }
    AlternatingSum out;
    out.value = s.value() / d;
    const double eps = std::numeric_limits<double>::epsilon();
    out.bound = 4.0 * std::abs(a(0)) / d +
                16.0 * eps * (std::abs(out.value) + std::abs(a(0)));
    return out;
}

FavardValue favard(int j) {
    if (j < 0) throw std::domain_error("favard: index must be >= 0");
    const double s = j + 1.0;
    const int n_terms = 48;
    FavardValue out;
    if (j % 2 == 0) {
        // Alternating series directly: (4/pi) sum (-1)^r (2r+1)^{-s}.
        auto a = [s](long r) { return std::pow(2.0 * r + 1.0, -s); };
        const AlternatingSum acc = alternating_series(a, n_terms);
        out.value = 4.0 / kPi * acc.value;
        out.tail_bound = 4.0 / kPi * acc.bound;
    } else {
        // All-positive series; reduce the odd-integer zeta sum to the
        // alternating eta function:
        //   sum_{odd n} n^{-s} = (1 - 2^{-s}) / (1 - 2^{1-s}) * eta(s),
        //   eta(s) = sum_{r>=0} (-1)^r (r+1)^{-s}.
        auto a = [s](long r) { return std::pow(r + 1.0, -s); };
        const AlternatingSum acc = alternating_series(a, n_terms);
        const double scale = (1.0 - std::pow(2.0, -s)) / (1.0 - std::pow(2.0, 1.0 - s));
        out.value = 4.0 / kPi * scale * acc.value;
        out.tail_bound = 4.0 / kPi * scale * acc.bound;
    }
    return out;
}

FavardTable build_favard_table(int j_max) {
    if (j_max < 0) throw std::domain_error("build_favard_table: j_max must be >= 0");
    FavardTable t;
    t.values.reserve(j_max + 1);
    t.tail_bounds.reserve(j_max + 1);
    for (int j = 0; j <= j_max; ++j) {
        const FavardValue v = favard(j);
        t.values.push_back(v.value);
        t.tail_bounds.push_back(v.tail_bound);
    }
    return t;
}

}  // namespace gsamp
