// coefficients.hpp — exact evaluation of sinc derivatives, the coefficient
// families A_{m,k} (odd differentiation orders) and B_{m,k} (even orders),
// Favard constants, and their certified tail bounds.
//
// Conventions:
//   sinc(x) = sin(pi x) / (pi x),  sinc(0) = 1
//   A_{m,k} = (-1)^{k+1} sinc^{(2m-1)}(1/2 - k)
//           = (2m-1)!/(pi (k-1/2)^{2m}) * sum_{j=0}^{m-1} (-1)^j (pi(k-1/2))^{2j}/(2j)!
//   B_{m,k} = (-1)^{k+1} sinc^{(2m)}(-k)
//           = (2m)!/(pi k^{2m+1}) * sum_{j=0}^{m-1} (-1)^j (pi k)^{2j+1}/(2j+1)!   (k != 0)
//   B_{m,0} = (-1)^{m+1} pi^{2m}/(2m+1)
//   K_j     = (4/pi) sum_{r>=0} (-1)^{r(j+1)} / (2r+1)^{j+1}
//
// The absolute series totals are exact:
//   sum_k |A_{m,k}| = pi^{2m-1},   sum_k |B_{m,k}| = pi^{2m}.

#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace gsamp {

inline constexpr double kPi = 3.14159265358979323846;

// Largest m for which the closed forms stay well inside double range.
// Factorial growth makes double precision the binding constraint beyond this.
inline constexpr int kMaxBoasOrderM = 8;

double sinc(double x);
std::complex<double> sinc(std::complex<double> z);

// n-th derivative of sinc at x.  Near the origin (and wherever the closed
// form would cancel catastrophically) a truncated Taylor series is used;
// elsewhere the finite closed-form expansion.
double sinc_derivative(int n, double x);

double boas_coeff_a(int m, long k);
double boas_coeff_b(int m, long k);

// Certified bounds on the dropped absolute coefficient mass sum_{|k|>K} |.|.
double boas_abs_tail_a(int m, long K);
double boas_abs_tail_b(int m, long K);

// Precomputed coefficient window |k| <= K for one family.
// odd_family = true selects A_{m,k} (order r = 2m-1), false selects B_{m,k}
// (order r = 2m).  values[k + K] holds the coefficient at index k.
struct CoefficientTable {
    int m = 1;
    long K = 1;
    bool odd_family = true;
    std::vector<double> values;
    double abs_partial_sum = 0.0;  // sum_{|k|<=K} |value|, compensated
    double abs_total = 0.0;        // exact series total pi^{2m-1} or pi^{2m}

    double at(long k) const { return values[static_cast<std::size_t>(k + K)]; }
    // Certified dropped mass: exact total minus the kept partial sum, with a
    // rounding cushion.  Never negative.
    double dropped_abs() const;
};

CoefficientTable build_coefficient_table(int m, long K, bool odd_family);

struct FavardValue {
    double value = 0.0;
    double tail_bound = 0.0;  // certified bound on |value - exact|
};

FavardValue favard(int j);

struct FavardTable {
    std::vector<double> values;
    std::vector<double> tail_bounds;
};

FavardTable build_favard_table(int j_max);

// Accelerated evaluation of sum_{k>=0} (-1)^k a_k for totally monotone a_k,
// with a certified error bound.  Exposed for test oracles.
struct AlternatingSum {
    double value = 0.0;
    double bound = 0.0;
};
AlternatingSum alternating_series(const std::function<double(long)>& a, int n_terms);

}  // namespace gsamp
