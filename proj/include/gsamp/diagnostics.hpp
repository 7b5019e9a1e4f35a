// diagnostics.hpp — measurable characterizations of bandlimitedness in the
// spectral backend: growth of generator norms, the spectral-type limit
// ||D^k f||^{1/k} -> sigma_f, the Favard-constant (Stein-Kolmogorov)
// inequality, the modulus of continuity, and the Jackson-type ratio between
// best approximation and modulus.

#pragma once

#include <span>
#include <vector>

#include "gsamp/group_models.hpp"

namespace gsamp {

// ||D^k f||, exact in the l2 backend.  Direct formula; overflows double for
// large k * log(spectral bound) — use spectral_type for the root sequence.
double generator_norm(const SpectralState& f, int k);

struct SpectralTypeReport {
    std::vector<double> norm_roots;  // ||D^k f||^{1/k}, k = 1..k_max
    double d_f = 0.0;                // extrapolated limit
    double sigma_f = 0.0;            // exact spectral bound for comparison
};

// Root sequence computed in the log domain (the norms themselves overflow
// long before k_max = 500; the roots stay O(sigma_f)).  d_f comes from a
// least-squares fit a_k ~ d + b/k over the last quartile of the sequence.
SpectralTypeReport spectral_type(const SpectralState& f, int k_max);

struct KolmogorovCheck {
    double lhs = 0.0;       // ||D^k f||^n
    double rhs = 0.0;       // C_{k,n} ||D^n f||^k ||f||^{n-k}
    double constant = 0.0;  // C_{k,n} = K_{n-k}^n / K_n^{n-k}
    bool holds = false;
};

KolmogorovCheck kolmogorov_check(const SpectralState& f, int k, int n);

// Grid supremum over tau in [-s, s] of ||(I - e^{tau D})^m f|| — a lower
// bound to the true supremum, tightening with grid_points.
double modulus_of_continuity(const SpectralState& f, int m, double s,
                             int grid_points = 257);

// Exact best-approximation error from the sigma-bandlimited subspace:
// the l2 mass of coefficients with |lambda_j| > sigma.
double best_approximation_error(const SpectralState& f, double sigma);

struct JacksonRow {
    double sigma = 0.0;
    double best_error = 0.0;      // inf_{g bandlimited to sigma} ||f - g||
    double scaled_modulus = 0.0;  // sigma^{-k} * modulus_{m-k}(D^k f, 1/sigma)
    double ratio = 0.0;
};

std::vector<JacksonRow> jackson_ratio(const SpectralState& f, int k, int m,
                                      std::span<const double> sigmas,
                                      int grid_points = 257);

}  // namespace gsamp
