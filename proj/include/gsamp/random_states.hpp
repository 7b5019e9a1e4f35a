// random_states.hpp — seeded generators for randomized batteries (test
// harnesses and the randomized diagnostic drivers).

#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "gsamp/group_models.hpp"

namespace gsamp {

// Random state with n_points strictly increasing eigen-frequencies drawn from
// [-sigma, sigma] and complex coefficients uniform in the unit square.
inline SpectralState random_spectral_state(std::mt19937_64& rng, std::size_t n_points,
                                           double sigma) {
    std::uniform_real_distribution<double> u(-sigma, sigma);
    std::vector<double> lambdas;
    lambdas.reserve(n_points);
    while (lambdas.size() < n_points) {
        const double l = u(rng);
        bool clash = false;
        for (double prev : lambdas)
            if (std::abs(prev - l) < 1e-6 * sigma) clash = true;
        if (!clash) lambdas.push_back(l);
    }
    std::sort(lambdas.begin(), lambdas.end());
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    std::vector<cplx> coeffs;
    coeffs.reserve(n_points);
    for (std::size_t j = 0; j < n_points; ++j) coeffs.emplace_back(c(rng), c(rng));
    return SpectralState(Spectrum(std::move(lambdas)), std::move(coeffs));
}

// Gap-conditioned state: one frequency at +-sigma_max, the rest inside
// [-gap*sigma_max, gap*sigma_max]; makes root-sequence convergence geometric.
inline SpectralState random_gapped_state(std::mt19937_64& rng, std::size_t n_points,
                                         double sigma_max, double gap) {
    std::uniform_real_distribution<double> u(-gap * sigma_max, gap * sigma_max);
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    std::vector<double> lambdas;
    while (lambdas.size() + 1 < n_points) {
        const double l = u(rng);
        bool clash = std::abs(l - sigma_max) < 1e-6;
        for (double prev : lambdas)
            if (std::abs(prev - l) < 1e-6) clash = true;
        if (!clash) lambdas.push_back(l);
    }
    lambdas.push_back(sigma_max);
    std::sort(lambdas.begin(), lambdas.end());
    std::vector<cplx> coeffs;
    for (double l : lambdas) {
        cplx v{c(rng), c(rng)};
        // the extreme frequency must carry real mass, or the gap is fictional
        while (l == sigma_max && std::abs(v) < 0.1) v = {c(rng), c(rng)};
        coeffs.push_back(v);
    }
    return SpectralState(Spectrum(std::move(lambdas)), std::move(coeffs));
}

// Random exponential sum with distinct frequencies bounded by sigma.
inline ExpSumSignal random_exp_sum(std::mt19937_64& rng, std::size_t n_points, double sigma,
                                   double window = 8.0) {
    std::uniform_real_distribution<double> u(-sigma, sigma);
    std::vector<double> freqs;
    while (freqs.size() < n_points) {
        const double w = u(rng);
        bool clash = false;
        for (double prev : freqs)
            if (std::abs(prev - w) < 1e-6 * sigma) clash = true;
        if (!clash) freqs.push_back(w);
    }
    std::uniform_real_distribution<double> c(-1.0, 1.0);
    std::vector<cplx> coeffs;
    for (std::size_t j = 0; j < n_points; ++j) coeffs.emplace_back(c(rng), c(rng));
    return ExpSumSignal(std::move(freqs), std::move(coeffs), window);
}

}  // namespace gsamp
