#include "gsamp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsamp/coefficients.hpp"
#include "gsamp/summation.hpp"

namespace gsamp {

double generator_norm(const SpectralState& f, int k) {
    if (k < 0) throw std::domain_error("generator_norm: k must be >= 0");
    KahanSum s;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        s.add(std::pow(f.spectrum[j], 2.0 * k) * std::norm(f.coeffs[j]));
    return std::sqrt(s.value());
}

SpectralTypeReport spectral_type(const SpectralState& f, int k_max) {
    if (k_max < 2) throw std::domain_error("spectral_type: k_max must be >= 2");
    const double bound = f.spectral_bound();
    if (bound == 0.0 && f.norm() == 0.0)
        throw std::domain_error("spectral_type: zero vector has no spectral type");

    SpectralTypeReport rep;
    rep.sigma_f = bound;
    rep.norm_roots.resize(static_cast<std::size_t>(k_max));

    if (bound == 0.0) {
        // Supported only at lambda = 0: D f = 0 and every root is 0.
        std::fill(rep.norm_roots.begin(), rep.norm_roots.end(), 0.0);
        rep.d_f = 0.0;
        return rep;
    }

    // ||D^k f|| = bound^k * r_k with r_k = sqrt(sum (|l_j|/bound)^{2k} |c_j|^2),
    // so the root is bound * exp(log(r_k)/k); r_k stays in (0, ||f||].
    for (int k = 1; k <= k_max; ++k) {
        KahanSum s;
        for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
            const double ratio = std::abs(f.spectrum[j]) / bound;
            if (ratio == 0.0) continue;
            s.add(std::pow(ratio, 2.0 * k) * std::norm(f.coeffs[j]));
        }
        const double r = 0.5 * std::log(s.value());
        rep.norm_roots[static_cast<std::size_t>(k - 1)] = bound * std::exp(r / k);
    }

    // Least-squares fit a_k = d + b/k over the last quartile; the intercept
    // absorbs the |c|^{1/k} = 1 + log|c|/k + ... correction.
    const int k_lo = std::max(2, (3 * k_max) / 4);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int k = k_lo; k <= k_max; ++k) {
        const double x = 1.0 / k;
        const double y = rep.norm_roots[static_cast<std::size_t>(k - 1)];
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double denom = count * sxx - sx * sx;
    rep.d_f = denom != 0.0 ? (sy * sxx - sx * sxy) / denom
                           : rep.norm_roots.back();
    return rep;
}

KolmogorovCheck kolmogorov_check(const SpectralState& f, int k, int n) {
    if (k < 0 || n < k) throw std::domain_error("kolmogorov_check: need 0 <= k <= n");
    if (f.norm() == 0.0) throw std::domain_error("kolmogorov_check: zero vector");
    KolmogorovCheck out;
    const double kk = favard(n - k).value;
    const double kn = favard(n).value;
    out.constant = std::pow(kk, n) / std::pow(kn, n - k);
    out.lhs = std::pow(generator_norm(f, k), n);
    out.rhs = out.constant * std::pow(generator_norm(f, n), k) *
              std::pow(f.norm(), n - k);
    out.holds = out.lhs <= out.rhs * (1.0 + 1e-12);
    return out;
}

double modulus_of_continuity(const SpectralState& f, int m, double s, int grid_points) {
    if (m < 1) throw std::domain_error("modulus_of_continuity: m must be >= 1");
    if (s < 0.0) throw std::domain_error("modulus_of_continuity: s must be >= 0");
    if (grid_points < 2) throw std::domain_error("modulus_of_continuity: need >= 2 grid points");
    if (s == 0.0) return 0.0;
    double sup = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double tau = -s + 2.0 * s * i / (grid_points - 1);
        // ||(I - e^{tau D})^m f||: coefficient-wise |1 - e^{i lambda tau}|^m.
        KahanSum acc;
        for (std::size_t j = 0; j < f.coeffs.size(); ++j) {
            const double gain = 2.0 * std::abs(std::sin(0.5 * f.spectrum[j] * tau));
            acc.add(std::pow(gain, 2.0 * m) * std::norm(f.coeffs[j]));
        }
        sup = std::max(sup, std::sqrt(acc.value()));
    }
    return sup;
}

double best_approximation_error(const SpectralState& f, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("best_approximation_error: sigma must be > 0");
    KahanSum s;
    for (std::size_t j = 0; j < f.coeffs.size(); ++j)
        if (std::abs(f.spectrum[j]) > sigma) s.add(std::norm(f.coeffs[j]));
    return std::sqrt(s.value());
}

std::vector<JacksonRow> jackson_ratio(const SpectralState& f, int k, int m,
                                      std::span<const double> sigmas, int grid_points) {
    if (k < 0 || m <= k) throw std::domain_error("jackson_ratio: need 0 <= k < m");
    const SpectralState dkf = apply_generator(f, k);
    std::vector<JacksonRow> rows;
    rows.reserve(sigmas.size());
    for (double sigma : sigmas) {
        JacksonRow row;
        row.sigma = sigma;
        row.best_error = best_approximation_error(f, sigma);
        const double omega = modulus_of_continuity(dkf, m - k, 1.0 / sigma, grid_points);
        row.scaled_modulus = std::pow(sigma, -k) * omega;
        if (row.scaled_modulus == 0.0) {
            if (row.best_error > 0.0)
                throw std::runtime_error("jackson_ratio: zero modulus with nonzero error");
            row.ratio = 0.0;
        } else {
            row.ratio = row.best_error / row.scaled_modulus;
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gsamp
