#include "gsamp/schrodinger.hpp"

#include <cmath>
#include <stdexcept>

#include "gsamp/regular_sampling.hpp"

namespace gsamp {

CauchyProblem::CauchyProblem(SpectralState f, double sigma_band)
    : initial(std::move(f)), band(sigma_band) {
    if (!(band > 0.0)) throw std::domain_error("CauchyProblem: band must be > 0");
    if (!bernstein_membership(initial, band))
        throw std::domain_error("CauchyProblem: initial state exceeds the stated band");
}

SpectralState solve(const CauchyProblem& p, double t) { return evolve(p.initial, t); }

namespace {

InverseReport compare(const SpectralState& truth, const SpectralState& recovered) {
    InverseReport rep;
    rep.true_coeffs = truth.coeffs;
    rep.recovered_coeffs = recovered.coeffs;
    rep.per_coeff_error.resize(truth.coeffs.size());
    rep.band_ok = truth.spectral_bound() < kPi;
    for (std::size_t j = 0; j < truth.coeffs.size(); ++j) {
        const double diff = std::abs(recovered.coeffs[j] - truth.coeffs[j]);
        const double scale = std::abs(truth.coeffs[j]);
        rep.per_coeff_error[j] = scale > 0.0 ? diff / scale : diff;
        rep.max_error = std::max(rep.max_error, rep.per_coeff_error[j]);
    }
    return rep;
}

}  // namespace

SpectralState recover_initial(const CanonicalProduct& cp,
                              const std::vector<SpectralState>& solution_samples) {
    return measurement_recovery_state(cp, solution_samples);
}

InverseReport invert_via_l2(const CauchyProblem& p, const CanonicalProduct& cp) {
    const long N = cp.half_width();
    std::vector<SpectralState> samples;
    samples.reserve(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n) samples.push_back(solve(p, cp.nodes().at(n)));
    return compare(p.initial, recover_initial(cp, samples));
}

InverseReport invert_via_l1(const CauchyProblem& p, double sigma_grid, double tau, long K) {
    // Regular-grid recovery applied to the solution trajectory: samples
    // u(k pi/sigma + tau) plus the derivative sample e^{tau D} D f.
    TrajectorySamples<SpectralState> s{RegularGrid(sigma_grid, K), tau, {},
                                       evolve(apply_generator(p.initial, 1), tau)};
    s.states.reserve(static_cast<std::size_t>(2 * K + 1));
    for (long k = -K; k <= K; ++k) s.states.push_back(solve(p, s.grid.node(k) + tau));
    return compare(p.initial, recover_state(s).value);
}

InverseReport invert_via_l3(const CauchyProblem& p, const CanonicalProduct& cp, double tau) {
    const long N = cp.half_width();
    const SpectralState anchor = solve(p, tau);
    std::vector<SpectralState> shifted;
    shifted.reserve(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n) shifted.push_back(solve(p, cp.nodes().at(n) + tau));

    // Per-coefficient anchored recovery; the coefficient projections are the
    // complete functional battery of the finite model.
    SpectralState recovered = zero_like(p.initial);
    std::vector<cplx> samples(static_cast<std::size_t>(2 * N + 1));
    for (std::size_t j = 0; j < recovered.coeffs.size(); ++j) {
        for (long n = -N; n <= N; ++n)
            samples[static_cast<std::size_t>(n + N)] =
                shifted[static_cast<std::size_t>(n + N)].coeffs[j];
        recovered.coeffs[j] = anchored_recovery(cp, samples, anchor.coeffs[j], tau);
    }
    return compare(p.initial, recovered);
}

}  // namespace gsamp
