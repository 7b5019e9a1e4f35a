// schrodinger.hpp — abstract Schrodinger evolution in the spectral backend
// and recovery of the bandlimited initial state from time samples of the
// solution at perturbed nodes.
//
// The problem: du/dt = iDu, u(0) = f, with f supported inside [-sigma, sigma]
// (sigma < pi for the inverse step).  In the unified backend convention the
// propagator is exactly evolve(f, t).
//
// Inverse step, per functional g*:  <f, g*> = -sum_n <u(t_n), g*> G(0)/(G'(t_n) t_n).
// With the complete battery of coefficient projections this recovers every
// coefficient, i.e. the full state.  Two alternative recovery routes share
// the same report: the regular-grid recovery formula (samples u(k pi/sigma + tau)
// plus one derivative sample) and the anchored irregular recovery (samples
// u(t_n + tau) plus the anchor u(tau)).

#pragma once

#include <vector>

#include "gsamp/group_models.hpp"
#include "gsamp/irregular_sampling.hpp"

namespace gsamp {

struct CauchyProblem {
    SpectralState initial;
    double band = kPi;  // sigma with the initial state supported inside

    CauchyProblem(SpectralState f, double sigma_band);
};

SpectralState solve(const CauchyProblem& p, double t);

struct InverseReport {
    std::vector<cplx> true_coeffs;
    std::vector<cplx> recovered_coeffs;
    std::vector<double> per_coeff_error;  // relative where true coeff != 0, absolute otherwise
    double max_error = 0.0;
    bool band_ok = true;  // spectral bound of f strictly below pi
};

// Sample-driven recovery: assemble the initial state from solution samples
// u(t_n) (index n + N) using the zero-point series per coefficient.
SpectralState recover_initial(const CanonicalProduct& cp,
                              const std::vector<SpectralState>& solution_samples);

// Round-trip drivers: solve, sample, recover, compare.
InverseReport invert_via_l2(const CauchyProblem& p, const CanonicalProduct& cp);
InverseReport invert_via_l1(const CauchyProblem& p, double sigma_grid, double tau, long K);
InverseReport invert_via_l3(const CauchyProblem& p, const CanonicalProduct& cp, double tau);

}  // namespace gsamp
