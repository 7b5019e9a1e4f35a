// boas.hpp — truncated differentiation operators built from trajectory
// samples.  For a state f with spectral support inside [-sigma, sigma],
//
//   order r = 2m-1:  (sigma/pi)^{2m-1} sum_k (-1)^{k+1} A_{m,k} e^{(k-1/2)(pi/sigma) D} f
//   order r = 2m:    (sigma/pi)^{2m}   sum_k (-1)^{k+1} B_{m,k} e^{k (pi/sigma) D} f
//
// reproduces D^r f.  The operators are bounded by sigma^r on the whole space,
// so the truncation error is certified by the dropped coefficient mass:
//   tail = ||f|| (sigma/pi)^r sum_{|k|>K} |coeff|.

#pragma once

#include <cmath>
#include <stdexcept>

#include "gsamp/coefficients.hpp"
#include "gsamp/group_models.hpp"
#include "gsamp/summation.hpp"

namespace gsamp {

struct BoasConfig {
    double sigma = kPi;  // bandwidth, radians per unit
    int order = 1;       // differentiation order r >= 1
    long terms = 1000;   // truncation half-width K

    void validate() const {
        if (!(sigma > 0.0)) throw std::domain_error("BoasConfig: sigma must be > 0");
        if (order < 1) throw std::domain_error("BoasConfig: order must be >= 1");
        if (terms < 1) throw std::domain_error("BoasConfig: terms must be >= 1");
    }
};

template <class State>
struct BoasResult {
    State value;              // truncated approximation of D^r f
    double tail_bound = 0.0;  // certified truncation bound
    bool bernstein_ok = true; // membership flag; the identity needs it
};

template <class State>
BoasResult<State> boas_apply(const State& f, const BoasConfig& cfg) {
    cfg.validate();
    const int r = cfg.order;
    const bool odd = (r % 2 == 1);
    const int m = odd ? (r + 1) / 2 : r / 2;
    const CoefficientTable table = build_coefficient_table(m, cfg.terms, odd);

    const double scale = std::pow(cfg.sigma / kPi, r);
    const double step = kPi / cfg.sigma;
    auto node = [&](long k) { return odd ? (static_cast<double>(k) - 0.5) * step
                                         : static_cast<double>(k) * step; };
    auto weight = [&](long k) {
        const double sign = (k % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
        return scale * sign * table.at(k);
    };

    StateAccumulator<State> acc(zero_like(f));
    acc.add_scaled(evolve(f, node(0)), weight(0));
    for (long a = 1; a <= cfg.terms; ++a) {
        acc.add_scaled(evolve(f, node(a)), weight(a));
        acc.add_scaled(evolve(f, node(-a)), weight(-a));
    }

    BoasResult<State> out{std::move(acc).take(), 0.0, bernstein_membership(f, cfg.sigma)};
    out.tail_bound = norm_upper_bound(f) * scale * table.dropped_abs();
    return out;
}

template <class State>
struct SigmaInvarianceReport {
    BoasResult<State> first, second;
    double error_first = 0.0;   // || boas(sigma1) - D^r f ||
    double error_second = 0.0;
    bool both_within_tail = false;
    bool membership_both = false;
};

// The differentiation identity holds for every bandwidth >= the spectral
// bound of f; this compares two choices against the exact D^r f.
template <class State>
SigmaInvarianceReport<State> boas_sigma_invariance(const State& f, double sigma1,
                                                   double sigma2, int order, long terms) {
    SigmaInvarianceReport<State> rep;
    rep.first = boas_apply(f, BoasConfig{sigma1, order, terms});
    rep.second = boas_apply(f, BoasConfig{sigma2, order, terms});
    const State exact = apply_generator(f, order);
    rep.error_first = (rep.first.value - exact).norm();
    rep.error_second = (rep.second.value - exact).norm();
    rep.membership_both = rep.first.bernstein_ok && rep.second.bernstein_ok;
    rep.both_within_tail = rep.membership_both &&
                           rep.error_first <= rep.first.tail_bound &&
                           rep.error_second <= rep.second.tail_bound;
    return rep;
}

}  // namespace gsamp
