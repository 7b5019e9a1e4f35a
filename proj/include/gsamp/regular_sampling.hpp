// regular_sampling.hpp — equally spaced sampling formulas for trajectories
// e^{tD} f of a bandlimited state f (spectral support inside [-sigma, sigma]).
//
// The scalar mechanism behind all of them: for every bounded functional g*,
// F(t) = <e^{tD}f, g*> is bandlimited of type sigma, and the divided
// difference F1(t) = (F(t) - F(0))/t (with F1(0) = <Df, g*>) admits the
// cardinal series over the grid k pi / sigma.  The vector formulas are the
// same series read coefficient-wise.
//
// Implemented formulas, with grid nodes  k pi / sigma  and u = sigma t / pi:
//
//   trajectory:   e^{tD}f = f + t Df sinc(u) + t sum_{k!=0} Q_k sinc(u - k),
//                 Q_k = (e^{k pi/sigma D}f - f) / (k pi/sigma)
//   recovery:     f = S_0 - t S' sinc(u) - t sum_{k!=0} (S_k - S_0)/(k pi/sigma)
//                     * sinc(u + k),
//                 from samples S_k = e^{(k pi/sigma + t) D}f and S' = e^{tD}Df
//   Valiron:      e^{zD}f = z sinc(w) Df + sinc(w) f
//                     + sum_{k!=0} (sigma z / k pi) sinc(w - k) e^{k pi/sigma D}f,
//                 w = sigma z / pi, valid for complex z
//   derivative:   e^{tD}D^n f = (sigma/pi)^{n-1} sum_k Q_k
//                     * [ n sinc^{(n-1)}(u - k) + u sinc^{(n)}(u - k) ],
//                 Q_0 = Df; at t = 0 this is the bounded differentiation
//                 operator of order n.

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gsamp/coefficients.hpp"
#include "gsamp/group_models.hpp"
#include "gsamp/summation.hpp"

namespace gsamp {

struct RegularGrid {
    double sigma = kPi;
    long K = 1000;

    RegularGrid(double sigma_, long K_) : sigma(sigma_), K(K_) {
        if (!(sigma > 0.0)) throw std::domain_error("RegularGrid: sigma must be > 0");
        if (K < 1) throw std::domain_error("RegularGrid: K must be >= 1");
    }
    double node(long k) const { return static_cast<double>(k) * kPi / sigma; }
};

// Divided-difference samples Q_k over the regular grid, plus Q_0 = Df.
// Shared by the trajectory and derivative formulas; building them once lets
// many (t, n) evaluations reuse the same group samples.
template <class State>
struct DiffQuotients {
    RegularGrid grid;
    std::vector<State> values;  // index k + K; slot K holds Df

    const State& at(long k) const { return values[static_cast<std::size_t>(k + grid.K)]; }
};

template <class State>
DiffQuotients<State> make_diff_quotients(const State& f, double sigma, long K) {
    DiffQuotients<State> dq{RegularGrid(sigma, K), {}};
    dq.values.resize(static_cast<std::size_t>(2 * K + 1), zero_like(f));
    dq.values[static_cast<std::size_t>(K)] = apply_generator(f, 1);
    for (long k = -K; k <= K; ++k) {
        if (k == 0) continue;
        const double node = dq.grid.node(k);
        dq.values[static_cast<std::size_t>(k + K)] = (1.0 / node) * (evolve(f, node) - f);
    }
    return dq;
}

template <class State>
struct ReconResult {
    State value;
    bool bernstein_ok = true;
    double tail_estimate = 0.0;  // rigorous bound on the dropped series mass
};

namespace detail {

// sum_{k>K} 1/(k(k-a)) <= (1/a) log(K/(K-a)) for 0 <= a < K (integral bound;
// the a -> 0 limit is 1/K).
inline double harmonic_tail(double a, double K) {
    if (a <= 0.0) return 1.0 / K;
    if (a >= K) return std::numeric_limits<double>::infinity();
    return std::log(K / (K - a)) / a;
}

}  // namespace detail

// Series tail of the trajectory formula: |Q_k| <= 2||f||/|node_k| and
// |sinc(y)| <= 1/(pi |y|), summed over |k| > K.
template <class State>
double trajectory_tail_bound(const State& f, double sigma, double t, long K) {
    const double a = std::abs(sigma * t / kPi);
    const double upper = norm_upper_bound(f);
    const double Kd = static_cast<double>(K);
    if (a >= Kd) return std::numeric_limits<double>::infinity();
    const double c = 2.0 * std::abs(t) * upper * sigma / (kPi * kPi);
    return c * (detail::harmonic_tail(a, Kd) + detail::harmonic_tail(0.0, Kd));
}

template <class State>
ReconResult<State> recon_trajectory(const State& f, const DiffQuotients<State>& dq,
                                    double t, long use_K = -1) {
    const long K = use_K < 0 ? dq.grid.K : use_K;
    if (K > dq.grid.K) throw std::invalid_argument("recon_trajectory: K exceeds sample table");
    const double u = dq.grid.sigma * t / kPi;
    StateAccumulator<State> acc(zero_like(f));
    acc.add_scaled(f, 1.0);
    acc.add_scaled(dq.at(0), t * sinc(u));
    for (long a = 1; a <= K; ++a) {
        acc.add_scaled(dq.at(a), t * sinc(u - static_cast<double>(a)));
        acc.add_scaled(dq.at(-a), t * sinc(u + static_cast<double>(a)));
    }
    return {std::move(acc).take(), bernstein_membership(f, dq.grid.sigma),
            trajectory_tail_bound(f, dq.grid.sigma, t, K)};
}

template <class State>
ReconResult<State> recon_trajectory(const State& f, double sigma, double t, long K) {
    return recon_trajectory(f, make_diff_quotients(f, sigma, K), t);
}

// Trajectory samples shifted by t, as consumed by the recovery formula.
// states[k + K] = e^{(k pi/sigma + t) D} f;  derivative = e^{tD} D f.
template <class State>
struct TrajectorySamples {
    RegularGrid grid;
    double t = 0.0;
    std::vector<State> states;
    State derivative;

    const State& at(long k) const { return states[static_cast<std::size_t>(k + grid.K)]; }
};

template <class State>
TrajectorySamples<State> sample_trajectory(const State& f, double sigma, double t, long K) {
    TrajectorySamples<State> s{RegularGrid(sigma, K), t, {}, evolve(apply_generator(f, 1), t)};
    s.states.reserve(static_cast<std::size_t>(2 * K + 1));
    for (long k = -K; k <= K; ++k)
        s.states.push_back(evolve(f, s.grid.node(k) + t));
    return s;
}

// Recovers f from the shifted samples alone; for t != 0 the right-hand side
// never references f itself.
template <class State>
ReconResult<State> recover_state(const TrajectorySamples<State>& s, long use_K = -1) {
    const long K = use_K < 0 ? s.grid.K : use_K;
    if (K > s.grid.K) throw std::invalid_argument("recover_state: K exceeds sample table");
    const double t = s.t;
    const double u = s.grid.sigma * t / kPi;
    StateAccumulator<State> acc(zero_like(s.derivative));
    acc.add_scaled(s.at(0), 1.0);
    acc.add_scaled(s.derivative, -t * sinc(u));
    for (long a = 1; a <= K; ++a) {
        for (long k : {a, -a}) {
            const double node = s.grid.node(k);
            const State quotient = (1.0 / node) * (s.at(k) - s.at(0));
            acc.add_scaled(quotient, -t * sinc(u + static_cast<double>(k)));
        }
    }
    ReconResult<State> out{std::move(acc).take(), true, 0.0};
    out.tail_estimate = trajectory_tail_bound(s.at(0), s.grid.sigma, t, K);
    return out;
}

template <class State>
ReconResult<State> valiron_tschakaloff(const State& f, double sigma, cplx z, long K) {
    const RegularGrid grid(sigma, K);
    const cplx w = sigma * z / kPi;
    StateAccumulator<State> acc(zero_like(f));
    acc.add_scaled(apply_generator(f, 1), z * sinc(w));
    acc.add_scaled(f, sinc(w));
    for (long a = 1; a <= K; ++a) {
        for (long k : {a, -a}) {
            const cplx weight = sigma * z / (static_cast<double>(k) * kPi) *
                                sinc(w - static_cast<double>(k));
            acc.add_scaled(evolve(f, grid.node(k)), weight);
        }
    }
    return {std::move(acc).take(), bernstein_membership(f, sigma), 0.0};
}

// e^{tD} D^n f from divided-difference samples.
template <class State>
ReconResult<State> derivative_sampling(const State& f, const DiffQuotients<State>& dq,
                                       int n, double t, long use_K = -1) {
    if (n < 1) throw std::domain_error("derivative_sampling: n must be >= 1");
    const long K = use_K < 0 ? dq.grid.K : use_K;
    if (K > dq.grid.K) throw std::invalid_argument("derivative_sampling: K exceeds sample table");
    const double u = dq.grid.sigma * t / kPi;
    const double prefactor = std::pow(dq.grid.sigma / kPi, n - 1);
    auto weight = [&](long k) {
        const double x = u - static_cast<double>(k);
        return prefactor * (n * sinc_derivative(n - 1, x) + u * sinc_derivative(n, x));
    };
    StateAccumulator<State> acc(zero_like(f));
    acc.add_scaled(dq.at(0), weight(0));
    for (long a = 1; a <= K; ++a) {
        acc.add_scaled(dq.at(a), weight(a));
        acc.add_scaled(dq.at(-a), weight(-a));
    }
    return {std::move(acc).take(), bernstein_membership(f, dq.grid.sigma), 0.0};
}

template <class State>
ReconResult<State> derivative_sampling(const State& f, double sigma, int n, double t, long K) {
    return derivative_sampling(f, make_diff_quotients(f, sigma, K), n, t);
}

// Bounded differentiation operator of order n: the derivative formula at
// t = 0, same arithmetic path.
template <class State>
ReconResult<State> q_operator(const State& f, const DiffQuotients<State>& dq, int n,
                              long use_K = -1) {
    return derivative_sampling(f, dq, n, 0.0, use_K);
}

template <class State>
ReconResult<State> q_operator(const State& f, double sigma, int n, long K) {
    return derivative_sampling(f, sigma, n, 0.0, K);
}

}  // namespace gsamp
