// irregular_sampling.hpp — sampling on perturbed nodes t_n = n + delta_n with
// sup|delta_n| < 1/4, via the truncated canonical product
//
//   G(z) = (z - t_0) prod_{n=1}^{N} (1 - z/t_n)(1 - z/t_{-n})
//
// and Lagrange-type series with kernels G(z) / (G'(t_n)(z - t_n)).
//
// The same truncated product is used for G and every G'(t_n), so the dominant
// truncation factors cancel inside each kernel.  Factors are accumulated as
// (mantissa, base-2 exponent) pairs: plain products under/overflow once N is
// in the thousands, while this representation stays exact at the nodes
// (G(t_m) = 0, G(0) = -t_0 bit-for-bit) and turns kernel ratios into one
// scaled division.
//
// Implemented series (F denotes a scalar trajectory <e^{tD}f, g*>):
//   plain interpolation:  F(z)  = sum_n F(t_n) G(z)/(G'(t_n)(z - t_n))
//   anchored trajectory:  F(t)  = F(0) + t sum_n (F(t_n)-F(0))/t_n
//                                  * G(t)/(G'(t_n)(t - t_n)),    t_0 != 0
//   anchored recovery:    F(0)  = A + tau sum_n (S_n - A)/t_n
//                                  * G(-tau)/(G'(t_n)(tau + t_n)),
//                         A = F(tau), S_n = F(t_n + tau),        t_0 != 0
//   zero-point recovery:  F(0)  = -sum_n F(t_n) G(0)/(G'(t_n) t_n),  t_0 != 0
// and the vector form of the plain interpolation for states with spectral
// support inside [-(pi - delta), pi - delta].

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gsamp/coefficients.hpp"
#include "gsamp/group_models.hpp"
#include "gsamp/summation.hpp"

namespace gsamp {

// Value stored as mantissa * 2^exp2; exact under multiplication, immune to
// under/overflow of long products.
struct ScaledValue {
    cplx mantissa{1.0, 0.0};
    long exp2 = 0;

    bool is_zero() const { return mantissa == cplx{0.0, 0.0}; }
    void mul(cplx factor);
    void mul(double factor);
    cplx value() const;      // may round to 0 / inf outside double range
    double log_abs() const;  // natural log of |value|; -inf at zero
};

// Ratio a/b as a plain complex number (b must be nonzero).
cplx scaled_ratio(const ScaledValue& a, const ScaledValue& b);

class SamplingNodes {
public:
    // t_n = n, exact integers (deviation 0; note t_0 = 0).
    static SamplingNodes integers(long N);
    // t_n = n + d sin(n), |d| < 1/4.
    static SamplingNodes sinusoidal(long N, double d);
    // t_n = n + uniform(-d, d), seeded, |d| < 1/4.
    static SamplingNodes uniform_random(long N, double d, std::uint64_t seed);
    // Explicit list t_{-N}..t_N; validated.
    static SamplingNodes from_values(std::vector<double> values);

    long half_width() const { return N_; }
    double at(long n) const { return t_[static_cast<std::size_t>(n + N_)]; }
    double deviation() const { return deviation_; }
    // Index of the node bitwise equal to x, or N_+1 sentinel if none.
    long find_exact(double x) const;

private:
    explicit SamplingNodes(std::vector<double> t);
    long N_ = 0;
    std::vector<double> t_;
    double deviation_ = 0.0;
};

// Parses "zero" | "sin:d" | "rand:d:seed" into a node set.
SamplingNodes make_nodes(long N, const std::string& rule);

class CanonicalProduct {
public:
    explicit CanonicalProduct(SamplingNodes nodes);

    const SamplingNodes& nodes() const { return nodes_; }
    long half_width() const { return nodes_.half_width(); }

    ScaledValue eval(double x) const;
    ScaledValue eval(cplx z) const;
    // Analytic derivative at node m: the m-th factor's derivative times the
    // product of all remaining factors at t_m.
    const ScaledValue& derivative_at_node(long m) const;

    double value(double x) const { return eval(x).value().real(); }

    // Lagrange kernel G(z) / (G'(t_n)(z - t_n)) given a precomputed G(z).
    cplx kernel(const ScaledValue& g_at_z, cplx z, long n) const;

private:
    SamplingNodes nodes_;
    std::vector<ScaledValue> derivatives_;  // index n + N
};

// --- scalar series ----------------------------------------------------------
// Sample spans are indexed n + N for n = -N..N.

cplx lagrange_interpolate(const CanonicalProduct& cp, std::span<const cplx> node_samples,
                          cplx z);

cplx anchored_trajectory(const CanonicalProduct& cp, std::span<const cplx> node_samples,
                         cplx anchor, double t);

cplx anchored_recovery(const CanonicalProduct& cp, std::span<const cplx> shifted_samples,
                       cplx anchor_at_tau, double tau);

cplx measurement_recovery(const CanonicalProduct& cp, std::span<const cplx> node_samples);

// --- vector series ----------------------------------------------------------

template <class State>
struct IrregularRecon {
    State value;
    bool bernstein_ok = true;  // spectral bound < pi - delta_margin
};

// Node samples e^{t_n D} f for the vector series, built once and reused
// across evaluation points.
template <class State>
std::vector<State> node_samples(const State& f, const SamplingNodes& nodes) {
    const long N = nodes.half_width();
    std::vector<State> out;
    out.reserve(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n) out.push_back(evolve(f, nodes.at(n)));
    return out;
}

// Interpolates the trajectory at z from its node samples; valid for states
// with spectral bound strictly inside pi (delta_margin > 0 is the gap).
template <class State>
IrregularRecon<State> irregular_recon_vector(const std::vector<State>& samples,
                                             const CanonicalProduct& cp, cplx z,
                                             double delta_margin = 0.0) {
    const long N = cp.half_width();
    if (samples.size() != static_cast<std::size_t>(2 * N + 1))
        throw std::invalid_argument("irregular_recon_vector: need 2N+1 node samples");
    // group action preserves spectral support, so any sample carries the bound
    IrregularRecon<State> out{zero_like(samples.front()),
                              delta_margin >= 0.0 &&
                                  samples.front().spectral_bound() <= kPi - delta_margin};
    if (z.imag() == 0.0) {
        const long hit = cp.nodes().find_exact(z.real());
        if (hit <= N) {
            out.value = samples[static_cast<std::size_t>(hit + N)];
            return out;
        }
    }
    const ScaledValue gz = cp.eval(z);
    StateAccumulator<State> acc(zero_like(samples.front()));
    acc.add_scaled(samples[static_cast<std::size_t>(N)], cp.kernel(gz, z, 0));
    for (long a = 1; a <= N; ++a) {
        acc.add_scaled(samples[static_cast<std::size_t>(a + N)], cp.kernel(gz, z, a));
        acc.add_scaled(samples[static_cast<std::size_t>(-a + N)], cp.kernel(gz, z, -a));
    }
    out.value = std::move(acc).take();
    return out;
}

template <class State>
IrregularRecon<State> irregular_recon_vector(const State& f, const CanonicalProduct& cp,
                                             cplx z, double delta_margin = 0.0) {
    IrregularRecon<State> out =
        irregular_recon_vector(node_samples(f, cp.nodes()), cp, z, delta_margin);
    out.bernstein_ok = f.spectral_bound() <= kPi - delta_margin && delta_margin >= 0.0;
    return out;
}

// Vector form of the zero-point recovery: -sum_n u_n G(0)/(G'(t_n) t_n)
// applied to state samples u_n = e^{t_n D} f.
template <class State>
State measurement_recovery_state(const CanonicalProduct& cp,
                                 const std::vector<State>& node_samples) {
    const long N = cp.half_width();
    if (node_samples.size() != static_cast<std::size_t>(2 * N + 1))
        throw std::invalid_argument("measurement_recovery_state: need 2N+1 samples");
    if (cp.nodes().at(0) == 0.0)
        throw std::domain_error("measurement_recovery_state: t_0 must be nonzero");
    const ScaledValue g0 = cp.eval(0.0);
    auto weight = [&](long n) {
        return -scaled_ratio(g0, cp.derivative_at_node(n)) / cp.nodes().at(n);
    };
    StateAccumulator<State> acc(zero_like(node_samples.front()));
    acc.add_scaled(node_samples[static_cast<std::size_t>(N)], weight(0));
    for (long a = 1; a <= N; ++a) {
        acc.add_scaled(node_samples[static_cast<std::size_t>(a + N)], weight(a));
        acc.add_scaled(node_samples[static_cast<std::size_t>(-a + N)], weight(-a));
    }
    return std::move(acc).take();
}

}  // namespace gsamp
