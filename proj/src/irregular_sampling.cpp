#include "gsamp/irregular_sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gsamp {

namespace {

constexpr double kDeviationCap = 0.25;
// Renormalize once the accumulated exponent leaves this window.
constexpr int kExpWindow = 256;

}  // namespace

void ScaledValue::mul(cplx factor) {
    mantissa *= factor;
    if (is_zero()) {
        exp2 = 0;
        return;
    }
    const double m = std::max(std::abs(mantissa.real()), std::abs(mantissa.imag()));
    const int e = std::ilogb(m);
    if (e > kExpWindow || e < -kExpWindow) {
        mantissa = {std::ldexp(mantissa.real(), -e), std::ldexp(mantissa.imag(), -e)};
        exp2 += e;
    }
}

void ScaledValue::mul(double factor) { mul(cplx{factor, 0.0}); }

cplx ScaledValue::value() const {
    if (is_zero()) return {0.0, 0.0};
    return {std::ldexp(mantissa.real(), static_cast<int>(std::clamp(exp2, -4000L, 4000L))),
            std::ldexp(mantissa.imag(), static_cast<int>(std::clamp(exp2, -4000L, 4000L)))};
}

double ScaledValue::log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::abs(mantissa)) + static_cast<double>(exp2) * std::log(2.0);
}

cplx scaled_ratio(const ScaledValue& a, const ScaledValue& b) {
    if (b.is_zero()) throw std::domain_error("scaled_ratio: division by zero product");
    if (a.is_zero()) return {0.0, 0.0};
    const cplx q = a.mantissa / b.mantissa;
    const long e = a.exp2 - b.exp2;
    const int ec = static_cast<int>(std::clamp(e, -4000L, 4000L));
    return {std::ldexp(q.real(), ec), std::ldexp(q.imag(), ec)};
}

SamplingNodes::SamplingNodes(std::vector<double> t) : t_(std::move(t)) {
    if (t_.empty() || t_.size() % 2 == 0)
        throw std::invalid_argument("SamplingNodes: need an odd count t_{-N}..t_N");
    N_ = static_cast<long>(t_.size() / 2);
    double dev = 0.0;
    for (long n = -N_; n <= N_; ++n) {
        const double tn = t_[static_cast<std::size_t>(n + N_)];
        if (!std::isfinite(tn))
            throw std::invalid_argument("SamplingNodes: nodes must be finite");
        dev = std::max(dev, std::abs(tn - static_cast<double>(n)));
        if (n > -N_ && !(tn > t_[static_cast<std::size_t>(n - 1 + N_)]))
            throw std::invalid_argument("SamplingNodes: nodes must be strictly increasing");
    }
    if (!(dev < kDeviationCap))
        throw std::domain_error("SamplingNodes: sup|t_n - n| must be < 1/4");
    deviation_ = dev;
}

SamplingNodes SamplingNodes::integers(long N) {
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n) t.push_back(static_cast<double>(n));
    return SamplingNodes(std::move(t));
}

SamplingNodes SamplingNodes::sinusoidal(long N, double d) {
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n)
        t.push_back(static_cast<double>(n) + d * std::sin(static_cast<double>(n)));
    return SamplingNodes(std::move(t));
}

SamplingNodes SamplingNodes::uniform_random(long N, double d, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-d, d);
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(2 * N + 1));
    for (long n = -N; n <= N; ++n) t.push_back(static_cast<double>(n) + u(rng));
    return SamplingNodes(std::move(t));
}

SamplingNodes SamplingNodes::from_values(std::vector<double> values) {
    return SamplingNodes(std::move(values));
}

long SamplingNodes::find_exact(double x) const {
    for (long n = -N_; n <= N_; ++n)
        if (at(n) == x) return n;
    return N_ + 1;
}

SamplingNodes make_nodes(long N, const std::string& rule) {
    if (rule == "zero") return SamplingNodes::integers(N);
    std::istringstream ss(rule);
    std::string head;
    std::getline(ss, head, ':');
    if (head == "sin") {
        std::string ds;
        if (!std::getline(ss, ds, ':'))
            throw std::invalid_argument("make_nodes: expected sin:d");
        return SamplingNodes::sinusoidal(N, std::stod(ds));
    }
    if (head == "rand") {
        std::string ds, seeds;
        if (!std::getline(ss, ds, ':') || !std::getline(ss, seeds, ':'))
            throw std::invalid_argument("make_nodes: expected rand:d:seed");
        return SamplingNodes::uniform_random(N, std::stod(ds),
                                             static_cast<std::uint64_t>(std::stoull(seeds)));
    }
    throw std::invalid_argument("make_nodes: unknown rule \"" + rule + "\"");
}

CanonicalProduct::CanonicalProduct(SamplingNodes nodes) : nodes_(std::move(nodes)) {
    const long N = nodes_.half_width();
    derivatives_.resize(static_cast<std::size_t>(2 * N + 1));
    // Factor-skipping derivative at every node: d/dz of the m-th factor
    // (1 for m = 0, -1/t_m otherwise) times all remaining factors at t_m.
    for (long m = -N; m <= N; ++m) {
        const double tm = nodes_.at(m);
        ScaledValue p;
        if (m != 0) p.mul(-1.0 / tm);
        for (long n = -N; n <= N; ++n) {
            if (n == m) continue;
            if (n == 0) {
                p.mul(tm - nodes_.at(0));
            } else {
                p.mul(1.0 - tm / nodes_.at(n));
            }
        }
        derivatives_[static_cast<std::size_t>(m + N)] = p;
    }
}

ScaledValue CanonicalProduct::eval(double x) const {
    const long N = nodes_.half_width();
    ScaledValue p;
    p.mul(x - nodes_.at(0));
    for (long n = 1; n <= N; ++n) {
        p.mul(1.0 - x / nodes_.at(n));
        p.mul(1.0 - x / nodes_.at(-n));
    }
    return p;
}

ScaledValue CanonicalProduct::eval(cplx z) const {
    if (z.imag() == 0.0) return eval(z.real());
    const long N = nodes_.half_width();
    ScaledValue p;
    p.mul(z - nodes_.at(0));
    for (long n = 1; n <= N; ++n) {
        p.mul(1.0 - z / nodes_.at(n));
        p.mul(1.0 - z / nodes_.at(-n));
    }
    return p;
}

const ScaledValue& CanonicalProduct::derivative_at_node(long m) const {
    const long N = nodes_.half_width();
    if (m < -N || m > N)
        throw std::out_of_range("derivative_at_node: node index out of range");
    return derivatives_[static_cast<std::size_t>(m + N)];
}

cplx CanonicalProduct::kernel(const ScaledValue& g_at_z, cplx z, long n) const {
    return scaled_ratio(g_at_z, derivative_at_node(n)) / (z - nodes_.at(n));
}

namespace {

void check_sample_count(const CanonicalProduct& cp, std::size_t got) {
    if (got != static_cast<std::size_t>(2 * cp.half_width() + 1))
        throw std::invalid_argument("irregular series: need 2N+1 node samples");
}

}  // namespace

cplx lagrange_interpolate(const CanonicalProduct& cp, std::span<const cplx> node_samples,
                          cplx z) {
    check_sample_count(cp, node_samples.size());
    const long N = cp.half_width();
    if (z.imag() == 0.0) {
        const long hit = cp.nodes().find_exact(z.real());
        if (hit <= N) return node_samples[static_cast<std::size_t>(hit + N)];
    }
    const ScaledValue gz = cp.eval(z);
    KahanSumC acc;
    acc.add(node_samples[static_cast<std::size_t>(N)] * cp.kernel(gz, z, 0));
    for (long a = 1; a <= N; ++a) {
        acc.add(node_samples[static_cast<std::size_t>(a + N)] * cp.kernel(gz, z, a));
        acc.add(node_samples[static_cast<std::size_t>(-a + N)] * cp.kernel(gz, z, -a));
    }
    return acc.value();
}

cplx anchored_trajectory(const CanonicalProduct& cp, std::span<const cplx> node_samples,
                         cplx anchor, double t) {
    check_sample_count(cp, node_samples.size());
    const long N = cp.half_width();
    if (cp.nodes().at(0) == 0.0)
        throw std::domain_error("anchored_trajectory: t_0 must be nonzero");
    const long hit = cp.nodes().find_exact(t);
    if (hit <= N) return node_samples[static_cast<std::size_t>(hit + N)];
    const ScaledValue gt = cp.eval(t);
    auto quotient = [&](long n) {
        return (node_samples[static_cast<std::size_t>(n + N)] - anchor) / cp.nodes().at(n);
    };
    KahanSumC acc;
    acc.add(anchor);
    acc.add(t * quotient(0) * cp.kernel(gt, t, 0));
    for (long a = 1; a <= N; ++a) {
        acc.add(t * quotient(a) * cp.kernel(gt, t, a));
        acc.add(t * quotient(-a) * cp.kernel(gt, t, -a));
    }
    return acc.value();
}

cplx anchored_recovery(const CanonicalProduct& cp, std::span<const cplx> shifted_samples,
                       cplx anchor_at_tau, double tau) {
    check_sample_count(cp, shifted_samples.size());
    const long N = cp.half_width();
    if (cp.nodes().at(0) == 0.0)
        throw std::domain_error("anchored_recovery: t_0 must be nonzero");
    const long hit = cp.nodes().find_exact(-tau);
    if (hit <= N) return shifted_samples[static_cast<std::size_t>(hit + N)];
    const ScaledValue g_neg = cp.eval(-tau);
    auto quotient = [&](long n) {
        return (shifted_samples[static_cast<std::size_t>(n + N)] - anchor_at_tau) /
               cp.nodes().at(n);
    };
    // tau * G(-tau) / (G'(t_n)(tau + t_n)) = -tau * kernel(-tau, n)
    KahanSumC acc;
    acc.add(anchor_at_tau);
    acc.add(-tau * quotient(0) * cp.kernel(g_neg, cplx{-tau, 0.0}, 0));
    for (long a = 1; a <= N; ++a) {
        acc.add(-tau * quotient(a) * cp.kernel(g_neg, cplx{-tau, 0.0}, a));
        acc.add(-tau * quotient(-a) * cp.kernel(g_neg, cplx{-tau, 0.0}, -a));
    }
    return acc.value();
}

cplx measurement_recovery(const CanonicalProduct& cp, std::span<const cplx> node_samples) {
    check_sample_count(cp, node_samples.size());
    const long N = cp.half_width();
    if (cp.nodes().at(0) == 0.0)
        throw std::domain_error("measurement_recovery: t_0 must be nonzero");
    const ScaledValue g0 = cp.eval(0.0);
    auto weight = [&](long n) {
        return -scaled_ratio(g0, cp.derivative_at_node(n)) / cp.nodes().at(n);
    };
    KahanSumC acc;
    acc.add(node_samples[static_cast<std::size_t>(N)] * weight(0));
    for (long a = 1; a <= N; ++a) {
        acc.add(node_samples[static_cast<std::size_t>(a + N)] * weight(a));
        acc.add(node_samples[static_cast<std::size_t>(-a + N)] * weight(-a));
    }
    return acc.value();
}

}  // namespace gsamp
