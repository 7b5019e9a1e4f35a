// acceptance.cpp — end-to-end acceptance battery.  Each criterion prints one
// [PASS]/[FAIL] line with its measured numbers; the process exits nonzero if
// any criterion fails.
//
// Tolerances are calibrated decay ceilings frozen from convergence studies
// (worst measured K * rel_error times a ~10x margin), plus exact bounds where
// the series totals are known in closed form.  Ratio clauses carry a rounding
// floor: once an error sits at the floor, further truncation growth cannot
// reduce it and the clause is satisfied by convergence having completed.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "gsamp/boas.hpp"
#include "gsamp/coefficients.hpp"
#include "gsamp/diagnostics.hpp"
#include "gsamp/group_models.hpp"
#include "gsamp/irregular_sampling.hpp"
#include "gsamp/random_states.hpp"
#include "gsamp/regular_sampling.hpp"
#include "gsamp/schrodinger.hpp"

using namespace gsamp;

namespace {

// calibrated decay ceilings, relative error times K
constexpr double kTrajectoryDecay = 0.5;
constexpr double kValironDecay = 0.25;
constexpr double kDerivativeDecay[3] = {0.0, 0.25, 1.0};
// rounding floor for ratio clauses of interpolation series that converge to
// machine precision before the smallest tested truncation
constexpr double kRoundingFloor = 1e-12;

constexpr std::uint64_t kBatterySeed = 2026;

int failures = 0;

void report(int index, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %s: %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
}

std::vector<SpectralState> battery(std::mt19937_64& rng, int count, std::size_t points,
                                   double sigma) {
    std::vector<SpectralState> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(random_spectral_state(rng, points, sigma));
    return out;
}

// rescales the spectrum so the extreme frequency sits exactly at bound
SpectralState pin_spectral_bound(const SpectralState& f, double bound) {
    const double scale = bound / f.spectral_bound();
    std::vector<double> lambdas = f.spectrum.values();
    for (double& l : lambdas) l *= scale;
    return SpectralState(Spectrum(std::move(lambdas)), f.coeffs);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

// --- 1 -------------------------------------------------------------------

void criterion_boas() {
    std::mt19937_64 rng(kBatterySeed);
    const auto states = battery(rng, 20, 8, kPi);
    const long K = 10000;
    double worst_margin = 1e300, worst_tail_frac = 0.0;
    bool ok = true;
    for (const auto& f : states) {
        for (int r = 1; r <= 4; ++r) {
            const auto res = boas_apply(f, BoasConfig{kPi, r, K});
            const double err = (res.value - apply_generator(f, r)).norm();
            const double cap = 5e-3 * std::pow(kPi, r) * f.norm();
            ok = ok && err <= res.tail_bound && res.tail_bound <= cap;
            worst_margin = std::min(worst_margin, res.tail_bound - err);
            worst_tail_frac = std::max(worst_tail_frac, res.tail_bound / cap);
        }
    }
    report(1, "differentiation identity, orders 1-4", ok,
           "err <= certified tail (min slack " + fmt(worst_margin) + "), tail <= 5e-3 sigma^r ||f|| (max frac " +
               fmt(worst_tail_frac) + ")");
}

// --- 2 -------------------------------------------------------------------

void criterion_trajectory() {
    std::mt19937_64 rng(kBatterySeed);
    const auto states = battery(rng, 20, 8, kPi);
    const long K = 10000;
    const double tol = kTrajectoryDecay / static_cast<double>(K);
    double worst_k = 0.0, worst_2k = 0.0, worst_collapse = 0.0;
    for (const auto& f : states) {
        const auto dq = make_diff_quotients(f, kPi, 2 * K);
        for (int i = 0; i < 41; ++i) {
            const double t = -5.0 + 10.0 * i / 40.0;
            const SpectralState exact = evolve(f, t);
            const double ek =
                (recon_trajectory(f, dq, t, K).value - exact).norm() / f.norm();
            const double e2k = (recon_trajectory(f, dq, t).value - exact).norm() / f.norm();
            worst_k = std::max(worst_k, ek);
            worst_2k = std::max(worst_2k, e2k);
        }
        for (double t : {0.0, 1.0, -1.0, 2.0, -2.0}) {  // k pi / sigma, sigma = pi
            const double e =
                (recon_trajectory(f, dq, t, K).value - evolve(f, t)).norm() / f.norm();
            worst_collapse = std::max(worst_collapse, e);
        }
    }
    const double ratio = worst_2k / worst_k;
    const bool ok = worst_k <= tol && ratio <= 0.7 && worst_collapse <= 1e-12;
    report(2, "trajectory sampling on the regular grid", ok,
           "err " + fmt(worst_k) + " <= " + fmt(tol) + ", doubling ratio " + fmt(ratio) +
               " <= 0.7, node collapse " + fmt(worst_collapse) + " <= 1e-12");
}

// --- 3 -------------------------------------------------------------------

void criterion_recovery() {
    std::mt19937_64 rng(kBatterySeed);
    const auto states = battery(rng, 20, 8, kPi);
    const long K = 10000;
    const double tol = kTrajectoryDecay / static_cast<double>(K);
    double worst = 0.0;
    for (const auto& f : states) {
        const auto samples = sample_trajectory(f, kPi, 0.4, K);
        worst = std::max(worst, (recover_state(samples).value - f).norm() / f.norm());
    }
    report(3, "state recovery from shifted samples", worst <= tol,
           "rel err " + fmt(worst) + " <= " + fmt(tol));
}

// --- 4 -------------------------------------------------------------------

void criterion_valiron() {
    std::mt19937_64 rng(kBatterySeed);
    const auto states = battery(rng, 20, 8, kPi);
    const long K = 10000;
    const double tol = kValironDecay / static_cast<double>(K);
    double worst = 0.0, worst_collapse = 0.0;
    for (const auto& f : states) {
        for (cplx z : {cplx{0.7, 0.5}, cplx{-1.2, 0.25}}) {
            const double e =
                (valiron_tschakaloff(f, kPi, z, K).value - evolve_complex(f, z)).norm() /
                f.norm();
            worst = std::max(worst, e);
        }
        for (long k = -5; k <= 5; ++k) {
            const cplx z{static_cast<double>(k), 0.0};
            const double e =
                (valiron_tschakaloff(f, kPi, z, 500).value - evolve(f, z.real())).norm() /
                f.norm();
            worst_collapse = std::max(worst_collapse, e);
        }
    }
    const bool ok = worst <= tol && worst_collapse <= 1e-12;
    report(4, "interpolation at complex points", ok,
           "rel err " + fmt(worst) + " <= " + fmt(tol) + ", node collapse " +
               fmt(worst_collapse) + " <= 1e-12");
}

// --- 5 -------------------------------------------------------------------

void criterion_derivative_sampling() {
    std::mt19937_64 rng(kBatterySeed);
    const auto states = battery(rng, 20, 8, kPi);
    const long K = 10000;
    bool ok = true;
    std::string detail;
    for (int n : {1, 2}) {
        const double tol = kDerivativeDecay[n] / static_cast<double>(K);
        double worst_k = 0.0, worst_2k = 0.0;
        for (const auto& f : states) {
            const auto dq = make_diff_quotients(f, kPi, 2 * K);
            const SpectralState dnf = apply_generator(f, n);
            for (double t : {0.0, 0.9}) {
                const SpectralState exact = evolve(dnf, t);
                worst_k = std::max(
                    worst_k,
                    (derivative_sampling(f, dq, n, t, K).value - exact).norm() / f.norm());
                worst_2k = std::max(
                    worst_2k,
                    (derivative_sampling(f, dq, n, t).value - exact).norm() / f.norm());
            }
        }
        const double ratio = worst_2k / worst_k;
        ok = ok && worst_k <= tol && ratio <= 0.8;
        detail += "n=" + std::to_string(n) + ": err " + fmt(worst_k) + " <= " + fmt(tol) +
                  ", ratio " + fmt(ratio) + " <= 0.8; ";
    }
    report(5, "derivative sampling and the differentiation operator", ok, detail);
}

// --- 6 -------------------------------------------------------------------

void criterion_coefficient_identities() {
    bool ok = true;
    std::string detail;
    const long K = 1000;
    double worst_gap_frac = 0.0;
    for (int m = 1; m <= 3; ++m) {
        const CoefficientTable ta = build_coefficient_table(m, K, true);
        const CoefficientTable tb = build_coefficient_table(m, K, false);
        for (double sigma : {1.0, kPi}) {
            const double scale_a = std::pow(sigma / kPi, 2 * m - 1);
            const double gap_a = std::pow(sigma, 2 * m - 1) - scale_a * ta.abs_partial_sum;
            const double tail_a = scale_a * boas_abs_tail_a(m, K);
            ok = ok && gap_a >= -1e-12 && gap_a <= tail_a;
            worst_gap_frac = std::max(worst_gap_frac, gap_a / tail_a);

            const double scale_b = std::pow(sigma / kPi, 2 * m);
            const double gap_b = std::pow(sigma, 2 * m) - scale_b * tb.abs_partial_sum;
            const double tail_b = scale_b * boas_abs_tail_b(m, K);
            ok = ok && gap_b >= -1e-12 && gap_b <= tail_b;
            worst_gap_frac = std::max(worst_gap_frac, gap_b / tail_b);
        }
    }
    detail += "abs-sum gaps within analytic tails (max frac " + fmt(worst_gap_frac) + "); ";

    const FavardTable ft = build_favard_table(12);
    bool intervals = true;
    for (int j = 0; j <= 12; j += 2)
        intervals = intervals && ft.values[j] >= 1.0 - 1e-12 && ft.values[j] < 4.0 / kPi;
    for (int j = 1; j <= 12; j += 2)
        intervals = intervals && ft.values[j] > kPi / 4.0 && ft.values[j] <= kPi / 2.0 + 1e-12;
    const double e0 = std::abs(ft.values[0] - 1.0);
    const double e1 = std::abs(ft.values[1] - kPi / 2.0);
    ok = ok && intervals && e0 <= 1e-12 && e1 <= 1e-12;
    detail += "Favard intervals j<=12 hold, |K_0-1|=" + fmt(e0) + ", |K_1-pi/2|=" + fmt(e1);
    report(6, "coefficient mass identities and Favard constants", ok, detail);
}

// --- 7 -------------------------------------------------------------------

void criterion_canonical_product() {
    bool ok = true;
    std::string detail;
    for (long N : {1000L, 10000L}) {
        const CanonicalProduct cp{SamplingNodes::integers(N)};
        const double g_half = cp.value(0.5);
        const double e_half = std::abs(g_half - 1.0 / kPi);
        ok = ok && e_half <= 0.2 / static_cast<double>(N);
        double worst_deriv = 0.0;
        for (long m : {0L, 1L, -1L, 5L, -5L}) {
            const double got = cp.derivative_at_node(m).value().real();
            const double want = (m % 2 == 0) ? 1.0 : -1.0;
            const double slack =
                2.0 * (1.0 + static_cast<double>(m * m)) / static_cast<double>(N);
            ok = ok && std::abs(got - want) <= slack;
            worst_deriv = std::max(worst_deriv, std::abs(got - want) * N);
        }
        detail += "N=" + std::to_string(N) + ": |G(1/2)-1/pi|*N=" + fmt(e_half * N) +
                  ", |G'(m)-(-1)^m|*N<=" + fmt(worst_deriv) + "; ";
    }
    const CanonicalProduct shifted{
        SamplingNodes::uniform_random(100, 0.2, 7)};
    const double t0 = shifted.nodes().at(0);
    ok = ok && shifted.value(0.0) == -t0;
    detail += "G(0) == -t_0 exactly";
    report(7, "canonical product against the sine kernel", ok, detail);
}

// --- 8 -------------------------------------------------------------------

void criterion_irregular_interpolation() {
    std::mt19937_64 rng(kBatterySeed);
    std::vector<SpectralState> states;
    for (int i = 0; i < 20; ++i)
        states.push_back(pin_spectral_bound(random_spectral_state(rng, 8, 0.75 * kPi),
                                            0.75 * kPi));
    bool ok = true;
    std::string detail;
    double prev = -1.0;
    for (long N : {250L, 500L, 1000L, 2000L}) {
        const CanonicalProduct cp{SamplingNodes::sinusoidal(N, 0.2)};
        double worst = 0.0;
        for (const auto& f : states) {
            const auto samples = node_samples(f, cp.nodes());
            for (int i = 0; i <= 300; ++i) {
                const double z = -3.0 + 6.0 * i / 300.0;
                const auto r = irregular_recon_vector(samples, cp, cplx{z, 0.0}, kPi / 4.0);
                worst = std::max(worst, (r.value - evolve(f, z)).norm() / f.norm());
            }
        }
        if (prev >= 0.0) ok = ok && (worst <= 0.7 * prev || worst <= kRoundingFloor);
        prev = worst;
        detail += "N=" + std::to_string(N) + ": " + fmt(worst) + "; ";
    }
    // exact collapse at nodes
    const CanonicalProduct cp{SamplingNodes::sinusoidal(250, 0.2)};
    double collapse = 0.0;
    for (long m : {0L, 17L, -101L, 250L}) {
        const auto r =
            irregular_recon_vector(states[0], cp, cplx{cp.nodes().at(m), 0.0}, kPi / 4.0);
        collapse = std::max(collapse,
                            (r.value - evolve(states[0], cp.nodes().at(m))).norm());
    }
    ok = ok && collapse == 0.0;
    detail += "node collapse exact";
    report(8, "irregular interpolation over a compact range", ok, detail);
}

// --- 9 -------------------------------------------------------------------

void criterion_inverse_roundtrip() {
    std::mt19937_64 rng(kBatterySeed);
    std::vector<SpectralState> states;
    for (int i = 0; i < 10; ++i)
        states.push_back(random_spectral_state(rng, 8, 0.75 * kPi));
    bool ok = true;
    std::string detail;
    double prev = -1.0;
    for (long N : {1000L, 2000L}) {
        std::vector<double> t;
        for (long n = -N; n <= N; ++n) t.push_back(static_cast<double>(n) + 0.1);
        const CanonicalProduct cp{SamplingNodes::from_values(std::move(t))};
        double worst = 0.0;
        for (const auto& f : states) {
            const CauchyProblem p(f, 0.75 * kPi);
            worst = std::max(worst, invert_via_l2(p, cp).max_error);
        }
        if (N == 1000) ok = ok && worst <= 1e-2;
        if (prev >= 0.0) ok = ok && (worst <= 0.7 * prev || worst <= kRoundingFloor);
        prev = worst;
        detail += "N=" + std::to_string(N) + ": max coeff err " + fmt(worst) + "; ";
    }
    report(9, "measurement recovery and the inverse evolution round trip", ok,
           detail + "(<= 1e-2 at N=1000)");
}

// --- 10 ------------------------------------------------------------------

void criterion_spectral_type() {
    std::mt19937_64 rng(kBatterySeed);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const SpectralState f = random_gapped_state(rng, 6, 0.5 + 2.5 * trial / 19.0, 0.9);
        const auto rep = spectral_type(f, 500);
        const double rel = std::abs(rep.d_f - rep.sigma_f) / rep.sigma_f;
        worst = std::max(worst, rel);
        ok = ok && rel <= 0.01;
    }
    const SpectralState single(Spectrum({2.0}), {{1.0, 0.0}});
    const auto rep = spectral_type(single, 500);
    bool exact = true;
    for (double root : rep.norm_roots) exact = exact && root == 2.0;
    ok = ok && exact;
    report(10, "spectral-type limit of generator norm roots", ok,
           "gap-conditioned |d_f - sigma_f|/sigma_f <= " + fmt(worst) +
               " (cap 0.01), single mode exact at every k");
}

// --- 11 ------------------------------------------------------------------

void criterion_kolmogorov() {
    std::mt19937_64 rng(kBatterySeed);
    bool ok = true;
    double worst_eq = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const SpectralState f = random_spectral_state(rng, 5, kPi);
        for (int n = 0; n <= 6; ++n) {
            for (int k = 0; k <= n; ++k) {
                const auto c = kolmogorov_check(f, k, n);
                ok = ok && c.holds;
                if (k == n) {
                    const double eq = std::abs(c.lhs - c.rhs) / std::max(c.rhs, 1e-300);
                    worst_eq = std::max(worst_eq, eq);
                    ok = ok && eq <= 1e-12;
                }
            }
        }
    }
    report(11, "derivative-norm inequality with Favard constants", ok,
           "holds on 1000 states, k=n equality within " + fmt(worst_eq));
}

// --- 12 ------------------------------------------------------------------

void criterion_jackson() {
    std::mt19937_64 rng(kBatterySeed);
    const double sigmas_arr[] = {1.0, 2.0, 4.0, 8.0};
    std::span<const double> sigmas(sigmas_arr);
    bool ok = true;
    double max_ratio = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const SpectralState f = random_spectral_state(rng, 8, kPi);
        const auto rows = jackson_ratio(f, 0, 2, sigmas);
        bool growing = true;
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            growing = growing && rows[i].ratio < rows[i + 1].ratio;
        for (const auto& row : rows) {
            ok = ok && std::isfinite(row.ratio);
            max_ratio = std::max(max_ratio, row.ratio);
        }
        ok = ok && !growing;
    }
    report(12, "best-approximation to modulus ratios", ok,
           "max ratio " + fmt(max_ratio) + ", finite, no monotone growth over the grid");
}

// --- 13 ------------------------------------------------------------------

void criterion_cross_backend() {
    std::mt19937_64 rng(kBatterySeed);
    const long K = 10000;
    const double tol = kTrajectoryDecay / static_cast<double>(K);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
        const ExpSumSignal f = random_exp_sum(rng, 5, 0.9 * kPi);
        const auto dq = make_diff_quotients(f, kPi, K);
        for (double x0 : {0.0, 0.37}) {
            const auto g = DualFunctional::point_eval(x0);
            for (double t : {0.9, 2.6, -1.7}) {
                const cplx got = dual_pair(recon_trajectory(f, dq, t).value, g);
                const cplx want = f.eval(x0 + t);
                worst = std::max(worst,
                                 std::abs(got - want) / f.coeff_abs_sum());
            }
        }
    }
    report(13, "translation backend reproduces scalar cardinal sampling", worst <= tol,
           "rel err " + fmt(worst) + " <= " + fmt(tol));
}

}  // namespace

int main() {
    std::printf("acceptance battery (seed %llu)\n",
                static_cast<unsigned long long>(kBatterySeed));
    criterion_boas();
    criterion_trajectory();
    criterion_recovery();
    criterion_valiron();
    criterion_derivative_sampling();
    criterion_coefficient_identities();
    criterion_canonical_product();
    criterion_irregular_interpolation();
    criterion_inverse_roundtrip();
    criterion_spectral_type();
    criterion_kolmogorov();
    criterion_jackson();
    criterion_cross_backend();
    if (failures == 0) {
        std::printf("all 13 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
