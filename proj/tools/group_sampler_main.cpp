// group_sampler — command-line driver for the operator-group sampling library.
//
// Subcommands: coeffs, boas, recon, irregular, diag, schrodinger, sweep.
// Structured reports are JSON; sweep tables and diagnostic batteries are CSV.
// Failures print {"error": {"code", "message"}} on stderr with a nonzero
// exit status.  Identical configuration and seed produce byte-identical
// payloads except for the wall_time_ms field.

#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsamp/boas.hpp"
#include "gsamp/coefficients.hpp"
#include "gsamp/diagnostics.hpp"
#include "gsamp/group_models.hpp"
#include "gsamp/irregular_sampling.hpp"
#include "gsamp/random_states.hpp"
#include "gsamp/regular_sampling.hpp"
#include "gsamp/schrodinger.hpp"
#include "gsamp/state_io.hpp"

using namespace gsamp;
using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GlobalOpts {
    std::string out;
    std::string format;
    std::uint64_t seed = 12345;
    int threads = 1;
};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void write_output(const GlobalOpts& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(g.out);
    if (!out) throw std::runtime_error("cannot open output file: " + g.out);
    out << payload;
    if (!payload.empty() && payload.back() != '\n') out << "\n";
}

void check_format(const GlobalOpts& g, const std::string& natural) {
    if (!g.format.empty() && g.format != natural)
        throw UsageError("this command emits " + natural + "; --format " + g.format +
                         " is not available");
}

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

json cplx_json(cplx c) { return json::array({c.real(), c.imag()}); }

json coeffs_json(const std::vector<cplx>& cs) {
    json out = json::array();
    for (cplx c : cs) out.push_back(cplx_json(c));
    return out;
}

cplx parse_complex(const std::string& text) {
    std::istringstream ss(text);
    double re = 0.0, im = 0.0;
    char comma = 0;
    ss >> re;
    if (ss && ss.peek() == ',') {
        ss >> comma >> im;
    }
    if (ss.fail()) throw UsageError("cannot parse complex value \"" + text + "\" (use re,im)");
    return {re, im};
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::istringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

// "t0:t1:steps" -> inclusive linear grid with `steps` points
std::vector<double> parse_range(const std::string& text) {
    std::istringstream ss(text);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c, ':'))
        throw UsageError("range must be t0:t1:steps");
    const double t0 = std::stod(a), t1 = std::stod(b);
    const long steps = std::stol(c);
    if (steps < 1) throw UsageError("range must contain at least one point");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (long i = 0; i < steps; ++i)
        out.push_back(steps == 1 ? t0
                                 : t0 + (t1 - t0) * static_cast<double>(i) /
                                       static_cast<double>(steps - 1));
    return out;
}

SamplingNodes load_nodes(long N, const std::string& rule, const std::string& nodes_file) {
    if (!nodes_file.empty()) {
        std::ifstream in(nodes_file);
        if (!in) throw std::runtime_error("cannot open nodes file: " + nodes_file);
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid nodes JSON: ") + e.what());
        }
        if (!j.is_array()) throw ParseError("nodes file must be an array of {n, t} objects");
        std::vector<std::pair<long, double>> entries;
        for (const auto& e : j) {
            if (!e.is_object() || !e.contains("n") || !e.contains("t"))
                throw ParseError("node entries must be objects with \"n\" and \"t\"");
            entries.emplace_back(e["n"].get<long>(), e["t"].get<double>());
        }
        std::sort(entries.begin(), entries.end());
        if (entries.empty() || entries.size() % 2 == 0)
            throw ParseError("node list must cover n = -N..N");
        std::vector<double> values;
        long expect = entries.front().first;
        if (expect != -static_cast<long>(entries.size() / 2))
            throw ParseError("node list must cover n = -N..N");
        for (const auto& [n, t] : entries) {
            if (n != expect++) throw ParseError("node list must cover contiguous n = -N..N");
            values.push_back(t);
        }
        return SamplingNodes::from_values(std::move(values));
    }
    return make_nodes(N, rule);
}

// Runs fn(i) for i in [0, count) on up to `threads` workers; results ordered.
template <class Fn>
std::vector<std::string> parallel_rows(long count, int threads, Fn fn) {
    std::vector<std::string> rows(static_cast<std::size_t>(count));
    if (threads <= 1 || count <= 1) {
        for (long i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = fn(i);
        return rows;
    }
    std::atomic<long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long i = next.fetch_add(1);
            if (i >= count) return;
            rows[static_cast<std::size_t>(i)] = fn(i);
        }
    };
    std::vector<std::future<void>> pool;
    const long n_workers = std::min<long>(threads, count);
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (long w = 0; w < n_workers; ++w)
        pool.push_back(std::async(std::launch::async, worker));
    for (auto& fut : pool) fut.get();
    return rows;
}

// --- coeffs ------------------------------------------------------------------

struct CoeffsArgs {
    std::string family = "A";
    int m = 1;
    long kmax = 10;
    int jmax = 6;
};

std::string run_coeffs(const CoeffsArgs& a) {
    std::ostringstream out;
    out << "family,m,k,value\n";
    if (a.family == "A" || a.family == "B") {
        const bool odd = a.family == "A";
        const CoefficientTable t = build_coefficient_table(a.m, a.kmax, odd);
        for (long k = -a.kmax; k <= a.kmax; ++k)
            out << a.family << "," << a.m << "," << k << "," << fmt_double(t.at(k)) << "\n";
    } else if (a.family == "favard") {
        const FavardTable t = build_favard_table(a.jmax);
        for (int j = 0; j <= a.jmax; ++j)
            out << "favard," << j << ",0," << fmt_double(t.values[static_cast<std::size_t>(j)])
                << "\n";
    } else {
        throw UsageError("unknown coefficient family \"" + a.family + "\"");
    }
    return out.str();
}

// --- boas ---------------------------------------------------------------------

struct BoasArgs {
    int order = 1;
    double sigma = kPi;
    long terms = 1000;
    std::string state_file;
};

std::string run_boas(const BoasArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const AnyState st = load_state_file(a.state_file);
    json rep;
    std::visit(
        [&](const auto& f) {
            const auto res = boas_apply(f, BoasConfig{a.sigma, a.order, a.terms});
            const auto exact = apply_generator(f, a.order);
            rep["error"] = (res.value - exact).norm();
            rep["tail_bound"] = res.tail_bound;
            rep["membership"] = res.bernstein_ok;
        },
        st);
    rep["order"] = a.order;
    rep["sigma"] = a.sigma;
    rep["K"] = a.terms;
    rep["wall_time_ms"] = elapsed_ms(t0);
    return rep.dump(2);
}

// --- recon --------------------------------------------------------------------

struct ReconArgs {
    std::string formula = "s1";
    double sigma = kPi;
    long terms = 1000;
    double t = 0.0;
    std::string z_text;
    int n = 1;
    std::string state_file;
    std::string samples_file;
    std::string sweep;
};

template <class State>
TrajectorySamples<State> load_trajectory_samples_typed(const json& j) {
    const double sigma = j.at("sigma").get<double>();
    const double t = j.at("t").get<double>();
    const long K = j.at("K").get<long>();
    const auto& arr = j.at("samples");
    if (!arr.is_array() || arr.size() != static_cast<std::size_t>(2 * K + 1))
        throw ParseError("samples file must hold 2K+1 states");
    TrajectorySamples<State> s{RegularGrid(sigma, K), t, {},
                               std::get<State>(parse_state_json(j.at("derivative").dump()))};
    s.states.reserve(arr.size());
    for (const auto& e : arr) s.states.push_back(std::get<State>(parse_state_json(e.dump())));
    return s;
}

// error of one formula evaluation against the exact-backend oracle
template <class State>
std::pair<double, json> recon_point(const ReconArgs& a, const State& f,
                                    const DiffQuotients<State>& dq, double t, cplx z) {
    json extra;
    double err = 0.0;
    if (a.formula == "s1") {
        const auto r = recon_trajectory(f, dq, t);
        err = (r.value - evolve(f, t)).norm();
        extra["tail"] = r.tail_estimate;
        extra["membership"] = r.bernstein_ok;
    } else if (a.formula == "l0") {
        const auto samples = sample_trajectory(f, a.sigma, t, a.terms);
        const auto r = recover_state(samples);
        err = (r.value - f).norm();
        extra["tail"] = r.tail_estimate;
    } else if (a.formula == "vt") {
        const auto r = valiron_tschakaloff(f, a.sigma, z, a.terms);
        err = (r.value - evolve_complex(f, z)).norm();
        extra["membership"] = r.bernstein_ok;
    } else if (a.formula == "s2") {
        const auto r = derivative_sampling(f, dq, a.n, t);
        err = (r.value - evolve(apply_generator(f, a.n), t)).norm();
        extra["membership"] = r.bernstein_ok;
        extra["n"] = a.n;
    } else if (a.formula == "q") {
        const auto r = q_operator(f, dq, a.n);
        err = (r.value - apply_generator(f, a.n)).norm();
        extra["membership"] = r.bernstein_ok;
        extra["n"] = a.n;
    } else {
        throw UsageError("unknown recon formula \"" + a.formula + "\"");
    }
    return {err, extra};
}

std::string run_recon(const ReconArgs& a, const GlobalOpts& g) {
    const auto t0 = std::chrono::steady_clock::now();
    const AnyState st = load_state_file(a.state_file);
    const cplx z = a.z_text.empty() ? cplx{a.t, 0.0} : parse_complex(a.z_text);

    if (!a.sweep.empty()) {
        const std::vector<double> ts = parse_range(a.sweep);
        std::ostringstream out;
        out << "t,error,tail\n";
        const auto rows = std::visit(
            [&](const auto& f) {
                using State = std::decay_t<decltype(f)>;
                const bool needs_dq =
                    a.formula == "s1" || a.formula == "s2" || a.formula == "q";
                std::optional<DiffQuotients<State>> dq;
                if (needs_dq) dq = make_diff_quotients(f, a.sigma, a.terms);
                return parallel_rows(static_cast<long>(ts.size()), g.threads, [&](long i) {
                    const double t = ts[static_cast<std::size_t>(i)];
                    const DiffQuotients<State> empty{RegularGrid(a.sigma, 1), {}};
                    auto [err, extra] = recon_point(a, f, needs_dq ? *dq : empty, t, cplx{t, 0.0});
                    const std::string tail =
                        extra.contains("tail") ? fmt_double(extra["tail"].template get<double>()) : "";
                    return fmt_double(t) + "," + fmt_double(err) + "," + tail;
                });
            },
            st);
        for (const auto& row : rows) out << row << "\n";
        return out.str();
    }

    json rep;
    std::visit(
        [&](const auto& f) {
            using State = std::decay_t<decltype(f)>;
            if (a.formula == "l0" && !a.samples_file.empty()) {
                std::ifstream in(a.samples_file);
                if (!in)
                    throw std::runtime_error("cannot open samples file: " + a.samples_file);
                json j;
                try {
                    in >> j;
                } catch (const json::exception& e) {
                    throw ParseError(std::string("invalid samples JSON: ") + e.what());
                }
                const auto samples = load_trajectory_samples_typed<State>(j);
                const auto r = recover_state(samples);
                rep["error"] = (r.value - f).norm();
                rep["tail"] = r.tail_estimate;
                rep["t"] = samples.t;
                return;
            }
            std::optional<DiffQuotients<State>> dq;
            if (a.formula == "s1" || a.formula == "s2" || a.formula == "q")
                dq = make_diff_quotients(f, a.sigma, a.terms);
            const DiffQuotients<State> empty{RegularGrid(a.sigma, 1), {}};
            auto [err, extra] = recon_point(a, f, dq ? *dq : empty, a.t, z);
            rep = extra;
            rep["error"] = err;
            if (a.formula == "vt")
                rep["z"] = cplx_json(z);
            else
                rep["t"] = a.t;
        },
        st);
    rep["formula"] = a.formula;
    rep["sigma"] = a.sigma;
    rep["K"] = a.terms;
    rep["wall_time_ms"] = elapsed_ms(t0);
    return rep.dump(2);
}

// --- irregular ----------------------------------------------------------------

struct IrregularArgs {
    std::string formula = "s4";
    std::string nodes = "zero";
    std::string nodes_file;
    long N = 500;
    std::string state_file;
    std::string z_text;
    double t = 0.0;
    double tau = 0.4;
    double x0 = 0.0;
};

std::string run_irregular(const IrregularArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const AnyState st = load_state_file(a.state_file);
    const CanonicalProduct cp(load_nodes(a.N, a.nodes, a.nodes_file));
    const long N = cp.half_width();

    json rep;
    rep["formula"] = a.formula;
    rep["N"] = N;
    rep["nodes"] = a.nodes_file.empty() ? a.nodes : "file";
    rep["deviation"] = cp.nodes().deviation();

    // battery of functionals: every coefficient projection (spectral
    // backend) or the point evaluation at x0 (translation backend)
    auto scalar_batch = [&](const auto& f, auto make_sample, auto recover, auto truth) {
        using State = std::decay_t<decltype(f)>;
        std::vector<DualFunctional> battery;
        if constexpr (std::is_same_v<State, SpectralState>) {
            for (std::size_t j = 0; j < f.coeffs.size(); ++j)
                battery.push_back(DualFunctional::projection(j));
        } else {
            battery.push_back(DualFunctional::point_eval(a.x0));
        }
        json errors = json::array();
        double max_err = 0.0;
        std::vector<cplx> samples(static_cast<std::size_t>(2 * N + 1));
        for (const auto& gfun : battery) {
            for (long n = -N; n <= N; ++n)
                samples[static_cast<std::size_t>(n + N)] = make_sample(f, n, gfun);
            const cplx got = recover(samples, f, gfun);
            const cplx want = truth(f, gfun);
            const double scale = std::abs(want) > 0.0 ? std::abs(want) : 1.0;
            const double err = std::abs(got - want) / scale;
            errors.push_back(err);
            max_err = std::max(max_err, err);
        }
        rep["per_functional_error"] = errors;
        rep["max_rel_error"] = max_err;
    };

    std::visit(
        [&](const auto& f) {
            if (a.formula == "s4") {
                const cplx z = a.z_text.empty() ? cplx{a.t, 0.0} : parse_complex(a.z_text);
                const auto r = irregular_recon_vector(f, cp, z, 0.0);
                const auto exact = evolve_complex(f, z);
                rep["error"] = (r.value - exact).norm();
                rep["membership"] = f.spectral_bound() < kPi;
                rep["z"] = cplx_json(z);
            } else if (a.formula == "l2") {
                scalar_batch(
                    f,
                    [&](const auto& ff, long n, const DualFunctional& gf) {
                        return dual_pair(evolve(ff, cp.nodes().at(n)), gf);
                    },
                    [&](const std::vector<cplx>& s, const auto&, const DualFunctional&) {
                        return measurement_recovery(cp, s);
                    },
                    [&](const auto& ff, const DualFunctional& gf) { return dual_pair(ff, gf); });
            } else if (a.formula == "s3") {
                scalar_batch(
                    f,
                    [&](const auto& ff, long n, const DualFunctional& gf) {
                        return dual_pair(evolve(ff, cp.nodes().at(n)), gf);
                    },
                    [&](const std::vector<cplx>& s, const auto& ff, const DualFunctional& gf) {
                        return anchored_trajectory(cp, s, dual_pair(ff, gf), a.t);
                    },
                    [&](const auto& ff, const DualFunctional& gf) {
                        return dual_pair(evolve(ff, a.t), gf);
                    });
                rep["t"] = a.t;
            } else if (a.formula == "l3000") {
                scalar_batch(
                    f,
                    [&](const auto& ff, long n, const DualFunctional& gf) {
                        return dual_pair(evolve(ff, cp.nodes().at(n) + a.tau), gf);
                    },
                    [&](const std::vector<cplx>& s, const auto& ff, const DualFunctional& gf) {
                        return anchored_recovery(cp, s, dual_pair(evolve(ff, a.tau), gf),
                                                 a.tau);
                    },
                    [&](const auto& ff, const DualFunctional& gf) { return dual_pair(ff, gf); });
                rep["tau"] = a.tau;
            } else {
                throw UsageError("unknown irregular formula \"" + a.formula + "\"");
            }
        },
        st);
    rep["wall_time_ms"] = elapsed_ms(t0);
    return rep.dump(2);
}

// --- diag ---------------------------------------------------------------------

struct DiagArgs {
    std::string check = "type";
    std::string state_file;
    int kmax = 100;
    int trials = 100;
    int nmax = 6;
    int points = 8;
    double sigma = kPi;
    int m = 2;
    int k = 0;
    double smax = 2.0;
    int steps = 20;
    std::string sigmas = "1,2,4,8";
};

SpectralState require_spectral(const AnyState& st, const char* what) {
    if (!std::holds_alternative<SpectralState>(st))
        throw std::domain_error(std::string(what) + " requires a spectral-backend state");
    return std::get<SpectralState>(st);
}

std::string run_diag(const DiagArgs& a, const GlobalOpts& g) {
    std::ostringstream out;
    if (a.check == "type") {
        const SpectralState f = require_spectral(load_state_file(a.state_file), "diag type");
        const auto rep = spectral_type(f, a.kmax);
        out << "kind,k,value\n";
        for (std::size_t i = 0; i < rep.norm_roots.size(); ++i)
            out << "seq," << (i + 1) << "," << fmt_double(rep.norm_roots[i]) << "\n";
        out << "d_f,," << fmt_double(rep.d_f) << "\n";
        out << "sigma_f,," << fmt_double(rep.sigma_f) << "\n";
    } else if (a.check == "ks") {
        std::mt19937_64 rng(g.seed);
        out << "trial,k,n,lhs,rhs,holds\n";
        for (int trial = 0; trial < a.trials; ++trial) {
            const SpectralState f = random_spectral_state(
                rng, static_cast<std::size_t>(a.points), a.sigma);
            for (int n = 0; n <= a.nmax; ++n)
                for (int k = 0; k <= n; ++k) {
                    const auto c = kolmogorov_check(f, k, n);
                    out << trial << "," << k << "," << n << "," << fmt_double(c.lhs) << ","
                        << fmt_double(c.rhs) << "," << (c.holds ? 1 : 0) << "\n";
                }
        }
    } else if (a.check == "modulus") {
        const SpectralState f =
            require_spectral(load_state_file(a.state_file), "diag modulus");
        out << "s,omega\n";
        for (int i = 0; i <= a.steps; ++i) {
            const double s = a.smax * i / a.steps;
            out << fmt_double(s) << "," << fmt_double(modulus_of_continuity(f, a.m, s))
                << "\n";
        }
    } else if (a.check == "jackson") {
        const SpectralState f =
            require_spectral(load_state_file(a.state_file), "diag jackson");
        const std::vector<double> sigmas = parse_double_list(a.sigmas);
        if (sigmas.empty()) throw UsageError("--sigmas must name at least one bandwidth");
        out << "sigma,best_error,scaled_modulus,ratio\n";
        for (const auto& row : jackson_ratio(f, a.k, a.m, sigmas))
            out << fmt_double(row.sigma) << "," << fmt_double(row.best_error) << ","
                << fmt_double(row.scaled_modulus) << "," << fmt_double(row.ratio) << "\n";
    } else {
        throw UsageError("unknown diagnostic \"" + a.check + "\"");
    }
    return out.str();
}

// --- schrodinger ----------------------------------------------------------------

struct SchrodingerArgs {
    std::string spectrum_file;
    std::string nodes = "rand:0.1:1";
    std::string nodes_file;
    long N = 1000;
    std::string via = "l2";
    double tau = 0.4;
    double band = 0.0;  // 0: use the spectral bound of the state
    double sigma_grid = kPi;
};

std::string run_schrodinger(const SchrodingerArgs& a) {
    const auto t0 = std::chrono::steady_clock::now();
    const SpectralState f =
        require_spectral(load_state_file(a.spectrum_file), "schrodinger");
    const double band = a.band > 0.0 ? a.band : std::max(f.spectral_bound(), 1e-9);
    const CauchyProblem problem(f, band);

    InverseReport rep;
    if (a.via == "l1") {
        rep = invert_via_l1(problem, a.sigma_grid, a.tau, a.N);
    } else if (a.via == "l2" || a.via == "l3") {
        const CanonicalProduct cp(load_nodes(a.N, a.nodes, a.nodes_file));
        rep = a.via == "l3" ? invert_via_l3(problem, cp, a.tau) : invert_via_l2(problem, cp);
    } else {
        throw UsageError("unknown recovery route \"" + a.via + "\"");
    }

    json j;
    j["via"] = a.via;
    j["N"] = a.N;
    j["band"] = band;
    j["band_ok"] = rep.band_ok;
    j["true_coeffs"] = coeffs_json(rep.true_coeffs);
    j["recovered_coeffs"] = coeffs_json(rep.recovered_coeffs);
    j["per_coeff_error"] = rep.per_coeff_error;
    j["max_rel_error"] = rep.max_error;
    j["wall_time_ms"] = elapsed_ms(t0);
    return j.dump(2);
}

// --- sweep ----------------------------------------------------------------------

struct SweepArgs {
    std::string formula = "s1";
    std::string param = "K";
    std::string values;
    std::string state_file;
    double sigma = kPi;
    double t = 1.0;
    std::string z_text;
    int n = 1;
    std::string nodes = "sin:0.2";
    std::string nodes_file;
};

std::string run_sweep(const SweepArgs& a, const GlobalOpts& g) {
    const std::vector<double> raw = parse_double_list(a.values);
    if (raw.empty()) throw UsageError("--values must name at least one parameter value");
    std::vector<long> params;
    params.reserve(raw.size());
    for (double v : raw) params.push_back(std::lround(v));
    std::sort(params.begin(), params.end());

    const AnyState st = load_state_file(a.state_file);
    std::ostringstream out;
    out << "param,error,tail\n";

    const auto rows = parallel_rows(static_cast<long>(params.size()), g.threads, [&](long i) {
        const long p = params[static_cast<std::size_t>(i)];
        return std::visit(
            [&](const auto& f) -> std::string {
                double err = 0.0;
                std::string tail;
                if (a.formula == "s1") {
                    const auto r = recon_trajectory(f, a.sigma, a.t, p);
                    err = (r.value - evolve(f, a.t)).norm();
                    tail = fmt_double(r.tail_estimate);
                } else if (a.formula == "l0") {
                    const auto r = recover_state(sample_trajectory(f, a.sigma, a.t, p));
                    err = (r.value - f).norm();
                    tail = fmt_double(r.tail_estimate);
                } else if (a.formula == "vt") {
                    const cplx z =
                        a.z_text.empty() ? cplx{a.t, 0.0} : parse_complex(a.z_text);
                    const auto r = valiron_tschakaloff(f, a.sigma, z, p);
                    err = (r.value - evolve_complex(f, z)).norm();
                } else if (a.formula == "s2") {
                    const auto r = derivative_sampling(f, a.sigma, a.n, a.t, p);
                    err = (r.value - evolve(apply_generator(f, a.n), a.t)).norm();
                } else if (a.formula == "q") {
                    const auto r = q_operator(f, a.sigma, a.n, p);
                    err = (r.value - apply_generator(f, a.n)).norm();
                } else if (a.formula == "s4") {
                    const CanonicalProduct cp(load_nodes(p, a.nodes, a.nodes_file));
                    const cplx z =
                        a.z_text.empty() ? cplx{a.t, 0.0} : parse_complex(a.z_text);
                    const auto r = irregular_recon_vector(f, cp, z, 0.0);
                    err = (r.value - evolve_complex(f, z)).norm();
                } else if (a.formula == "l2") {
                    using State = std::decay_t<decltype(f)>;
                    if constexpr (std::is_same_v<State, SpectralState>) {
                        const CanonicalProduct cp(load_nodes(p, a.nodes, a.nodes_file));
                        const long N = cp.half_width();
                        std::vector<SpectralState> samples;
                        samples.reserve(static_cast<std::size_t>(2 * N + 1));
                        for (long n = -N; n <= N; ++n)
                            samples.push_back(evolve(f, cp.nodes().at(n)));
                        const SpectralState rec = measurement_recovery_state(cp, samples);
                        err = (rec - f).norm();
                    } else {
                        throw std::domain_error("sweep l2 requires a spectral-backend state");
                    }
                } else {
                    throw UsageError("unknown sweep formula \"" + a.formula + "\"");
                }
                return std::to_string(p) + "," + fmt_double(err) + "," + tail;
            },
            st);
    });
    for (const auto& row : rows) out << row << "\n";
    return out.str();
}

json error_json(const std::string& code, const std::string& message) {
    json j;
    j["error"]["code"] = code;
    j["error"]["message"] = message;
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sampling, interpolation and inverse-problem toolkit for "
                 "one-parameter operator groups"};
    app.require_subcommand(1);

    GlobalOpts g;
    if (const char* env = std::getenv("GROUP_SAMPLER_THREADS")) g.threads = std::atoi(env);
    app.add_option("--out", g.out, "output file (default: stdout)");
    app.add_option("--format", g.format, "output format (json|csv)")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_option("--seed", g.seed, "seed for randomized batteries");
    app.add_option("--threads", g.threads, "worker threads for sweeps")
        ->check(CLI::Range(1, 256));

    CoeffsArgs ca;
    auto* coeffs = app.add_subcommand("coeffs", "coefficient tables (CSV)");
    coeffs->fallthrough();
    coeffs->add_option("--family", ca.family, "A | B | favard");
    coeffs->add_option("--m", ca.m, "family order m");
    coeffs->add_option("--kmax", ca.kmax, "index window |k| <= kmax");
    coeffs->add_option("--jmax", ca.jmax, "largest Favard index");

    BoasArgs ba;
    auto* boas = app.add_subcommand("boas", "truncated differentiation operator (JSON)");
    boas->fallthrough();
    boas->add_option("--order", ba.order, "differentiation order r")->required();
    boas->add_option("--sigma", ba.sigma, "bandwidth");
    boas->add_option("--terms", ba.terms, "truncation half-width K");
    boas->add_option("--state", ba.state_file, "state file")->required();

    ReconArgs ra;
    auto* recon = app.add_subcommand("recon", "regular-grid sampling formulas (JSON/CSV)");
    recon->fallthrough();
    recon->add_option("--formula", ra.formula, "s1 | l0 | vt | s2 | q");
    recon->add_option("--sigma", ra.sigma, "bandwidth");
    recon->add_option("--terms", ra.terms, "truncation half-width K");
    recon->add_option("--t", ra.t, "evaluation / shift time");
    recon->add_option("--z", ra.z_text, "complex evaluation point re,im");
    recon->add_option("--n", ra.n, "derivative order for s2/q");
    recon->add_option("--state", ra.state_file, "state file")->required();
    recon->add_option("--samples", ra.samples_file, "trajectory samples file (l0)");
    recon->add_option("--sweep", ra.sweep, "t sweep t0:t1:steps (CSV)");

    IrregularArgs ia;
    auto* irregular = app.add_subcommand("irregular", "perturbed-node formulas (JSON)");
    irregular->fallthrough();
    irregular->add_option("--formula", ia.formula, "s3 | l3000 | s4 | l2");
    irregular->add_option("--nodes", ia.nodes, "zero | sin:d | rand:d:seed");
    irregular->add_option("--nodes-file", ia.nodes_file, "explicit node list [{n, t}]");
    irregular->add_option("--N", ia.N, "node half-width");
    irregular->add_option("--state", ia.state_file, "state file")->required();
    irregular->add_option("--z", ia.z_text, "complex evaluation point re,im (s4)");
    irregular->add_option("--t", ia.t, "evaluation time (s3/s4)");
    irregular->add_option("--tau", ia.tau, "anchor shift (l3000)");
    irregular->add_option("--x0", ia.x0, "point-evaluation location (translation backend)");

    DiagArgs da;
    auto* diag = app.add_subcommand("diag", "analytic diagnostics (CSV)");
    diag->fallthrough();
    diag->add_option("--check", da.check, "type | ks | modulus | jackson");
    diag->add_option("--state", da.state_file, "state file");
    diag->add_option("--kmax", da.kmax, "largest generator power (type)");
    diag->add_option("--trials", da.trials, "random states (ks)");
    diag->add_option("--nmax", da.nmax, "largest n (ks)");
    diag->add_option("--points", da.points, "spectrum size for random states (ks)");
    diag->add_option("--sigma", da.sigma, "spectrum bound for random states (ks)");
    diag->add_option("--m", da.m, "modulus order");
    diag->add_option("--k", da.k, "derivative order (jackson)");
    diag->add_option("--smax", da.smax, "largest s (modulus)");
    diag->add_option("--steps", da.steps, "s steps (modulus)");
    diag->add_option("--sigmas", da.sigmas, "bandwidth grid (jackson)");

    SchrodingerArgs sa;
    auto* schro = app.add_subcommand("schrodinger", "inverse initial-value recovery (JSON)");
    schro->fallthrough();
    schro->add_option("--spectrum", sa.spectrum_file, "spectral state file")->required();
    schro->add_option("--nodes", sa.nodes, "zero | sin:d | rand:d:seed");
    schro->add_option("--nodes-file", sa.nodes_file, "explicit node list [{n, t}]");
    schro->add_option("--N", sa.N, "node half-width");
    schro->add_option("--via", sa.via, "l2 | l1 | l3");
    schro->add_option("--tau", sa.tau, "anchor shift (l1/l3)");
    schro->add_option("--band", sa.band, "stated band (default: spectral bound)");
    schro->add_option("--sigma-grid", sa.sigma_grid, "regular-grid bandwidth (l1)");

    SweepArgs wa;
    auto* sweep = app.add_subcommand("sweep", "truncation sweeps (CSV)");
    sweep->fallthrough();
    sweep->add_option("--formula", wa.formula, "s1 | l0 | vt | s2 | q | s4 | l2");
    sweep->add_option("--param", wa.param, "K | N")->check(CLI::IsMember({"K", "N"}));
    sweep->add_option("--values", wa.values, "comma-separated parameter values")->required();
    sweep->add_option("--state", wa.state_file, "state file")->required();
    sweep->add_option("--sigma", wa.sigma, "bandwidth (regular formulas)");
    sweep->add_option("--t", wa.t, "evaluation time");
    sweep->add_option("--z", wa.z_text, "complex point re,im");
    sweep->add_option("--n", wa.n, "derivative order");
    sweep->add_option("--nodes", wa.nodes, "node rule (s4/l2)");
    sweep->add_option("--nodes-file", wa.nodes_file, "explicit node list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << error_json("E_USAGE", e.what()).dump() << "\n";
        return 2;
    }

    try {
        std::string payload;
        if (*coeffs) {
            check_format(g, "csv");
            payload = run_coeffs(ca);
        } else if (*boas) {
            check_format(g, "json");
            payload = run_boas(ba);
        } else if (*recon) {
            check_format(g, ra.sweep.empty() ? "json" : "csv");
            payload = run_recon(ra, g);
        } else if (*irregular) {
            check_format(g, "json");
            payload = run_irregular(ia);
        } else if (*diag) {
            check_format(g, "csv");
            payload = run_diag(da, g);
        } else if (*schro) {
            check_format(g, "json");
            payload = run_schrodinger(sa);
        } else if (*sweep) {
            check_format(g, "csv");
            payload = run_sweep(wa, g);
        }
        write_output(g, payload);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << error_json("E_USAGE", e.what()).dump() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << error_json("E_PARSE", e.what()).dump() << "\n";
        return 3;
    } catch (const std::domain_error& e) {
        std::cerr << error_json("E_PRECONDITION", e.what()).dump() << "\n";
        return 5;
    } catch (const std::invalid_argument& e) {
        std::cerr << error_json("E_PRECONDITION", e.what()).dump() << "\n";
        return 5;
    } catch (const std::runtime_error& e) {
        std::cerr << error_json("E_IO", e.what()).dump() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << error_json("E_INTERNAL", e.what()).dump() << "\n";
        return 10;
    }
}
