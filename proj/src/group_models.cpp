#include "gsamp/group_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gsamp/coefficients.hpp"
#include "gsamp/summation.hpp"

namespace gsamp {

namespace {

void check_compatible(const SpectralState& a, const SpectralState& b) {
    if (!(a.spectrum == b.spectrum))
        throw std::invalid_argument("spectral states have different spectra");
}

void check_compatible(const ExpSumSignal& a, const ExpSumSignal& b) {
    if (a.freqs != b.freqs)
        throw std::invalid_argument("exponential sums have different frequencies");
}

// i^power without drifting through repeated complex multiplication.
cplx i_power(int power) {
    switch (((power % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double default_im_guard(double sigma_f) {
    return sigma_f > 0.0 ? 50.0 / sigma_f : std::numeric_limits<double>::infinity();
}

}  // namespace

Spectrum::Spectrum(std::vector<double> lambdas) : lambdas_(std::move(lambdas)) {
    if (lambdas_.empty())
        throw std::invalid_argument("Spectrum: must be nonempty");
    for (std::size_t j = 0; j < lambdas_.size(); ++j) {
        if (!std::isfinite(lambdas_[j]))
            throw std::invalid_argument("Spectrum: entries must be finite");
        if (j > 0 && !(lambdas_[j] > lambdas_[j - 1]))
            throw std::invalid_argument("Spectrum: entries must be strictly increasing");
    }
}

SpectralState::SpectralState(Spectrum sp, std::vector<cplx> c)
    : spectrum(std::move(sp)), coeffs(std::move(c)) {
    if (coeffs.size() != spectrum.size())
        throw std::invalid_argument("SpectralState: coefficient count must match spectrum");
}

double SpectralState::norm() const {
    KahanSum s;
    for (const cplx& c : coeffs) s.add(std::norm(c));
    return std::sqrt(s.value());
}

double SpectralState::spectral_bound() const {
    double b = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != cplx{0.0, 0.0}) b = std::max(b, std::abs(spectrum[j]));
    return b;
}

ExpSumSignal::ExpSumSignal(std::vector<double> w, std::vector<cplx> c,
                           double window_half_width, double density)
    : freqs(std::move(w)), coeffs(std::move(c)), window(window_half_width) {
    if (freqs.empty())
        throw std::invalid_argument("ExpSumSignal: must have at least one frequency");
    if (coeffs.size() != freqs.size())
        throw std::invalid_argument("ExpSumSignal: coefficient count must match frequencies");
    if (!(window > 0.0))
        throw std::invalid_argument("ExpSumSignal: window must be positive");
    std::vector<double> sorted = freqs;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t j = 1; j < sorted.size(); ++j)
        if (sorted[j] == sorted[j - 1])
            throw std::invalid_argument("ExpSumSignal: frequencies must be distinct");
    if (density > 0.0) {
        grid_density = density;
    } else {
        double wmax = 0.0;
        for (double f : freqs) wmax = std::max(wmax, std::abs(f));
        grid_density = std::max(64.0, 64.0 * wmax / kPi);
    }
}

cplx ExpSumSignal::eval(double x) const {
    KahanSumC s;
    for (std::size_t j = 0; j < freqs.size(); ++j)
        s.add(coeffs[j] * std::polar(1.0, freqs[j] * x));
    return s.value();
}

double ExpSumSignal::norm() const {
    const long n = std::lround(std::ceil(2.0 * window * grid_density));
    const double step = 2.0 * window / static_cast<double>(n);
    double sup = 0.0;
    for (long i = 0; i <= n; ++i)
        sup = std::max(sup, std::abs(eval(-window + step * static_cast<double>(i))));
    return sup;
}

double ExpSumSignal::coeff_abs_sum() const {
    KahanSum s;
    for (const cplx& c : coeffs) s.add(std::abs(c));
    return s.value();
}

double ExpSumSignal::spectral_bound() const {
    double b = 0.0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != cplx{0.0, 0.0}) b = std::max(b, std::abs(freqs[j]));
    return b;
}

SpectralState evolve(const SpectralState& f, double t) {
    SpectralState out = f;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] *= std::polar(1.0, f.spectrum[j] * t);
    return out;
}

ExpSumSignal evolve(const ExpSumSignal& f, double t) {
    ExpSumSignal out = f;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] *= std::polar(1.0, f.freqs[j] * t);
    return out;
}

namespace {

// e^{i lambda z} = e^{-lambda Im z} (cos(lambda Re z) + i sin(lambda Re z))
cplx phase_complex(double lambda, cplx z) {
    return std::exp(-lambda * z.imag()) * std::polar(1.0, lambda * z.real());
}

template <class State>
State evolve_complex_impl(const State& f, cplx z, std::optional<double> im_guard,
                          const std::vector<double>& omegas) {
    const double guard = im_guard ? *im_guard : default_im_guard(f.spectral_bound());
    if (std::abs(z.imag()) > guard)
        throw std::domain_error("evolve_complex: |Im z| exceeds overflow guard");
    State out = f;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] *= phase_complex(omegas[j], z);
    return out;
}

}  // namespace

SpectralState evolve_complex(const SpectralState& f, cplx z, std::optional<double> im_guard) {
    return evolve_complex_impl(f, z, im_guard, f.spectrum.values());
}

ExpSumSignal evolve_complex(const ExpSumSignal& f, cplx z, std::optional<double> im_guard) {
    return evolve_complex_impl(f, z, im_guard, f.freqs);
}

SpectralState apply_generator(const SpectralState& f, int power) {
    if (power < 0) throw std::domain_error("apply_generator: power must be >= 0");
    SpectralState out = f;
    const cplx rot = i_power(power);
    for (std::size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] *= rot * std::pow(f.spectrum[j], power);
    return out;
}

ExpSumSignal apply_generator(const ExpSumSignal& f, int power) {
    if (power < 0) throw std::domain_error("apply_generator: power must be >= 0");
    ExpSumSignal out = f;
    const cplx rot = i_power(power);
    for (std::size_t j = 0; j < out.coeffs.size(); ++j)
        out.coeffs[j] *= rot * std::pow(f.freqs[j], power);
    return out;
}

cplx dual_pair(const SpectralState& f, const DualFunctional& g) {
    if (g.kind != DualFunctional::Kind::coefficient_projection)
        throw std::invalid_argument("dual_pair: spectral backend expects a coefficient projection");
    if (g.index >= f.coeffs.size())
        throw std::invalid_argument("dual_pair: projection index out of range");
    return f.coeffs[g.index];
}

cplx dual_pair(const ExpSumSignal& f, const DualFunctional& g) {
    if (g.kind != DualFunctional::Kind::point_evaluation)
        throw std::invalid_argument("dual_pair: translation backend expects a point evaluation");
    return f.eval(g.x0);
}

bool bernstein_membership(const SpectralState& f, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("bernstein_membership: sigma must be > 0");
    return f.spectral_bound() <= sigma;
}

bool bernstein_membership(const ExpSumSignal& f, double sigma) {
    if (!(sigma > 0.0)) throw std::domain_error("bernstein_membership: sigma must be > 0");
    return f.spectral_bound() <= sigma;
}

double norm_upper_bound(const SpectralState& f) { return f.norm(); }
double norm_upper_bound(const ExpSumSignal& f) { return f.coeff_abs_sum(); }

SpectralState zero_like(const SpectralState& f) {
    SpectralState out = f;
    std::fill(out.coeffs.begin(), out.coeffs.end(), cplx{0.0, 0.0});
    return out;
}

ExpSumSignal zero_like(const ExpSumSignal& f) {
    ExpSumSignal out = f;
    std::fill(out.coeffs.begin(), out.coeffs.end(), cplx{0.0, 0.0});
    return out;
}

SpectralState operator+(const SpectralState& a, const SpectralState& b) {
    check_compatible(a, b);
    SpectralState out = a;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += b.coeffs[j];
    return out;
}

SpectralState operator-(const SpectralState& a, const SpectralState& b) {
    check_compatible(a, b);
    SpectralState out = a;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= b.coeffs[j];
    return out;
}

SpectralState operator*(cplx w, const SpectralState& a) {
    SpectralState out = a;
    for (cplx& c : out.coeffs) c *= w;
    return out;
}

ExpSumSignal operator+(const ExpSumSignal& a, const ExpSumSignal& b) {
    check_compatible(a, b);
    ExpSumSignal out = a;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] += b.coeffs[j];
    return out;
}

ExpSumSignal operator-(const ExpSumSignal& a, const ExpSumSignal& b) {
    check_compatible(a, b);
    ExpSumSignal out = a;
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= b.coeffs[j];
    return out;
}

ExpSumSignal operator*(cplx w, const ExpSumSignal& a) {
    ExpSumSignal out = a;
    for (cplx& c : out.coeffs) c *= w;
    return out;
}

}  // namespace gsamp
