// group_models.hpp — the two exact finite models of a one-parameter isometry
// group e^{tD} and its generator D.
//
// Spectral backend (Hilbert, l2 norm):
//   a state is a coefficient vector over a finite real spectrum {lambda_j};
//   the generator acts as multiplication by i*lambda_j, the group as the
//   phase e^{i lambda_j t}.  Norms, pairings and spectral supports are exact.
//
// Translation backend (Banach, sup norm):
//   a state is a finite exponential sum f(x) = sum_j c_j e^{i omega_j x};
//   e^{tD} is translation f(. + t), D is d/dx.  The sup norm is bracketed by
//   a grid supremum over [-L, L] (lower bound) and sum_j |c_j| (upper bound);
//   the grid value is what norm() reports.
//
// The generator has purely imaginary spectrum {i lambda_j} in both models, so
// ||D^k f|| = ||lambda^k c|| and the self-adjoint reading (Schrodinger group
// e^{itD} with real D) is the same model.

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

namespace gsamp {

using cplx = std::complex<double>;

// Finite, strictly increasing set of real eigen-frequencies.
class Spectrum {
public:
    Spectrum() = default;
    explicit Spectrum(std::vector<double> lambdas);

    std::size_t size() const { return lambdas_.size(); }
    double operator[](std::size_t j) const { return lambdas_[j]; }
    const std::vector<double>& values() const { return lambdas_; }

    friend bool operator==(const Spectrum& a, const Spectrum& b) = default;

private:
    std::vector<double> lambdas_;
};

struct SpectralState {
    Spectrum spectrum;
    std::vector<cplx> coeffs;

    SpectralState() = default;
    SpectralState(Spectrum sp, std::vector<cplx> c);

    double norm() const;            // sqrt(sum |c_j|^2), exact
    double spectral_bound() const;  // max |lambda_j| over nonzero coeffs (0 if none)
};

struct ExpSumSignal {
    std::vector<double> freqs;
    std::vector<cplx> coeffs;
    double window = 8.0;        // sup-norm estimation half-width L
    double grid_density = 64.0; // grid points per unit length

    ExpSumSignal() = default;
    ExpSumSignal(std::vector<double> w, std::vector<cplx> c, double window_half_width,
                 double density = 0.0);

    cplx eval(double x) const;      // sum_j c_j e^{i omega_j x}
    double norm() const;            // grid supremum of |f| over [-L, L]
    double coeff_abs_sum() const;   // sum_j |c_j|, an upper bound for the sup norm
    double spectral_bound() const;  // max |omega_j| over nonzero coeffs
};

// Bounded functional of norm 1: a coefficient projection (spectral backend)
// or a point evaluation (translation backend).
struct DualFunctional {
    enum class Kind { coefficient_projection, point_evaluation };

    Kind kind = Kind::coefficient_projection;
    std::size_t index = 0;
    double x0 = 0.0;

    static DualFunctional projection(std::size_t j) {
        return {Kind::coefficient_projection, j, 0.0};
    }
    static DualFunctional point_eval(double x) {
        return {Kind::point_evaluation, 0, x};
    }
    double norm() const { return 1.0; }
};

// --- group action, generator, pairings ------------------------------------

SpectralState evolve(const SpectralState& f, double t);
ExpSumSignal evolve(const ExpSumSignal& f, double t);

// Complexified group action c_j -> e^{i lambda_j z} c_j.  |Im z| is guarded
// against overflow; the default guard is 50 / spectral_bound(f).
SpectralState evolve_complex(const SpectralState& f, cplx z,
                             std::optional<double> im_guard = std::nullopt);
ExpSumSignal evolve_complex(const ExpSumSignal& f, cplx z,
                            std::optional<double> im_guard = std::nullopt);

SpectralState apply_generator(const SpectralState& f, int power = 1);
ExpSumSignal apply_generator(const ExpSumSignal& f, int power = 1);

cplx dual_pair(const SpectralState& f, const DualFunctional& g);
cplx dual_pair(const ExpSumSignal& f, const DualFunctional& g);

// True iff every nonzero coefficient sits at |lambda_j| <= sigma.
bool bernstein_membership(const SpectralState& f, double sigma);
bool bernstein_membership(const ExpSumSignal& f, double sigma);

// Certified upper bound on the backend norm: exact for the spectral backend,
// sum_j |c_j| for the translation backend (whose grid norm is a lower bound).
double norm_upper_bound(const SpectralState& f);
double norm_upper_bound(const ExpSumSignal& f);

// --- linear state algebra ---------------------------------------------------

SpectralState zero_like(const SpectralState& f);
ExpSumSignal zero_like(const ExpSumSignal& f);

SpectralState operator+(const SpectralState& a, const SpectralState& b);
SpectralState operator-(const SpectralState& a, const SpectralState& b);
SpectralState operator*(cplx w, const SpectralState& a);
ExpSumSignal operator+(const ExpSumSignal& a, const ExpSumSignal& b);
ExpSumSignal operator-(const ExpSumSignal& a, const ExpSumSignal& b);
ExpSumSignal operator*(cplx w, const ExpSumSignal& a);

}  // namespace gsamp
