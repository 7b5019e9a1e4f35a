// summation.hpp — compensated (Kahan) accumulators for scalars and
// coefficient-vector states.
//
// All series in this library are summed in a fixed symmetric order
// (k = 0, +1, -1, +2, -2, ...) with compensated accumulation, so results
// are reproducible bit-for-bit regardless of how terms were produced.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace gsamp {

using cplx = std::complex<double>;

struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    double value() const { return sum; }
};

struct KahanSumC {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};

    void add(cplx x) {
        cplx y = x - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    cplx value() const { return sum; }
};

// Compensated accumulation of weighted states:  acc += w * s, coefficient-wise.
// State must expose a `coeffs` vector of cplx (both backends do).
template <class State>
class StateAccumulator {
public:
    explicit StateAccumulator(State zero)
        : acc_(std::move(zero)), comp_(acc_.coeffs.size(), cplx{0.0, 0.0}) {}

    void add_scaled(const State& s, cplx w) {
        if (s.coeffs.size() != acc_.coeffs.size())
            throw std::invalid_argument("StateAccumulator: incompatible state size");
        for (std::size_t i = 0; i < acc_.coeffs.size(); ++i) {
            cplx y = w * s.coeffs[i] - comp_[i];
            cplx t = acc_.coeffs[i] + y;
            comp_[i] = (t - acc_.coeffs[i]) - y;
            acc_.coeffs[i] = t;
        }
    }

    const State& value() const& { return acc_; }
    State take() && { return std::move(acc_); }

private:
    State acc_;
    std::vector<cplx> comp_;
};

}  // namespace gsamp
