// state_io.hpp — JSON problem files for the two backends.
//
// Spectral state:      {"spectrum": [l0, l1, ...], "coeffs": [[re, im], ...]}
// Exponential sum:     {"freqs": [w0, ...], "coeffs": [[re, im], ...],
//                       "window": L, "grid_density": d?}
//
// Complex numbers are [re, im] pairs everywhere.  The loader detects the
// backend from the keys present.

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>

#include "gsamp/group_models.hpp"

namespace gsamp {

// Malformed or schema-violating input; the CLI maps this to E_PARSE.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using AnyState = std::variant<SpectralState, ExpSumSignal>;

AnyState load_state_file(const std::string& path);
AnyState parse_state_json(const std::string& text);

std::string state_to_json(const SpectralState& f);
std::string state_to_json(const ExpSumSignal& f);

void save_state_file(const std::string& path, const AnyState& state);

}  // namespace gsamp
