#include "gsamp/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gsamp {

namespace {

using nlohmann::json;

std::vector<cplx> parse_coeffs(const json& j) {
    if (!j.is_array()) throw ParseError("\"coeffs\" must be an array of [re, im] pairs");
    std::vector<cplx> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
            throw ParseError("coefficient entries must be [re, im] number pairs");
        out.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return out;
}

std::vector<double> parse_reals(const json& j, const char* name) {
    if (!j.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_number()) throw ParseError(std::string("\"") + name + "\" entries must be numbers");
        out.push_back(e.get<double>());
    }
    return out;
}

json coeffs_to_json(const std::vector<cplx>& cs) {
    json out = json::array();
    for (const cplx& c : cs) out.push_back({c.real(), c.imag()});
    return out;
}

}  // namespace

AnyState parse_state_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("state file must be a JSON object");
    try {
        if (j.contains("spectrum")) {
            return SpectralState(Spectrum(parse_reals(j.at("spectrum"), "spectrum")),
                                 parse_coeffs(j.at("coeffs")));
        }
        if (j.contains("freqs")) {
            if (!j.contains("window") || !j.at("window").is_number())
                throw ParseError("exponential-sum state requires a numeric \"window\"");
            const double density =
                j.contains("grid_density") ? j.at("grid_density").get<double>() : 0.0;
            return ExpSumSignal(parse_reals(j.at("freqs"), "freqs"),
                                parse_coeffs(j.at("coeffs")),
                                j.at("window").get<double>(), density);
        }
    } catch (const json::exception& e) {
        throw ParseError(std::string("state schema violation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid state: ") + e.what());
    }
    throw ParseError("state object must contain \"spectrum\" or \"freqs\"");
}

AnyState load_state_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open state file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_state_json(buf.str());
}

std::string state_to_json(const SpectralState& f) {
    json j;
    j["spectrum"] = f.spectrum.values();
    j["coeffs"] = coeffs_to_json(f.coeffs);
    return j.dump(2);
}

std::string state_to_json(const ExpSumSignal& f) {
    json j;
    j["freqs"] = f.freqs;
    j["coeffs"] = coeffs_to_json(f.coeffs);
    j["window"] = f.window;
    j["grid_density"] = f.grid_density;
    return j.dump(2);
}

void save_state_file(const std::string& path, const AnyState& state) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write state file: " + path);
    std::visit([&](const auto& s) { out << state_to_json(s) << "\n"; }, state);
}

}  // namespace gsamp
