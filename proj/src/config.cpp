#include "otto/config.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "otto/errors.hpp"

namespace otto {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

struct RawConfig {
    std::map<std::string, std::string> kv;
    bool has(const std::string& k) const { return kv.count(k) != 0; }
};

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r");
    size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return std::string(s.substr(b, e - b + 1));
}

RawConfig tokenize(std::string_view text) {
    RawConfig raw;
    size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view line_v =
            text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++lineno;

        std::string line(line_v);
        if (size_t hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty()) continue;

        size_t eq = line.find('=');
        if (eq == std::string::npos) {
            std::ostringstream os;
            os << "line " << lineno << " is not of the form key = value";
            throw ParseError(os.str(), trim(line));
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            std::ostringstream os;
            os << "line " << lineno << " has an empty key or value";
            throw ParseError(os.str(), key);
        }
        if (raw.kv.count(key)) {
            throw ParseError("duplicate key " + key, key);
        }
        raw.kv[key] = value;
    }
    return raw;
}

double get_double(RawConfig& raw, const std::string& key, double fallback) {
    auto it = raw.kv.find(key);
    if (it == raw.kv.end()) return fallback;
    const std::string value = it->second;
    raw.kv.erase(it);
    try {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("value for " + key + " is not a number: " + value, key);
    }
}

int get_int(RawConfig& raw, const std::string& key, int fallback) {
    const double v = get_double(raw, key, fallback);
    if (v != std::floor(v)) {
        throw ParseError("value for " + key + " must be an integer", key);
    }
    return static_cast<int>(v);
}

bool get_bool(RawConfig& raw, const std::string& key, bool fallback) {
    auto it = raw.kv.find(key);
    if (it == raw.kv.end()) return fallback;
    const std::string value = it->second;
    raw.kv.erase(it);
    if (value == "true") return true;
    if (value == "false") return false;
    throw ParseError("value for " + key + " must be true or false: " + value, key);
}

std::string get_string(RawConfig& raw, const std::string& key,
                       const std::string& fallback) {
    auto it = raw.kv.find(key);
    if (it == raw.kv.end()) return fallback;
    const std::string value = it->second;
    raw.kv.erase(it);
    return value;
}

void require_positive(double v, const std::string& key) {
    if (!(v > 0.0)) {
        std::ostringstream os;
        os << key << " must be positive, got " << v;
        throw ParseError(os.str(), key);
    }
}

} // namespace

void SweepSpec::validate() const {
    if (!(start < stop)) throw DomainError("sweep start must be below stop");
    if (points < 2) throw DomainError("sweep needs at least 2 points");
    if (!run_original && !run_dephased)
        throw DomainError("sweep must request at least one engine variant");
}

std::string axis_name(SweepSpec::Axis axis) {
    return axis == SweepSpec::Axis::tau1 ? "tau1_ms" : "tau_therm_h_ms";
}

ParsedConfig parse_config(std::string_view text) {
    RawConfig raw = tokenize(text);
    ParsedConfig out;

    const double omega0_hz = get_double(raw, "protocol.omega0_hz", 2000.0);
    const double omega1_hz = get_double(raw, "protocol.omega_tau1_hz", 3600.0);
    const double tau1_ms = get_double(raw, "protocol.tau1_ms", 0.46);
    const double tau_th_ms = get_double(raw, "protocol.tau_therm_h_ms", 75.15);
    require_positive(omega0_hz, "protocol.omega0_hz");
    require_positive(omega1_hz, "protocol.omega_tau1_hz");
    require_positive(tau1_ms, "protocol.tau1_ms");
    if (tau_th_ms < 0.0)
        throw ParseError("protocol.tau_therm_h_ms must be nonnegative",
                         "protocol.tau_therm_h_ms");

    ProtocolParams& p = out.cycle.protocol;
    p.omega0 = two_pi * omega0_hz;
    p.omega_tau1 = two_pi * omega1_hz;
    p.tau1 = 1e-3 * tau1_ms;
    p.tau_therm_h = 1e-3 * tau_th_ms;

    // Dimensionless beta * gap at the held Hamiltonian of each contact.
    const double beta_c_hw = get_double(raw, "bath_cold.beta_hw", 2.0);
    const double beta_h_hw = get_double(raw, "bath_hot.beta_hw", 0.5);
    const double gamma0_c = get_double(raw, "bath_cold.gamma0_hz", 1.0);
    const double gamma0_h = get_double(raw, "bath_hot.gamma0_hz", 1.0);
    require_positive(beta_c_hw, "bath_cold.beta_hw");
    require_positive(beta_h_hw, "bath_hot.beta_hw");
    require_positive(gamma0_c, "bath_cold.gamma0_hz");
    require_positive(gamma0_h, "bath_hot.gamma0_hz");
    out.cycle.cold = {beta_c_hw / p.omega0, gamma0_c};
    out.cycle.hot = {beta_h_hw / p.omega_tau1, gamma0_h};

    // Cold contact long enough for approximate closure unless overridden.
    const double tau_relax_c = rates(out.cycle.cold, p.omega0).relaxation_time();
    const double tau_tc_default_ms = 6.56 * tau_relax_c * 1e3;
    const double tau_tc_ms =
        get_double(raw, "protocol.tau_therm_c_ms", tau_tc_default_ms);
    if (tau_tc_ms < 0.0)
        throw ParseError("protocol.tau_therm_c_ms must be nonnegative",
                         "protocol.tau_therm_c_ms");
    p.tau_therm_c = 1e-3 * tau_tc_ms;

    out.cycle.dephased = get_bool(raw, "cycle.dephased", false);
    out.cycle.exact_closure = get_bool(raw, "cycle.exact_closure", false);
    out.cycle.propagator_tol = get_double(raw, "cycle.propagator_tol",
                                          tol::propagator_tol_default);
    require_positive(out.cycle.propagator_tol, "cycle.propagator_tol");

    const std::string axis = get_string(raw, "sweep.axis", "tau1");
    if (axis == "tau1") {
        out.sweep.axis = SweepSpec::Axis::tau1;
    } else if (axis == "tau_therm_h") {
        out.sweep.axis = SweepSpec::Axis::tau_therm_h;
    } else {
        throw ParseError("sweep.axis must be tau1 or tau_therm_h, got " + axis,
                         "sweep.axis");
    }
    const bool tau1_axis = out.sweep.axis == SweepSpec::Axis::tau1;
    out.sweep.start =
        1e-3 * get_double(raw, "sweep.start_ms", tau1_axis ? 0.05 : 1.0);
    out.sweep.stop =
        1e-3 * get_double(raw, "sweep.stop_ms", tau1_axis ? 3.0 : 500.0);
    out.sweep.points = get_int(raw, "sweep.points", tau1_axis ? 600 : 2000);
    const std::string variants = get_string(raw, "sweep.variants", "both");
    if (variants == "both") {
        out.sweep.run_original = out.sweep.run_dephased = true;
    } else if (variants == "original") {
        out.sweep.run_original = true;
        out.sweep.run_dephased = false;
    } else if (variants == "dephased") {
        out.sweep.run_original = false;
        out.sweep.run_dephased = true;
    } else {
        throw ParseError(
            "sweep.variants must be both, original or dephased, got " + variants,
            "sweep.variants");
    }

    if (!raw.kv.empty()) {
        const std::string& key = raw.kv.begin()->first;
        throw ParseError("unknown key " + key, key);
    }

    if (!(out.sweep.start < out.sweep.stop))
        throw ParseError("sweep.start_ms must be below sweep.stop_ms",
                         "sweep.start_ms");
    if (out.sweep.points < 2)
        throw ParseError("sweep.points must be at least 2", "sweep.points");

    out.cycle.validate();
    return out;
}

std::string default_config_text() {
    return "# engine protocol\n"
           "protocol.omega0_hz      = 2000.0\n"
           "protocol.omega_tau1_hz  = 3600.0\n"
           "protocol.tau1_ms        = 0.46\n"
           "protocol.tau_therm_h_ms = 75.15\n"
           "# protocol.tau_therm_c_ms defaults to 6.56 * cold relaxation time\n"
           "\n"
           "# reservoirs: beta_hw is beta times the gap held during contact\n"
           "bath_cold.beta_hw   = 2.0\n"
           "bath_cold.gamma0_hz = 1.0\n"
           "bath_hot.beta_hw    = 0.5\n"
           "bath_hot.gamma0_hz  = 1.0\n"
           "\n"
           "cycle.dephased       = false\n"
           "cycle.exact_closure  = false\n"
           "cycle.propagator_tol = 1e-10\n"
           "\n"
           "sweep.axis     = tau1\n"
           "sweep.start_ms = 0.05\n"
           "sweep.stop_ms  = 3.0\n"
           "sweep.points   = 600\n"
           "sweep.variants = both\n";
}

} // namespace otto
