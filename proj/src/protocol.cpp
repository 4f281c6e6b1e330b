#include "otto/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "otto/errors.hpp"

namespace otto {

namespace {

void require_in(double t, double lo, double hi, const char* who) {
    if (!(t >= lo && t <= hi)) {
        std::ostringstream os;
        os << who << ": t = " << t << " outside [" << lo << ", " << hi << "]";
        throw DomainError(os.str());
    }
}

} // namespace

void ProtocolParams::validate() const {
    std::ostringstream os;
    if (!(omega0 > 0.0)) {
        os << "omega0 must be positive, got " << omega0;
        throw DomainError(os.str());
    }
    if (!(omega_tau1 > 0.0)) {
        os << "omega_tau1 must be positive, got " << omega_tau1;
        throw DomainError(os.str());
    }
    if (!(tau1 > 0.0)) {
        os << "tau1 must be positive, got " << tau1;
        throw DomainError(os.str());
    }
    if (!(tau_therm_h >= 0.0)) {
        os << "tau_therm_h must be nonnegative, got " << tau_therm_h;
        throw DomainError(os.str());
    }
    if (!(tau_therm_c >= 0.0)) {
        os << "tau_therm_c must be nonnegative, got " << tau_therm_c;
        throw DomainError(os.str());
    }
}

double omega(const ProtocolParams& p, double t) {
    require_in(t, 0.0, p.tau1, "omega");
    const double x = t / p.tau1;
    return p.omega0 * (1.0 - x) + p.omega_tau1 * x;
}

Mat2c h_exp(const ProtocolParams& p, double t) {
    require_in(t, 0.0, p.tau1, "h_exp");
    const double theta = std::numbers::pi_v<double> * t / (2.0 * p.tau1);
    const double half = 0.5 * omega(p, t);
    const double x = half * std::cos(theta); // sigma_x component
    const double z = half * std::sin(theta); // sigma_z component
    return {z, x, x, -z};
}

Mat2c h_com(const ProtocolParams& p, double t) {
    require_in(t, p.tau2(), p.tau3(), "h_com");
    // The reflected instant can fall an ulp outside the expansion window.
    const double s = std::clamp(p.tau1 + p.tau2() - t, 0.0, p.tau1);
    return h_exp(p, s);
}

Mat2c h_cycle(const ProtocolParams& p, double t) {
    require_in(t, 0.0, p.tau4(), "h_cycle");
    if (t <= p.tau1) return h_exp(p, t);
    if (t <= p.tau2()) return h_exp(p, p.tau1);
    if (t <= p.tau3()) return h_com(p, t);
    return h_exp(p, 0.0);
}

EigenSystem2 eigensystem_at(const ProtocolParams& p, double t) {
    return herm_eig(h_cycle(p, t));
}

} // namespace otto
