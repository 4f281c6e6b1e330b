#pragma once

#include "otto/qlinalg.hpp"

namespace otto {

// Cycle schedule. hbar = 1 throughout: frequencies in rad/s, times in s.
// The four strokes run back to back:
//   [0, tau1]      expansion drive, gap omega0 -> omega_tau1
//   [tau1, tau2]   hold at H(tau1), hot-bath contact
//   [tau2, tau3]   compression drive, mirror of the expansion
//   [tau3, tau4]   hold at H(0), cold-bath contact
struct ProtocolParams {
    double omega0 = 0.0;      // rad/s, gap at t = 0
    double omega_tau1 = 0.0;  // rad/s, gap at t = tau1
    double tau1 = 0.0;        // s, drive duration (= tau3 - tau2)
    double tau_therm_h = 0.0; // s, hot-contact duration
    double tau_therm_c = 0.0; // s, cold-contact duration

    double tau2() const { return tau1 + tau_therm_h; }
    double tau3() const { return tau2() + tau1; }
    double tau4() const { return tau3() + tau_therm_c; }
    double tau_cycle() const { return tau4(); }

    // Throws DomainError unless omega0, omega_tau1, tau1 > 0 and the
    // thermalization times are nonnegative.
    void validate() const;
};

// Linear gap ramp on the expansion stroke; domain [0, tau1].
double omega(const ProtocolParams& p, double t);

// Drive Hamiltonians. Each is traceless Hermitian with gap omega(t); the
// drive axis rotates from x at t = 0 to z at t = tau1.
Mat2c h_exp(const ProtocolParams& p, double t);  // domain [0, tau1]
Mat2c h_com(const ProtocolParams& p, double t);  // domain [tau2, tau3]

// Piecewise Hamiltonian over the whole cycle; continuous at the stroke
// boundaries, which belong to the earlier stroke.
Mat2c h_cycle(const ProtocolParams& p, double t); // domain [0, tau4]

EigenSystem2 eigensystem_at(const ProtocolParams& p, double t);

} // namespace otto
