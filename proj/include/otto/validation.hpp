#pragma once

#include <vector>

#include "otto/cycle.hpp"

namespace otto {

// Residuals of the relations the engine quantities satisfy by construction
// (evaluated from finished reports, not from the internals that produced
// them). All entries except interference_phase_literal are expected at
// rounding level; that one records the phase-convention discrepancy of the
// closed-form interference expression and is reported, not asserted.
struct IdentityResiduals {
    double carnot_gap = 0.0;        // eta = eta_carnot - sigma/(beta_c qh)
    double otto_gap = 0.0;          // eta = eta_otto - friction/(beta_c qh)
    double entropy_friction_link = 0.0; // sigma = beta_c qh (eta_C - eta_O) + F
    double divergence_split = 0.0;  // total = population + coherence
    double efficiency_pairing = 0.0; // eta = eta_deph - e_inter/qh
    double power_pairing = 0.0;      // P = P_deph - e_inter/tau_cycle
    double entropy_pairing = 0.0;    // sigma = sigma_deph + beta_c e_inter
    double friction_pairing = 0.0;   // F = F_deph + beta_c e_inter
    double energy_conservation = 0.0;  // w1 + w3 + qh + qc
    double entropy_conservation = 0.0; // dS_hot + dS_cold
    double transition_symmetry = 0.0;  // compression vs expansion probability
    double lag_difference = 0.0;    // lag_therm - lag_qs = eta_C - eta_O
    double interference_crosscheck = 0.0; // operational vs off-diagonal form
    double interference_phase_literal = 0.0;

    double max_asserted() const;
};

IdentityResiduals compute_identity_residuals(const CycleConfig& cfg,
                                             const EnginePair& pair);

struct SuitePoint {
    double tau1 = 0.0;
    double tau_therm_h = 0.0;
    IdentityResiduals residuals;
};

// Exact-closure engine pairs on a low-discrepancy grid over the drive and
// hot-contact times; the workhorse behind `validate` and the release gate.
std::vector<SuitePoint> identity_suite(const CycleConfig& base, int n_points);

// Largest trace distance between the closed-form relaxation and the
// brute-force integrator over pseudo-random states, both baths, and the
// given contact times. Deterministic (fixed seed).
double oracle_suite_max(const CycleConfig& base, int n_states,
                        const std::vector<double>& taus);

struct OracleCheck {
    double hot_trace_distance = 0.0;
    double cold_trace_distance = 0.0;
};

// Single-config analytic-vs-numeric agreement at the configured contact
// times (diagnostic block of the run report).
OracleCheck oracle_report_check(const CycleConfig& cfg);

// Van der Corput / Halton low-discrepancy sequence member in [0, 1).
double halton(int index, int base);

} // namespace otto
