#pragma once

#include <string>

#include "otto/infotheory.hpp"
#include "otto/propagator.hpp"
#include "otto/protocol.hpp"
#include "otto/thermal.hpp"

namespace otto {

struct CycleConfig {
    ProtocolParams protocol;
    BathParams hot;
    BathParams cold;
    bool dephased = false;      // erase eigenbasis coherence after the hot stroke
    bool exact_closure = false; // replace the cold stroke with an exact reset
    double propagator_tol = tol::propagator_tol_default;
    void validate() const;
};

// States at the stroke boundaries, starting from the cold Gibbs state.
struct KeyStates {
    DensityMatrix rho0;      // cold Gibbs state of H(0)
    DensityMatrix rho_tau1;  // after the expansion drive
    DensityMatrix rho_tau2;  // after the hot contact (dephased if configured)
    DensityMatrix rho_tau3;  // after the compression drive
    DensityMatrix rho_tau4;  // after the cold contact (rho0 in exact closure)
};

enum class OperatingMode { heat_engine, refrigerator, heater, other };
std::string to_string(OperatingMode m);

// Scalar outputs of one cycle evaluation. Energies in units of hbar*omega0,
// entropic quantities in nats, power in hbar*omega0 per second. eta and the
// lags are NaN when the hot heat vanishes.
struct CycleReport {
    double w1 = 0.0, w3 = 0.0, qh = 0.0, qc = 0.0, wnet = 0.0;
    double eta = 0.0;          // -wnet/qh
    double eta_deph_ref = 0.0; // efficiency of the dephased twin cycle
    double eta_otto = 0.0, eta_carnot = 0.0;
    double power = 0.0;
    double sigma_total = 0.0, sigma_pop = 0.0, sigma_coh = 0.0;
    double friction = 0.0, friction_pop = 0.0, friction_coh = 0.0;
    double lag_therm = 0.0, lag_qs = 0.0;
    double e_inter = 0.0; // third-stroke energy excess over the dephased twin
    double coh_tau1 = 0.0, coh_tau2 = 0.0, coh_tau3 = 0.0;
    double xi = 0.0; // expansion transition probability
    double closure_residual = 0.0; // trace distance of rho_tau4 to rho0
    double energy_residual = 0.0;  // |E(rho_tau4) - E(rho0)|
    double entropy_residual = 0.0; // |dS(hot stroke) + dS(cold stroke)|
    OperatingMode mode = OperatingMode::other;
};

struct CycleResult {
    KeyStates states;
    CycleReport report;
};

// Propagators and bases shared by every evaluation of a given protocol;
// build once and reuse across points of a thermalization-time sweep.
struct StrokeOperators {
    Mat2c h0, h1;
    EigenSystem2 basis0, basis1;
    StrokePropagator expansion, compression;
    TransitionData trans;
};

StrokeOperators build_strokes(const ProtocolParams& p, double tol);

CycleResult run_cycle(const CycleConfig& cfg);
CycleResult run_cycle(const CycleConfig& cfg, const StrokeOperators& ops);

double internal_energy(const DensityMatrix& rho, const Mat2c& h);

struct WorksHeats {
    double w1 = 0.0, w3 = 0.0, qh = 0.0, qc = 0.0;
    double wnet() const { return w1 + w3; }
    double sum() const { return w1 + w3 + qh + qc; }
};

// Energies in rad/s (hbar = 1); qc is defined against the initial energy, so
// the four terms telescope to zero regardless of closure.
WorksHeats works_and_heats(const KeyStates& ks, const ProtocolParams& p);

struct EfficiencyPower {
    double eta = 0.0;   // NaN when qh == 0
    double power = 0.0;
};
EfficiencyPower efficiency_and_power(const WorksHeats& wh, double tau_cycle);

struct EntropySplit {
    double total = 0.0, population = 0.0, coherence = 0.0;
};

// Entropy produced over one cycle from the thermal divergences of the key
// states, split into population and coherence parts.
EntropySplit entropy_production(const KeyStates& ks, const BathParams& hot,
                                const BathParams& cold, const ProtocolParams& p);

// Nonnegative divergence combination measuring the gap to the frictionless
// (transitionless) cycle, split like entropy_production.
EntropySplit quantum_friction(const KeyStates& ks, const BathParams& hot,
                              const BathParams& cold, const ProtocolParams& p);

// Third-stroke energy difference between the configured engine and its
// dephased twin (zero when the engine is itself dephased).
double interference_energy(const CycleConfig& cfg);

OperatingMode classify_mode(double w1, double w3, double qh, double qc);

struct EnginePair {
    CycleResult original;
    CycleResult dephased;
    StrokeOperators ops;
};

// Evaluates the original and dephased engines on identical parameters and
// shared propagators.
EnginePair compare_engines(const CycleConfig& cfg);
EnginePair compare_engines(const CycleConfig& cfg, const StrokeOperators& ops);

} // namespace otto
