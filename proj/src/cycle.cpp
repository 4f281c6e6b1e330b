#include "otto/cycle.hpp"

#include <cmath>
#include <limits>

#include "otto/errors.hpp"

namespace otto {

namespace {

DensityMatrix conjugate(const Mat2c& u, const DensityMatrix& rho) {
    return DensityMatrix(u * rho.matrix() * adjoint(u));
}

std::array<double, 2> gibbs_weights(double beta, double gap) {
    const double p0 = 1.0 / (1.0 + std::exp(-beta * gap));
    return {p0, 1.0 - p0};
}

} // namespace

void CycleConfig::validate() const {
    protocol.validate();
    hot.validate();
    cold.validate();
    if (!(propagator_tol > 0.0))
        throw DomainError("propagator tolerance must be positive");
}

std::string to_string(OperatingMode m) {
    switch (m) {
        case OperatingMode::heat_engine: return "heat_engine";
        case OperatingMode::refrigerator: return "refrigerator";
        case OperatingMode::heater: return "heater";
        case OperatingMode::other: return "other";
    }
    return "other";
}

StrokeOperators build_strokes(const ProtocolParams& p, double tol) {
    StrokeOperators ops{.h0 = h_exp(p, 0.0),
                        .h1 = h_exp(p, p.tau1),
                        .basis0 = {},
                        .basis1 = {},
                        .expansion = detail::expansion_propagator(p, tol),
                        .compression = detail::compression_propagator(p, tol),
                        .trans = {}};
    ops.basis0 = herm_eig(ops.h0);
    ops.basis1 = herm_eig(ops.h1);
    ops.trans = detail::transition_from(ops.expansion.u, ops.compression.u,
                                        ops.basis0, ops.basis1);
    return ops;
}

double internal_energy(const DensityMatrix& rho, const Mat2c& h) {
    return trace(h * rho.matrix()).real();
}

WorksHeats works_and_heats(const KeyStates& ks, const ProtocolParams& p) {
    const Mat2c h0 = h_exp(p, 0.0);
    const Mat2c h1 = h_exp(p, p.tau1);
    const double e0 = internal_energy(ks.rho0, h0);
    const double e1 = internal_energy(ks.rho_tau1, h1);
    const double e2 = internal_energy(ks.rho_tau2, h1);
    const double e3 = internal_energy(ks.rho_tau3, h0);
    return {e1 - e0, e3 - e2, e2 - e1, e0 - e3};
}

EfficiencyPower efficiency_and_power(const WorksHeats& wh, double tau_cycle) {
    EfficiencyPower out;
    out.power = -wh.wnet() / tau_cycle;
    out.eta = (wh.qh == 0.0) ? std::numeric_limits<double>::quiet_NaN()
                             : -wh.wnet() / wh.qh;
    return out;
}

EntropySplit entropy_production(const KeyStates& ks, const BathParams& hot,
                                const BathParams& cold, const ProtocolParams& p) {
    const Mat2c h0 = h_exp(p, 0.0);
    const Mat2c h1 = h_exp(p, p.tau1);
    const EigenSystem2 basis0 = herm_eig(h0);
    const EigenSystem2 basis1 = herm_eig(h1);
    const DensityMatrix eq_h = gibbs(h1, hot.beta);
    const DensityMatrix eq_c = gibbs(h0, cold.beta);

    const DivergenceSplit d1 = decompose_divergence(ks.rho_tau1, eq_h, basis1);
    const DivergenceSplit d2 = decompose_divergence(ks.rho_tau2, eq_h, basis1);
    const DivergenceSplit d3 = decompose_divergence(ks.rho_tau3, eq_c, basis0);

    EntropySplit out;
    out.total = d1.total() - d2.total() + d3.total();
    out.population = d1.population - d2.population + d3.population;
    out.coherence = d1.coherence - d2.coherence + d3.coherence;
    return out;
}

EntropySplit quantum_friction(const KeyStates& ks, const BathParams& hot,
                              const BathParams& cold, const ProtocolParams& p) {
    const Mat2c h0 = h_exp(p, 0.0);
    const Mat2c h1 = h_exp(p, p.tau1);
    const EigenSystem2 basis0 = herm_eig(h0);
    const EigenSystem2 basis1 = herm_eig(h1);

    // Transitionless references: cold weights carried to the tau1 basis, hot
    // weights carried back to the initial basis.
    const DensityMatrix qs_c =
        quasistatic_state(gibbs_weights(cold.beta, basis0.gap()), basis1);
    const DensityMatrix qs_h =
        quasistatic_state(gibbs_weights(hot.beta, basis1.gap()), basis0);
    const DensityMatrix eq_h = gibbs(h1, hot.beta);

    const double ratio = (p.omega0 * cold.beta) / (p.omega_tau1 * hot.beta);

    const DivergenceSplit d1 = decompose_divergence(ks.rho_tau1, qs_c, basis1);
    const DivergenceSplit d2 = decompose_divergence(ks.rho_tau2, eq_h, basis1);
    const DivergenceSplit d3 = decompose_divergence(ks.rho_tau3, qs_h, basis0);

    EntropySplit out;
    out.total = d1.total() + ratio * (d3.total() - d2.total());
    out.population = d1.population + ratio * (d3.population - d2.population);
    out.coherence = d1.coherence + ratio * (d3.coherence - d2.coherence);
    return out;
}

OperatingMode classify_mode(double w1, double w3, double qh, double qc) {
    const double wnet = w1 + w3;
    if (wnet < 0.0 && qh > 0.0) return OperatingMode::heat_engine;
    if (wnet > 0.0 && qh < 0.0 && qc > 0.0) return OperatingMode::refrigerator;
    if (wnet > 0.0 && qh < 0.0 && qc < 0.0) return OperatingMode::heater;
    return OperatingMode::other;
}

CycleResult run_cycle(const CycleConfig& cfg, const StrokeOperators& ops) {
    cfg.validate();
    const ProtocolParams& p = cfg.protocol;

    const DensityMatrix rho0 = gibbs(ops.h0, cfg.cold.beta);
    const DensityMatrix rho1 = conjugate(ops.expansion.u, rho0);
    const DensityMatrix rho2_contact =
        thermalize_analytic(rho1, ops.h1, cfg.hot, p.tau_therm_h);
    const DensityMatrix rho2 =
        cfg.dephased ? dephase(rho2_contact, ops.basis1) : rho2_contact;
    const DensityMatrix rho3 = conjugate(ops.compression.u, rho2);
    const DensityMatrix rho4 =
        cfg.exact_closure ? rho0
                          : thermalize_analytic(rho3, ops.h0, cfg.cold, p.tau_therm_c);

    KeyStates ks{rho0, rho1, rho2, rho3, rho4};

    // Dephased twin of this cycle; identical to it when already dephased.
    const DensityMatrix rho2_twin =
        cfg.dephased ? rho2 : dephase(rho2, ops.basis1);
    const DensityMatrix rho3_twin = conjugate(ops.compression.u, rho2_twin);

    const WorksHeats wh = works_and_heats(ks, p);
    const EfficiencyPower ep = efficiency_and_power(wh, p.tau_cycle());
    const EntropySplit sigma = entropy_production(ks, cfg.hot, cfg.cold, p);
    const EntropySplit fric = quantum_friction(ks, cfg.hot, cfg.cold, p);

    const double e3_twin = internal_energy(rho3_twin, ops.h0);
    const double e2_twin = internal_energy(rho2_twin, ops.h1);
    const double w3_twin = e3_twin - e2_twin;
    const double wnet_twin = wh.w1 + w3_twin;
    const double eta_twin = (wh.qh == 0.0)
                                ? std::numeric_limits<double>::quiet_NaN()
                                : -wnet_twin / wh.qh;

    const double w0 = p.omega0; // report scale: hbar * omega0
    const double beta_c_qh = cfg.cold.beta * wh.qh;

    CycleReport r;
    r.w1 = wh.w1 / w0;
    r.w3 = wh.w3 / w0;
    r.qh = wh.qh / w0;
    r.qc = wh.qc / w0;
    r.wnet = wh.wnet() / w0;
    r.eta = ep.eta;
    r.eta_deph_ref = eta_twin;
    r.eta_otto = 1.0 - p.omega0 / p.omega_tau1;
    r.eta_carnot = 1.0 - cfg.hot.beta / cfg.cold.beta;
    r.power = ep.power / w0;
    r.sigma_total = sigma.total;
    r.sigma_pop = sigma.population;
    r.sigma_coh = sigma.coherence;
    r.friction = fric.total;
    r.friction_pop = fric.population;
    r.friction_coh = fric.coherence;
    r.lag_therm = (wh.qh == 0.0) ? std::numeric_limits<double>::quiet_NaN()
                                 : sigma.total / beta_c_qh;
    r.lag_qs = (wh.qh == 0.0) ? std::numeric_limits<double>::quiet_NaN()
                              : fric.total / beta_c_qh;
    r.e_inter = (internal_energy(rho3, ops.h0) - e3_twin) / w0;
    r.coh_tau1 = rel_entropy_coherence(rho1, ops.basis1);
    r.coh_tau2 = rel_entropy_coherence(rho2, ops.basis1);
    r.coh_tau3 = rel_entropy_coherence(rho3, ops.basis0);
    r.xi = ops.trans.xi;
    r.closure_residual = trace_distance(rho4, rho0);
    r.energy_residual =
        std::abs(internal_energy(rho4, ops.h0) - internal_energy(rho0, ops.h0)) / w0;
    const double ds_hot = vn_entropy(rho2) - vn_entropy(rho1);
    const double ds_cold = vn_entropy(rho4) - vn_entropy(rho3);
    r.entropy_residual = std::abs(ds_hot + ds_cold);
    r.mode = classify_mode(wh.w1, wh.w3, wh.qh, wh.qc);

    return {std::move(ks), r};
}

CycleResult run_cycle(const CycleConfig& cfg) {
    cfg.validate();
    return run_cycle(cfg, build_strokes(cfg.protocol, cfg.propagator_tol));
}

double interference_energy(const CycleConfig& cfg) {
    return run_cycle(cfg).report.e_inter;
}

EnginePair compare_engines(const CycleConfig& cfg, const StrokeOperators& ops) {
    CycleConfig orig = cfg;
    orig.dephased = false;
    CycleConfig deph = cfg;
    deph.dephased = true;
    return {run_cycle(orig, ops), run_cycle(deph, ops), ops};
}

EnginePair compare_engines(const CycleConfig& cfg) {
    cfg.validate();
    return compare_engines(cfg, build_strokes(cfg.protocol, cfg.propagator_tol));
}

} // namespace otto
