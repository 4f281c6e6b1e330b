#include "otto/validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace otto {

double IdentityResiduals::max_asserted() const {
    return std::max({carnot_gap, otto_gap, entropy_friction_link,
                     divergence_split, efficiency_pairing, power_pairing,
                     entropy_pairing, friction_pairing, energy_conservation,
                     entropy_conservation, transition_symmetry, lag_difference,
                     interference_crosscheck});
}

IdentityResiduals compute_identity_residuals(const CycleConfig& cfg,
                                             const EnginePair& pair) {
    const CycleReport& r = pair.original.report;
    const CycleReport& d = pair.dephased.report;
    const double beta_c = cfg.cold.beta * cfg.protocol.omega0; // per hbar*omega0
    const double tau_cycle = cfg.protocol.tau_cycle();

    IdentityResiduals out;
    out.carnot_gap = std::abs(r.eta - r.eta_carnot + r.sigma_total / (beta_c * r.qh));
    out.otto_gap = std::abs(r.eta - r.eta_otto + r.friction / (beta_c * r.qh));
    out.entropy_friction_link = std::abs(
        r.sigma_total - beta_c * r.qh * (r.eta_carnot - r.eta_otto) - r.friction);
    out.divergence_split =
        std::max(std::abs(r.sigma_total - r.sigma_pop - r.sigma_coh),
                 std::abs(r.friction - r.friction_pop - r.friction_coh));
    out.efficiency_pairing = std::abs(r.eta - (d.eta - r.e_inter / r.qh));
    out.power_pairing = std::abs(r.power - (d.power - r.e_inter / tau_cycle));
    out.entropy_pairing = std::abs(r.sigma_total - d.sigma_total - beta_c * r.e_inter);
    out.friction_pairing = std::abs(r.friction - d.friction - beta_c * r.e_inter);
    out.energy_conservation =
        std::max(std::abs(r.w1 + r.w3 + r.qh + r.qc),
                 std::abs(d.w1 + d.w3 + d.qh + d.qc));
    out.entropy_conservation = std::max(r.entropy_residual, d.entropy_residual);
    out.transition_symmetry = std::abs(pair.ops.trans.zeta() - pair.ops.trans.xi);
    out.lag_difference =
        std::abs(r.lag_therm - r.lag_qs - (r.eta_carnot - r.eta_otto));

    // Off-diagonal form of the interference energy: the third-stroke excess
    // equals twice the real part of the surviving coherence times the
    // amplitude overlap sum.
    const Mat2c& a = pair.ops.trans.amps_com;
    const cplx overlap = pair.ops.basis0.e0 * a.a01 * std::conj(a.a00) +
                         pair.ops.basis0.e1 * a.a11 * std::conj(a.a10);
    const cplx c2 = sandwich(pair.ops.basis1.v1,
                             pair.original.states.rho_tau2.matrix(),
                             pair.ops.basis1.v0);
    const double w0 = cfg.protocol.omega0;
    const double e_offdiag = 2.0 * (c2 * overlap).real() / w0;
    out.interference_crosscheck = std::abs(r.e_inter - e_offdiag);

    // Same expression with the hot-contact coherence law applied to the
    // drive-end coherence, keeping the opposite rotation sign some closed
    // forms quote; recorded for reference.
    const ThermalRates hot = rates(cfg.hot, pair.ops.basis1.gap());
    const cplx c1 = sandwich(pair.ops.basis1.v1,
                             pair.original.states.rho_tau1.matrix(),
                             pair.ops.basis1.v0);
    const double tau_th = cfg.protocol.tau_therm_h;
    const cplx c2_literal =
        c1 * std::polar(std::exp(-0.5 * hot.gamma_total * tau_th),
                        +pair.ops.basis1.gap() * tau_th);
    const double e_literal = 2.0 * (c2_literal * overlap).real() / w0;
    out.interference_phase_literal = std::abs(r.e_inter - e_literal);

    return out;
}

double halton(int index, int base) {
    double f = 1.0;
    double r = 0.0;
    int i = index;
    while (i > 0) {
        f /= base;
        r += f * (i % base);
        i /= base;
    }
    return r;
}

std::vector<SuitePoint> identity_suite(const CycleConfig& base, int n_points) {
    std::vector<SuitePoint> out;
    out.reserve(n_points);
    for (int k = 0; k < n_points; ++k) {
        CycleConfig cfg = base;
        cfg.exact_closure = true;
        cfg.dephased = false;
        cfg.protocol.tau1 = 1e-3 * (0.05 + (3.0 - 0.05) * halton(k + 1, 2));
        cfg.protocol.tau_therm_h = 1e-3 * (1.0 + (500.0 - 1.0) * halton(k + 1, 3));
        const EnginePair pair = compare_engines(cfg);
        out.push_back({cfg.protocol.tau1, cfg.protocol.tau_therm_h,
                       compute_identity_residuals(cfg, pair)});
    }
    return out;
}

double oracle_suite_max(const CycleConfig& base, int n_states,
                        const std::vector<double>& taus) {
    std::mt19937 rng(20260810u);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);

    const Mat2c h0 = h_exp(base.protocol, 0.0);
    const Mat2c h1 = h_exp(base.protocol, base.protocol.tau1);
    const EigenSystem2 b0 = herm_eig(h0);
    const EigenSystem2 b1 = herm_eig(h1);

    double worst = 0.0;
    for (int s = 0; s < n_states; ++s) {
        BlochVector r;
        do {
            r = {unit(rng), unit(rng), unit(rng)};
        } while (r.norm2() > 1.0);
        for (double tau : taus) {
            const struct {
                const Mat2c& h;
                const EigenSystem2& basis;
                const BathParams& bath;
            } contacts[2] = {{h1, b1, base.hot}, {h0, b0, base.cold}};
            for (const auto& c : contacts) {
                const DensityMatrix rho = rho_from_bloch(r, c.basis);
                const DensityMatrix analytic =
                    thermalize_analytic(rho, c.h, c.bath, tau);
                const int steps =
                    lindblad_default_steps(c.bath, c.basis.gap(), tau);
                const DensityMatrix numeric =
                    lindblad_numeric(rho, c.h, c.bath, tau, steps);
                worst = std::max(worst, trace_distance(analytic, numeric));
            }
        }
    }
    return worst;
}

OracleCheck oracle_report_check(const CycleConfig& cfg) {
    const Mat2c h0 = h_exp(cfg.protocol, 0.0);
    const Mat2c h1 = h_exp(cfg.protocol, cfg.protocol.tau1);
    const EigenSystem2 b1 = herm_eig(h1);

    const StrokeOperators ops = build_strokes(cfg.protocol, cfg.propagator_tol);
    const DensityMatrix rho0 = gibbs(h0, cfg.cold.beta);
    const DensityMatrix rho1 =
        DensityMatrix(ops.expansion.u * rho0.matrix() * adjoint(ops.expansion.u));

    OracleCheck out;
    {
        const double tau = cfg.protocol.tau_therm_h;
        const DensityMatrix a = thermalize_analytic(rho1, h1, cfg.hot, tau);
        const DensityMatrix n = lindblad_numeric(
            rho1, h1, cfg.hot, tau, lindblad_default_steps(cfg.hot, b1.gap(), tau));
        out.hot_trace_distance = trace_distance(a, n);
    }
    {
        const DensityMatrix rho2 = thermalize_analytic(
            rho1, h1, cfg.hot, cfg.protocol.tau_therm_h);
        const DensityMatrix rho3 = DensityMatrix(
            ops.compression.u * rho2.matrix() * adjoint(ops.compression.u));
        const double tau = cfg.protocol.tau_therm_c;
        const DensityMatrix a = thermalize_analytic(rho3, h0, cfg.cold, tau);
        const DensityMatrix n =
            lindblad_numeric(rho3, h0, cfg.cold, tau,
                             lindblad_default_steps(cfg.cold, herm_eig(h0).gap(), tau));
        out.cold_trace_distance = trace_distance(a, n);
    }
    return out;
}

} // namespace otto
