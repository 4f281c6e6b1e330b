#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "otto/cycle.hpp"
#include "otto/validation.hpp"

using namespace otto;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;
const double w0 = two_pi * 2000.0;
const double w1 = two_pi * 3600.0;

CycleConfig paper_config() {
    CycleConfig cfg;
    cfg.protocol = {w0, w1, 0.46e-3, 75.15e-3, 0.0};
    cfg.cold = {2.0 / w0, 1.0};
    cfg.hot = {0.5 / w1, 1.0};
    cfg.protocol.tau_therm_c =
        6.56 * rates(cfg.cold, w0).relaxation_time();
    return cfg;
}

} // namespace

TEST_CASE("internal energy of reference states") {
    const CycleConfig cfg = paper_config();
    const Mat2c h0 = h_exp(cfg.protocol, 0.0);
    const Mat2c h1 = h_exp(cfg.protocol, cfg.protocol.tau1);

    CHECK(internal_energy(gibbs(h0, cfg.cold.beta), h0) / w0 ==
          doctest::Approx(-0.5 * std::tanh(1.0)).epsilon(1e-13));
    CHECK(std::abs(internal_energy(DensityMatrix(cplx(0.5) * Mat2c::identity()),
                                   h0)) < 1e-12 * w0);
    const EigenSystem2 b1 = herm_eig(h1);
    CHECK(internal_energy(DensityMatrix(outer(b1.v1, b1.v1)), h1) ==
          doctest::Approx(0.5 * w1).epsilon(1e-13));
}

TEST_CASE("complete hot thermalization reaches the hot Gibbs state") {
    CycleConfig cfg = paper_config();
    cfg.protocol.tau_therm_h = 50.0 / rates(cfg.hot, w1).gamma_total;
    cfg.exact_closure = true;

    const CycleResult res = run_cycle(cfg);
    const Mat2c h1 = h_exp(cfg.protocol, cfg.protocol.tau1);
    CHECK(trace_distance(res.states.rho_tau2, gibbs(h1, cfg.hot.beta)) < 1e-9);
    CHECK(res.report.coh_tau2 < 1e-9);
    CHECK(std::abs(res.report.e_inter) < 1e-9);
}

TEST_CASE("dephasing changes only the off-diagonal part at fixed energy") {
    CycleConfig cfg = paper_config();
    cfg.exact_closure = true;
    const StrokeOperators ops = build_strokes(cfg.protocol, cfg.propagator_tol);

    CycleConfig deph = cfg;
    deph.dephased = true;
    const CycleResult plain = run_cycle(cfg, ops);
    const CycleResult erased = run_cycle(deph, ops);

    const Mat2c h1 = ops.h1;
    CHECK(std::abs(internal_energy(plain.states.rho_tau2, h1) -
                   internal_energy(erased.states.rho_tau2, h1)) < 1e-12 * w1);
    // Populations in the held basis agree; only the coherence differs.
    const BlochVector bp = bloch_from_rho(plain.states.rho_tau2, ops.basis1);
    const BlochVector be = bloch_from_rho(erased.states.rho_tau2, ops.basis1);
    CHECK(std::abs(bp.rz - be.rz) < 1e-13);
    CHECK(std::abs(be.rx) < 1e-15);
    CHECK(std::abs(be.ry) < 1e-15);
    CHECK(std::abs(erased.report.coh_tau2) < 1e-14);
    CHECK(erased.report.e_inter == 0.0);
    CHECK(erased.report.eta_deph_ref == erased.report.eta);
}

TEST_CASE("works and heats against the transition-probability closed forms") {
    CycleConfig cfg = paper_config();
    cfg.exact_closure = true;
    const StrokeOperators ops = build_strokes(cfg.protocol, cfg.propagator_tol);
    const CycleResult res = run_cycle(cfg, ops);
    const WorksHeats wh = works_and_heats(res.states, cfg.protocol);

    const double gc = std::tanh(0.5 * cfg.cold.beta * w0);
    const double xi = ops.trans.xi;
    CHECK(std::abs(wh.w1 - 0.5 * (w0 - w1 * (1.0 - 2.0 * xi)) * gc) / w0 < 1e-9);

    const BlochVector r2 = bloch_from_rho(res.states.rho_tau2, ops.basis1);
    CHECK(std::abs(wh.qh - 0.5 * w1 * ((1.0 - 2.0 * xi) * gc + r2.rz)) / w0 < 1e-9);

    CHECK(std::abs(wh.sum()) < 1e-9 * w0);
    CHECK(wh.w1 < 0.0); // the polarized qubit releases work as the gap grows
}

TEST_CASE("quasistatic complete-thermalization cycle hits the frictionless bound") {
    CycleConfig cfg = paper_config();
    cfg.protocol.tau1 = 50e-3;
    cfg.protocol.tau_therm_h = 50.0 / rates(cfg.hot, w1).gamma_total;
    cfg.exact_closure = true;
    cfg.propagator_tol = 1e-9;

    const CycleResult res = run_cycle(cfg);
    CHECK(res.report.eta_otto == doctest::Approx(4.0 / 9.0).epsilon(1e-15));
    CHECK(res.report.eta_carnot == doctest::Approx(31.0 / 36.0).epsilon(1e-15));
    CHECK(std::abs(res.report.eta - res.report.eta_otto) < 1e-6);
    CHECK(res.report.friction < 1e-6);
    CHECK(res.report.xi < 1e-3);
    CHECK(res.report.sigma_total >= -1e-9);
    CHECK(res.report.mode == OperatingMode::heat_engine);
}

TEST_CASE("operating-point report") {
    CycleConfig cfg = paper_config();
    const CycleResult res = run_cycle(cfg);
    const CycleReport& r = res.report;

    CHECK(r.mode == OperatingMode::heat_engine);
    CHECK(r.closure_residual > 1e-3);
    CHECK(r.closure_residual < 5e-2);

    // Cross-implementation regression anchors for the default operating
    // point (independent prototype, matching integrator tolerances).
    CHECK(r.eta == doctest::Approx(0.22755945487558668).epsilon(1e-7));
    CHECK(r.sigma_total == doctest::Approx(0.14174920879846686).epsilon(1e-6));
    CHECK(r.friction == doctest::Approx(0.04852528655994259).epsilon(1e-6));
    CHECK(r.qh == doctest::Approx(0.11186870668338625).epsilon(1e-7));
    CHECK(r.coh_tau1 == doctest::Approx(0.04383840995836441).epsilon(1e-6));
    CHECK(r.coh_tau2 == doctest::Approx(0.02924573852085466).epsilon(1e-6));
    CHECK(r.coh_tau3 == doctest::Approx(0.030783273071782746).epsilon(1e-6));

    CHECK(std::abs(r.sigma_total - r.sigma_pop - r.sigma_coh) < 1e-10);
    CHECK(std::abs(r.friction - r.friction_pop - r.friction_coh) < 1e-10);
    CHECK(r.sigma_total >= -1e-9);
    CHECK(r.friction >= -1e-9);
    CHECK(r.eta <= r.eta_carnot + 1e-9);
    CHECK(std::abs(r.lag_therm - r.lag_qs - (r.eta_carnot - r.eta_otto)) < 1e-10);

    // power = eta * qh / tau_cycle
    CHECK(std::abs(r.power - r.eta * r.qh / cfg.protocol.tau_cycle()) < 1e-10);

    CHECK(interference_energy(cfg) == r.e_inter);
}

TEST_CASE("identity residuals at the operating point under exact closure") {
    CycleConfig cfg = paper_config();
    cfg.exact_closure = true;
    const EnginePair pair = compare_engines(cfg);
    const IdentityResiduals res = compute_identity_residuals(cfg, pair);

    CHECK(res.carnot_gap < 1e-9);
    CHECK(res.otto_gap < 1e-9);
    CHECK(res.entropy_friction_link < 1e-9);
    CHECK(res.divergence_split < 1e-10);
    CHECK(res.efficiency_pairing < 1e-9);
    CHECK(res.power_pairing < 1e-9);
    CHECK(res.entropy_pairing < 1e-9);
    CHECK(res.friction_pairing < 1e-9);
    CHECK(res.energy_conservation < 1e-9);
    CHECK(res.entropy_conservation < 1e-12);
    CHECK(res.transition_symmetry < 1e-8);
    CHECK(res.lag_difference < 1e-10);
    CHECK(res.interference_crosscheck < 1e-12);

    // The coherence split of the dephased engine carries no hot-contact term.
    const CycleReport& d = pair.dephased.report;
    CHECK(std::abs(d.sigma_coh - (d.coh_tau1 + d.coh_tau3)) < 1e-10);
    CHECK(std::abs(d.coh_tau2) < 1e-14);
}

TEST_CASE("interference energy oscillates at the compression gap") {
    CycleConfig cfg = paper_config();
    cfg.exact_closure = true;
    const StrokeOperators ops = build_strokes(cfg.protocol, cfg.propagator_tol);

    // Sample three periods finely and locate sign changes of e_inter.
    const double period = two_pi / w1;
    const int n = 601;
    std::vector<double> taus(n), values(n);
    for (int i = 0; i < n; ++i) {
        taus[i] = 60e-3 + 3.0 * period * i / (n - 1);
        CycleConfig point = cfg;
        point.protocol.tau_therm_h = taus[i];
        values[i] = run_cycle(point, ops).report.e_inter;
    }
    std::vector<double> crossings;
    for (int i = 0; i + 1 < n; ++i) {
        if (values[i] == 0.0 || (values[i] > 0) == (values[i + 1] > 0)) continue;
        crossings.push_back(taus[i] - values[i] * (taus[i + 1] - taus[i]) /
                                          (values[i + 1] - values[i]));
    }
    REQUIRE(crossings.size() >= 4);
    const double fitted =
        2.0 * (crossings.back() - crossings.front()) / (crossings.size() - 1);
    CHECK(std::abs(fitted - period) / period < 0.02);
}

TEST_CASE("mode classification") {
    CHECK(classify_mode(-2.0, 1.0, 3.0, -2.0) == OperatingMode::heat_engine);
    CHECK(classify_mode(2.0, -1.0, -3.0, 2.0) == OperatingMode::refrigerator);
    CHECK(classify_mode(2.0, -1.0, -0.5, -0.5) == OperatingMode::heater);
    CHECK(classify_mode(1.0, 1.0, 3.0, -5.0) == OperatingMode::other);
    CHECK(to_string(OperatingMode::heat_engine) == "heat_engine");
}

TEST_CASE("engine pairs coincide once the hot contact saturates") {
    CycleConfig cfg = paper_config();
    cfg.protocol.tau_therm_h = 50.0 / rates(cfg.hot, w1).gamma_total;
    cfg.exact_closure = true;
    const EnginePair pair = compare_engines(cfg);
    const CycleReport& a = pair.original.report;
    const CycleReport& b = pair.dephased.report;
    CHECK(std::abs(a.eta - b.eta) < 1e-9);
    CHECK(std::abs(a.w1 - b.w1) < 1e-9);
    CHECK(std::abs(a.w3 - b.w3) < 1e-9);
    CHECK(std::abs(a.sigma_total - b.sigma_total) < 1e-9);
    CHECK(std::abs(a.friction - b.friction) < 1e-9);
    CHECK(std::abs(a.power - b.power) < 1e-9);
}

TEST_CASE("pairing relations hold at random parameter points") {
    std::mt19937 rng(40u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        CycleConfig cfg = paper_config();
        cfg.protocol.tau1 = 1e-3 * (0.05 + 2.95 * u(rng));
        cfg.protocol.tau_therm_h = 1e-3 * (1.0 + 400.0 * u(rng));
        cfg.exact_closure = true;
        const EnginePair pair = compare_engines(cfg);
        const IdentityResiduals res = compute_identity_residuals(cfg, pair);
        CHECK(res.efficiency_pairing < 1e-8);
        CHECK(res.entropy_pairing < 1e-8);
        CHECK(res.friction_pairing < 1e-8);
        CHECK(res.max_asserted() < 1e-8);
    }
}
