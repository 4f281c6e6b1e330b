#include "otto/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>

#include "otto/errors.hpp"
#include "otto/validation.hpp"

namespace otto {

namespace {

struct Field {
    const char* name;
    double CycleReport::* member;
};

constexpr Field kFields[] = {
    {"w1_hw0", &CycleReport::w1},
    {"w3_hw0", &CycleReport::w3},
    {"qh_hw0", &CycleReport::qh},
    {"qc_hw0", &CycleReport::qc},
    {"wnet_hw0", &CycleReport::wnet},
    {"eta", &CycleReport::eta},
    {"eta_deph_ref", &CycleReport::eta_deph_ref},
    {"eta_otto", &CycleReport::eta_otto},
    {"eta_carnot", &CycleReport::eta_carnot},
    {"power_hw0_s", &CycleReport::power},
    {"sigma_total_nats", &CycleReport::sigma_total},
    {"sigma_pop_nats", &CycleReport::sigma_pop},
    {"sigma_coh_nats", &CycleReport::sigma_coh},
    {"friction_nats", &CycleReport::friction},
    {"friction_pop_nats", &CycleReport::friction_pop},
    {"friction_coh_nats", &CycleReport::friction_coh},
    {"lag_therm", &CycleReport::lag_therm},
    {"lag_qs", &CycleReport::lag_qs},
    {"e_inter_hw0", &CycleReport::e_inter},
    {"coh_tau1_nats", &CycleReport::coh_tau1},
    {"coh_tau2_nats", &CycleReport::coh_tau2},
    {"coh_tau3_nats", &CycleReport::coh_tau3},
    {"xi", &CycleReport::xi},
    {"closure_residual", &CycleReport::closure_residual},
    {"energy_residual_hw0", &CycleReport::energy_residual},
    {"entropy_residual_nats", &CycleReport::entropy_residual},
};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string sanitize(std::string s) {
    for (char& c : s) {
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    }
    return s;
}

void append_report_cells(std::ostream& os, const std::optional<CycleReport>& r) {
    for (const Field& f : kFields) {
        os << ',' << (r ? fmt((*r).*(f.member)) : "nan");
    }
    os << ',' << (r ? to_string(r->mode) : "error");
}

CycleConfig config_at(const CycleConfig& base, const SweepSpec& spec, double value) {
    CycleConfig cfg = base;
    if (spec.axis == SweepSpec::Axis::tau1) {
        cfg.protocol.tau1 = value;
    } else {
        cfg.protocol.tau_therm_h = value;
    }
    return cfg;
}

} // namespace

std::vector<SweepRow> run_sweep(const CycleConfig& cfg, const SweepSpec& spec,
                                unsigned threads) {
    spec.validate();
    cfg.validate();

    std::vector<double> grid(spec.points);
    for (int i = 0; i < spec.points; ++i) {
        grid[i] = spec.start +
                  i * (spec.stop - spec.start) / (spec.points - 1);
    }
    grid.back() = spec.stop;

    // The drive propagators depend only on tau1, so a hot-contact sweep
    // shares one set across all points.
    std::optional<StrokeOperators> shared;
    if (spec.axis == SweepSpec::Axis::tau_therm_h) {
        shared = build_strokes(cfg.protocol, cfg.propagator_tol);
    }

    std::vector<SweepRow> rows(spec.points);
    auto eval_point = [&](int i) {
        SweepRow& row = rows[i];
        row.axis_value = grid[i];
        try {
            const CycleConfig point_cfg = config_at(cfg, spec, grid[i]);
            const StrokeOperators ops =
                shared ? *shared
                       : build_strokes(point_cfg.protocol, point_cfg.propagator_tol);
            if (spec.run_original) {
                CycleConfig c = point_cfg;
                c.dephased = false;
                row.original = run_cycle(c, ops).report;
            }
            if (spec.run_dephased) {
                CycleConfig c = point_cfg;
                c.dephased = true;
                row.dephased = run_cycle(c, ops).report;
            }
        } catch (const Error& e) {
            row.original.reset();
            row.dephased.reset();
            row.error = e.what();
        }
    };

    unsigned n_threads = threads == 0 ? std::thread::hardware_concurrency() : threads;
    n_threads = std::max(1u, std::min<unsigned>(n_threads, spec.points));
    if (n_threads == 1) {
        for (int i = 0; i < spec.points; ++i) eval_point(i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) {
            pool.emplace_back([&] {
                for (int i = next.fetch_add(1); i < spec.points;
                     i = next.fetch_add(1)) {
                    eval_point(i);
                }
            });
        }
        for (std::thread& th : pool) th.join();
    }
    return rows;
}

void emit_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec,
              std::ostream& os) {
    if (rows.empty()) throw DomainError("emit_csv: no rows");

    os << "# ottosim-sweep-v1 " << axis_name(spec.axis);
    for (const char* prefix : {"orig_", "deph_"}) {
        const bool wanted = (prefix[0] == 'o') ? spec.run_original : spec.run_dephased;
        if (!wanted) continue;
        for (const Field& f : kFields) os << ',' << prefix << f.name;
        os << ',' << prefix << "mode";
    }
    os << ",error\n";

    for (const SweepRow& row : rows) {
        os << fmt(row.axis_value * 1e3);
        if (spec.run_original) append_report_cells(os, row.original);
        if (spec.run_dephased) append_report_cells(os, row.dephased);
        os << ',' << sanitize(row.error) << '\n';
    }
}

std::string emit_report(const CycleConfig& cfg) {
    const EnginePair pair = compare_engines(cfg);
    const IdentityResiduals res = compute_identity_residuals(cfg, pair);
    const OracleCheck oracle = oracle_report_check(cfg);

    std::ostringstream os;
    os << "# ottosim-report-v1\n";
    os << "config.omega0_rad_s = " << fmt(cfg.protocol.omega0) << '\n';
    os << "config.omega_tau1_rad_s = " << fmt(cfg.protocol.omega_tau1) << '\n';
    os << "config.tau1_ms = " << fmt(cfg.protocol.tau1 * 1e3) << '\n';
    os << "config.tau_therm_h_ms = " << fmt(cfg.protocol.tau_therm_h * 1e3) << '\n';
    os << "config.tau_therm_c_ms = " << fmt(cfg.protocol.tau_therm_c * 1e3) << '\n';
    os << "config.beta_cold_hw0 = " << fmt(cfg.cold.beta * cfg.protocol.omega0)
       << '\n';
    os << "config.beta_hot_hw1 = " << fmt(cfg.hot.beta * cfg.protocol.omega_tau1)
       << '\n';
    os << "config.gamma0_cold_hz = " << fmt(cfg.cold.gamma0) << '\n';
    os << "config.gamma0_hot_hz = " << fmt(cfg.hot.gamma0) << '\n';
    os << "config.dephased = " << (cfg.dephased ? "true" : "false") << '\n';
    os << "config.exact_closure = " << (cfg.exact_closure ? "true" : "false")
       << '\n';
    os << "config.propagator_tol = " << fmt(cfg.propagator_tol) << '\n';

    const CycleResult& own = cfg.dephased ? pair.dephased : pair.original;
    struct Block {
        const char* prefix;
        const CycleReport& report;
    } blocks[] = {{"engine.", own.report},
                  {"orig.", pair.original.report},
                  {"deph.", pair.dephased.report}};
    for (const Block& b : blocks) {
        for (const Field& f : kFields) {
            os << b.prefix << f.name << " = " << fmt(b.report.*(f.member)) << '\n';
        }
        os << b.prefix << "mode = " << to_string(b.report.mode) << '\n';
    }

    os << "propagator.expansion_steps = " << pair.ops.expansion.steps_used << '\n';
    os << "propagator.expansion_est_error = " << fmt(pair.ops.expansion.est_error)
       << '\n';
    os << "propagator.compression_steps = " << pair.ops.compression.steps_used
       << '\n';
    os << "propagator.compression_est_error = "
       << fmt(pair.ops.compression.est_error) << '\n';

    os << "residual.carnot_gap = " << fmt(res.carnot_gap) << '\n';
    os << "residual.otto_gap = " << fmt(res.otto_gap) << '\n';
    os << "residual.entropy_friction_link = " << fmt(res.entropy_friction_link)
       << '\n';
    os << "residual.divergence_split = " << fmt(res.divergence_split) << '\n';
    os << "residual.efficiency_pairing = " << fmt(res.efficiency_pairing) << '\n';
    os << "residual.power_pairing = " << fmt(res.power_pairing) << '\n';
    os << "residual.entropy_pairing = " << fmt(res.entropy_pairing) << '\n';
    os << "residual.friction_pairing = " << fmt(res.friction_pairing) << '\n';
    os << "residual.energy_conservation = " << fmt(res.energy_conservation) << '\n';
    os << "residual.entropy_conservation = " << fmt(res.entropy_conservation)
       << '\n';
    os << "residual.transition_symmetry = " << fmt(res.transition_symmetry) << '\n';
    os << "residual.lag_difference = " << fmt(res.lag_difference) << '\n';
    os << "residual.interference_crosscheck = " << fmt(res.interference_crosscheck)
       << '\n';
    os << "residual.interference_phase_literal = "
       << fmt(res.interference_phase_literal) << '\n';

    os << "oracle.hot_trace_distance = " << fmt(oracle.hot_trace_distance) << '\n';
    os << "oracle.cold_trace_distance = " << fmt(oracle.cold_trace_distance)
       << '\n';
    return os.str();
}

SweepSpec preset_sweep(const std::string& name) {
    SweepSpec spec;
    if (name == "fig2a" || name == "fig3a" || name == "fig4") {
        spec.axis = SweepSpec::Axis::tau1;
        spec.start = 0.05e-3;
        spec.stop = 3.0e-3;
        spec.points = 600;
        return spec;
    }
    if (name == "fig2b" || name == "fig3b") {
        spec.axis = SweepSpec::Axis::tau_therm_h;
        spec.start = 1.0e-3;
        spec.stop = 500.0e-3;
        spec.points = 2000;
        return spec;
    }
    throw DomainError("unknown sweep preset: " + name);
}

std::vector<std::string> preset_names() {
    return {"fig2a", "fig2b", "fig3a", "fig3b", "fig4"};
}

} // namespace otto
