// Command-line front end: single-point reports, figure-dataset sweeps, and
// the numerical self-check suites.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "otto/errors.hpp"
#include "otto/sweep.hpp"
#include "otto/validation.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw otto::ParseError("cannot open config file", path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

otto::ParsedConfig load_config(const std::string& path) {
    return otto::parse_config(path.empty() ? "" : slurp(path));
}

int cmd_run(const std::string& config_path, bool dephased, bool exact_closure,
            const std::string& out_path) {
    otto::ParsedConfig parsed = load_config(config_path);
    if (dephased) parsed.cycle.dephased = true;
    if (exact_closure) parsed.cycle.exact_closure = true;

    const std::string report = otto::emit_report(parsed.cycle);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw otto::Error("cannot open output file " + out_path);
        out << report;
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& preset,
              const std::string& axis, double start_ms, double stop_ms,
              int points, const std::string& out_path, unsigned threads) {
    otto::ParsedConfig parsed = load_config(config_path);
    otto::SweepSpec spec = parsed.sweep;
    if (!preset.empty()) {
        spec = otto::preset_sweep(preset);
        spec.run_original = parsed.sweep.run_original;
        spec.run_dephased = parsed.sweep.run_dephased;
    }
    if (!axis.empty()) {
        if (axis == "tau1") {
            spec.axis = otto::SweepSpec::Axis::tau1;
        } else if (axis == "tau_therm_h") {
            spec.axis = otto::SweepSpec::Axis::tau_therm_h;
        } else {
            throw CLI::ValidationError("--axis must be tau1 or tau_therm_h");
        }
    }
    if (start_ms > 0.0) spec.start = 1e-3 * start_ms;
    if (stop_ms > 0.0) spec.stop = 1e-3 * stop_ms;
    if (points > 0) spec.points = points;

    const auto rows = otto::run_sweep(parsed.cycle, spec, threads);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw otto::Error("cannot open output file " + out_path);
    otto::emit_csv(rows, spec, out);

    int failures = 0;
    for (const auto& row : rows) {
        if (!row.error.empty()) ++failures;
    }
    if (failures > 0) {
        std::cerr << failures << " of " << rows.size()
                  << " sweep points failed; see the error column\n";
        return kExitNumerical;
    }
    return 0;
}

int cmd_validate(bool quick) {
    const otto::ParsedConfig parsed = otto::parse_config("");
    const int n_points = quick ? 10 : 50;
    const int n_states = quick ? 10 : 100;
    const std::vector<double> taus =
        quick ? std::vector<double>{75.15e-3}
              : std::vector<double>{1e-3, 75.15e-3, 300e-3};

    bool ok = true;
    auto check = [&ok](const std::string& name, double value, double bound) {
        const bool pass = value < bound;
        std::printf("%-28s %-4s  max %.3e  (bound %.0e)\n", name.c_str(),
                    pass ? "ok" : "FAIL", value, bound);
        ok = ok && pass;
    };

    double worst_identity = 0.0;
    for (const auto& pt : otto::identity_suite(parsed.cycle, n_points)) {
        worst_identity = std::max(worst_identity, pt.residuals.max_asserted());
    }
    check("identity suite", worst_identity, 1e-8);

    const double worst_oracle =
        otto::oracle_suite_max(parsed.cycle, n_states, taus);
    check("relaxation oracle", worst_oracle, 1e-8);

    return ok ? 0 : kExitNumerical;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-time qubit Otto engine simulator"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    bool dephased = false;
    bool exact_closure = false;

    CLI::App* run = app.add_subcommand("run", "evaluate one cycle and print a report");
    run->add_option("--config", config_path, "config file (defaults when omitted)");
    run->add_flag("--dephased", dephased, "erase coherence after the hot contact");
    run->add_flag("--exact-closure", exact_closure,
                  "replace the cold contact with an exact reset");
    run->add_option("--out", out_path, "write the report here instead of stdout");

    std::string preset;
    std::string axis;
    double start_ms = 0.0, stop_ms = 0.0;
    int points = 0;
    unsigned threads = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "emit a parameter-sweep CSV");
    sweep->add_option("--config", config_path, "config file (defaults when omitted)");
    sweep->add_option("--preset", preset,
                      "named grid: fig2a, fig2b, fig3a, fig3b, fig4");
    sweep->add_option("--axis", axis, "tau1 or tau_therm_h");
    sweep->add_option("--start-ms", start_ms, "axis start in ms");
    sweep->add_option("--stop-ms", stop_ms, "axis stop in ms");
    sweep->add_option("--points", points, "grid size");
    sweep->add_option("--threads", threads, "worker threads (0 = hardware)");
    sweep->add_option("--out", out_path, "output CSV path")->required();

    bool quick = false;
    CLI::App* validate =
        app.add_subcommand("validate", "run the identity and oracle suites");
    validate->add_flag("--quick", quick, "smaller grids for a fast smoke check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (run->parsed())
            return cmd_run(config_path, dephased, exact_closure, out_path);
        if (sweep->parsed())
            return cmd_sweep(config_path, preset, axis, start_ms, stop_ms, points,
                             out_path, threads);
        return cmd_validate(quick);
    } catch (const otto::ParseError& e) {
        std::cerr << "config error at " << e.key_path << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const otto::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}
