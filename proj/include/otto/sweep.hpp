#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "otto/config.hpp"

namespace otto {

struct SweepRow {
    double axis_value = 0.0; // s
    std::optional<CycleReport> original;
    std::optional<CycleReport> dephased;
    std::string error; // empty on success
};

// Evaluates the requested engine variants on the uniform grid
// start + i (stop - start)/(points - 1), endpoints included. Per-point
// failures land in the error column and the sweep continues. `threads` = 0
// picks the hardware concurrency; the output is identical for any thread
// count.
std::vector<SweepRow> run_sweep(const CycleConfig& cfg, const SweepSpec& spec,
                                unsigned threads = 0);

// Deterministic CSV: one '#'-prefixed header line carrying the schema tag
// and column names, then one line per row, doubles at 17 significant digits.
void emit_csv(const std::vector<SweepRow>& rows, const SweepSpec& spec,
              std::ostream& os);

// Single-point run: every report field for the configured engine and its
// dephased twin, the identity residuals, and oracle-agreement diagnostics,
// as flat key = value lines.
std::string emit_report(const CycleConfig& cfg);

// Named sweep grids for the bundled figure datasets.
// fig2a, fig3a, fig4: drive-time axis, 0.05..3 ms, 600 points, hot contact
// fixed at 75.15 ms. fig2b, fig3b: hot-contact axis, 1..500 ms, 2000 points,
// drive time fixed at 0.46 ms.
SweepSpec preset_sweep(const std::string& name);
std::vector<std::string> preset_names();

} // namespace otto
