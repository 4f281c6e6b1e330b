#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "otto/cycle.hpp"

namespace otto {

struct SweepSpec {
    enum class Axis { tau1, tau_therm_h };
    Axis axis = Axis::tau1;
    double start = 0.0; // s
    double stop = 0.0;  // s
    int points = 0;
    bool run_original = true;
    bool run_dephased = true;
    void validate() const;
};

struct ParsedConfig {
    CycleConfig cycle;
    SweepSpec sweep;
};

// Flat key = value document with dotted key paths; '#' starts a comment and
// blank lines are ignored. Unknown keys, malformed lines, and out-of-range
// values raise ParseError carrying the key path. Omitted keys take the
// defaults listed in default_config_text(). Frequencies are given in Hz and
// converted to rad/s on parse; times in ms; inverse temperatures as the
// dimensionless product with the gap held during the bath contact.
ParsedConfig parse_config(std::string_view text);

// The full default document (every key with its default value).
std::string default_config_text();

std::string axis_name(SweepSpec::Axis axis);

} // namespace otto
