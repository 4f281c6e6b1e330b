#pragma once

// Central tolerance record. Every numeric guard in the library reads from
// here so precision studies have a single knob.
namespace otto::tol {

inline constexpr double hermiticity = 1e-12;      // max |H - H^dag| entry
inline constexpr double unit_trace = 1e-12;       // |tr(rho) - 1|
inline constexpr double psd = 1e-12;              // eigenvalue floor -psd
inline constexpr double bloch_norm = 1e-12;       // |r|^2 <= 1 + bloch_norm
inline constexpr double orthonormality = 1e-12;   // eigenvector pairs
inline constexpr double eigen_residual = 1e-10;   // |H v - e v| / scale
inline constexpr double degenerate = 1e-14;       // traceless part ~ 0
inline constexpr double unitarity = 1e-12;        // analytic exponentials
inline constexpr double propagator_unitarity = 1e-10;
inline constexpr double amps_unitarity = 1e-10;   // transition-amplitude rows
inline constexpr double transition_symmetry = 1e-8; // |a10|^2 vs xi
inline constexpr double diagonal_reference = 1e-10; // dephasing-ref off-diag
inline constexpr double negativity_guard = 1e-10; // entropy log precheck
inline constexpr double log_floor = 1e-300;       // clamp before std::log
inline constexpr double support_weight = 1e-12;   // infinite-divergence gate

inline constexpr double propagator_tol_default = 1e-10;
inline constexpr int propagator_start_steps = 64;
inline constexpr int propagator_max_steps = 1 << 20;

inline constexpr int lindblad_steps_per_relaxation = 1000;
inline constexpr int lindblad_min_steps_per_relaxation = 10;

} // namespace otto::tol
