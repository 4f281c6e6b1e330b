#pragma once

#include <functional>

#include "otto/protocol.hpp"
#include "otto/qlinalg.hpp"
#include "otto/tolerances.hpp"

namespace otto {

using HamiltonianFn = std::function<Mat2c(double)>;

struct StrokePropagator {
    Mat2c u;              // unitary within tol::propagator_unitarity
    int steps_used = 0;
    double est_error = 0.0; // max-entry difference of the last doubling pair
};

// Transition data of the driven strokes in the instantaneous eigenbases.
// amps_com(m, n) = <E_m(end) | V | E_n(start)> for the compression stroke;
// xi is the ground->excited transition probability of the expansion stroke.
// |amps_com(1,0)|^2 agrees with xi (verified at construction).
struct TransitionData {
    double xi = 0.0;
    Mat2c amps_com;
    double zeta() const { return std::norm(amps_com.a10); }
};

// Time-ordered propagator as a product of per-step analytic exponentials of
// the midpoint Hamiltonian (second-order accurate, exactly unitary).
Mat2c evolve_unitary(const HamiltonianFn& h_of_t, double t0, double t1, int steps);

// Step doubling from tol::propagator_start_steps until successive results
// differ by less than `tol` in max-entry norm. Throws ConvergenceError
// (carrying the last difference) when the step cap is hit.
StrokePropagator evolve_unitary_adaptive(const HamiltonianFn& h_of_t, double t0,
                                         double t1, double tol);

TransitionData transition_data(const ProtocolParams& p,
                               double tol = tol::propagator_tol_default);

namespace detail {
// Compression propagator on its local clock (integrand h_exp(tau1 - s) over
// s in [0, tau1]); same operator as integrating h_com over [tau2, tau3] but
// with a grid independent of tau2, so sweeps over the thermalization time
// can reuse it.
StrokePropagator compression_propagator(const ProtocolParams& p, double tol);
StrokePropagator expansion_propagator(const ProtocolParams& p, double tol);
TransitionData transition_from(const Mat2c& u, const Mat2c& v,
                               const EigenSystem2& basis0,
                               const EigenSystem2& basis1);
} // namespace detail

} // namespace otto
