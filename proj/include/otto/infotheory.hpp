#pragma once

#include <array>

#include "otto/qlinalg.hpp"

namespace otto {

// Basis in which dephasing and coherence are measured; in the engine this is
// always the instantaneous energy eigenbasis.
using ReferenceBasis = EigenSystem2;

// Umegaki divergence -tr[rho ln ref] - S(rho), in nats. Returns +infinity
// (a signal value, not an exception) when rho has weight outside the support
// of ref.
double divergence(const DensityMatrix& rho, const DensityMatrix& ref);

// Full dephasing map: erase off-diagonal elements in the basis.
DensityMatrix dephase(const DensityMatrix& rho, const ReferenceBasis& basis);

// Relative entropy of coherence S(dephase(rho)) - S(rho), in nats.
double rel_entropy_coherence(const DensityMatrix& rho, const ReferenceBasis& basis);

struct DivergenceSplit {
    double population = 0.0; // divergence of the dephased state to ref
    double coherence = 0.0;  // relative entropy of coherence
    double total() const { return population + coherence; }
};

// Splits divergence(rho, ref) into population and coherence parts. Requires
// ref diagonal in the basis (PreconditionError otherwise).
DivergenceSplit decompose_divergence(const DensityMatrix& rho,
                                     const DensityMatrix& ref,
                                     const ReferenceBasis& basis);

// Diagonal state carrying the given weights on the target basis: the state a
// transitionless drive would produce from a Gibbs initial state.
DensityMatrix quasistatic_state(const std::array<double, 2>& populations,
                                const ReferenceBasis& target);

// |lhs - rhs| of the closed form for the divergence to a quasistatic
// reference on a constant-gap-ratio working substance:
//   D(rho || qs_ref) = beta * omega_ratio * tr[h rho] - beta * helmholtz - S(rho)
// Test instrumentation; not used in production paths.
double quasistatic_divergence_identity_residual(const DensityMatrix& rho,
                                                const Mat2c& h,
                                                const DensityMatrix& qs_ref,
                                                double beta, double omega_ratio,
                                                double helmholtz);

} // namespace otto
