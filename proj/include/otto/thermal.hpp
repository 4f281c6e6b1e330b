#pragma once

#include "otto/qlinalg.hpp"

namespace otto {

// One reservoir: inverse temperature (1/energy with hbar = 1) and vacuum
// decay rate.
struct BathParams {
    double beta = 0.0;   // 1/(rad/s)
    double gamma0 = 0.0; // Hz
    void validate() const;
};

struct ThermalRates {
    double n_be = 0.0;        // Bose-Einstein occupation at the gap
    double gamma_down = 0.0;  // gamma0 (n_be + 1)
    double gamma_up = 0.0;    // gamma0 n_be
    double gamma_total = 0.0; // gamma0 (2 n_be + 1)
    double g = 0.0;           // gamma0 / gamma_total = tanh(beta w / 2)
    double relaxation_time() const { return 1.0 / gamma_total; }
};

// e^{-beta h} / Z via the eigendecomposition of h.
DensityMatrix gibbs(const Mat2c& h, double beta);

// Helmholtz free energy -ln(Z)/beta of the Gibbs state of h.
double free_energy(const Mat2c& h, double beta);

ThermalRates rates(const BathParams& bath, double omega);

// Closed-form relaxation at fixed h: populations decay toward the Gibbs
// weights at gamma_total, the eigenbasis coherence <E1|rho|E0> rotates at
// e^{-i w tau} and decays at gamma_total/2. Throws DomainError on zero gap.
DensityMatrix thermalize_analytic(const DensityMatrix& rho, const Mat2c& h,
                                  const BathParams& bath, double tau);

// Brute-force oracle: fourth-order Runge-Kutta integration of the full
// master-equation generator (free evolution handled exactly by conjugation
// with the analytic propagator, jump operators rotated along), with
// re-Hermitization each step. Throws AccuracyError when steps resolve less
// than tol::lindblad_min_steps_per_relaxation per relaxation time.
DensityMatrix lindblad_numeric(const DensityMatrix& rho, const Mat2c& h,
                               const BathParams& bath, double tau, int steps);

int lindblad_default_steps(const BathParams& bath, double omega, double tau);

namespace detail {
// Dissipative part of the generator in the Schroedinger picture at fixed h:
// gamma_down D[|g><e|] + gamma_up D[|e><g|] applied to rho. Trace-free.
Mat2c dissipator(const Mat2c& rho, const EigenSystem2& basis,
                 const ThermalRates& r);
} // namespace detail

} // namespace otto
