#include "otto/thermal.hpp"

#include <cmath>
#include <sstream>

#include "otto/errors.hpp"
#include "otto/tolerances.hpp"

namespace otto {

namespace {

EigenSystem2 eig_with_gap(const Mat2c& h, const char* who) {
    const EigenSystem2 basis = herm_eig(h);
    if (!(basis.gap() > 0.0)) {
        std::ostringstream os;
        os << who << ": Hamiltonian gap must be positive";
        throw DomainError(os.str());
    }
    return basis;
}

} // namespace

void BathParams::validate() const {
    if (!(beta > 0.0)) throw DomainError("bath beta must be positive");
    if (!(gamma0 > 0.0)) throw DomainError("bath gamma0 must be positive");
}

DensityMatrix gibbs(const Mat2c& h, double beta) {
    if (!(beta > 0.0)) throw DomainError("gibbs: beta must be positive");
    const EigenSystem2 basis = herm_eig(h);
    const double x = beta * basis.gap();
    const double p0 = 1.0 / (1.0 + std::exp(-x)); // ground weight
    const double p1 = 1.0 - p0;
    return DensityMatrix(p0 * outer(basis.v0, basis.v0) +
                         p1 * outer(basis.v1, basis.v1));
}

double free_energy(const Mat2c& h, double beta) {
    if (!(beta > 0.0)) throw DomainError("free_energy: beta must be positive");
    const EigenSystem2 basis = herm_eig(h);
    const double x = beta * basis.gap();
    return basis.e0 - std::log1p(std::exp(-x)) / beta;
}

ThermalRates rates(const BathParams& bath, double omega) {
    bath.validate();
    if (!(omega > 0.0)) throw DomainError("rates: omega must be positive");
    ThermalRates r;
    r.n_be = 1.0 / std::expm1(bath.beta * omega);
    r.gamma_down = bath.gamma0 * (r.n_be + 1.0);
    r.gamma_up = bath.gamma0 * r.n_be;
    r.gamma_total = bath.gamma0 * (2.0 * r.n_be + 1.0);
    r.g = bath.gamma0 / r.gamma_total;
    return r;
}

DensityMatrix thermalize_analytic(const DensityMatrix& rho, const Mat2c& h,
                                  const BathParams& bath, double tau) {
    if (!(tau >= 0.0)) throw DomainError("thermalize_analytic: tau must be >= 0");
    const EigenSystem2 basis = eig_with_gap(h, "thermalize_analytic");
    if (tau == 0.0) return rho;
    const double w = basis.gap();
    const ThermalRates r = rates(bath, w);

    const double pe_eq = r.gamma_up / r.gamma_total;
    const double pe0 = sandwich(basis.v1, rho.matrix(), basis.v1).real();
    const cplx c0 = sandwich(basis.v1, rho.matrix(), basis.v0);

    const double decay = std::exp(-r.gamma_total * tau);
    const double pe = pe_eq + (pe0 - pe_eq) * decay;
    const cplx c = c0 * std::polar(std::exp(-0.5 * r.gamma_total * tau), -w * tau);

    const Mat2c m = (1.0 - pe) * outer(basis.v0, basis.v0) +
                    pe * outer(basis.v1, basis.v1) +
                    c * outer(basis.v1, basis.v0) +
                    std::conj(c) * outer(basis.v0, basis.v1);
    return DensityMatrix(m);
}

namespace detail {

Mat2c dissipator(const Mat2c& rho, const EigenSystem2& basis,
                 const ThermalRates& r) {
    const Mat2c lower = outer(basis.v0, basis.v1); // |g><e|
    const Mat2c raise = outer(basis.v1, basis.v0); // |e><g|
    const Mat2c pe = outer(basis.v1, basis.v1);    // L_down^dag L_down
    const Mat2c pg = outer(basis.v0, basis.v0);    // L_up^dag L_up

    const Mat2c down = lower * rho * raise - 0.5 * (pe * rho + rho * pe);
    const Mat2c up = raise * rho * lower - 0.5 * (pg * rho + rho * pg);
    return r.gamma_down * down + r.gamma_up * up;
}

} // namespace detail

int lindblad_default_steps(const BathParams& bath, double omega, double tau) {
    const ThermalRates r = rates(bath, omega);
    const double per_relax = tol::lindblad_steps_per_relaxation;
    const int n = static_cast<int>(std::ceil(per_relax * tau * r.gamma_total));
    return std::max(n, 100);
}

DensityMatrix lindblad_numeric(const DensityMatrix& rho, const Mat2c& h,
                               const BathParams& bath, double tau, int steps) {
    if (!(tau >= 0.0)) throw DomainError("lindblad_numeric: tau must be >= 0");
    const EigenSystem2 basis = eig_with_gap(h, "lindblad_numeric");
    const ThermalRates r = rates(bath, basis.gap());
    if (tau == 0.0) return rho;
    if (steps < 1 ||
        steps < tol::lindblad_min_steps_per_relaxation * tau * r.gamma_total) {
        std::ostringstream os;
        os << "lindblad_numeric: " << steps << " steps resolve fewer than "
           << tol::lindblad_min_steps_per_relaxation
           << " points per relaxation time " << r.relaxation_time();
        throw AccuracyError(os.str());
    }

    // Work on the co-rotating state sigma(t) = U(t)^dag rho(t) U(t) with
    // U(t) = exp(-i h t): the commutator term is absorbed exactly and the
    // dissipator acts through the rotated jump operators.
    const double dt = tau / steps;
    auto rotated_basis = [&](double t) {
        const Mat2c u = unitary_exp(h, t);
        const Mat2c ud = adjoint(u);
        return EigenSystem2{basis.e0, basis.e1, apply(ud, basis.v0),
                            apply(ud, basis.v1)};
    };
    auto rhs = [&](const Mat2c& m, double t) {
        return detail::dissipator(m, rotated_basis(t), r);
    };

    Mat2c m = rho.matrix();
    for (int k = 0; k < steps; ++k) {
        const double t = k * dt;
        const Mat2c k1 = rhs(m, t);
        const Mat2c k2 = rhs(m + (0.5 * dt) * k1, t + 0.5 * dt);
        const Mat2c k3 = rhs(m + (0.5 * dt) * k2, t + 0.5 * dt);
        const Mat2c k4 = rhs(m + dt * k3, t + dt);
        m = m + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        m = 0.5 * (m + adjoint(m));
    }
    const Mat2c u = unitary_exp(h, tau);
    return DensityMatrix(u * m * adjoint(u));
}

} // namespace otto
