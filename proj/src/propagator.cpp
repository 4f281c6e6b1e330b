#include "otto/propagator.hpp"

#include <cmath>
#include <sstream>

#include "otto/errors.hpp"

namespace otto {

namespace {

void check_amps_unitarity(const Mat2c& a) {
    const double r0 = std::norm(a.a00) + std::norm(a.a01);
    const double r1 = std::norm(a.a10) + std::norm(a.a11);
    const double c0 = std::norm(a.a00) + std::norm(a.a10);
    const double c1 = std::norm(a.a01) + std::norm(a.a11);
    for (double s : {r0, r1, c0, c1}) {
        if (std::abs(s - 1.0) > tol::amps_unitarity) {
            std::ostringstream os;
            os << "transition amplitudes not unitary: row/column sum " << s;
            throw AccuracyError(os.str());
        }
    }
}

} // namespace

Mat2c evolve_unitary(const HamiltonianFn& h_of_t, double t0, double t1, int steps) {
    if (!(t1 > t0)) throw DomainError("evolve_unitary: t1 must exceed t0");
    if (steps < 1) throw DomainError("evolve_unitary: steps must be >= 1");
    const double dt = (t1 - t0) / steps;
    Mat2c u = Mat2c::identity();
    for (int k = 0; k < steps; ++k) {
        const double tm = t0 + (k + 0.5) * dt;
        u = unitary_exp(h_of_t(tm), dt) * u; // later factors multiply on the left
    }
    return u;
}

StrokePropagator evolve_unitary_adaptive(const HamiltonianFn& h_of_t, double t0,
                                         double t1, double tol) {
    if (!(tol > 0.0)) {
        throw ConvergenceError("evolve_unitary_adaptive: tolerance must be positive",
                               0.0, 0);
    }
    int steps = tol::propagator_start_steps;
    Mat2c u = evolve_unitary(h_of_t, t0, t1, steps);
    double diff = 0.0;
    while (2 * steps <= tol::propagator_max_steps) {
        const int next = 2 * steps;
        const Mat2c u2 = evolve_unitary(h_of_t, t0, t1, next);
        diff = max_abs(u2 - u);
        if (diff < tol) return {u2, next, diff};
        u = u2;
        steps = next;
    }
    std::ostringstream os;
    os << "propagator did not converge to " << tol << " within "
       << tol::propagator_max_steps << " steps (last difference " << diff << ")";
    throw ConvergenceError(os.str(), diff, steps);
}

namespace detail {

StrokePropagator expansion_propagator(const ProtocolParams& p, double tol) {
    return evolve_unitary_adaptive([&p](double t) { return h_exp(p, t); }, 0.0,
                                   p.tau1, tol);
}

StrokePropagator compression_propagator(const ProtocolParams& p, double tol) {
    return evolve_unitary_adaptive(
        [&p](double s) { return h_exp(p, p.tau1 - s); }, 0.0, p.tau1, tol);
}

TransitionData transition_from(const Mat2c& u, const Mat2c& v,
                               const EigenSystem2& basis0,
                               const EigenSystem2& basis1) {
    TransitionData td;
    td.xi = std::norm(sandwich(basis1.v1, u, basis0.v0));
    td.amps_com = {sandwich(basis0.v0, v, basis1.v0), sandwich(basis0.v0, v, basis1.v1),
                   sandwich(basis0.v1, v, basis1.v0), sandwich(basis0.v1, v, basis1.v1)};
    check_amps_unitarity(td.amps_com);
    if (std::abs(td.zeta() - td.xi) > tol::transition_symmetry) {
        std::ostringstream os;
        os << "compression transition probability " << td.zeta()
           << " disagrees with expansion value " << td.xi;
        throw AccuracyError(os.str());
    }
    return td;
}

} // namespace detail

TransitionData transition_data(const ProtocolParams& p, double tol) {
    const StrokePropagator u = detail::expansion_propagator(p, tol);
    const StrokePropagator v = detail::compression_propagator(p, tol);
    const EigenSystem2 basis0 = herm_eig(h_exp(p, 0.0));
    const EigenSystem2 basis1 = herm_eig(h_exp(p, p.tau1));
    return detail::transition_from(u.u, v.u, basis0, basis1);
}

} // namespace otto
