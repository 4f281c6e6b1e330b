#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "helpers.hpp"
#include "otto/errors.hpp"
#include "otto/propagator.hpp"

using namespace otto;
using testutil::random_hermitian;

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

ProtocolParams protocol_with_tau1(double tau1) {
    return {two_pi * 2000.0, two_pi * 3600.0, tau1, 75.15e-3, 5.0};
}

HamiltonianFn expansion_fn(const ProtocolParams& p) {
    return [p](double t) { return h_exp(p, t); };
}

} // namespace

TEST_CASE("constant Hamiltonian reduces to the analytic exponential") {
    std::mt19937 rng(10u);
    for (int steps : {1, 7, 64}) {
        const Mat2c h = random_hermitian(rng, 3.0);
        const Mat2c direct = unitary_exp(h, 0.8);
        const Mat2c stepped =
            evolve_unitary([&h](double) { return h; }, 0.0, 0.8, steps);
        CHECK(max_abs(stepped - direct) < 1e-12);
    }
}

TEST_CASE("propagators stay unitary for any step count") {
    const ProtocolParams p = protocol_with_tau1(0.46e-3);
    for (int steps : {3, 50, 1024, 100000}) {
        const Mat2c u = evolve_unitary(expansion_fn(p), 0.0, p.tau1, steps);
        CHECK(unitarity_deviation(u) < 1e-11);
    }
}

TEST_CASE("step halving gains a factor of four") {
    const ProtocolParams p = protocol_with_tau1(0.46e-3);
    const auto f = expansion_fn(p);
    const Mat2c u1 = evolve_unitary(f, 0.0, p.tau1, 1024);
    const Mat2c u2 = evolve_unitary(f, 0.0, p.tau1, 2048);
    const Mat2c u4 = evolve_unitary(f, 0.0, p.tau1, 4096);
    const double ratio = max_abs(u1 - u2) / max_abs(u2 - u4);
    CHECK(ratio > 3.5);
    CHECK(ratio < 4.5);
}

TEST_CASE("second-order decay against a fine reference") {
    for (double tau1 : {0.1e-3, 0.46e-3, 2.0e-3}) {
        const ProtocolParams p = protocol_with_tau1(tau1);
        const auto f = expansion_fn(p);
        const Mat2c ref = evolve_unitary(f, 0.0, p.tau1, 1 << 18);
        double prev = 0.0;
        for (int k = 9; k <= 12; ++k) {
            const double err = max_abs(evolve_unitary(f, 0.0, p.tau1, 1 << k) - ref);
            if (prev > 0.0) {
                const double gain = prev / err;
                CHECK(gain > 3.3);
                CHECK(gain < 4.7);
            }
            prev = err;
        }
    }
}

TEST_CASE("adaptive refinement and its failure modes") {
    std::mt19937 rng(11u);
    const Mat2c h = random_hermitian(rng, 1.0);

    // Constant Hamiltonian converges at the very first doubling check.
    const StrokePropagator flat =
        evolve_unitary_adaptive([&h](double) { return h; }, 0.0, 1.0, 1e-10);
    CHECK(flat.steps_used == 128);
    CHECK(flat.est_error < 1e-10);

    const ProtocolParams p = protocol_with_tau1(0.46e-3);
    const StrokePropagator drive =
        evolve_unitary_adaptive(expansion_fn(p), 0.0, p.tau1, 1e-10);
    CHECK(drive.est_error < 1e-10);
    CHECK(unitarity_deviation(drive.u) < 1e-10);

    CHECK_THROWS_AS(evolve_unitary_adaptive(expansion_fn(p), 0.0, p.tau1, 0.0),
                    ConvergenceError);
    try {
        evolve_unitary_adaptive(expansion_fn(p), 0.0, p.tau1, 0.0);
    } catch (const ConvergenceError& e) {
        CHECK(e.est_error == 0.0);
    }
}

TEST_CASE("transition probability limits") {
    // Sudden quench: the bases at the two ends overlap with probability 1/2.
    const TransitionData sudden = transition_data(protocol_with_tau1(1e-9));
    CHECK(std::abs(sudden.xi - 0.5) < 1e-3);

    // Slow drives suppress transitions by orders of magnitude per decade.
    const double xi_02 = transition_data(protocol_with_tau1(0.2e-3), 1e-9).xi;
    const double xi_1 = transition_data(protocol_with_tau1(1.0e-3), 1e-9).xi;
    const double xi_5 = transition_data(protocol_with_tau1(5.0e-3), 1e-9).xi;
    CHECK(xi_1 < xi_02 / 10.0);
    CHECK(xi_5 < xi_1 / 10.0);
    CHECK(xi_5 < 1e-4);
}

TEST_CASE("compression transition data matches the expansion") {
    for (double tau1 : {0.13e-3, 0.46e-3, 1.7e-3}) {
        const TransitionData td = transition_data(protocol_with_tau1(tau1));
        CHECK(td.xi >= 0.0);
        CHECK(td.xi <= 1.0);
        CHECK(std::abs(td.zeta() - td.xi) < 1e-8);
        for (double s : {std::norm(td.amps_com.a00) + std::norm(td.amps_com.a01),
                         std::norm(td.amps_com.a10) + std::norm(td.amps_com.a11),
                         std::norm(td.amps_com.a00) + std::norm(td.amps_com.a10)}) {
            CHECK(std::abs(s - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("the compression propagator is the transpose of the expansion") {
    // The compression path visits the same Hamiltonians in reverse order, so
    // its ordered product is the transpose of the expansion product (every
    // factor is complex symmetric for this drive).
    const ProtocolParams p = protocol_with_tau1(0.46e-3);
    const StrokePropagator u = detail::expansion_propagator(p, 1e-10);
    const StrokePropagator v = detail::compression_propagator(p, 1e-10);
    CHECK(max_abs(v.u - transpose(u.u)) < 2e-10);

    // They are genuinely different operators; only the transpose relation
    // holds at tolerance.
    CHECK(max_abs(v.u - u.u) > 1e-3);
}
