#pragma once

#include <random>

#include "otto/qlinalg.hpp"

namespace testutil {

using otto::cplx;
using otto::Mat2c;

inline Mat2c random_hermitian(std::mt19937& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double a = scale * u(rng);
    const double d = scale * u(rng);
    const cplx b(scale * u(rng), scale * u(rng));
    return {a, b, std::conj(b), d};
}

inline otto::BlochVector random_bloch(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    otto::BlochVector r;
    do {
        r = {u(rng), u(rng), u(rng)};
    } while (r.norm2() > 1.0);
    return r;
}

inline otto::EigenSystem2 canonical_basis() {
    otto::EigenSystem2 b;
    b.e0 = -0.5;
    b.e1 = 0.5;
    b.v0 = {1.0, 0.0};
    b.v1 = {0.0, 1.0};
    return b;
}

inline otto::DensityMatrix random_density(std::mt19937& rng) {
    return otto::rho_from_bloch(random_bloch(rng), canonical_basis());
}

// Scaling-and-squaring Taylor series for exp(-i h dt); reference for the
// half-angle exponential.
inline Mat2c expm_series(const Mat2c& h, double dt) {
    Mat2c a = cplx(0.0, -dt) * h;
    int squarings = 0;
    while (otto::max_abs(a) > 0.25) {
        a = cplx(0.5) * a;
        ++squarings;
    }
    Mat2c sum = Mat2c::identity();
    Mat2c term = Mat2c::identity();
    for (int n = 1; n <= 24; ++n) {
        term = cplx(1.0 / n) * (term * a);
        sum = sum + term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

} // namespace testutil
