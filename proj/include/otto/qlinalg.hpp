#pragma once

#include <complex>

namespace otto {

using cplx = std::complex<double>;

// Dense 2x2 complex matrix, row major. Plain value type; Hermiticity and
// unitarity are properties checked by predicates, not invariants of the type.
struct Mat2c {
    cplx a00{}, a01{}, a10{}, a11{};

    static Mat2c identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2c zero() { return {}; }

    Mat2c operator+(const Mat2c& o) const {
        return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
    }
    Mat2c operator-(const Mat2c& o) const {
        return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
    }
    Mat2c operator*(const Mat2c& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }
    Mat2c operator*(cplx s) const { return {s * a00, s * a01, s * a10, s * a11}; }
    friend Mat2c operator*(cplx s, const Mat2c& m) { return m * s; }
};

inline Mat2c adjoint(const Mat2c& m) {
    return {std::conj(m.a00), std::conj(m.a10), std::conj(m.a01), std::conj(m.a11)};
}
inline Mat2c transpose(const Mat2c& m) { return {m.a00, m.a10, m.a01, m.a11}; }
inline cplx trace(const Mat2c& m) { return m.a00 + m.a11; }

// max-entry absolute value (the norm used for convergence checks)
double max_abs(const Mat2c& m);
double herm_deviation(const Mat2c& m);       // max entry of |M - M^dag|
double unitarity_deviation(const Mat2c& m);  // max entry of |M^dag M - I|

// Pauli matrices (sigma_z basis)
Mat2c pauli_x();
Mat2c pauli_y();
Mat2c pauli_z();

struct Vec2c {
    cplx c0{}, c1{};
};

inline cplx inner(const Vec2c& a, const Vec2c& b) {
    return std::conj(a.c0) * b.c0 + std::conj(a.c1) * b.c1;
}
inline Vec2c apply(const Mat2c& m, const Vec2c& v) {
    return {m.a00 * v.c0 + m.a01 * v.c1, m.a10 * v.c0 + m.a11 * v.c1};
}
// <u| M |v>
inline cplx sandwich(const Vec2c& u, const Mat2c& m, const Vec2c& v) {
    return inner(u, apply(m, v));
}
// |u><v|
inline Mat2c outer(const Vec2c& u, const Vec2c& v) {
    return {u.c0 * std::conj(v.c0), u.c0 * std::conj(v.c1),
            u.c1 * std::conj(v.c0), u.c1 * std::conj(v.c1)};
}

// Eigensystem of a 2x2 Hermitian matrix, eigenvalues ascending. Phase
// convention: the first nonzero component of each eigenvector (scanning by
// index) is real and positive, which pins transition amplitudes across runs.
struct EigenSystem2 {
    double e0 = 0.0, e1 = 0.0;
    Vec2c v0, v1;
    double gap() const { return e1 - e0; }
};

struct BlochVector {
    double rx = 0.0, ry = 0.0, rz = 0.0;
    double norm2() const { return rx * rx + ry * ry + rz * rz; }
};

// Qubit state: Hermitian, unit trace, positive semidefinite (all within the
// tolerances in tolerances.hpp; construction throws DomainError otherwise).
class DensityMatrix {
  public:
    explicit DensityMatrix(const Mat2c& m);
    const Mat2c& matrix() const { return m_; }

  private:
    Mat2c m_;
};

// Analytic eigendecomposition. Throws DomainError (naming the deviation) on
// non-Hermitian input. Degenerate input returns the canonical basis.
EigenSystem2 herm_eig(const Mat2c& h);

// exp(-i h dt) for Hermitian h, via the half-angle identity on the traceless
// part. Exactly unitary up to rounding.
Mat2c unitary_exp(const Mat2c& h, double dt);

// Bloch components in the given eigenbasis: rz = p(v1) - p(v0) (negative for
// a Gibbs state), rx - i ry = 2 <v1|rho|v0>.
BlochVector bloch_from_rho(const DensityMatrix& rho, const EigenSystem2& basis);
DensityMatrix rho_from_bloch(const BlochVector& r, const EigenSystem2& basis);

// (1/2) tr |rho - sigma|
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// von Neumann entropy in nats, 0 ln 0 := 0
double vn_entropy(const DensityMatrix& rho);

} // namespace otto
