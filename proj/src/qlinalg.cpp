#include "otto/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "otto/errors.hpp"
#include "otto/tolerances.hpp"

namespace otto {

namespace {

double max4(double a, double b, double c, double d) {
    return std::max(std::max(a, b), std::max(c, d));
}

// Split h = m*I + T with T traceless; return m, the real diagonal deviation
// d = (T00)_re, the symmetrized off-diagonal b, and the radius r = |T|.
struct HermSplit {
    double m, d, r;
    cplx b;
};

HermSplit split_hermitian(const Mat2c& h) {
    HermSplit s;
    s.m = 0.5 * (h.a00.real() + h.a11.real());
    s.d = 0.5 * (h.a00.real() - h.a11.real());
    s.b = 0.5 * (h.a01 + std::conj(h.a10));
    s.r = std::hypot(s.d, std::abs(s.b));
    return s;
}

void require_hermitian(const Mat2c& h, const char* who) {
    const double dev = herm_deviation(h);
    if (dev > tol::hermiticity) {
        std::ostringstream os;
        os << who << ": matrix is not Hermitian (max deviation " << dev << ")";
        throw DomainError(os.str());
    }
}

Vec2c normalized(Vec2c v) {
    const double n = std::sqrt(std::norm(v.c0) + std::norm(v.c1));
    return {v.c0 / n, v.c1 / n};
}

Vec2c phase_fixed(Vec2c v) {
    const cplx lead = (std::abs(v.c0) != 0.0) ? v.c0 : v.c1;
    const cplx phase = std::conj(lead) / std::abs(lead);
    return {phase * v.c0, phase * v.c1};
}

} // namespace

double max_abs(const Mat2c& m) {
    return max4(std::abs(m.a00), std::abs(m.a01), std::abs(m.a10), std::abs(m.a11));
}

double herm_deviation(const Mat2c& m) { return max_abs(m - adjoint(m)); }

double unitarity_deviation(const Mat2c& m) {
    return max_abs(adjoint(m) * m - Mat2c::identity());
}

Mat2c pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Mat2c pauli_y() { return {0.0, cplx(0.0, -1.0), cplx(0.0, 1.0), 0.0}; }
Mat2c pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

DensityMatrix::DensityMatrix(const Mat2c& m) : m_(m) {
    const double hdev = herm_deviation(m);
    if (hdev > tol::hermiticity) {
        std::ostringstream os;
        os << "density matrix not Hermitian (deviation " << hdev << ")";
        throw DomainError(os.str());
    }
    const double tdev = std::abs(trace(m) - cplx(1.0));
    if (tdev > tol::unit_trace) {
        std::ostringstream os;
        os << "density matrix trace differs from 1 by " << tdev;
        throw DomainError(os.str());
    }
    const HermSplit s = split_hermitian(m);
    const double lam_min = s.m - s.r;
    if (lam_min < -tol::psd) {
        std::ostringstream os;
        os << "density matrix has negative eigenvalue " << lam_min;
        throw DomainError(os.str());
    }
}

EigenSystem2 herm_eig(const Mat2c& h) {
    require_hermitian(h, "herm_eig");
    const HermSplit s = split_hermitian(h);

    EigenSystem2 sys;
    sys.e0 = s.m - s.r;
    sys.e1 = s.m + s.r;

    const double scale = std::max({std::abs(s.m), s.r, 1.0});
    if (s.r <= tol::degenerate * scale) {
        sys.v0 = {1.0, 0.0};
        sys.v1 = {0.0, 1.0};
        return sys;
    }

    // Pick the branch whose pivot d +- r stays away from cancellation.
    Vec2c v0, v1;
    if (s.d >= 0.0) {
        v1 = {cplx(s.r + s.d), std::conj(s.b)};
        v0 = {-s.b, cplx(s.r + s.d)};
    } else {
        v1 = {s.b, cplx(s.r - s.d)};
        v0 = {cplx(s.r - s.d), -std::conj(s.b)};
    }
    sys.v0 = phase_fixed(normalized(v0));
    sys.v1 = phase_fixed(normalized(v1));
    return sys;
}

Mat2c unitary_exp(const Mat2c& h, double dt) {
    require_hermitian(h, "unitary_exp");
    const HermSplit s = split_hermitian(h);

    const cplx phase =
        (s.m == 0.0) ? cplx(1.0) : std::polar(1.0, -s.m * dt);
    if (s.r == 0.0) return phase * Mat2c::identity();

    const double th = s.r * dt;
    const cplx c = phase * std::cos(th);
    const cplx is = phase * cplx(0.0, -std::sin(th) / s.r);
    return {c + is * s.d, is * s.b, is * std::conj(s.b), c - is * s.d};
}

BlochVector bloch_from_rho(const DensityMatrix& rho, const EigenSystem2& basis) {
    const Mat2c& m = rho.matrix();
    const double p1 = sandwich(basis.v1, m, basis.v1).real();
    const double p0 = sandwich(basis.v0, m, basis.v0).real();
    const cplx c = sandwich(basis.v1, m, basis.v0);
    return {2.0 * c.real(), -2.0 * c.imag(), p1 - p0};
}

DensityMatrix rho_from_bloch(const BlochVector& r, const EigenSystem2& basis) {
    const double n2 = r.norm2();
    if (n2 > 1.0 + tol::bloch_norm) {
        std::ostringstream os;
        os << "Bloch vector norm " << std::sqrt(n2) << " exceeds 1";
        throw DomainError(os.str());
    }
    const double p1 = 0.5 * (1.0 + r.rz);
    const double p0 = 0.5 * (1.0 - r.rz);
    const cplx c(0.5 * r.rx, -0.5 * r.ry); // <v1|rho|v0>
    Mat2c m = p0 * outer(basis.v0, basis.v0) + p1 * outer(basis.v1, basis.v1) +
              c * outer(basis.v1, basis.v0) +
              std::conj(c) * outer(basis.v0, basis.v1);
    return DensityMatrix(m);
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
    const HermSplit s = split_hermitian(rho.matrix() - sigma.matrix());
    return 0.5 * (std::abs(s.m + s.r) + std::abs(s.m - s.r));
}

double vn_entropy(const DensityMatrix& rho) {
    const HermSplit s = split_hermitian(rho.matrix());
    double entropy = 0.0;
    for (double lam : {s.m - s.r, s.m + s.r}) {
        if (lam < -tol::negativity_guard) {
            std::ostringstream os;
            os << "vn_entropy: eigenvalue " << lam << " below negativity guard";
            throw DomainError(os.str());
        }
        if (lam > 0.0) entropy -= lam * std::log(std::max(lam, tol::log_floor));
    }
    return entropy;
}

} // namespace otto
