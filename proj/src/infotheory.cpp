#include "otto/infotheory.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "otto/errors.hpp"
#include "otto/tolerances.hpp"

namespace otto {

double divergence(const DensityMatrix& rho, const DensityMatrix& ref) {
    const EigenSystem2 spec = herm_eig(ref.matrix());
    double cross = 0.0; // -tr[rho ln ref]
    const std::array<double, 2> lams{spec.e0, spec.e1};
    const std::array<Vec2c, 2> vecs{spec.v0, spec.v1};
    for (int k = 0; k < 2; ++k) {
        const double lam = lams[k];
        const double w = sandwich(vecs[k], rho.matrix(), vecs[k]).real();
        if (lam < -tol::negativity_guard) {
            std::ostringstream os;
            os << "divergence: reference eigenvalue " << lam
               << " below negativity guard";
            throw DomainError(os.str());
        }
        if (lam <= 0.0) {
            if (w > tol::support_weight)
                return std::numeric_limits<double>::infinity();
            continue;
        }
        cross -= w * std::log(std::max(lam, tol::log_floor));
    }
    return cross - vn_entropy(rho);
}

DensityMatrix dephase(const DensityMatrix& rho, const ReferenceBasis& basis) {
    const double p0 = sandwich(basis.v0, rho.matrix(), basis.v0).real();
    const double p1 = sandwich(basis.v1, rho.matrix(), basis.v1).real();
    return DensityMatrix(p0 * outer(basis.v0, basis.v0) +
                         p1 * outer(basis.v1, basis.v1));
}

double rel_entropy_coherence(const DensityMatrix& rho, const ReferenceBasis& basis) {
    return vn_entropy(dephase(rho, basis)) - vn_entropy(rho);
}

DivergenceSplit decompose_divergence(const DensityMatrix& rho,
                                     const DensityMatrix& ref,
                                     const ReferenceBasis& basis) {
    const double offdiag = std::abs(sandwich(basis.v1, ref.matrix(), basis.v0));
    if (offdiag > tol::diagonal_reference) {
        std::ostringstream os;
        os << "decompose_divergence: reference has off-diagonal element "
           << offdiag << " in the dephasing basis";
        throw PreconditionError(os.str());
    }
    return {divergence(dephase(rho, basis), ref), rel_entropy_coherence(rho, basis)};
}

DensityMatrix quasistatic_state(const std::array<double, 2>& populations,
                                const ReferenceBasis& target) {
    const double sum = populations[0] + populations[1];
    if (populations[0] < -tol::psd || populations[1] < -tol::psd ||
        std::abs(sum - 1.0) > tol::unit_trace) {
        std::ostringstream os;
        os << "quasistatic_state: invalid probability vector (" << populations[0]
           << ", " << populations[1] << ")";
        throw DomainError(os.str());
    }
    return DensityMatrix(populations[0] * outer(target.v0, target.v0) +
                         populations[1] * outer(target.v1, target.v1));
}

double quasistatic_divergence_identity_residual(const DensityMatrix& rho,
                                                const Mat2c& h,
                                                const DensityMatrix& qs_ref,
                                                double beta, double omega_ratio,
                                                double helmholtz) {
    const double lhs = divergence(rho, qs_ref);
    const double energy = trace(h * rho.matrix()).real();
    const double rhs = beta * omega_ratio * energy - beta * helmholtz - vn_entropy(rho);
    return std::abs(lhs - rhs);
}

} // namespace otto
