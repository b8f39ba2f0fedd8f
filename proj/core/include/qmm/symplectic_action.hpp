#ifndef QMM_SYMPLECTIC_ACTION_HPP
#define QMM_SYMPLECTIC_ACTION_HPP

#include <vector>

#include "qmm/lie_algebra.hpp"
#include "qmm/phase_space.hpp"

namespace qmm
{

/// Infinitesimal symplectic action xi -> X_xi of a Lie algebra on phase space.
///
/// Generators must preserve omega and satisfy [X_xi, X_eta] = -X_{[xi,eta]},
/// which makes rho(xi) = -L_{X_xi} a representation.
class SymplecticAction
{
public:
    // Throws InvariantViolation naming the generator (1-based) that fails.
    SymplecticAction(PhaseSpace space, LieAlgebra algebra, std::vector<VectorField> generators);

    const PhaseSpace &space() const { return space_; }
    const LieAlgebra &algebra() const { return algebra_; }
    const std::vector<VectorField> &generators() const { return generators_; }
    std::size_t dim() const { return algebra_.dim(); }

    VectorField generator(const Vector &xi) const;
    // rho(xi)(F) = -L_{X_xi} F, coefficientwise in hbar.
    FormalSeries rho_apply(const Vector &xi, const FormalSeries &f) const;
    Polynomial rho_apply(const Vector &xi, const Polynomial &f) const;

private:
    PhaseSpace space_;
    LieAlgebra algebra_;
    std::vector<VectorField> generators_;
};

} // namespace qmm

#endif
