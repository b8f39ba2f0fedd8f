#include "qmm/symplectic_action.hpp"

#include <string>

#include "qmm/errors.hpp"

namespace qmm
{

SymplecticAction::SymplecticAction(PhaseSpace space, LieAlgebra algebra, std::vector<VectorField> generators)
    : space_(std::move(space)), algebra_(std::move(algebra)), generators_(std::move(generators))
{
    const std::size_t d = algebra_.dim();
    const std::size_t nv = space_.dim();
    if (generators_.size() != d) {
        throw InvariantViolation("expected " + std::to_string(d) + " generators, got "
                                 + std::to_string(generators_.size()));
    }
    for (std::size_t a = 0; a < d; ++a) {
        const auto &x = generators_[a];
        if (x.dim() != nv) {
            throw InvariantViolation("generator " + std::to_string(a + 1) + " must have " + std::to_string(nv)
                                     + " components");
        }
        for (const auto &c : x.components) {
            if (c.num_vars() != nv) {
                throw InvariantViolation("generator " + std::to_string(a + 1)
                                         + " has a component in the wrong number of variables");
            }
        }
        if (auto defect = symplectic_defect(space_, x)) {
            throw InvariantViolation("generator " + std::to_string(a + 1) + " does not preserve omega: (L_X omega)_{"
                                     + std::to_string(defect->first + 1) + std::to_string(defect->second + 1)
                                     + "} != 0");
        }
    }
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = a + 1; b < d; ++b) {
            const VectorField lhs = lie_bracket(generators_[a], generators_[b]);
            const VectorField rhs = -generator(algebra_.bracket_basis(a, b));
            if (lhs != rhs) {
                throw InvariantViolation("generators " + std::to_string(a + 1) + "," + std::to_string(b + 1)
                                         + " violate [X_a, X_b] = -X_[a,b]");
            }
        }
    }
}

VectorField SymplecticAction::generator(const Vector &xi) const
{
    if (xi.size() != dim()) {
        throw DimensionMismatch("Lie algebra element has " + std::to_string(xi.size()) + " coordinates, expected "
                                + std::to_string(dim()));
    }
    VectorField out = VectorField::zero(space_.dim(), space_.dim());
    for (std::size_t a = 0; a < xi.size(); ++a) {
        if (!xi[a].is_zero()) {
            out += xi[a] * generators_[a];
        }
    }
    return out;
}

Polynomial SymplecticAction::rho_apply(const Vector &xi, const Polynomial &f) const
{
    return -generator(xi).apply(f);
}

FormalSeries SymplecticAction::rho_apply(const Vector &xi, const FormalSeries &f) const
{
    const VectorField x = generator(xi);
    return f.map([&](const Polynomial &p) { return -x.apply(p); });
}

} // namespace qmm
