#include "qmm/momentum.hpp"

#include <algorithm>

#include "qmm/errors.hpp"

namespace qmm
{

bool MomentumValidation::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const MomentumCheck &c) { return c.passed; });
}

std::optional<std::size_t> MomentumValidation::witness() const
{
    for (const auto &c : checks) {
        if (!c.passed) {
            return c.basis;
        }
    }
    return std::nullopt;
}

MomentumValidation validate_momentum(const SymplecticAction &action, const std::vector<Polynomial> &values)
{
    if (values.size() != action.dim()) {
        throw DimensionMismatch("expected " + std::to_string(action.dim()) + " momentum values, got "
                                + std::to_string(values.size()));
    }
    MomentumValidation out;
    for (std::size_t a = 0; a < values.size(); ++a) {
        if (values[a].num_vars() != action.space().dim()) {
            throw DimensionMismatch("momentum value " + std::to_string(a + 1) + " has the wrong number of variables");
        }
        const VectorField xf = hamiltonian_vf(action.space(), values[a]);
        const VectorField &x = action.generators()[a];
        MomentumCheck check{a, true, std::nullopt};
        for (std::size_t c = 0; c < x.dim(); ++c) {
            if (xf.components[c] != x.components[c]) {
                check.passed = false;
                check.component = c;
                break;
            }
        }
        out.checks.push_back(check);
    }
    return out;
}

ClassicalMomentumMap::ClassicalMomentumMap(SymplecticAction action, std::vector<Polynomial> values)
    : action_(std::move(action)), values_(std::move(values))
{
    const auto report = validate_momentum(action_, values_);
    if (auto w = report.witness()) {
        throw InvariantViolation("X_{J0(e" + std::to_string(*w + 1) + ")} != X_e" + std::to_string(*w + 1));
    }
}

Polynomial ClassicalMomentumMap::value(const Vector &xi) const
{
    if (xi.size() != values_.size()) {
        throw DimensionMismatch("Lie algebra element has the wrong dimension");
    }
    Polynomial out(action_.space().dim());
    for (std::size_t a = 0; a < xi.size(); ++a) {
        if (!xi[a].is_zero()) {
            out += values_[a] * xi[a];
        }
    }
    return out;
}

ClassicalMomentumMap solve_momentum(const SymplecticAction &action)
{
    std::vector<Polynomial> values;
    for (const auto &x : action.generators()) {
        values.push_back(integrate_closed_one_form(interior_omega(action.space(), x)));
    }
    return ClassicalMomentumMap(action, std::move(values));
}

Cochain sigma_2cocycle(const ClassicalMomentumMap &j0)
{
    const auto &action = j0.action();
    const auto &algebra = action.algebra();
    const std::size_t d = algebra.dim();
    Cochain sigma = Cochain::constant(d, 2, 0);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            const Polynomial diff = poisson_bracket(action.space(), j0.values()[i], j0.values()[j])
                                    - j0.value(algebra.bracket_basis(i, j));
            if (!diff.is_constant()) {
                throw NonConstantDifference("{J0(e" + std::to_string(i + 1) + "),J0(e" + std::to_string(j + 1)
                                            + ")} - J0([e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1)
                                            + "]) = " + diff.to_string(action.space().variable_names()));
            }
            sigma.set({i, j}, FormalSeries::from_scalars({diff.constant_term()}));
        }
    }
    if (!ce_coboundary(algebra, sigma).is_zero()) {
        throw InternalConsistency("Sigma fails d Sigma = 0");
    }
    return sigma;
}

std::string to_string(EquivarianceKind k)
{
    switch (k) {
    case EquivarianceKind::equivariant:
        return "equivariant";
    case EquivarianceKind::exact_cocycle:
        return "exact";
    case EquivarianceKind::nontrivial:
        return "nontrivial";
    }
    return "?";
}

EquivarianceClass classify_equivariance(const LieAlgebra &algebra, const Cochain &sigma)
{
    if (sigma.is_zero()) {
        return {EquivarianceKind::equivariant, std::nullopt};
    }
    auto mu = cocycle_trivializer(algebra, sigma);
    if (mu) {
        return {EquivarianceKind::exact_cocycle, std::move(mu)};
    }
    return {EquivarianceKind::nontrivial, std::nullopt};
}

ExtendedClassicalMomentumMap::ExtendedClassicalMomentumMap(ExtendedAlgebra extension, ClassicalMomentumMap base)
    : extension_(std::move(extension)), base_(std::move(base))
{
    if (extension_.base().dim() != base_.values().size()) {
        throw DimensionMismatch("extension and momentum map disagree on the algebra dimension");
    }
}

Polynomial ExtendedClassicalMomentumMap::value(const ExtendedElement &x) const
{
    const std::size_t nv = base_.action().space().dim();
    return base_.value(x.base) + Polynomial::constant(nv, x.central.coeff(0).constant_term());
}

std::vector<HomomorphismCheck> ExtendedClassicalMomentumMap::verify_homomorphism() const
{
    std::vector<HomomorphismCheck> out;
    const auto &space = base_.action().space();
    for (std::size_t i = 0; i < extension_.basis_size(); ++i) {
        for (std::size_t j = i + 1; j < extension_.basis_size(); ++j) {
            const ExtendedElement x = extension_.basis(i);
            const ExtendedElement y = extension_.basis(j);
            const Polynomial lhs = poisson_bracket(space, value(x), value(y));
            const Polynomial rhs = value(extension_.bracket(x, y));
            out.push_back({i, j, lhs == rhs});
        }
    }
    return out;
}

SymplecticAction ExtendedClassicalMomentumMap::extended_action() const
{
    const auto &action = base_.action();
    std::vector<VectorField> gens = action.generators();
    gens.push_back(VectorField::zero(action.space().dim(), action.space().dim()));
    return SymplecticAction(action.space(), extension_.as_lie_algebra(), std::move(gens));
}

ClassicalMomentumMap ExtendedClassicalMomentumMap::as_momentum_map() const
{
    std::vector<Polynomial> values;
    for (std::size_t i = 0; i < extension_.basis_size(); ++i) {
        values.push_back(value(extension_.basis(i)));
    }
    return ClassicalMomentumMap(extended_action(), std::move(values));
}

ExtendedClassicalMomentumMap extend_classical(const ClassicalMomentumMap &j0, const Cochain &sigma)
{
    ExtendedClassicalMomentumMap out(central_extend(j0.action().algebra(), sigma, CenterTag::reals), j0);
    for (const auto &c : out.verify_homomorphism()) {
        if (!c.passed) {
            throw InvariantViolation("extended momentum map is not a homomorphism on basis pair ("
                                     + std::to_string(c.i + 1) + "," + std::to_string(c.j + 1) + ")");
        }
    }
    return out;
}

} // namespace qmm
