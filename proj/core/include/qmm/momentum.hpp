#ifndef QMM_MOMENTUM_HPP
#define QMM_MOMENTUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmm/cochain.hpp"
#include "qmm/extension.hpp"
#include "qmm/symplectic_action.hpp"

namespace qmm
{

struct MomentumCheck
{
    std::size_t basis; // zero-based
    bool passed;
    std::optional<std::size_t> component; // first differing component of X_{J0(e)} - X_e
};

struct MomentumValidation
{
    std::vector<MomentumCheck> checks;

    bool passed() const;
    // First failing basis index, if any.
    std::optional<std::size_t> witness() const;
};

// Checks X_{J0(e_i)} = X_{e_i} for each basis element.
MomentumValidation validate_momentum(const SymplecticAction &action, const std::vector<Polynomial> &values);

/// Classical momentum map: a linear map J0 with X_{J0(xi)} = X_xi.
class ClassicalMomentumMap
{
public:
    // Throws InvariantViolation naming the first failing basis element.
    ClassicalMomentumMap(SymplecticAction action, std::vector<Polynomial> values);

    const SymplecticAction &action() const { return action_; }
    const std::vector<Polynomial> &values() const { return values_; }
    Polynomial value(const Vector &xi) const;

private:
    SymplecticAction action_;
    std::vector<Polynomial> values_;
};

// Integrates i_{X_e} omega radially for each generator; zero constants.
ClassicalMomentumMap solve_momentum(const SymplecticAction &action);

// Sigma(xi,eta) = {J0(xi),J0(eta)} - J0([xi,eta]) as an order-0 constant
// cochain. Throws NonConstantDifference; verifies d Sigma = 0.
Cochain sigma_2cocycle(const ClassicalMomentumMap &j0);

enum class EquivarianceKind
{
    equivariant,
    exact_cocycle,
    nontrivial,
};

std::string to_string(EquivarianceKind k);

struct EquivarianceClass
{
    EquivarianceKind kind;
    std::optional<Cochain> mu; // set for exact_cocycle: Sigma(x,y) = mu([x,y])
};

EquivarianceClass classify_equivariance(const LieAlgebra &algebra, const Cochain &sigma);

struct HomomorphismCheck
{
    std::size_t i; // extended basis indices, zero-based; d is the central unit
    std::size_t j;
    bool passed;
};

/// J~0(xi, a) = J0(xi) + a on g~ = central_extend(g, Sigma, R).
class ExtendedClassicalMomentumMap
{
public:
    ExtendedClassicalMomentumMap(ExtendedAlgebra extension, ClassicalMomentumMap base);

    const ExtendedAlgebra &extension() const { return extension_; }
    const ClassicalMomentumMap &base() const { return base_; }
    Polynomial value(const ExtendedElement &x) const;
    // {J~0(x), J~0(y)} = J~0([x,y]) on every pair of extended basis elements.
    std::vector<HomomorphismCheck> verify_homomorphism() const;
    // The extended action of g~ (generators X_xi and 0 for the center).
    SymplecticAction extended_action() const;
    // The values of J~0 on the extended basis, as a momentum map for that action.
    ClassicalMomentumMap as_momentum_map() const;

private:
    ExtendedAlgebra extension_;
    ClassicalMomentumMap base_;
};

// Builds g~ and J~0; throws InvariantViolation if the homomorphism identity
// fails on a basis pair.
ExtendedClassicalMomentumMap extend_classical(const ClassicalMomentumMap &j0, const Cochain &sigma);

} // namespace qmm

#endif
