#ifndef QMM_QUANTUM_HPP
#define QMM_QUANTUM_HPP

#include <optional>
#include <string>
#include <vector>

#include "qmm/cochain.hpp"
#include "qmm/extension.hpp"
#include "qmm/momentum.hpp"
#include "qmm/star_product.hpp"
#include "qmm/two_form.hpp"

namespace qmm
{

/// J = J0 + J+ with J(e_i) a formal series; J0 is the hbar^0 part.
struct QuantumHamiltonian
{
    SymplecticAction action;
    std::vector<FormalSeries> values;

    int order() const;
    std::vector<Polynomial> classical() const;
    std::vector<FormalSeries> j_plus() const;
    FormalSeries value(const Vector &xi) const;
    QuantumHamiltonian truncated(int order) const;
};

// Radially integrates i_{X_e} Omega_r for each generator and hbar power.
// Throws NotInvariant naming the first generator with L_X Omega != 0.
std::vector<FormalSeries> solve_j_plus(const SymplecticAction &action, const TwoFormSeries &omega, int order);

struct HamiltonianCheck
{
    bool passed = true;
    int degree_bound = 0;
    int order_bound = 0;
    // First failure: basis index, monomial, hbar order.
    std::optional<std::size_t> basis;
    std::optional<Exponents> monomial;
    std::optional<int> hbar_order;
};

// (kappa/hbar)[J(e), f]_* = rho_c(e) f for every basis e and monomial f of
// degree <= D, at order N.
HamiltonianCheck verify_quantum_hamiltonian(const QuantumHamiltonian &j, const StarProduct &star, int degree,
                                            int order);

struct LambdaForms
{
    Cochain commutator; // (kappa/hbar)[J(x),J(y)]_* - J([x,y])
    Cochain closed;     // (omega + Omega)(X_x, X_y) - J([x,y])
};

// Both forms of lambda at the given order. Throws NonConstant when either
// has a non-constant value.
LambdaForms lambda_forms(const QuantumHamiltonian &j, const StarProduct &star, int order);

// The lambda cocycle. Throws FormMismatch when the two forms disagree and
// InternalConsistency when d lambda != 0.
Cochain lambda_cocycle(const QuantumHamiltonian &j, const StarProduct &star, int order);

enum class QuantumKind
{
    quantum_momentum_map,
    anomalous,
};

std::string to_string(QuantumKind k);

struct QuantumClass
{
    QuantumKind kind;
    Cochain lambda;
};

// Throws InternalConsistency if lambda mod hbar differs from sigma.
QuantumClass classify_quantum(const Cochain &lambda, const Cochain &sigma);

struct ExistenceResult
{
    bool exists = false;
    std::optional<QuantumHamiltonian> j;
    Cochain sigma;                 // classical cocycle of J0
    std::optional<Cochain> residual; // Omega(X,X) - d J+^0, when computed
    std::optional<Cochain> constants; // c with J = J0 + J+^0 + c, when found
    std::string reason;
};

/// Searches for J = J0 + J+ that is a quantum momentum map: i_X Omega = dJ+
/// and Omega(X_x, X_y) = (d J+)(x, y). Returns No immediately (with the
/// residual still computed) when Sigma != 0. Throws FormMismatch when the
/// star product was not built from Omega.
ExistenceResult quantum_momentum_exists(const ClassicalMomentumMap &j0, const TwoFormSeries &omega,
                                        const StarProduct &star, int order);

// J0 + J+^0: a quantum Hamiltonian whenever Omega is invariant.
QuantumHamiltonian quantum_hamiltonian_from(const ClassicalMomentumMap &j0, const TwoFormSeries &omega, int order);

/// A map on a central extension: x = (xi, a) -> sum_i xi_i J(e_i) + a * C,
/// where C is the value on the central unit.
struct ExtendedQuantumMomentumMap
{
    ExtendedAlgebra extension;
    QuantumHamiltonian base; // values on (e_i, 0)
    FormalSeries central_value;

    FormalSeries value(const ExtendedElement &x) const;
};

struct ExtendedExistenceResult
{
    bool exists = false;
    ExtendedClassicalMomentumMap classical;
    std::optional<ExtendedQuantumMomentumMap> j;
    std::optional<ExistenceResult> solver; // the run over g~
    bool first_condition_g = false;
    bool first_condition_gtilde = false;
    std::string reason;
};

/// Runs the existence solver over g~ with generators (X_xi, 0) and
/// J~0(xi, a) = J0(xi) + a; the value on the central unit is an unknown.
/// Non-invariant Omega yields No with the NotInvariant message as reason.
ExtendedExistenceResult extended_qmm_exists(const ClassicalMomentumMap &j0, const Cochain &sigma,
                                            const TwoFormSeries &omega, const StarProduct &star, int order);

struct RestrictionReport
{
    QuantumHamiltonian j;
    HamiltonianCheck hamiltonian;
    Cochain defect; // (kappa/hbar)[J(x),J(y)]_* - J([x,y])
    bool homomorphism = false;
    bool defect_is_lambda = false;
    bool defect_mod_hbar_is_sigma = false;
    bool classical_limit_is_j0 = false;
};

// J(xi) = Jext(xi, 0) with the checks listed in RestrictionReport.
RestrictionReport restrict_to_g(const ExtendedQuantumMomentumMap &jext, const SymplecticAction &action,
                                const ClassicalMomentumMap &j0, const Cochain &sigma, const StarProduct &star,
                                int degree, int order);

// Both restrictions agree value by value at their common order.
bool restrictions_agree(const QuantumHamiltonian &a, const QuantumHamiltonian &b);

struct CanonicalExtensionReport
{
    ExtendedQuantumMomentumMap jhat;
    bool central_brackets_vanish = true;
    std::optional<std::pair<int, Exponents>> central_witness; // (hbar power of x, monomial)
    bool homomorphism = true;
    std::optional<std::pair<std::size_t, std::size_t>> homomorphism_witness;
};

/// g^ = central_extend(g, lambda, R[[hbar]]) and J^(xi, x) = J(xi) + x, with
/// constant series checked central for the star bracket on monomials up to
/// the degree bound and the homomorphism identity on all basis pairs of g^.
CanonicalExtensionReport canonical_quantum_extension(const QuantumHamiltonian &j, const Cochain &lambda,
                                                     const StarProduct &star, int degree);

struct QuotientReport
{
    std::vector<Polynomial> values; // on the basis of g~: (e_i, 0) then (0, 1)
    bool matches_extended_classical = false;
};

// Reduces J^ mod hbar and compares with J~0. Throws CocycleMismatch when
// lambda mod hbar differs from sigma.
QuotientReport classical_limit_quotient(const ExtendedQuantumMomentumMap &jhat, const ClassicalMomentumMap &j0,
                                        const Cochain &sigma);

} // namespace qmm

#endif
