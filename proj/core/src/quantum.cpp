#include "qmm/quantum.hpp"

#include <algorithm>

#include "qmm/errors.hpp"

namespace qmm
{

int QuantumHamiltonian::order() const
{
    int order = values.empty() ? 0 : values.front().order();
    for (const auto &v : values) {
        order = std::min(order, v.order());
    }
    return order;
}

std::vector<Polynomial> QuantumHamiltonian::classical() const
{
    std::vector<Polynomial> out;
    for (const auto &v : values) {
        out.push_back(classical_limit(v));
    }
    return out;
}

std::vector<FormalSeries> QuantumHamiltonian::j_plus() const
{
    std::vector<FormalSeries> out;
    for (const auto &v : values) {
        FormalSeries p = v;
        p.set_coeff(0, Polynomial(v.num_vars()));
        out.push_back(std::move(p));
    }
    return out;
}

FormalSeries QuantumHamiltonian::value(const Vector &xi) const
{
    if (xi.size() != values.size()) {
        throw DimensionMismatch("Lie algebra element has the wrong dimension");
    }
    FormalSeries out(action.space().dim(), order());
    for (std::size_t a = 0; a < xi.size(); ++a) {
        if (!xi[a].is_zero()) {
            out += xi[a] * values[a].truncated(out.order());
        }
    }
    return out;
}

QuantumHamiltonian QuantumHamiltonian::truncated(int new_order) const
{
    QuantumHamiltonian out{action, {}};
    for (const auto &v : values) {
        out.values.push_back(v.truncated(new_order));
    }
    return out;
}

std::vector<FormalSeries> solve_j_plus(const SymplecticAction &action, const TwoFormSeries &omega, int order)
{
    const std::size_t nv = action.space().dim();
    if (omega.dim() != nv) {
        throw DimensionMismatch("Omega does not live on the action's phase space");
    }
    const auto &gens = action.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        if (auto defect = omega.invariance_defect(gens[a])) {
            const auto &d = *defect;
            throw NotInvariant("L_X Omega != 0 for generator " + std::to_string(a + 1) + " at hbar^"
                               + std::to_string(d[0]) + ", component (" + std::to_string(d[1] + 1) + ","
                               + std::to_string(d[2] + 1) + ")");
        }
    }
    std::vector<FormalSeries> out;
    for (const auto &x : gens) {
        FormalSeries jp(nv, order);
        for (int r = 1; r <= std::min(order, omega.order()); ++r) {
            jp.set_coeff(r, integrate_closed_one_form(omega.interior(r, x)));
        }
        out.push_back(std::move(jp));
    }
    return out;
}

HamiltonianCheck verify_quantum_hamiltonian(const QuantumHamiltonian &j, const StarProduct &star, int degree,
                                            int order)
{
    HamiltonianCheck check;
    check.degree_bound = degree;
    check.order_bound = order;
    const auto &action = j.action;
    const std::size_t nv = action.space().dim();
    const auto monomials = monomials_up_to(nv, degree);
    for (std::size_t a = 0; a < j.values.size(); ++a) {
        const Vector e = action.algebra().basis_vector(a);
        for (const auto &m : monomials) {
            const FormalSeries f = FormalSeries::from_polynomial(Polynomial::monomial(nv, m), order);
            const FormalSeries lhs = scaled_bracket(star, j.values[a], f, order);
            const FormalSeries rhs = action.rho_apply(e, f);
            if (lhs == rhs) {
                continue;
            }
            check.passed = false;
            check.basis = a;
            check.monomial = m;
            for (int r = 0; r <= order; ++r) {
                if (lhs.coeff(r) != rhs.coeff(r)) {
                    check.hbar_order = r;
                    break;
                }
            }
            return check;
        }
    }
    return check;
}

namespace
{

std::string pair_name(std::size_t i, std::size_t j)
{
    return "(e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")";
}

FormalSeries require_constant(const FormalSeries &s, const std::string &what)
{
    if (!s.is_constant()) {
        throw NonConstant(what + " = " + s.to_string());
    }
    return FormalSeries::from_scalars(s.constants());
}

} // namespace

LambdaForms lambda_forms(const QuantumHamiltonian &j, const StarProduct &star, int order)
{
    const auto &action = j.action;
    const auto &algebra = action.algebra();
    const auto &space = action.space();
    const std::size_t d = algebra.dim();
    const TwoFormSeries omega = star.characteristic_form(order);
    LambdaForms out{Cochain::constant(d, 2, order), Cochain::constant(d, 2, order)};
    const QuantumHamiltonian jt = j.truncated(order);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            const FormalSeries jbracket = jt.value(algebra.bracket_basis(i, k));
            const FormalSeries comm = scaled_bracket(star, jt.values[i], jt.values[k], order) - jbracket;
            const VectorField &xi = action.generators()[i];
            const VectorField &xk = action.generators()[k];
            const FormalSeries closed = FormalSeries::from_polynomial(evaluate_omega(space, xi, xk), order)
                                        + omega.evaluate(xi, xk) - jbracket;
            out.commutator.set({i, k}, require_constant(comm, "commutator-form lambda" + pair_name(i, k)));
            out.closed.set({i, k}, require_constant(closed, "closed-form lambda" + pair_name(i, k)));
        }
    }
    return out;
}

Cochain lambda_cocycle(const QuantumHamiltonian &j, const StarProduct &star, int order)
{
    LambdaForms forms = lambda_forms(j, star, order);
    const std::size_t d = j.action.algebra().dim();
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            if (forms.commutator.at({i, k}) != forms.closed.at({i, k})) {
                throw FormMismatch("lambda" + pair_name(i, k) + ": commutator form "
                                   + forms.commutator.at({i, k}).to_string() + " vs closed form "
                                   + forms.closed.at({i, k}).to_string());
            }
        }
    }
    if (!ce_coboundary(j.action.algebra(), forms.commutator).is_zero()) {
        throw InternalConsistency("d lambda != 0");
    }
    return forms.commutator;
}

std::string to_string(QuantumKind k)
{
    return k == QuantumKind::quantum_momentum_map ? "quantum momentum map" : "anomalous";
}

QuantumClass classify_quantum(const Cochain &lambda, const Cochain &sigma)
{
    if (lambda.truncated(0) != sigma.truncated(0)) {
        throw InternalConsistency("lambda mod hbar differs from Sigma of the classical limit");
    }
    return {lambda.is_zero() ? QuantumKind::quantum_momentum_map : QuantumKind::anomalous, lambda};
}

QuantumHamiltonian quantum_hamiltonian_from(const ClassicalMomentumMap &j0, const TwoFormSeries &omega, int order)
{
    const auto jp = solve_j_plus(j0.action(), omega, order);
    QuantumHamiltonian out{j0.action(), {}};
    for (std::size_t a = 0; a < jp.size(); ++a) {
        out.values.push_back(FormalSeries::from_polynomial(j0.values()[a], order) + jp[a]);
    }
    return out;
}

ExistenceResult quantum_momentum_exists(const ClassicalMomentumMap &j0, const TwoFormSeries &omega,
                                        const StarProduct &star, int order)
{
    const auto &action = j0.action();
    const auto &algebra = action.algebra();
    const std::size_t d = algebra.dim();
    const std::size_t nv = action.space().dim();
    if (star.characteristic_form(order) != omega.padded(order)) {
        throw FormMismatch("the star product was built from a different Omega");
    }
    ExistenceResult result{false, std::nullopt, sigma_2cocycle(j0), std::nullopt, std::nullopt, {}};

    const auto jp = solve_j_plus(action, omega, order);
    Cochain jp_cochain(d, 1, ModuleTag::function_series, nv, order);
    for (std::size_t a = 0; a < d; ++a) {
        jp_cochain.set({a}, jp[a]);
    }
    const Cochain djp = ce_coboundary(action, jp_cochain);
    const TwoFormSeries omega_n = omega.padded(order);
    Cochain residual = Cochain::constant(d, 2, order);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            const FormalSeries nu = omega_n.evaluate(action.generators()[i], action.generators()[k]) - djp.at({i, k});
            if (!nu.is_constant()) {
                throw InternalConsistency("residual Omega(X,X) - dJ+ is not constant on " + pair_name(i, k));
            }
            residual.set({i, k}, FormalSeries::from_scalars(nu.constants()));
        }
    }
    result.residual = residual;

    if (!result.sigma.is_zero()) {
        result.reason = "classical limit is not equivariant (Sigma != 0)";
        return result;
    }
    auto mu = cocycle_trivializer(algebra, residual);
    if (!mu) {
        result.reason = "residual Omega(X,X) - dJ+ is not of the form -c([x,y])";
        return result;
    }
    Cochain c = Cochain::constant(d, 1, order);
    QuantumHamiltonian j{action, {}};
    for (std::size_t a = 0; a < d; ++a) {
        const FormalSeries ca = -mu->at({a});
        c.set({a}, ca);
        j.values.push_back(FormalSeries::from_polynomial(j0.values()[a], order) + jp[a] + ca.with_num_vars(nv));
    }
    result.exists = true;
    result.j = std::move(j);
    result.constants = std::move(c);
    result.reason = "residual is exact";
    return result;
}

FormalSeries ExtendedQuantumMomentumMap::value(const ExtendedElement &x) const
{
    const int order = std::min(base.order(), central_value.order());
    const std::size_t nv = base.action.space().dim();
    FormalSeries out = base.value(x.base).truncated(order);
    const FormalSeries a = x.central.padded(order).with_num_vars(nv);
    out += a * central_value.truncated(order);
    return out;
}

ExtendedExistenceResult extended_qmm_exists(const ClassicalMomentumMap &j0, const Cochain &sigma,
                                            const TwoFormSeries &omega, const StarProduct &star, int order)
{
    ExtendedExistenceResult result{false, extend_classical(j0, sigma), std::nullopt, std::nullopt, false, false, {}};
    const ClassicalMomentumMap jt0 = result.classical.as_momentum_map();
    std::string not_invariant;
    try {
        solve_j_plus(j0.action(), omega, order);
        result.first_condition_g = true;
    } catch (const NotInvariant &e) {
        not_invariant = e.what();
    }
    try {
        solve_j_plus(jt0.action(), omega, order);
        result.first_condition_gtilde = true;
    } catch (const NotInvariant &) {
    }
    if (result.first_condition_g != result.first_condition_gtilde) {
        throw InternalConsistency("first existence condition differs between g and its extension");
    }
    if (!result.first_condition_g) {
        result.reason = not_invariant;
        return result;
    }
    ExistenceResult solved = quantum_momentum_exists(jt0, omega, star, order);
    result.exists = solved.exists;
    result.reason = solved.reason;
    if (solved.exists) {
        const std::size_t d = j0.values().size();
        QuantumHamiltonian base{j0.action(), {}};
        for (std::size_t a = 0; a < d; ++a) {
            base.values.push_back(solved.j->values[a]);
        }
        result.j = ExtendedQuantumMomentumMap{result.classical.extension(), std::move(base), solved.j->values[d]};
    }
    result.solver = std::move(solved);
    return result;
}

RestrictionReport restrict_to_g(const ExtendedQuantumMomentumMap &jext, const SymplecticAction &action,
                                const ClassicalMomentumMap &j0, const Cochain &sigma, const StarProduct &star,
                                int degree, int order)
{
    const auto &algebra = action.algebra();
    const std::size_t d = algebra.dim();
    const std::size_t nv = action.space().dim();
    QuantumHamiltonian j{action, {}};
    for (std::size_t a = 0; a < d; ++a) {
        const FormalSeries zero(0, jext.extension.order());
        j.values.push_back(jext.value(jext.extension.element(algebra.basis_vector(a), zero)));
    }
    RestrictionReport report{j, verify_quantum_hamiltonian(j, star, degree, order),
                             Cochain(d, 2, ModuleTag::function_series, nv, order)};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            report.defect.set({i, k}, scaled_bracket(star, j.values[i], j.values[k], order)
                                          - j.value(algebra.bracket_basis(i, k)).truncated(order));
        }
    }
    report.homomorphism = report.defect.is_zero();
    try {
        const Cochain lambda = lambda_cocycle(j, star, order);
        report.defect_is_lambda = true;
        for (std::size_t i = 0; i < d && report.defect_is_lambda; ++i) {
            for (std::size_t k = i + 1; k < d; ++k) {
                if (report.defect.at({i, k}) != lambda.at({i, k}).with_num_vars(nv)) {
                    report.defect_is_lambda = false;
                    break;
                }
            }
        }
    } catch (const Error &) {
        report.defect_is_lambda = false;
    }
    report.defect_mod_hbar_is_sigma = true;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = i + 1; k < d; ++k) {
            const Polynomial s = Polynomial::constant(nv, sigma.at({i, k}).coeff(0).constant_term());
            if (report.defect.at({i, k}).coeff(0) != s) {
                report.defect_mod_hbar_is_sigma = false;
            }
        }
    }
    report.classical_limit_is_j0 = j.classical() == j0.values();
    return report;
}

bool restrictions_agree(const QuantumHamiltonian &a, const QuantumHamiltonian &b)
{
    if (a.values.size() != b.values.size()) {
        return false;
    }
    const int order = std::min(a.order(), b.order());
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        if (a.values[i].truncated(order) != b.values[i].truncated(order)) {
            return false;
        }
    }
    return true;
}

CanonicalExtensionReport canonical_quantum_extension(const QuantumHamiltonian &j, const Cochain &lambda,
                                                     const StarProduct &star, int degree)
{
    const int order = lambda.order();
    const std::size_t nv = j.action.space().dim();
    ExtendedAlgebra ghat = central_extend(j.action.algebra(), lambda, CenterTag::formal_reals);
    CanonicalExtensionReport report{
        ExtendedQuantumMomentumMap{ghat, j.truncated(order), FormalSeries::constant(nv, order, Scalar(1))}, true,
        std::nullopt, true, std::nullopt};

    const auto monomials = monomials_up_to(nv, degree);
    for (int k = 0; k <= order && report.central_brackets_vanish; ++k) {
        const FormalSeries x = FormalSeries::constant(nv, order, Scalar(1)).scale_by_hbar_power(k);
        for (const auto &m : monomials) {
            const FormalSeries f = FormalSeries::from_polynomial(Polynomial::monomial(nv, m), order);
            if (!scaled_bracket(star, x, f, order).is_zero()) {
                report.central_brackets_vanish = false;
                report.central_witness = std::make_pair(k, m);
                break;
            }
        }
    }

    const auto &jhat = report.jhat;
    for (std::size_t a = 0; a < ghat.basis_size() && report.homomorphism; ++a) {
        for (std::size_t b = a + 1; b < ghat.basis_size(); ++b) {
            const ExtendedElement x = ghat.basis(a);
            const ExtendedElement y = ghat.basis(b);
            const FormalSeries lhs = scaled_bracket(star, jhat.value(x), jhat.value(y), order);
            if (lhs != jhat.value(ghat.bracket(x, y))) {
                report.homomorphism = false;
                report.homomorphism_witness = std::make_pair(a, b);
                break;
            }
        }
    }
    return report;
}

QuotientReport classical_limit_quotient(const ExtendedQuantumMomentumMap &jhat, const ClassicalMomentumMap &j0,
                                        const Cochain &sigma)
{
    if (jhat.extension.theta().truncated(0) != sigma.truncated(0)) {
        throw CocycleMismatch("lambda mod hbar differs from Sigma");
    }
    const ExtendedClassicalMomentumMap jt0 = extend_classical(j0, sigma);
    QuotientReport report;
    report.matches_extended_classical = true;
    for (std::size_t a = 0; a < jhat.extension.basis_size(); ++a) {
        const Polynomial v = classical_limit(jhat.value(jhat.extension.basis(a)));
        report.values.push_back(v);
        if (v != jt0.value(jt0.extension().basis(a))) {
            report.matches_extended_classical = false;
        }
    }
    return report;
}

} // namespace qmm
