#include "qmm/fedosov.hpp"

#include <algorithm>

#include "qmm/errors.hpp"

namespace qmm
{

std::string to_string(NormalizationBound b)
{
    return b == NormalizationBound::w3 ? "W3" : "W4";
}

FedosovConfig FedosovConfig::flat(const PhaseSpace &space, int weyl_order)
{
    return with_omega(space, TwoFormSeries::zero(space.dim(), 1), weyl_order);
}

FedosovConfig FedosovConfig::with_omega(const PhaseSpace &space, const TwoFormSeries &omega, int weyl_order)
{
    return {space, omega, WeylElement(space.dim(), weyl_order), weyl_order, NormalizationBound::w3};
}

void FedosovConfig::validate() const
{
    if (weyl_order < 1) {
        throw ConfigViolation("N_W must be positive");
    }
    if (omega.dim() != space.dim() || s.dim() != space.dim()) {
        throw ConfigViolation("Omega and s must live on the phase space");
    }
    const int min_degree = normalization == NormalizationBound::w3 ? 3 : 4;
    for (const auto &[k, c] : s.terms()) {
        if (k.forms != 0) {
            throw ConfigViolation("s must have form degree 0");
        }
        if (k.symmetric_degree() == 0) {
            throw ConfigViolation("s must satisfy sigma(s) = 0");
        }
        if (k.total_degree() < min_degree) {
            throw ConfigViolation("s has a term of total degree " + std::to_string(k.total_degree()) + " below "
                                  + to_string(normalization));
        }
        if (normalization == NormalizationBound::w4 && k.symmetric_degree() == 1) {
            throw ConfigViolation("s has a part of symmetric degree 1, not allowed under W4");
        }
    }
}

WeylElement omega_element(const TwoFormSeries &omega, int cap)
{
    const std::size_t d = omega.dim();
    WeylElement out(d, cap);
    for (int r = 1; r <= omega.order(); ++r) {
        const auto &m = omega.at(r);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = i + 1; j < d; ++j) {
                out.add_term({r, Exponents(d), (1u << i) | (1u << j)}, m[i][j]);
            }
        }
    }
    return out;
}

namespace
{

WeylElement scaled_ad(const PhaseSpace &space, const WeylElement &r, const WeylElement &a)
{
    return space.bracket_normalization() * divide_by_hbar(graded_commutator(space, r, a));
}

WeylElement structure_rhs(const PhaseSpace &space, const WeylElement &r, const WeylElement &omega)
{
    const WeylElement rr = space.bracket_normalization() * divide_by_hbar(fiber_circ(space, r, r));
    return nabla(r) - rr + omega;
}

} // namespace

WeylElement build_r(const FedosovConfig &config)
{
    config.validate();
    const PhaseSpace &space = config.space;
    const int cap = config.weyl_order;
    // (1/hbar) r o r loses two degrees, so iterate with headroom above the cap.
    const int work = cap + 2;
    const WeylElement omega = omega_element(config.omega, work);
    WeylElement s_exact(space.dim(), work + 1);
    for (const auto &[k, c] : config.s.terms()) {
        s_exact.add_term(k, c);
    }
    const WeylElement ds = delta(s_exact).truncated(work);
    WeylElement r(space.dim(), work, 1);
    const int max_iterations = work + 4;
    for (int it = 0;; ++it) {
        WeylElement next = ds + delta_inv(structure_rhs(space, r, omega));
        const bool settled = next.bound() <= r.bound() && agree(next, r);
        r = std::move(next);
        if (settled) {
            break;
        }
        if (it + 1 == max_iterations) {
            throw FixedPointNotReached("r did not stabilize within " + std::to_string(max_iterations)
                                       + " iterations (bound " + std::to_string(r.bound()) + ")");
        }
    }
    if (r.bound() < cap) {
        throw FixedPointNotReached("r is known only up to degree " + std::to_string(r.bound()));
    }
    if (!agree(delta(r), structure_rhs(space, r, omega))) {
        throw InternalConsistency("r fails the structure equation delta r = nabla r - (1/hbar) r o r + Omega");
    }
    WeylElement out(space.dim(), cap, cap);
    for (const auto &[k, c] : r.terms()) {
        out.add_term(k, c);
    }
    if (!agree(delta_inv(out), config.s.truncated(cap))) {
        throw InternalConsistency("r fails the normalization delta^{-1} r = s");
    }
    return out;
}

WeylElement fedosov_derivation(const PhaseSpace &space, const WeylElement &a, const WeylElement &r)
{
    return nabla(a) - delta(a) - scaled_ad(space, r, a);
}

WeylElement fedosov_taylor(const PhaseSpace &space, const FormalSeries &f, const WeylElement &r)
{
    const int cap = r.cap();
    const WeylElement base = WeylElement::from_series(f, cap);
    WeylElement tau = base.truncated(0);
    for (int it = 0; it <= cap + 4; ++it) {
        WeylElement next = base + delta_inv(nabla(tau) - scaled_ad(space, r, tau));
        if (next.bound() <= tau.bound()) {
            if (!agree(next, tau)) {
                throw FixedPointNotReached("Fedosov-Taylor iteration did not settle");
            }
            return tau;
        }
        tau = std::move(next);
    }
    throw FixedPointNotReached("Fedosov-Taylor iteration did not settle");
}

FedosovStar::FedosovStar(FedosovConfig config) : config_(std::move(config)), r_(build_r(config_)) {}

int FedosovStar::required_weyl_order(int deg_f, int deg_g, int order)
{
    return std::max(std::max(deg_f, 0) + std::max(deg_g, 0) + 2 * order, 2 * order + 1);
}

TwoFormSeries FedosovStar::characteristic_form(int order) const
{
    return config_.omega.padded(order);
}

const WeylElement &FedosovStar::taylor_monomial(const Exponents &m) const
{
    std::lock_guard lock(mutex_);
    auto it = cache_.find(m);
    if (it == cache_.end()) {
        const Polynomial p = Polynomial::monomial(config_.space.dim(), m);
        auto tau = std::make_unique<WeylElement>(
            fedosov_taylor(config_.space, FormalSeries::from_polynomial(p, 0), r_));
        it = cache_.emplace(m, std::move(tau)).first;
    }
    return *it->second;
}

WeylElement FedosovStar::taylor(const FormalSeries &f) const
{
    const int cap = config_.weyl_order;
    WeylElement out(config_.space.dim(), cap);
    bool first = true;
    for (int k = 0; k <= f.order(); ++k) {
        for (const auto &[m, c] : f.coeff(k).terms()) {
            const WeylElement term = scale_by_hbar_power(taylor_monomial(m), k) * c;
            if (first) {
                out = term;
                first = false;
            } else {
                out += term;
            }
        }
    }
    if (first) {
        return WeylElement(config_.space.dim(), cap, cap - 1);
    }
    return out;
}

FormalSeries FedosovStar::multiply(const FormalSeries &f, const FormalSeries &g) const
{
    const int order = std::min(f.order(), g.order());
    const int needed = required_weyl_order(f.max_degree(), g.max_degree(), order);
    if (config_.weyl_order < needed) {
        throw TruncationTooLow("order " + std::to_string(order) + " with degrees " + std::to_string(f.max_degree())
                               + " and " + std::to_string(g.max_degree()) + " needs N_W >= " + std::to_string(needed)
                               + ", have " + std::to_string(config_.weyl_order));
    }
    const WeylElement product = fiber_circ(config_.space, taylor(f.truncated(order)), taylor(g.truncated(order)));
    const FormalSeries s = sigma(product);
    if (s.order() < order) {
        throw InternalConsistency("Fedosov product known only to order " + std::to_string(s.order()));
    }
    return s.truncated(order);
}

WeylElement lie_derivative(const VectorField &x, const WeylElement &s)
{
    WeylElement out(s.dim(), s.cap(), s.bound());
    for (const auto &[k, c] : s.terms()) {
        out.add_term(k, x.apply(c));
        for (std::size_t kk = 0; kk < k.alpha.size(); ++kk) {
            if (k.alpha[kk] == 0) {
                continue;
            }
            for (std::size_t i = 0; i < k.alpha.size(); ++i) {
                const Polynomial dx = x.components[kk].derivative(i);
                if (dx.is_zero()) {
                    continue;
                }
                WeylKey nk = k;
                --nk.alpha[kk];
                ++nk.alpha[i];
                out.add_term(nk, dx * c * Scalar(k.alpha[kk]));
            }
        }
    }
    return out;
}

InvarianceReport check_invariance(const SymplecticAction &action, const FedosovConfig &config)
{
    InvarianceReport report;
    const auto &gens = action.generators();
    for (std::size_t a = 0; a < gens.size(); ++a) {
        if (report.affine && gens[a].max_degree() > 1) {
            report.affine = false;
            report.affine_witness = a;
        }
        if (report.omega_invariant && config.omega.invariance_defect(gens[a])) {
            report.omega_invariant = false;
            report.omega_witness = a;
        }
        if (report.s_invariant && !lie_derivative(gens[a], config.s).is_zero()) {
            report.s_invariant = false;
            report.s_witness = a;
        }
    }
    return report;
}

} // namespace qmm
