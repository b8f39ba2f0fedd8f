#ifndef QMM_FEDOSOV_HPP
#define QMM_FEDOSOV_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "qmm/star_product.hpp"
#include "qmm/symplectic_action.hpp"
#include "qmm/two_form.hpp"
#include "qmm/weyl.hpp"

namespace qmm
{

// Lowest admissible total degree for the normalization element s.
enum class NormalizationBound
{
    w3, // s in W_3
    w4, // s in W_4 with no part of symmetric degree 1
};

std::string to_string(NormalizationBound b);

struct FedosovConfig
{
    PhaseSpace space;
    TwoFormSeries omega;
    WeylElement s;
    int weyl_order; // N_W
    NormalizationBound normalization = NormalizationBound::w3;

    // Omega = 0, s = 0.
    static FedosovConfig flat(const PhaseSpace &space, int weyl_order);
    static FedosovConfig with_omega(const PhaseSpace &space, const TwoFormSeries &omega, int weyl_order);

    // Throws ConfigViolation.
    void validate() const;
};

// Omega as an element of form degree 2, exact up to the cap.
WeylElement omega_element(const TwoFormSeries &omega, int cap);

/// Solves r = delta s + delta^{-1}(nabla r - (kappa/hbar) r o r + Omega) by
/// iteration (the curvature term is zero on the flat base), then checks the
/// structure equation delta r = nabla r - (kappa/hbar) r o r + Omega and
/// delta^{-1} r = s up to the computed bound.
WeylElement build_r(const FedosovConfig &config);

// D a = -delta a + nabla a - (kappa/hbar) [r, a].
WeylElement fedosov_derivation(const PhaseSpace &space, const WeylElement &a, const WeylElement &r);

// tau(f) = f + delta^{-1}(nabla tau - (kappa/hbar) [r, tau]), iterated to
// its fixed point; exact up to N_W - 1.
WeylElement fedosov_taylor(const PhaseSpace &space, const FormalSeries &f, const WeylElement &r);

/// Star product sigma(tau(f) o tau(g)) of the flat Fedosov construction.
/// Flat sections of monomials are cached; the cache is guarded by a mutex so
/// instances may be shared.
class FedosovStar : public StarProduct
{
public:
    explicit FedosovStar(FedosovConfig config);

    const PhaseSpace &space() const override { return config_.space; }
    std::string name() const override { return "fedosov"; }
    // Throws TruncationTooLow unless N_W >= deg f + deg g + 2N and N_W >= 2N + 1.
    FormalSeries multiply(const FormalSeries &f, const FormalSeries &g) const override;
    TwoFormSeries characteristic_form(int order) const override;

    const FedosovConfig &config() const { return config_; }
    const WeylElement &r() const { return r_; }
    WeylElement taylor(const FormalSeries &f) const;

    // Smallest N_W that multiply() accepts for the given degrees and order.
    static int required_weyl_order(int deg_f, int deg_g, int order);

private:
    const WeylElement &taylor_monomial(const Exponents &m) const;

    FedosovConfig config_;
    WeylElement r_;
    mutable std::mutex mutex_;
    mutable std::map<Exponents, std::unique_ptr<WeylElement>> cache_;
};

struct InvarianceReport
{
    bool affine = true;
    bool omega_invariant = true;
    bool s_invariant = true;
    std::optional<std::size_t> affine_witness; // generator index
    std::optional<std::size_t> omega_witness;
    std::optional<std::size_t> s_witness;

    bool passed() const { return affine && omega_invariant && s_invariant; }
};

// Generators must be affine (components of degree <= 1), and L_X Omega = 0,
// L_X s = 0 exactly.
InvarianceReport check_invariance(const SymplecticAction &action, const FedosovConfig &config);

// L_X s for a form-degree-0 Weyl element: X^k d_{x^k} s + (d_i X^k) y^i d_{y^k} s.
WeylElement lie_derivative(const VectorField &x, const WeylElement &s);

} // namespace qmm

#endif
