#ifndef QMM_STAR_PRODUCT_HPP
#define QMM_STAR_PRODUCT_HPP

#include <string>

#include "qmm/phase_space.hpp"
#include "qmm/series.hpp"
#include "qmm/two_form.hpp"

namespace qmm
{

/// A bilinear product on polynomial formal series over a phase space.
///
/// multiply() truncates at the smaller of the two operand orders.
class StarProduct
{
public:
    virtual ~StarProduct() = default;

    virtual const PhaseSpace &space() const = 0;
    virtual std::string name() const = 0;
    virtual FormalSeries multiply(const FormalSeries &f, const FormalSeries &g) const = 0;
    // The two-form Omega the product was built from; zero unless overridden.
    virtual TwoFormSeries characteristic_form(int order) const;
};

class MoyalProduct : public StarProduct
{
public:
    explicit MoyalProduct(PhaseSpace space) : space_(std::move(space)) {}

    const PhaseSpace &space() const override { return space_; }
    std::string name() const override { return "moyal"; }
    FormalSeries multiply(const FormalSeries &f, const FormalSeries &g) const override;

private:
    PhaseSpace space_;
};

// Commutative pointwise product. Not a deformation; used to exercise the
// axiom checks on a product that must fail them.
class PointwiseProduct : public StarProduct
{
public:
    explicit PointwiseProduct(PhaseSpace space) : space_(std::move(space)) {}

    const PhaseSpace &space() const override { return space_; }
    std::string name() const override { return "pointwise"; }
    FormalSeries multiply(const FormalSeries &f, const FormalSeries &g) const override { return f * g; }

private:
    PhaseSpace space_;
};

FormalSeries moyal_product(const PhaseSpace &space, const FormalSeries &f, const FormalSeries &g);

// (1/hbar)(F*G - G*F) at order min(N_F, N_G) - 1. Throws NotDivisible when
// the commutator has an hbar^0 term.
FormalSeries star_commutator_scaled(const StarProduct &star, const FormalSeries &f, const FormalSeries &g);

// (kappa/hbar)[F,G]_* at the given order, where kappa is the bracket
// normalization of the convention (1 or i). Both operands need order >= order;
// they are padded by one zero coefficient, which is harmless because the
// top commutator coefficient only sees C_0, and C_0 is commutative.
FormalSeries scaled_bracket(const StarProduct &star, const FormalSeries &f, const FormalSeries &g, int order);

} // namespace qmm

#endif
