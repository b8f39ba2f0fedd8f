#include "qmm/star_product.hpp"

#include "qmm/contraction.hpp"
#include "qmm/errors.hpp"

namespace qmm
{

TwoFormSeries StarProduct::characteristic_form(int order) const
{
    return TwoFormSeries::zero(space().dim(), order);
}

FormalSeries MoyalProduct::multiply(const FormalSeries &f, const FormalSeries &g) const
{
    return moyal_product(space_, f, g);
}

FormalSeries moyal_product(const PhaseSpace &space, const FormalSeries &f, const FormalSeries &g)
{
    const std::size_t nv = space.dim();
    if (f.num_vars() != nv || g.num_vars() != nv) {
        throw DimensionMismatch("Moyal product operands must live on the phase space");
    }
    const int order = std::min(f.order(), g.order());
    std::vector<Polynomial> out(static_cast<std::size_t>(order) + 1, Polynomial(nv));
    ContractionKernel kernel(space.pi(), space.star_coefficient());
    for (int r1 = 0; r1 <= order; ++r1) {
        for (int r2 = 0; r1 + r2 <= order; ++r2) {
            for (const auto &[a, ca] : f.coeff(r1).terms()) {
                for (const auto &[b, cb] : g.coeff(r2).terms()) {
                    const Scalar cab = ca * cb;
                    for (const auto &t : kernel.expand(a, b)) {
                        const int r = r1 + r2 + t.order;
                        if (r > order) {
                            break;
                        }
                        out[static_cast<std::size_t>(r)].add_term(t.monomial, cab * t.coeff);
                    }
                }
            }
        }
    }
    FormalSeries result(nv, order);
    for (int r = 0; r <= order; ++r) {
        result.set_coeff(r, std::move(out[static_cast<std::size_t>(r)]));
    }
    return result;
}

FormalSeries star_commutator_scaled(const StarProduct &star, const FormalSeries &f, const FormalSeries &g)
{
    return (star.multiply(f, g) - star.multiply(g, f)).divide_by_hbar();
}

FormalSeries scaled_bracket(const StarProduct &star, const FormalSeries &f, const FormalSeries &g, int order)
{
    if (f.order() < order || g.order() < order) {
        throw OrderMismatch("bracket requested at order " + std::to_string(order) + " but operands have orders "
                            + std::to_string(f.order()) + " and " + std::to_string(g.order()));
    }
    const FormalSeries fp = f.truncated(order).padded(order + 1);
    const FormalSeries gp = g.truncated(order).padded(order + 1);
    return star.space().bracket_normalization() * star_commutator_scaled(star, fp, gp);
}

} // namespace qmm
