#include "qmm/extension.hpp"

#include <string>

#include "qmm/errors.hpp"

namespace qmm
{

ExtendedAlgebra::ExtendedAlgebra(LieAlgebra base, Cochain theta, CenterTag tag)
    : base_(std::move(base)), theta_(std::move(theta)), tag_(tag)
{
    if (theta_.degree() != 2 || theta_.tag() != ModuleTag::constant_series) {
        throw std::invalid_argument("central extensions need a constant-series 2-cochain");
    }
    if (theta_.algebra_dim() != base_.dim()) {
        throw DimensionMismatch("cocycle and algebra dimensions differ");
    }
    if (tag_ == CenterTag::reals && theta_.order() != 0) {
        throw OrderMismatch("a real center needs a cocycle with scalar values (order 0)");
    }
    const std::size_t n = basis_size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                const ExtendedElement x = basis(i);
                const ExtendedElement y = basis(j);
                const ExtendedElement z = basis(k);
                const ExtendedElement a = bracket(bracket(x, y), z);
                const ExtendedElement b = bracket(bracket(y, z), x);
                const ExtendedElement c = bracket(bracket(z, x), y);
                const FormalSeries central = a.central + b.central + c.central;
                Vector base_sum(base_.dim());
                for (std::size_t m = 0; m < base_sum.size(); ++m) {
                    base_sum[m] = a.base[m] + b.base[m] + c.base[m];
                }
                if (!central.is_zero() || base_sum != Vector(base_.dim())) {
                    throw NotACocycle("Jacobi fails for the extension on basis triple (" + std::to_string(i + 1) + ","
                                      + std::to_string(j + 1) + "," + std::to_string(k + 1)
                                      + "); central defect " + central.to_string());
                }
            }
        }
    }
}

ExtendedElement ExtendedAlgebra::basis(std::size_t i) const
{
    const std::size_t d = base_.dim();
    if (i < d) {
        return {base_.basis_vector(i), FormalSeries(0, order())};
    }
    if (i == d) {
        return {Vector(d), FormalSeries::constant(0, order(), Scalar(1))};
    }
    throw DimensionMismatch("extended basis index out of range");
}

ExtendedElement ExtendedAlgebra::element(const Vector &xi, const FormalSeries &a) const
{
    if (xi.size() != base_.dim()) {
        throw DimensionMismatch("base part has the wrong dimension");
    }
    if (a.num_vars() != 0) {
        throw DimensionMismatch("central part must be a series over zero variables");
    }
    if (tag_ == CenterTag::formal_reals && a.order() < order()) {
        throw OrderMismatch("central part has order " + std::to_string(a.order()) + ", extension has order "
                            + std::to_string(order()));
    }
    return {xi, a.padded(order())};
}

ExtendedElement ExtendedAlgebra::bracket(const ExtendedElement &x, const ExtendedElement &y) const
{
    return {base_.bracket(x.base, y.base), theta_.evaluate({x.base, y.base})};
}

LieAlgebra ExtendedAlgebra::as_lie_algebra() const
{
    if (tag_ != CenterTag::reals) {
        throw std::logic_error("only a real central extension is a finite-dimensional real Lie algebra");
    }
    const std::size_t d = base_.dim();
    std::vector<std::vector<Vector>> c(d + 1, std::vector<Vector>(d + 1, Vector(d + 1)));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const Vector &b = base_.bracket_basis(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                c[i][j][k] = b[k];
            }
            c[i][j][d] = theta_.at({i, j}).coeff(0).constant_term();
        }
    }
    return LieAlgebra(d + 1, std::move(c));
}

ExtendedAlgebra central_extend(const LieAlgebra &algebra, const Cochain &theta, CenterTag tag)
{
    return ExtendedAlgebra(algebra, theta, tag);
}

} // namespace qmm
