#ifndef QMM_TWO_FORM_HPP
#define QMM_TWO_FORM_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmm/phase_space.hpp"
#include "qmm/series.hpp"

namespace qmm
{

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Formal series Omega = sum_{r>=1} hbar^r Omega_r of closed two-forms with
/// polynomial components Omega_{r,ij} (antisymmetric in i, j).
class TwoFormSeries
{
public:
    // forms[r] is Omega_r for r = 0..order; forms[0] must vanish.
    // Throws InvariantViolation when a component is missing, not antisymmetric,
    // not closed, or sits at hbar^0.
    TwoFormSeries(std::size_t dim, std::vector<PolyMatrix> forms);

    static TwoFormSeries zero(std::size_t dim, int order);
    // hbar^power * beta * omega.
    static TwoFormSeries multiple_of_omega(const PhaseSpace &space, int order, int power, const Scalar &beta);

    std::size_t dim() const { return dim_; }
    int order() const { return static_cast<int>(forms_.size()) - 1; }
    const PolyMatrix &at(int r) const { return forms_.at(static_cast<std::size_t>(r)); }
    bool is_zero() const;
    int max_degree() const;

    TwoFormSeries truncated(int order) const;
    TwoFormSeries padded(int order) const;

    // Omega(X, Y) = sum_r hbar^r Omega_{r,ij} X^i Y^j.
    FormalSeries evaluate(const VectorField &x, const VectorField &y) const;
    // (i_X Omega_r)_k = X^i Omega_{r,ik}.
    OneForm interior(int r, const VectorField &x) const;
    // First (r, i, j) with (L_X Omega_r)_{ij} != 0.
    std::optional<std::vector<int>> invariance_defect(const VectorField &x) const;

    friend bool operator==(const TwoFormSeries &a, const TwoFormSeries &b)
    {
        return a.dim_ == b.dim_ && a.forms_ == b.forms_;
    }

private:
    std::size_t dim_;
    std::vector<PolyMatrix> forms_;
};

PolyMatrix zero_poly_matrix(std::size_t dim);

} // namespace qmm

#endif
