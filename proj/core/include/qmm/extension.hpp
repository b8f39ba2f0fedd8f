#ifndef QMM_EXTENSION_HPP
#define QMM_EXTENSION_HPP

#include <vector>

#include "qmm/cochain.hpp"
#include "qmm/lie_algebra.hpp"

namespace qmm
{

enum class CenterTag
{
    reals,        // g + R
    formal_reals, // g + R[[hbar]]
};

/// (xi, a) with xi in the base algebra and a central. The central part is a
/// series over zero variables; for a real center its order is 0.
struct ExtendedElement
{
    Vector base;
    FormalSeries central;

    friend bool operator==(const ExtendedElement &a, const ExtendedElement &b)
    {
        return a.base == b.base && a.central == b.central;
    }
};

/// Central extension with [(xi,a),(eta,b)] = ([xi,eta], theta(xi,eta)).
class ExtendedAlgebra
{
public:
    // Throws NotACocycle when Jacobi fails on some basis triple.
    ExtendedAlgebra(LieAlgebra base, Cochain theta, CenterTag tag);

    const LieAlgebra &base() const { return base_; }
    const Cochain &theta() const { return theta_; }
    CenterTag tag() const { return tag_; }
    int order() const { return theta_.order(); }

    // Basis element i < d is (e_i, 0); i == d is the central unit (0, 1).
    std::size_t basis_size() const { return base_.dim() + 1; }
    ExtendedElement basis(std::size_t i) const;
    ExtendedElement element(const Vector &xi, const FormalSeries &a) const;
    ExtendedElement bracket(const ExtendedElement &x, const ExtendedElement &y) const;

    // The extension as a (d+1)-dimensional real Lie algebra, last basis
    // vector central. Only for a real center.
    LieAlgebra as_lie_algebra() const;

private:
    LieAlgebra base_;
    Cochain theta_;
    CenterTag tag_;
};

ExtendedAlgebra central_extend(const LieAlgebra &algebra, const Cochain &theta, CenterTag tag);

} // namespace qmm

#endif
