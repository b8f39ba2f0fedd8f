#ifndef QMM_LIE_ALGEBRA_HPP
#define QMM_LIE_ALGEBRA_HPP

#include <cstddef>
#include <vector>

#include "qmm/linear_algebra.hpp"

namespace qmm
{

struct StructureConstant
{
    std::size_t i;
    std::size_t j;
    std::size_t k;
    Scalar value;
};

/// Finite-dimensional Lie algebra with [e_i, e_j] = sum_k c_{ij}^k e_k.
/// Indices are zero-based.
class LieAlgebra
{
public:
    // constants[i][j][k] = c_{ij}^k. Throws InvariantViolation if
    // antisymmetry or Jacobi fails; the message names the offending indices.
    LieAlgebra(std::size_t dim, std::vector<std::vector<Vector>> constants);

    static LieAlgebra abelian(std::size_t dim);
    // Each triple sets c_{ij}^k; the mirrored c_{ji}^k = -value is filled in
    // unless given explicitly.
    static LieAlgebra from_triples(std::size_t dim, const std::vector<StructureConstant> &triples);

    std::size_t dim() const { return dim_; }
    const Scalar &constant(std::size_t i, std::size_t j, std::size_t k) const { return c_[i][j][k]; }
    // Coordinates of [e_i, e_j].
    const Vector &bracket_basis(std::size_t i, std::size_t j) const { return c_[i][j]; }
    Vector bracket(const Vector &x, const Vector &y) const;
    bool is_abelian() const;
    Vector basis_vector(std::size_t i) const;

    friend bool operator==(const LieAlgebra &a, const LieAlgebra &b) { return a.c_ == b.c_; }

private:
    std::size_t dim_;
    std::vector<std::vector<Vector>> c_;
};

} // namespace qmm

#endif
