#ifndef QMM_LINEAR_ALGEBRA_HPP
#define QMM_LINEAR_ALGEBRA_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "qmm/scalar.hpp"

namespace qmm
{

using Vector = std::vector<Scalar>;
using Matrix = std::vector<std::vector<Scalar>>;

Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix identity_matrix(std::size_t n);
Matrix matmul(const Matrix &a, const Matrix &b);
bool is_antisymmetric(const Matrix &m);

// Exact inverse by Gauss-Jordan elimination; nullopt when singular.
std::optional<Matrix> inverse(const Matrix &m);

// One solution of A x = b, with every free variable set to zero, or nullopt
// when the system is inconsistent.
std::optional<Vector> solve_linear(const Matrix &a, const Vector &b);

} // namespace qmm

#endif
