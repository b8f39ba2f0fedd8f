#include "qmm/linear_algebra.hpp"

#include "qmm/errors.hpp"

namespace qmm
{

Matrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return Matrix(rows, Vector(cols));
}

Matrix identity_matrix(std::size_t n)
{
    Matrix m = zero_matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = Scalar(1);
    }
    return m;
}

Matrix matmul(const Matrix &a, const Matrix &b)
{
    const std::size_t inner = b.size();
    if (!a.empty() && a[0].size() != inner) {
        throw DimensionMismatch("matrix product with incompatible shapes");
    }
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    Matrix out = zero_matrix(a.size(), cols);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                out[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    return out;
}

bool is_antisymmetric(const Matrix &m)
{
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != m.size()) {
            return false;
        }
        for (std::size_t j = 0; j <= i; ++j) {
            if (m[i][j] != -m[j][i]) {
                return false;
            }
        }
    }
    return true;
}

std::optional<Matrix> inverse(const Matrix &m)
{
    const std::size_t n = m.size();
    Matrix a = m;
    Matrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) {
            ++pivot;
        }
        if (pivot == n) {
            return std::nullopt;
        }
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const Scalar p = a[col][col].inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] *= p;
            inv[col][j] *= p;
        }
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col].is_zero()) {
                continue;
            }
            const Scalar f = a[row][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[row][j] -= f * a[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

std::optional<Vector> solve_linear(const Matrix &a, const Vector &b)
{
    const std::size_t rows = a.size();
    if (b.size() != rows) {
        throw DimensionMismatch("right-hand side length does not match row count");
    }
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    Matrix m = a;
    Vector rhs = b;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        std::swap(m[p], m[r]);
        std::swap(rhs[p], rhs[r]);
        const Scalar inv = m[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) {
            m[r][j] *= inv;
        }
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) {
                continue;
            }
            const Scalar f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) {
                m[i][j] -= f * m[r][j];
            }
            rhs[i] -= f * rhs[r];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i) {
        if (!rhs[i].is_zero()) {
            return std::nullopt;
        }
    }
    Vector x(cols);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        x[pivot_cols[i]] = rhs[i];
    }
    return x;
}

} // namespace qmm
