#include "qmm/lie_algebra.hpp"

#include <set>
#include <tuple>
#include <string>

#include "qmm/errors.hpp"

namespace qmm
{

namespace
{

std::string one_based(std::initializer_list<std::size_t> idx)
{
    std::string out = "(";
    for (auto i : idx) {
        if (out.size() > 1) {
            out += ",";
        }
        out += std::to_string(i + 1);
    }
    return out + ")";
}

} // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::vector<Vector>> constants) : dim_(dim), c_(std::move(constants))
{
    if (c_.size() != dim_) {
        throw InvariantViolation("structure constant table must have " + std::to_string(dim_) + " rows");
    }
    for (const auto &row : c_) {
        if (row.size() != dim_) {
            throw InvariantViolation("structure constant table must be square");
        }
        for (const auto &v : row) {
            if (v.size() != dim_) {
                throw InvariantViolation("each bracket must have " + std::to_string(dim_) + " coordinates");
            }
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                if (c_[i][j][k] != -c_[j][i][k]) {
                    throw InvariantViolation("antisymmetry fails: c_{ij}^k != -c_{ji}^k at (i,j,k) = "
                                             + one_based({i, j, k}));
                }
            }
        }
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            for (std::size_t k = 0; k < dim_; ++k) {
                for (std::size_t l = 0; l < dim_; ++l) {
                    Scalar s;
                    for (std::size_t m = 0; m < dim_; ++m) {
                        s += c_[i][j][m] * c_[m][k][l] + c_[j][k][m] * c_[m][i][l] + c_[k][i][m] * c_[m][j][l];
                    }
                    if (!s.is_zero()) {
                        throw InvariantViolation("Jacobi identity fails at (i,j,k,l) = " + one_based({i, j, k, l})
                                                 + ": sum = " + s.to_string());
                    }
                }
            }
        }
    }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim)
{
    return LieAlgebra(dim, std::vector<std::vector<Vector>>(dim, std::vector<Vector>(dim, Vector(dim))));
}

LieAlgebra LieAlgebra::from_triples(std::size_t dim, const std::vector<StructureConstant> &triples)
{
    std::vector<std::vector<Vector>> c(dim, std::vector<Vector>(dim, Vector(dim)));
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> explicit_entries;
    for (const auto &t : triples) {
        if (t.i >= dim || t.j >= dim || t.k >= dim) {
            throw InvariantViolation("structure constant index out of range: " + one_based({t.i, t.j, t.k}));
        }
        if (!explicit_entries.emplace(t.i, t.j, t.k).second) {
            throw InvariantViolation("structure constant given twice: " + one_based({t.i, t.j, t.k}));
        }
        c[t.i][t.j][t.k] = t.value;
    }
    for (const auto &t : triples) {
        if (!explicit_entries.contains({t.j, t.i, t.k})) {
            c[t.j][t.i][t.k] = -t.value;
        }
    }
    return LieAlgebra(dim, std::move(c));
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const
{
    if (x.size() != dim_ || y.size() != dim_) {
        throw DimensionMismatch("Lie algebra element has the wrong dimension");
    }
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) {
                continue;
            }
            const Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k) {
                if (!c_[i][j][k].is_zero()) {
                    out[k] += xy * c_[i][j][k];
                }
            }
        }
    }
    return out;
}

bool LieAlgebra::is_abelian() const
{
    for (const auto &row : c_) {
        for (const auto &v : row) {
            for (const auto &s : v) {
                if (!s.is_zero()) {
                    return false;
                }
            }
        }
    }
    return true;
}

Vector LieAlgebra::basis_vector(std::size_t i) const
{
    Vector v(dim_);
    v.at(i) = Scalar(1);
    return v;
}

} // namespace qmm
