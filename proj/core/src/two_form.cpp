#include "qmm/two_form.hpp"

#include "qmm/errors.hpp"

namespace qmm
{

PolyMatrix zero_poly_matrix(std::size_t dim)
{
    return PolyMatrix(dim, std::vector<Polynomial>(dim, Polynomial(dim)));
}

namespace
{

bool matrix_is_zero(const PolyMatrix &m)
{
    for (const auto &row : m) {
        for (const auto &p : row) {
            if (!p.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TwoFormSeries::TwoFormSeries(std::size_t dim, std::vector<PolyMatrix> forms) : dim_(dim), forms_(std::move(forms))
{
    if (forms_.empty()) {
        throw InvariantViolation("two-form series needs at least the hbar^0 slot");
    }
    for (std::size_t r = 0; r < forms_.size(); ++r) {
        const auto &m = forms_[r];
        const std::string where = "Omega at hbar^" + std::to_string(r);
        if (m.size() != dim_) {
            throw InvariantViolation(where + " must be a " + std::to_string(dim_) + "x" + std::to_string(dim_)
                                     + " matrix");
        }
        for (const auto &row : m) {
            if (row.size() != dim_) {
                throw InvariantViolation(where + " must be a " + std::to_string(dim_) + "x" + std::to_string(dim_)
                                         + " matrix");
            }
            for (const auto &p : row) {
                if (p.num_vars() != dim_) {
                    throw InvariantViolation(where + " has a component in the wrong number of variables");
                }
            }
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                if (m[i][j] != -m[j][i]) {
                    throw InvariantViolation(where + " is not antisymmetric at (" + std::to_string(i + 1) + ","
                                             + std::to_string(j + 1) + ")");
                }
            }
        }
        if (r == 0 && !matrix_is_zero(m)) {
            throw InvariantViolation("Omega must start at hbar^1 (it lies in hbar Z^2_dR[[hbar]]); found an hbar^0 term");
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i + 1; j < dim_; ++j) {
                for (std::size_t k = j + 1; k < dim_; ++k) {
                    const Polynomial d = m[j][k].derivative(i) + m[k][i].derivative(j) + m[i][j].derivative(k);
                    if (!d.is_zero()) {
                        throw InvariantViolation(where + " is not closed: dOmega_{" + std::to_string(i + 1)
                                                 + std::to_string(j + 1) + std::to_string(k + 1) + "} = "
                                                 + d.to_string());
                    }
                }
            }
        }
    }
}

TwoFormSeries TwoFormSeries::zero(std::size_t dim, int order)
{
    return TwoFormSeries(dim, std::vector<PolyMatrix>(static_cast<std::size_t>(order) + 1, zero_poly_matrix(dim)));
}

TwoFormSeries TwoFormSeries::multiple_of_omega(const PhaseSpace &space, int order, int power, const Scalar &beta)
{
    const auto d = space.dim();
    std::vector<PolyMatrix> forms(static_cast<std::size_t>(order) + 1, zero_poly_matrix(d));
    if (power <= order) {
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t j = 0; j < d; ++j) {
                forms[static_cast<std::size_t>(power)][i][j] = Polynomial::constant(d, beta * space.omega()[i][j]);
            }
        }
    }
    return TwoFormSeries(d, std::move(forms));
}

bool TwoFormSeries::is_zero() const
{
    for (const auto &m : forms_) {
        if (!matrix_is_zero(m)) {
            return false;
        }
    }
    return true;
}

int TwoFormSeries::max_degree() const
{
    int deg = -1;
    for (const auto &m : forms_) {
        for (const auto &row : m) {
            for (const auto &p : row) {
                deg = std::max(deg, p.degree());
            }
        }
    }
    return deg;
}

TwoFormSeries TwoFormSeries::truncated(int new_order) const
{
    std::vector<PolyMatrix> forms(forms_.begin(), forms_.begin() + std::min(new_order, order()) + 1);
    return TwoFormSeries(dim_, std::move(forms));
}

TwoFormSeries TwoFormSeries::padded(int new_order) const
{
    if (new_order <= order()) {
        return truncated(new_order);
    }
    std::vector<PolyMatrix> forms = forms_;
    forms.resize(static_cast<std::size_t>(new_order) + 1, zero_poly_matrix(dim_));
    return TwoFormSeries(dim_, std::move(forms));
}

FormalSeries TwoFormSeries::evaluate(const VectorField &x, const VectorField &y) const
{
    FormalSeries out(dim_, order());
    for (int r = 0; r <= order(); ++r) {
        const OneForm ix = interior(r, x);
        Polynomial v(dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            v += ix[j] * y.components[j];
        }
        out.set_coeff(r, std::move(v));
    }
    return out;
}

OneForm TwoFormSeries::interior(int r, const VectorField &x) const
{
    if (x.dim() != dim_) {
        throw DimensionMismatch("vector field dimension does not match the two-form");
    }
    const auto &m = at(r);
    OneForm alpha(dim_, Polynomial(dim_));
    for (std::size_t k = 0; k < dim_; ++k) {
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!m[i][k].is_zero() && !x.components[i].is_zero()) {
                alpha[k] += x.components[i] * m[i][k];
            }
        }
    }
    return alpha;
}

std::optional<std::vector<int>> TwoFormSeries::invariance_defect(const VectorField &x) const
{
    // (L_X W)_{ij} = X^k d_k W_{ij} + W_{kj} d_i X^k + W_{ik} d_j X^k.
    for (int r = 0; r <= order(); ++r) {
        const auto &m = at(r);
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Polynomial l = x.apply(m[i][j]);
                for (std::size_t k = 0; k < dim_; ++k) {
                    l += m[k][j] * x.components[k].derivative(i);
                    l += m[i][k] * x.components[k].derivative(j);
                }
                if (!l.is_zero()) {
                    return std::vector<int>{r, static_cast<int>(i), static_cast<int>(j)};
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace qmm
