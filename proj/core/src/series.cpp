#include "qmm/series.hpp"

#include <algorithm>
#include <sstream>

#include "qmm/errors.hpp"

namespace qmm
{

FormalSeries::FormalSeries(std::size_t num_vars, int order) : num_vars_(num_vars)
{
    if (order < 0) {
        throw OrderMismatch("series order must be non-negative, got " + std::to_string(order));
    }
    coeffs_.assign(static_cast<std::size_t>(order) + 1, Polynomial(num_vars));
}

FormalSeries FormalSeries::from_polynomial(const Polynomial &p, int order)
{
    FormalSeries s(p.num_vars(), order);
    s.coeffs_[0] = p;
    return s;
}

FormalSeries FormalSeries::constant(std::size_t num_vars, int order, const Scalar &c)
{
    return from_polynomial(Polynomial::constant(num_vars, c), order);
}

FormalSeries FormalSeries::from_scalars(const std::vector<Scalar> &values, std::size_t num_vars)
{
    if (values.empty()) {
        throw OrderMismatch("from_scalars needs at least one coefficient");
    }
    FormalSeries s(num_vars, static_cast<int>(values.size()) - 1);
    for (std::size_t r = 0; r < values.size(); ++r) {
        s.coeffs_[r] = Polynomial::constant(num_vars, values[r]);
    }
    return s;
}

void FormalSeries::set_coeff(int r, Polynomial p)
{
    if (p.num_vars() != num_vars_) {
        throw DimensionMismatch("coefficient has " + std::to_string(p.num_vars()) + " variables, series has "
                                + std::to_string(num_vars_));
    }
    coeffs_.at(static_cast<std::size_t>(r)) = std::move(p);
}

bool FormalSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial &p) { return p.is_zero(); });
}

bool FormalSeries::is_constant() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial &p) { return p.is_constant(); });
}

std::vector<Scalar> FormalSeries::constants() const
{
    if (!is_constant()) {
        throw NonConstant("series " + to_string() + " has non-constant coefficients");
    }
    std::vector<Scalar> out;
    out.reserve(coeffs_.size());
    for (const auto &p : coeffs_) {
        out.push_back(p.constant_term());
    }
    return out;
}

int FormalSeries::max_degree() const
{
    int d = -1;
    for (const auto &p : coeffs_) {
        d = std::max(d, p.degree());
    }
    return d;
}

namespace
{

void require_compatible(const FormalSeries &a, const FormalSeries &b, const char *op)
{
    if (a.num_vars() != b.num_vars()) {
        throw DimensionMismatch(std::string(op) + " of series in " + std::to_string(a.num_vars()) + " and "
                                + std::to_string(b.num_vars()) + " variables");
    }
}

} // namespace

FormalSeries &FormalSeries::operator+=(const FormalSeries &o)
{
    require_compatible(*this, o, "sum");
    // Mixed orders truncate to the smaller one.
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Polynomial(num_vars_));
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        coeffs_[r] += o.coeffs_[r];
    }
    return *this;
}

FormalSeries &FormalSeries::operator-=(const FormalSeries &o)
{
    require_compatible(*this, o, "difference");
    coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()), Polynomial(num_vars_));
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        coeffs_[r] -= o.coeffs_[r];
    }
    return *this;
}

FormalSeries &FormalSeries::operator*=(const Scalar &c)
{
    for (auto &p : coeffs_) {
        p *= c;
    }
    return *this;
}

FormalSeries operator*(const FormalSeries &a, const FormalSeries &b)
{
    require_compatible(a, b, "product");
    FormalSeries out(a.num_vars_, std::min(a.order(), b.order()));
    const std::size_t n = out.coeffs_.size();
    for (std::size_t r = 0; r < n; ++r) {
        if (a.coeffs_[r].is_zero()) {
            continue;
        }
        for (std::size_t s = 0; r + s < n; ++s) {
            if (!b.coeffs_[s].is_zero()) {
                out.coeffs_[r + s] += a.coeffs_[r] * b.coeffs_[s];
            }
        }
    }
    return out;
}

FormalSeries FormalSeries::operator-() const
{
    FormalSeries out(*this);
    for (auto &p : out.coeffs_) {
        p = -p;
    }
    return out;
}

FormalSeries FormalSeries::scale_by_hbar_power(int k) const
{
    if (k < 0) {
        throw OrderMismatch("negative hbar power; use divide_by_hbar");
    }
    FormalSeries out(num_vars_, order());
    for (int r = 0; r + k <= order(); ++r) {
        out.coeffs_[static_cast<std::size_t>(r + k)] = coeffs_[static_cast<std::size_t>(r)];
    }
    return out;
}

FormalSeries FormalSeries::divide_by_hbar() const
{
    if (!coeffs_[0].is_zero()) {
        throw NotDivisible("hbar^0 coefficient " + coeffs_[0].to_string() + " is nonzero");
    }
    if (order() == 0) {
        throw NotDivisible("dividing an order-0 series by hbar leaves no known coefficient");
    }
    FormalSeries out(num_vars_, order() - 1);
    for (std::size_t r = 1; r < coeffs_.size(); ++r) {
        out.coeffs_[r - 1] = coeffs_[r];
    }
    return out;
}

FormalSeries FormalSeries::truncated(int new_order) const
{
    if (new_order > order()) {
        throw OrderMismatch("cannot truncate a series of order " + std::to_string(order()) + " to order "
                            + std::to_string(new_order));
    }
    FormalSeries out(num_vars_, new_order);
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
}

FormalSeries FormalSeries::padded(int new_order) const
{
    if (new_order < order()) {
        return truncated(new_order);
    }
    FormalSeries out(num_vars_, new_order);
    std::copy(coeffs_.begin(), coeffs_.end(), out.coeffs_.begin());
    return out;
}

FormalSeries FormalSeries::with_num_vars(std::size_t num_vars) const
{
    FormalSeries out(num_vars, order());
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        out.coeffs_[r] = coeffs_[r].with_num_vars(num_vars);
    }
    return out;
}

FormalSeries FormalSeries::map(const std::function<Polynomial(const Polynomial &)> &f) const
{
    FormalSeries out(num_vars_, order());
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        out.set_coeff(static_cast<int>(r), f(coeffs_[r]));
    }
    return out;
}

std::string FormalSeries::to_string(const std::vector<std::string> &names) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t r = 0; r < coeffs_.size(); ++r) {
        if (coeffs_[r].is_zero()) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        const std::string body = coeffs_[r].to_string(names);
        if (r == 0) {
            os << body;
        } else {
            os << "h" << (r > 1 ? "^" + std::to_string(r) : "") << "*(" << body << ")";
        }
    }
    if (first) {
        os << "0";
    }
    os << " + O(h^" << coeffs_.size() << ")";
    return os.str();
}

Polynomial classical_limit(const FormalSeries &f)
{
    return f.coeff(0);
}

} // namespace qmm
