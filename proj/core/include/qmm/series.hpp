#ifndef QMM_SERIES_HPP
#define QMM_SERIES_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qmm/polynomial.hpp"

namespace qmm
{

/// Formal power series in hbar truncated at hbar^order, with polynomial
/// coefficients. Series over zero variables represent R[[hbar]] (or C[[hbar]]).
///
/// Binary arithmetic requires matching variable counts; mixed orders give a
/// result truncated at the smaller one.
class FormalSeries
{
public:
    FormalSeries() : FormalSeries(0, 0) {}
    FormalSeries(std::size_t num_vars, int order);

    static FormalSeries from_polynomial(const Polynomial &p, int order);
    static FormalSeries constant(std::size_t num_vars, int order, const Scalar &c);
    // Builds sum_r values[r] hbar^r; the order is values.size() - 1.
    static FormalSeries from_scalars(const std::vector<Scalar> &values, std::size_t num_vars = 0);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::size_t num_vars() const { return num_vars_; }

    const Polynomial &coeff(int r) const { return coeffs_.at(static_cast<std::size_t>(r)); }
    void set_coeff(int r, Polynomial p);
    const std::vector<Polynomial> &coeffs() const { return coeffs_; }

    bool is_zero() const;
    // Every coefficient is a constant polynomial.
    bool is_constant() const;
    // Coefficient-wise constants; throws NonConstant if !is_constant().
    std::vector<Scalar> constants() const;
    int max_degree() const;

    FormalSeries &operator+=(const FormalSeries &o);
    FormalSeries &operator-=(const FormalSeries &o);
    FormalSeries &operator*=(const Scalar &c);

    friend FormalSeries operator+(FormalSeries a, const FormalSeries &b) { return a += b; }
    friend FormalSeries operator-(FormalSeries a, const FormalSeries &b) { return a -= b; }
    // Cauchy product truncated at the smaller order.
    friend FormalSeries operator*(const FormalSeries &a, const FormalSeries &b);
    friend FormalSeries operator*(FormalSeries a, const Scalar &c) { return a *= c; }
    friend FormalSeries operator*(const Scalar &c, FormalSeries a) { return a *= c; }
    FormalSeries operator-() const;

    friend bool operator==(const FormalSeries &a, const FormalSeries &b)
    {
        return a.num_vars_ == b.num_vars_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const FormalSeries &a, const FormalSeries &b) { return !(a == b); }

    // hbar^k * F, truncated at the same order.
    FormalSeries scale_by_hbar_power(int k) const;
    // F / hbar; requires a zero hbar^0 coefficient. The top coefficient of the
    // result is unknown under truncation, so the result has order - 1.
    FormalSeries divide_by_hbar() const;

    FormalSeries truncated(int order) const;
    // Extends with zero coefficients. Only sound when the caller knows the
    // missing coefficients are irrelevant to what it computes next.
    FormalSeries padded(int order) const;
    FormalSeries with_num_vars(std::size_t num_vars) const;
    FormalSeries map(const std::function<Polynomial(const Polynomial &)> &f) const;

    std::string to_string(const std::vector<std::string> &names = {}) const;

private:
    std::size_t num_vars_;
    std::vector<Polynomial> coeffs_;
};

Polynomial classical_limit(const FormalSeries &f);

} // namespace qmm

#endif
