#ifndef QMM_POLYNOMIAL_HPP
#define QMM_POLYNOMIAL_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qmm/scalar.hpp"

namespace qmm
{

using Exponents = std::vector<int>;

int total_degree(const Exponents &e);

// Every exponent vector in num_vars variables of total degree <= degree,
// ordered by degree and then lexicographically.
std::vector<Exponents> monomials_up_to(std::size_t num_vars, int degree);

/// Sparse multivariate polynomial with Gaussian-rational coefficients.
///
/// Terms live in an ordered map, so iteration order (and therefore every
/// printed or serialized form) is deterministic. Zero coefficients are never
/// stored.
class Polynomial
{
public:
    using TermMap = std::map<Exponents, Scalar>;

    explicit Polynomial(std::size_t num_vars = 0) : num_vars_(num_vars) {}

    static Polynomial constant(std::size_t num_vars, const Scalar &c);
    // y^{index}, zero-based.
    static Polynomial variable(std::size_t num_vars, std::size_t index);
    static Polynomial monomial(std::size_t num_vars, Exponents exps, const Scalar &c = Scalar(1));

    std::size_t num_vars() const { return num_vars_; }
    const TermMap &terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Exponents &e) const;
    // -1 for the zero polynomial.
    int degree() const;

    // Adds c*y^e, merging with an existing term and dropping zeros.
    void add_term(const Exponents &e, const Scalar &c);

    Polynomial &operator+=(const Polynomial &o);
    Polynomial &operator-=(const Polynomial &o);
    Polynomial &operator*=(const Scalar &c);

    friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
    friend Polynomial operator*(Polynomial a, const Scalar &c) { return a *= c; }
    friend Polynomial operator*(const Scalar &c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial &a, const Polynomial &b)
    {
        return a.num_vars_ == b.num_vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

    Polynomial derivative(std::size_t index) const;

    // Reinterpret a constant polynomial in a different number of variables.
    Polynomial with_num_vars(std::size_t num_vars) const;

    // Default names y1..yN; pass e.g. {"q","p"} to override.
    std::string to_string(const std::vector<std::string> &names = {}) const;

private:
    void require_same_vars(const Polynomial &o, const char *op) const;

    std::size_t num_vars_;
    TermMap terms_;
};

} // namespace qmm

#endif
