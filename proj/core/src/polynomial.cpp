#include "qmm/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "qmm/errors.hpp"

namespace qmm
{

int total_degree(const Exponents &e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

std::vector<Exponents> monomials_up_to(std::size_t num_vars, int degree)
{
    std::vector<Exponents> out;
    Exponents e(num_vars, 0);
    for (int d = 0; d <= degree; ++d) {
        // Distribute d among the variables, first variable varying slowest.
        auto fill = [&](auto &&self, std::size_t pos, int left) -> void {
            if (pos + 1 == num_vars) {
                e[pos] = left;
                out.push_back(e);
                return;
            }
            for (int k = left; k >= 0; --k) {
                e[pos] = k;
                self(self, pos + 1, left - k);
            }
        };
        if (num_vars == 0) {
            if (d == 0) {
                out.push_back(e);
            }
            continue;
        }
        fill(fill, 0, d);
    }
    return out;
}

Polynomial Polynomial::constant(std::size_t num_vars, const Scalar &c)
{
    Polynomial p(num_vars);
    p.add_term(Exponents(num_vars, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t num_vars, std::size_t index)
{
    if (index >= num_vars) {
        throw DimensionMismatch("variable index " + std::to_string(index) + " out of range for "
                                + std::to_string(num_vars) + " variables");
    }
    Exponents e(num_vars, 0);
    e[index] = 1;
    return monomial(num_vars, std::move(e));
}

Polynomial Polynomial::monomial(std::size_t num_vars, Exponents exps, const Scalar &c)
{
    if (exps.size() != num_vars) {
        throw DimensionMismatch("exponent vector has length " + std::to_string(exps.size()) + ", expected "
                                + std::to_string(num_vars));
    }
    Polynomial p(num_vars);
    p.add_term(exps, c);
    return p;
}

bool Polynomial::is_constant() const
{
    if (terms_.empty()) {
        return true;
    }
    return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Scalar Polynomial::constant_term() const
{
    return coefficient(Exponents(num_vars_, 0));
}

Scalar Polynomial::coefficient(const Exponents &e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar() : it->second;
}

int Polynomial::degree() const
{
    int d = -1;
    for (const auto &[e, c] : terms_) {
        d = std::max(d, total_degree(e));
    }
    return d;
}

void Polynomial::add_term(const Exponents &e, const Scalar &c)
{
    if (e.size() != num_vars_) {
        throw DimensionMismatch("exponent vector has length " + std::to_string(e.size()) + ", expected "
                                + std::to_string(num_vars_));
    }
    if (c.is_zero()) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

void Polynomial::require_same_vars(const Polynomial &o, const char *op) const
{
    if (num_vars_ != o.num_vars_) {
        throw DimensionMismatch(std::string(op) + " of polynomials in " + std::to_string(num_vars_) + " and "
                                + std::to_string(o.num_vars_) + " variables");
    }
}

Polynomial &Polynomial::operator+=(const Polynomial &o)
{
    require_same_vars(o, "sum");
    for (const auto &[e, c] : o.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o)
{
    require_same_vars(o, "difference");
    for (const auto &[e, c] : o.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial &Polynomial::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[e, v] : terms_) {
        v *= c;
    }
    return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b)
{
    a.require_same_vars(b, "product");
    Polynomial out(a.num_vars_);
    Exponents e(a.num_vars_);
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const
{
    Polynomial out(*this);
    for (auto &[e, c] : out.terms_) {
        c = -c;
    }
    return out;
}

Polynomial Polynomial::derivative(std::size_t index) const
{
    if (index >= num_vars_) {
        throw DimensionMismatch("derivative index " + std::to_string(index) + " out of range for "
                                + std::to_string(num_vars_) + " variables");
    }
    Polynomial out(num_vars_);
    for (const auto &[e, c] : terms_) {
        if (e[index] == 0) {
            continue;
        }
        Exponents d = e;
        --d[index];
        out.add_term(d, c * Scalar(e[index]));
    }
    return out;
}

Polynomial Polynomial::with_num_vars(std::size_t num_vars) const
{
    if (num_vars == num_vars_) {
        return *this;
    }
    if (!is_constant()) {
        throw DimensionMismatch("only constant polynomials can change their variable count");
    }
    return constant(num_vars, constant_term());
}

std::string Polynomial::to_string(const std::vector<std::string> &names) const
{
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[e, c] : terms_) {
        std::string coeff = c.to_string();
        const bool compound = !c.is_real() && sgn(c.re()) != 0;
        if (compound) {
            coeff = "(" + coeff + ")";
        }
        if (!first) {
            if (!coeff.empty() && coeff.front() == '-') {
                os << " - ";
                coeff.erase(0, 1);
            } else {
                os << " + ";
            }
        }
        first = false;

        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            if (mono.tellp() > 0) {
                mono << "*";
            }
            mono << (i < names.size() ? names[i] : "y" + std::to_string(i + 1));
            if (e[i] > 1) {
                mono << "^" << e[i];
            }
        }
        const std::string m = mono.str();
        if (m.empty()) {
            os << coeff;
        } else if (coeff == "1") {
            os << m;
        } else if (coeff == "-1") {
            os << "-" << m;
        } else {
            os << coeff << "*" << m;
        }
    }
    return os.str();
}

} // namespace qmm
