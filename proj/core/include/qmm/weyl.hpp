#ifndef QMM_WEYL_HPP
#define QMM_WEYL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <tuple>

#include "qmm/phase_space.hpp"
#include "qmm/series.hpp"

namespace qmm
{

/// hbar^r y^alpha dx^I; I is a bitmask over dx^1..dx^{2n}.
struct WeylKey
{
    int hbar = 0;
    Exponents alpha;
    std::uint32_t forms = 0;

    int symmetric_degree() const { return qmm::total_degree(alpha); }
    int form_degree() const;
    // Deg = |alpha| + 2r.
    int total_degree() const { return symmetric_degree() + 2 * hbar; }

    friend bool operator<(const WeylKey &a, const WeylKey &b)
    {
        return std::tie(a.hbar, a.alpha, a.forms) < std::tie(b.hbar, b.alpha, b.forms);
    }
    friend bool operator==(const WeylKey &a, const WeylKey &b)
    {
        return a.hbar == b.hbar && a.alpha == b.alpha && a.forms == b.forms;
    }
};

/// Element of the Weyl algebra bundle W (x) Lambda over R^{2n}, truncated by
/// total degree.
///
/// Two numbers describe the truncation. cap() is the hard limit N_W: no term
/// above it is ever stored. bound() <= cap() is how far the element is known
/// exactly; operations propagate it, so a term of total degree <= bound()
/// is a claim, not an approximation. Coefficients are polynomials in the
/// base coordinates x^1..x^{2n}.
class WeylElement
{
public:
    using TermMap = std::map<WeylKey, Polynomial>;

    WeylElement(std::size_t dim, int cap);
    WeylElement(std::size_t dim, int cap, int bound);

    // F as an element of symmetric and form degree 0, exact up to the cap.
    static WeylElement from_series(const FormalSeries &f, int cap);
    static WeylElement from_polynomial(const Polynomial &f, int cap);

    std::size_t dim() const { return dim_; }
    int cap() const { return cap_; }
    int bound() const { return bound_; }
    const TermMap &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Smallest stored total degree, or bound() + 1 if nothing is stored.
    int valuation() const;

    // Ignores terms above bound().
    void add_term(const WeylKey &key, const Polynomial &coeff);
    WeylElement truncated(int bound) const;
    WeylElement with_bound(int bound) const { return truncated(bound); }
    // Part of form degree k.
    WeylElement form_component(int k) const;
    Polynomial coefficient(const WeylKey &key) const;

    WeylElement &operator+=(const WeylElement &o);
    WeylElement &operator-=(const WeylElement &o);
    WeylElement &operator*=(const Scalar &c);
    friend WeylElement operator+(WeylElement a, const WeylElement &b) { return a += b; }
    friend WeylElement operator-(WeylElement a, const WeylElement &b) { return a -= b; }
    friend WeylElement operator*(WeylElement a, const Scalar &c) { return a *= c; }
    friend WeylElement operator*(const Scalar &c, WeylElement a) { return a *= c; }
    WeylElement operator-() const;

    // Term maps and bounds agree.
    friend bool operator==(const WeylElement &a, const WeylElement &b)
    {
        return a.dim_ == b.dim_ && a.bound_ == b.bound_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

private:
    std::size_t dim_;
    int cap_;
    int bound_;
    TermMap terms_;
};

// a and b agree on every term of total degree <= min of their bounds.
bool agree(const WeylElement &a, const WeylElement &b);
// a has no term of total degree <= its bound, i.e. it is zero as far as known.
bool vanishes(const WeylElement &a);

// Fiberwise product exp(c hbar pi^{ij} d_{y^i} (x) d_{y^j}) followed by
// multiplication, with wedge product on the form parts.
WeylElement fiber_circ(const PhaseSpace &space, const WeylElement &a, const WeylElement &b);
// a o b - (-1)^{|a||b|} b o a on form-homogeneous components.
WeylElement graded_commutator(const PhaseSpace &space, const WeylElement &a, const WeylElement &b);

// delta a = dx^i ^ d_{y^i} a.
WeylElement delta(const WeylElement &a);
// On a term of symmetric degree k and form degree l with k + l > 0:
// (1/(k+l)) y^i i(d_{x^i}); zero when k = l = 0.
WeylElement delta_inv(const WeylElement &a);
// Flat connection: dx^i ^ d_{x^i} on the coefficients.
WeylElement nabla(const WeylElement &a);
// Terms with alpha = 0 and I empty, as a series in x.
FormalSeries sigma(const WeylElement &a);
// Throws NotDivisible when an hbar^0 term is present.
WeylElement divide_by_hbar(const WeylElement &a);
WeylElement scale_by_hbar_power(const WeylElement &a, int k);

} // namespace qmm

#endif
