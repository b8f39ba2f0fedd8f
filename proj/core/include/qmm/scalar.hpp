#ifndef QMM_SCALAR_HPP
#define QMM_SCALAR_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qmm
{

/// Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept in canonical mpq form (reduced, positive denominator),
/// so equality is plain structural equality.
class Scalar
{
public:
    Scalar() = default;
    Scalar(long value) : re_(value) {} // NOLINT(google-explicit-constructor)
    Scalar(const mpq_class &re) : re_(re) { re_.canonicalize(); } // NOLINT(google-explicit-constructor)
    Scalar(const mpq_class &re, const mpq_class &im) : re_(re), im_(im)
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(0, 1); }
    static Scalar rational(long num, long den);

    // Accepts "p", "-p", "p/q" and "-p/q"; throws ParseError otherwise.
    static mpq_class parse_rational(std::string_view text);

    const mpq_class &re() const { return re_; }
    const mpq_class &im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

    Scalar conj() const { return Scalar(re_, -im_); }
    // Throws std::domain_error on zero.
    Scalar inverse() const;

    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }
    Scalar operator-() const { return Scalar(-re_, -im_); }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

    /// "3/4", "-1", "1/2+3i", "-i" ...
    std::string to_string() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

std::string rational_to_string(const mpq_class &q);

} // namespace qmm

#endif
