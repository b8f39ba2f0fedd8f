#include "qmm/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "qmm/errors.hpp"

namespace qmm
{

Scalar Scalar::rational(long num, long den)
{
    if (den == 0) {
        throw std::domain_error("zero denominator");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
}

mpq_class Scalar::parse_rational(std::string_view text)
{
    auto digits = [](std::string_view s) {
        if (s.empty()) {
            return false;
        }
        for (char c : s) {
            if (!std::isdigit(static_cast<unsigned char>(c))) {
                return false;
            }
        }
        return true;
    };

    std::string_view body = text;
    if (!body.empty() && body.front() == '-') {
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const bool ok = slash == std::string_view::npos ? digits(body)
                                                     : digits(body.substr(0, slash)) && digits(body.substr(slash + 1));
    if (!ok) {
        throw ParseError("malformed rational \"" + std::string(text) + "\" (expected p or p/q)");
    }
    mpq_class q;
    q.set_str(std::string(text), 10);
    if (q.get_den() == 0) {
        throw ParseError("zero denominator in \"" + std::string(text) + "\"");
    }
    q.canonicalize();
    return q;
}

Scalar Scalar::inverse() const
{
    const mpq_class norm = re_ * re_ + im_ * im_;
    if (sgn(norm) == 0) {
        throw std::domain_error("division by zero scalar");
    }
    return Scalar(re_ / norm, -im_ / norm);
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (sgn(o.im_) == 0) {
        if (sgn(o.re_) == 0) {
            throw std::domain_error("division by zero scalar");
        }
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string rational_to_string(const mpq_class &q)
{
    return q.get_str(10);
}

std::string Scalar::to_string() const
{
    if (sgn(im_) == 0) {
        return rational_to_string(re_);
    }
    std::string im_part;
    if (im_ == 1) {
        im_part = "i";
    } else if (im_ == -1) {
        im_part = "-i";
    } else {
        im_part = rational_to_string(im_) + "i";
    }
    if (sgn(re_) == 0) {
        return im_part;
    }
    return rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "") + im_part;
}

std::ostream &operator<<(std::ostream &os, const Scalar &s)
{
    return os << s.to_string();
}

} // namespace qmm
