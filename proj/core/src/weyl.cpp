#include "qmm/weyl.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "qmm/contraction.hpp"
#include "qmm/errors.hpp"

namespace qmm
{

int WeylKey::form_degree() const
{
    return std::popcount(forms);
}

WeylElement::WeylElement(std::size_t dim, int cap) : WeylElement(dim, cap, cap) {}

WeylElement::WeylElement(std::size_t dim, int cap, int bound) : dim_(dim), cap_(cap), bound_(std::min(bound, cap))
{
    if (dim > 32) {
        throw DimensionMismatch("Weyl elements support at most 32 form directions");
    }
}

WeylElement WeylElement::from_series(const FormalSeries &f, int cap)
{
    WeylElement out(f.num_vars(), cap);
    for (int r = 0; r <= f.order(); ++r) {
        out.add_term({r, Exponents(f.num_vars()), 0}, f.coeff(r));
    }
    return out;
}

WeylElement WeylElement::from_polynomial(const Polynomial &f, int cap)
{
    return from_series(FormalSeries::from_polynomial(f, 0), cap);
}

int WeylElement::valuation() const
{
    int v = bound_ + 1;
    for (const auto &[k, c] : terms_) {
        v = std::min(v, k.total_degree());
    }
    return v;
}

void WeylElement::add_term(const WeylKey &key, const Polynomial &coeff)
{
    if (coeff.is_zero() || key.total_degree() > bound_) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

WeylElement WeylElement::truncated(int bound) const
{
    WeylElement out(dim_, cap_, std::min(bound, bound_));
    for (const auto &[k, c] : terms_) {
        out.add_term(k, c);
    }
    return out;
}

WeylElement WeylElement::form_component(int k) const
{
    WeylElement out(dim_, cap_, bound_);
    for (const auto &[key, c] : terms_) {
        if (key.form_degree() == k) {
            out.terms_.emplace(key, c);
        }
    }
    return out;
}

Polynomial WeylElement::coefficient(const WeylKey &key) const
{
    auto it = terms_.find(key);
    return it == terms_.end() ? Polynomial(dim_) : it->second;
}

WeylElement &WeylElement::operator+=(const WeylElement &o)
{
    if (o.dim_ != dim_) {
        throw DimensionMismatch("Weyl elements over different phase spaces");
    }
    bound_ = std::min(bound_, o.bound_);
    cap_ = std::min(cap_, o.cap_);
    std::erase_if(terms_, [&](const auto &kv) { return kv.first.total_degree() > bound_; });
    for (const auto &[k, c] : o.terms_) {
        add_term(k, c);
    }
    return *this;
}

WeylElement &WeylElement::operator-=(const WeylElement &o)
{
    return *this += -o;
}

WeylElement &WeylElement::operator*=(const Scalar &c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto &[k, v] : terms_) {
        v *= c;
    }
    return *this;
}

WeylElement WeylElement::operator-() const
{
    WeylElement out = *this;
    out *= Scalar(-1);
    return out;
}

std::string WeylElement::to_string() const
{
    if (terms_.empty()) {
        return "0 + O(Deg " + std::to_string(bound_ + 1) + ")";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[k, c] : terms_) {
        if (!first) {
            os << " + ";
        }
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.hbar > 0) {
            os << "*h^" << k.hbar;
        }
        for (std::size_t i = 0; i < k.alpha.size(); ++i) {
            if (k.alpha[i] > 0) {
                os << "*y" << (i + 1);
                if (k.alpha[i] > 1) {
                    os << "^" << k.alpha[i];
                }
            }
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            if (k.forms & (1u << i)) {
                os << "*dx" << (i + 1);
            }
        }
    }
    os << " + O(Deg " << (bound_ + 1) << ")";
    return os.str();
}

bool agree(const WeylElement &a, const WeylElement &b)
{
    const int bound = std::min(a.bound(), b.bound());
    return a.truncated(bound).terms() == b.truncated(bound).terms();
}

bool vanishes(const WeylElement &a)
{
    return a.is_zero();
}

namespace
{

// Sign of dx^I ^ dx^J relative to dx^{I u J}; 0 if they overlap.
int wedge_sign(std::uint32_t i, std::uint32_t j)
{
    if ((i & j) != 0) {
        return 0;
    }
    int swaps = 0;
    for (std::uint32_t rest = j; rest != 0; rest &= rest - 1) {
        const int bit = std::countr_zero(rest);
        // Elements of I greater than this element of J must move past it.
        swaps += std::popcount(i >> (bit + 1));
    }
    return (swaps % 2 == 0) ? 1 : -1;
}

// Sign of dx^k ^ dx^I relative to the sorted form.
int prepend_sign(int k, std::uint32_t forms)
{
    const std::uint32_t below = forms & ((1u << k) - 1u);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

} // namespace

WeylElement fiber_circ(const PhaseSpace &space, const WeylElement &a, const WeylElement &b)
{
    if (a.dim() != space.dim() || b.dim() != space.dim()) {
        throw DimensionMismatch("Weyl elements must live on the phase space");
    }
    const int cap = std::min(a.cap(), b.cap());
    const int bound = std::min({cap, a.bound() + b.valuation(), b.bound() + a.valuation()});
    WeylElement out(space.dim(), cap, bound);
    ContractionKernel kernel(space.pi(), space.star_coefficient());
    for (const auto &[ka, ca] : a.terms()) {
        for (const auto &[kb, cb] : b.terms()) {
            if (ka.total_degree() + kb.total_degree() > bound) {
                continue;
            }
            const int sign = wedge_sign(ka.forms, kb.forms);
            if (sign == 0) {
                continue;
            }
            const Polynomial coeff = sign > 0 ? ca * cb : -(ca * cb);
            for (const auto &t : kernel.expand(ka.alpha, kb.alpha)) {
                out.add_term({ka.hbar + kb.hbar + t.order, t.monomial, ka.forms | kb.forms}, coeff * t.coeff);
            }
        }
    }
    return out;
}

WeylElement graded_commutator(const PhaseSpace &space, const WeylElement &a, const WeylElement &b)
{
    const int cap = std::min(a.cap(), b.cap());
    const int bound = std::min({cap, a.bound() + b.valuation(), b.bound() + a.valuation()});
    WeylElement out(space.dim(), cap, bound);
    const int top = static_cast<int>(space.dim());
    for (int k = 0; k <= top; ++k) {
        const WeylElement ak = a.form_component(k);
        if (ak.is_zero()) {
            continue;
        }
        for (int l = 0; l <= top; ++l) {
            const WeylElement bl = b.form_component(l);
            if (bl.is_zero()) {
                continue;
            }
            out += fiber_circ(space, ak, bl);
            if ((k * l) % 2 == 0) {
                out -= fiber_circ(space, bl, ak);
            } else {
                out += fiber_circ(space, bl, ak);
            }
        }
    }
    return out.truncated(bound);
}

WeylElement delta(const WeylElement &a)
{
    WeylElement out(a.dim(), a.cap(), a.bound() - 1);
    for (const auto &[k, c] : a.terms()) {
        for (std::size_t i = 0; i < k.alpha.size(); ++i) {
            if (k.alpha[i] == 0 || (k.forms & (1u << i))) {
                continue;
            }
            WeylKey nk = k;
            --nk.alpha[i];
            nk.forms |= (1u << i);
            const Scalar factor = Scalar(k.alpha[i] * prepend_sign(static_cast<int>(i), k.forms));
            out.add_term(nk, c * factor);
        }
    }
    return out;
}

WeylElement delta_inv(const WeylElement &a)
{
    WeylElement out(a.dim(), a.cap(), a.bound() + 1);
    for (const auto &[k, c] : a.terms()) {
        const int weight = k.symmetric_degree() + k.form_degree();
        if (k.forms == 0) {
            continue;
        }
        const Scalar scale = Scalar::rational(1, weight);
        for (std::size_t i = 0; i < k.alpha.size(); ++i) {
            if (!(k.forms & (1u << i))) {
                continue;
            }
            WeylKey nk = k;
            ++nk.alpha[i];
            nk.forms &= ~(1u << i);
            const int sign = prepend_sign(static_cast<int>(i), k.forms);
            out.add_term(nk, c * (scale * Scalar(sign)));
        }
    }
    return out;
}

WeylElement nabla(const WeylElement &a)
{
    WeylElement out(a.dim(), a.cap(), a.bound());
    for (const auto &[k, c] : a.terms()) {
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (k.forms & (1u << i)) {
                continue;
            }
            const Polynomial d = c.derivative(i);
            if (d.is_zero()) {
                continue;
            }
            WeylKey nk = k;
            nk.forms |= (1u << i);
            out.add_term(nk, d * Scalar(prepend_sign(static_cast<int>(i), k.forms)));
        }
    }
    return out;
}

FormalSeries sigma(const WeylElement &a)
{
    const int order = std::max(a.bound(), 0) / 2;
    FormalSeries out(a.dim(), order);
    std::vector<Polynomial> coeffs(static_cast<std::size_t>(order) + 1, Polynomial(a.dim()));
    for (const auto &[k, c] : a.terms()) {
        if (k.forms == 0 && k.symmetric_degree() == 0 && k.hbar <= order) {
            coeffs[static_cast<std::size_t>(k.hbar)] += c;
        }
    }
    for (int r = 0; r <= order; ++r) {
        out.set_coeff(r, std::move(coeffs[static_cast<std::size_t>(r)]));
    }
    return out;
}

WeylElement divide_by_hbar(const WeylElement &a)
{
    WeylElement out(a.dim(), a.cap(), a.bound() - 2);
    for (const auto &[k, c] : a.terms()) {
        if (k.hbar == 0) {
            throw NotDivisible("Weyl element has an hbar^0 term");
        }
        WeylKey nk = k;
        --nk.hbar;
        out.add_term(nk, c);
    }
    return out;
}

WeylElement scale_by_hbar_power(const WeylElement &a, int k)
{
    WeylElement out(a.dim(), a.cap(), a.bound() + 2 * k);
    for (const auto &[key, c] : a.terms()) {
        WeylKey nk = key;
        nk.hbar += k;
        out.add_term(nk, c);
    }
    return out;
}

} // namespace qmm
