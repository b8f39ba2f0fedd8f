#include "qmm/cochain.hpp"

#include <algorithm>
#include <string>

#include "qmm/errors.hpp"

namespace qmm
{

Cochain::Cochain(std::size_t algebra_dim, int degree, ModuleTag tag, std::size_t num_vars, int order)
    : dim_(algebra_dim), degree_(degree), tag_(tag), num_vars_(num_vars), order_(order)
{
    if (degree < 0) {
        throw std::invalid_argument("cochain degree must be non-negative");
    }
    if (degree > max_cochain_degree) {
        throw DegreeTooHigh("cochains are supported up to degree " + std::to_string(max_cochain_degree));
    }
    if (tag == ModuleTag::constant_series && num_vars != 0) {
        throw DimensionMismatch("constant-series cochains take values over zero variables");
    }
}

namespace
{

// Sorts in place and returns the permutation sign, or 0 on a repeated index.
int sort_with_sign(std::vector<std::size_t> &idx)
{
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) {
                return 0;
            }
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (idx[i - 1] == idx[i]) {
            return 0;
        }
    }
    return sign;
}

} // namespace

void Cochain::set(const std::vector<std::size_t> &indices, const FormalSeries &value)
{
    if (static_cast<int>(indices.size()) != degree_) {
        throw DimensionMismatch("cochain of degree " + std::to_string(degree_) + " needs that many arguments");
    }
    for (auto i : indices) {
        if (i >= dim_) {
            throw DimensionMismatch("basis index out of range");
        }
    }
    if (value.num_vars() != num_vars_) {
        throw DimensionMismatch("cochain value has the wrong number of variables");
    }
    if (value.order() != order_) {
        throw OrderMismatch("cochain value has order " + std::to_string(value.order()) + ", expected "
                            + std::to_string(order_));
    }
    if (tag_ == ModuleTag::constant_series && !value.is_constant()) {
        throw NonConstant("constant-series cochain value is not constant");
    }
    std::vector<std::size_t> sorted = indices;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) {
        throw std::invalid_argument("cochain arguments must be distinct basis indices");
    }
    if (value.is_zero()) {
        values_.erase(sorted);
    } else {
        values_[sorted] = sign > 0 ? value : -value;
    }
}

FormalSeries Cochain::at(const std::vector<std::size_t> &indices) const
{
    std::vector<std::size_t> sorted = indices;
    const int sign = sort_with_sign(sorted);
    if (sign == 0) {
        return zero_value();
    }
    auto it = values_.find(sorted);
    if (it == values_.end()) {
        return zero_value();
    }
    return sign > 0 ? it->second : -it->second;
}

FormalSeries Cochain::evaluate(const std::vector<Vector> &args) const
{
    if (static_cast<int>(args.size()) != degree_) {
        throw DimensionMismatch("wrong number of cochain arguments");
    }
    FormalSeries out = zero_value();
    std::vector<std::size_t> idx(args.size());
    // Expand multilinearly over the supports of the arguments.
    auto recurse = [&](auto &&self, std::size_t pos, const Scalar &coeff) -> void {
        if (pos == args.size()) {
            const FormalSeries v = at(idx);
            if (!v.is_zero()) {
                out += coeff * v;
            }
            return;
        }
        if (args[pos].size() != dim_) {
            throw DimensionMismatch("cochain argument has the wrong dimension");
        }
        for (std::size_t i = 0; i < dim_; ++i) {
            if (!args[pos][i].is_zero()) {
                idx[pos] = i;
                self(self, pos + 1, coeff * args[pos][i]);
            }
        }
    };
    recurse(recurse, 0, Scalar(1));
    return out;
}

bool Cochain::is_zero() const
{
    return values_.empty();
}

Cochain Cochain::truncated(int order) const
{
    Cochain out(dim_, degree_, tag_, num_vars_, std::min(order, order_));
    for (const auto &[k, v] : values_) {
        out.set(k, v.truncated(out.order_));
    }
    return out;
}

bool operator==(const Cochain &a, const Cochain &b)
{
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.num_vars_ == b.num_vars_ && a.order_ == b.order_
           && a.values_ == b.values_;
}

namespace
{

Cochain coboundary_impl(const LieAlgebra &algebra, const SymplecticAction *action, const Cochain &alpha)
{
    const int k = alpha.degree();
    if (k + 1 > max_cochain_degree) {
        throw DegreeTooHigh("coboundary of a degree-" + std::to_string(k) + " cochain exceeds the supported degree "
                            + std::to_string(max_cochain_degree));
    }
    if (algebra.dim() != alpha.algebra_dim()) {
        throw DimensionMismatch("cochain and Lie algebra dimensions differ");
    }
    const std::size_t d = algebra.dim();
    Cochain out(d, k + 1, alpha.tag(), alpha.num_vars(), alpha.order());
    if (static_cast<std::size_t>(k + 1) > d) {
        return out;
    }
    std::vector<std::size_t> tuple(static_cast<std::size_t>(k + 1));
    auto visit = [&](auto &&self, std::size_t pos, std::size_t start) -> void {
        if (pos == tuple.size()) {
            std::vector<Vector> x;
            for (auto t : tuple) {
                x.push_back(algebra.basis_vector(t));
            }
            FormalSeries value(alpha.num_vars(), alpha.order());
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (action == nullptr) {
                    break;
                }
                std::vector<Vector> rest;
                for (std::size_t m = 0; m < x.size(); ++m) {
                    if (m != i) {
                        rest.push_back(x[m]);
                    }
                }
                const FormalSeries term = action->rho_apply(x[i], alpha.evaluate(rest));
                value += (i % 2 == 0) ? term : -term;
            }
            for (std::size_t i = 0; i < x.size(); ++i) {
                for (std::size_t j = i + 1; j < x.size(); ++j) {
                    std::vector<Vector> args{algebra.bracket(x[i], x[j])};
                    for (std::size_t m = 0; m < x.size(); ++m) {
                        if (m != i && m != j) {
                            args.push_back(x[m]);
                        }
                    }
                    const FormalSeries term = alpha.evaluate(args);
                    value += ((i + j) % 2 == 0) ? term : -term;
                }
            }
            out.set(tuple, value);
            return;
        }
        for (std::size_t t = start; t < d; ++t) {
            tuple[pos] = t;
            self(self, pos + 1, t + 1);
        }
    };
    visit(visit, 0, 0);
    return out;
}

} // namespace

Cochain ce_coboundary(const SymplecticAction &action, const Cochain &alpha)
{
    if (alpha.tag() == ModuleTag::function_series && alpha.num_vars() != action.space().dim()) {
        throw DimensionMismatch("function-series cochain must live on the action's phase space");
    }
    return coboundary_impl(action.algebra(), alpha.tag() == ModuleTag::function_series ? &action : nullptr, alpha);
}

Cochain ce_coboundary(const LieAlgebra &algebra, const Cochain &alpha)
{
    if (alpha.tag() == ModuleTag::function_series) {
        throw std::invalid_argument("function-series cochains need the symplectic action for their coboundary");
    }
    return coboundary_impl(algebra, nullptr, alpha);
}

std::optional<Cochain> cocycle_trivializer(const LieAlgebra &algebra, const Cochain &theta)
{
    if (theta.degree() != 2 || theta.tag() != ModuleTag::constant_series) {
        throw std::invalid_argument("trivializer expects a constant-series 2-cochain");
    }
    if (!ce_coboundary(algebra, theta).is_zero()) {
        throw NotACocycle("d theta != 0");
    }
    const std::size_t d = algebra.dim();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Matrix a;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            pairs.emplace_back(i, j);
            a.push_back(algebra.bracket_basis(i, j));
        }
    }
    Cochain mu = Cochain::constant(d, 1, theta.order());
    std::vector<Vector> per_order;
    for (int r = 0; r <= theta.order(); ++r) {
        Vector b;
        for (const auto &[i, j] : pairs) {
            b.push_back(theta.at({i, j}).coeff(r).constant_term());
        }
        if (a.empty()) {
            per_order.emplace_back(d);
            continue;
        }
        auto x = solve_linear(a, b);
        if (!x) {
            return std::nullopt;
        }
        per_order.push_back(std::move(*x));
    }
    for (std::size_t k = 0; k < d; ++k) {
        std::vector<Scalar> coeffs;
        for (const auto &x : per_order) {
            coeffs.push_back(x[k]);
        }
        mu.set({k}, FormalSeries::from_scalars(coeffs));
    }
    return mu;
}

} // namespace qmm
