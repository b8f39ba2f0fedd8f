#include "qmm/contraction.hpp"

#include <algorithm>

namespace qmm
{

ContractionKernel::ContractionKernel(const Matrix &pi, Scalar c) : c_(std::move(c))
{
    for (std::size_t i = 0; i < pi.size(); ++i) {
        for (std::size_t j = 0; j < pi[i].size(); ++j) {
            if (!pi[i][j].is_zero()) {
                support_.emplace_back(i, j);
                pi_values_.push_back(pi[i][j]);
            }
        }
    }
}

const std::vector<ContractionTerm> &ContractionKernel::expand(const Exponents &a, const Exponents &b)
{
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(std::move(key), compute(a, b)).first;
    }
    return it->second;
}

std::vector<ContractionTerm> ContractionKernel::compute(const Exponents &a, const Exponents &b) const
{
    std::vector<ContractionTerm> out;
    Exponents sum(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum[i] = a[i] + b[i];
    }
    out.push_back({0, sum, Scalar(1)});

    using Level = std::map<std::pair<Exponents, Exponents>, Scalar>;
    Level level;
    level.emplace(std::make_pair(a, b), Scalar(1));
    const int max_k = std::min(total_degree(a), total_degree(b));
    Scalar factor(1);
    for (int k = 1; k <= max_k && !level.empty(); ++k) {
        Level next;
        for (const auto &[uv, coeff] : level) {
            const auto &[u, v] = uv;
            for (std::size_t s = 0; s < support_.size(); ++s) {
                const auto [i, j] = support_[s];
                if (u[i] == 0 || v[j] == 0) {
                    continue;
                }
                Exponents u2 = u;
                Exponents v2 = v;
                --u2[i];
                --v2[j];
                auto [pos, inserted] = next.try_emplace(std::make_pair(std::move(u2), std::move(v2)), Scalar());
                pos->second += coeff * pi_values_[s] * Scalar(u[i]) * Scalar(v[j]);
            }
        }
        std::erase_if(next, [](const auto &kv) { return kv.second.is_zero(); });
        level = std::move(next);
        factor = factor * c_ / Scalar(k);

        std::map<Exponents, Scalar> by_monomial;
        for (const auto &[uv, coeff] : level) {
            Exponents m(a.size());
            for (std::size_t i = 0; i < m.size(); ++i) {
                m[i] = uv.first[i] + uv.second[i];
            }
            by_monomial[m] += coeff;
        }
        for (auto &[m, coeff] : by_monomial) {
            if (!coeff.is_zero()) {
                out.push_back({k, m, coeff * factor});
            }
        }
    }
    return out;
}

} // namespace qmm
