#ifndef QMM_CONTRACTION_HPP
#define QMM_CONTRACTION_HPP

#include <map>
#include <utility>
#include <vector>

#include "qmm/linear_algebra.hpp"
#include "qmm/polynomial.hpp"

namespace qmm
{

struct ContractionTerm
{
    int order; // power of hbar produced by the contractions
    Exponents monomial;
    Scalar coeff;
};

/// Expands exp(c*hbar*pi^{ij} d_i (x) d_j) applied to y^a (x) y^b followed by
/// multiplication, one monomial pair at a time.
///
/// Both the Moyal product and the fiberwise Weyl product reduce to this
/// kernel. Results are memoized per monomial pair; an instance is meant to
/// live for the duration of one product and is not thread-safe.
class ContractionKernel
{
public:
    ContractionKernel(const Matrix &pi, Scalar c);

    // All contraction terms of y^a (x) y^b, sorted by order.
    const std::vector<ContractionTerm> &expand(const Exponents &a, const Exponents &b);

private:
    std::vector<ContractionTerm> compute(const Exponents &a, const Exponents &b) const;

    std::vector<std::pair<std::size_t, std::size_t>> support_;
    std::vector<Scalar> pi_values_;
    Scalar c_;
    std::map<std::pair<Exponents, Exponents>, std::vector<ContractionTerm>> cache_;
};

} // namespace qmm

#endif
