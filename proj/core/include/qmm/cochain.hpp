#ifndef QMM_COCHAIN_HPP
#define QMM_COCHAIN_HPP

#include <map>
#include <optional>
#include <vector>

#include "qmm/lie_algebra.hpp"
#include "qmm/series.hpp"
#include "qmm/symplectic_action.hpp"

namespace qmm
{

enum class ModuleTag
{
    constant_series, // values in R[[hbar]] with trivial action
    function_series, // values in polynomial series with rho_c
};

/// Alternating k-linear map on a Lie algebra with formal-series values,
/// stored on strictly increasing basis tuples.
class Cochain
{
public:
    // Constant-series cochains use num_vars = 0.
    Cochain(std::size_t algebra_dim, int degree, ModuleTag tag, std::size_t num_vars, int order);

    static Cochain constant(std::size_t algebra_dim, int degree, int order)
    {
        return Cochain(algebra_dim, degree, ModuleTag::constant_series, 0, order);
    }

    std::size_t algebra_dim() const { return dim_; }
    int degree() const { return degree_; }
    ModuleTag tag() const { return tag_; }
    std::size_t num_vars() const { return num_vars_; }
    int order() const { return order_; }

    // Any tuple of distinct indices; the value is stored up to the sign of
    // the sorting permutation. Repeated indices are rejected.
    void set(const std::vector<std::size_t> &indices, const FormalSeries &value);
    // Antisymmetric extension; zero on repeated indices.
    FormalSeries at(const std::vector<std::size_t> &indices) const;
    // alpha(x_1, ..., x_k) for general algebra elements.
    FormalSeries evaluate(const std::vector<Vector> &args) const;

    const std::map<std::vector<std::size_t>, FormalSeries> &values() const { return values_; }
    bool is_zero() const;
    Cochain truncated(int order) const;

    friend bool operator==(const Cochain &a, const Cochain &b);

private:
    FormalSeries zero_value() const { return FormalSeries(num_vars_, order_); }

    std::size_t dim_;
    int degree_;
    ModuleTag tag_;
    std::size_t num_vars_;
    int order_;
    std::map<std::vector<std::size_t>, FormalSeries> values_; // nonzero values only
};

constexpr int max_cochain_degree = 3;

// Chevalley-Eilenberg coboundary
//   (d a)(x_0..x_k) = sum_i (-1)^i rho(x_i) a(..^i..)
//                   + sum_{i<j} (-1)^{i+j} a([x_i,x_j], ..^i..^j..).
// Function-series cochains need the action; constant-series ones use the
// trivial representation. Throws DegreeTooHigh when the result would exceed
// max_cochain_degree.
Cochain ce_coboundary(const SymplecticAction &action, const Cochain &alpha);
Cochain ce_coboundary(const LieAlgebra &algebra, const Cochain &alpha);

// Some mu with theta(e_i, e_j) = mu([e_i, e_j]) for all i<j, order by order,
// or nullopt when none exists. Throws NotACocycle when d theta != 0.
std::optional<Cochain> cocycle_trivializer(const LieAlgebra &algebra, const Cochain &theta);

} // namespace qmm

#endif
