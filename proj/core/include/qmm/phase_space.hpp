#ifndef QMM_PHASE_SPACE_HPP
#define QMM_PHASE_SPACE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qmm/linear_algebra.hpp"
#include "qmm/polynomial.hpp"
#include "qmm/series.hpp"

namespace qmm
{

/// Selects the first-order star coefficient c in f*g = fg + c*hbar*{f,g} + ...
enum class Convention
{
    real_half,    // c = 1/2
    minus_i_half, // c = -i/2
};

std::string to_string(Convention c);
Convention convention_from_string(const std::string &s);

/// R^{2n} with constant symplectic matrix omega_{ij} and Poisson tensor
/// pi^{ij}, paired so that sum_j pi^{ij} omega_{jk} = -delta^i_k.
///
/// With that pairing X_f^i = pi^{ij} d_j f satisfies i_{X_f} omega = df, and
/// {f,g} = pi^{ij} d_i f d_j g = omega(X_f, X_g).
class PhaseSpace
{
public:
    // pi is derived from omega when omitted. Throws InvariantViolation.
    PhaseSpace(int n, Matrix omega, std::optional<Matrix> pi = std::nullopt,
               Convention convention = Convention::real_half);

    // Coordinates (q1..qn, p1..pn) with {q_i, p_i} = 1.
    static PhaseSpace standard(int n, Convention convention = Convention::real_half);

    int n() const { return n_; }
    std::size_t dim() const { return static_cast<std::size_t>(2 * n_); }
    const Matrix &omega() const { return omega_; }
    const Matrix &pi() const { return pi_; }
    Convention convention() const { return convention_; }

    // c with C_1(f,g) = c {f,g}: 1/2 or -i/2.
    Scalar star_coefficient() const;
    // kappa such that (kappa/hbar)[f,g]_* = {f,g} + O(hbar): 1 or i.
    Scalar bracket_normalization() const;

    PhaseSpace with_convention(Convention c) const;

    // q1..qn,p1..pn (or y1..y2n for n > 1 if requested).
    std::vector<std::string> variable_names() const;

    friend bool operator==(const PhaseSpace &a, const PhaseSpace &b)
    {
        return a.n_ == b.n_ && a.omega_ == b.omega_ && a.pi_ == b.pi_ && a.convention_ == b.convention_;
    }

private:
    int n_;
    Matrix omega_;
    Matrix pi_;
    Convention convention_;
};

/// Polynomial vector field X = X^i d/dy^i.
struct VectorField
{
    std::vector<Polynomial> components;

    static VectorField zero(std::size_t dim, std::size_t num_vars);

    std::size_t dim() const { return components.size(); }
    bool is_zero() const;
    // X(f) = X^i d_i f.
    Polynomial apply(const Polynomial &f) const;
    int max_degree() const;

    VectorField &operator+=(const VectorField &o);
    friend VectorField operator+(VectorField a, const VectorField &b) { return a += b; }
    friend VectorField operator*(const Scalar &c, VectorField x);
    VectorField operator-() const;
    friend bool operator==(const VectorField &a, const VectorField &b) { return a.components == b.components; }
};

// [X,Y]^i = X^j d_j Y^i - Y^j d_j X^i.
VectorField lie_bracket(const VectorField &x, const VectorField &y);

using OneForm = std::vector<Polynomial>;

Polynomial poisson_bracket(const PhaseSpace &space, const Polynomial &f, const Polynomial &g);
VectorField hamiltonian_vf(const PhaseSpace &space, const Polynomial &f);
// (i_X omega)_k = X^i omega_{ik}.
OneForm interior_omega(const PhaseSpace &space, const VectorField &x);
// omega(X, Y) = X^i omega_{ij} Y^j.
Polynomial evaluate_omega(const PhaseSpace &space, const VectorField &x, const VectorField &y);
OneForm exterior_derivative(const Polynomial &f);

// Index of the first component where L_X omega != 0, if any.
std::optional<std::pair<std::size_t, std::size_t>> symplectic_defect(const PhaseSpace &space, const VectorField &x);

bool is_closed(const OneForm &alpha);
// Radial homotopy: a term c*y^m in alpha_i contributes c/(|m|+1) y^i y^m.
// The constant of integration is zero. Throws NotClosed.
Polynomial integrate_closed_one_form(const OneForm &alpha);

} // namespace qmm

#endif
