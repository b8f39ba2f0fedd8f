#include "qmm/phase_space.hpp"

#include "qmm/errors.hpp"

namespace qmm
{

std::string to_string(Convention c)
{
    return c == Convention::real_half ? "real_half" : "minus_i_half";
}

Convention convention_from_string(const std::string &s)
{
    if (s == "real_half") {
        return Convention::real_half;
    }
    if (s == "minus_i_half") {
        return Convention::minus_i_half;
    }
    throw ParseError("unknown convention \"" + s + "\" (expected real_half or minus_i_half)");
}

PhaseSpace::PhaseSpace(int n, Matrix omega, std::optional<Matrix> pi, Convention convention)
    : n_(n), omega_(std::move(omega)), convention_(convention)
{
    if (n < 1) {
        throw InvariantViolation("half-dimension n must be at least 1");
    }
    const auto d = dim();
    if (omega_.size() != d) {
        throw InvariantViolation("omega must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    for (const auto &row : omega_) {
        if (row.size() != d) {
            throw InvariantViolation("omega must be " + std::to_string(d) + "x" + std::to_string(d));
        }
        for (const auto &v : row) {
            if (!v.is_real()) {
                throw InvariantViolation("omega must have rational entries");
            }
        }
    }
    if (!is_antisymmetric(omega_)) {
        throw InvariantViolation("omega is not antisymmetric");
    }
    auto omega_inv = inverse(omega_);
    if (!omega_inv) {
        throw InvariantViolation("omega is degenerate");
    }
    if (pi) {
        pi_ = std::move(*pi);
        if (pi_.size() != d || !is_antisymmetric(pi_)) {
            throw InvariantViolation("pi must be an antisymmetric " + std::to_string(d) + "x" + std::to_string(d)
                                     + " matrix");
        }
        const Matrix prod = matmul(pi_, omega_);
        for (std::size_t i = 0; i < d; ++i) {
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar expected = i == k ? Scalar(-1) : Scalar(0);
                if (prod[i][k] != expected) {
                    throw InvariantViolation("compatibility sum_j pi^{ij} omega_{jk} = -delta^i_k fails at (i,k)=("
                                             + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")");
                }
            }
        }
    } else {
        pi_ = *omega_inv;
        for (auto &row : pi_) {
            for (auto &v : row) {
                v = -v;
            }
        }
    }
}

PhaseSpace PhaseSpace::standard(int n, Convention convention)
{
    const auto d = static_cast<std::size_t>(2 * n);
    Matrix omega = zero_matrix(d, d);
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        omega[i][i + static_cast<std::size_t>(n)] = Scalar(1);
        omega[i + static_cast<std::size_t>(n)][i] = Scalar(-1);
    }
    return PhaseSpace(n, std::move(omega), std::nullopt, convention);
}

Scalar PhaseSpace::star_coefficient() const
{
    return convention_ == Convention::real_half ? Scalar::rational(1, 2) : Scalar(0, mpq_class(-1, 2));
}

Scalar PhaseSpace::bracket_normalization() const
{
    return convention_ == Convention::real_half ? Scalar(1) : Scalar::i();
}

PhaseSpace PhaseSpace::with_convention(Convention c) const
{
    PhaseSpace out(*this);
    out.convention_ = c;
    return out;
}

std::vector<std::string> PhaseSpace::variable_names() const
{
    std::vector<std::string> names;
    if (n_ == 1) {
        return {"q", "p"};
    }
    for (int i = 1; i <= n_; ++i) {
        names.push_back("q" + std::to_string(i));
    }
    for (int i = 1; i <= n_; ++i) {
        names.push_back("p" + std::to_string(i));
    }
    return names;
}

VectorField VectorField::zero(std::size_t dim, std::size_t num_vars)
{
    return VectorField{std::vector<Polynomial>(dim, Polynomial(num_vars))};
}

bool VectorField::is_zero() const
{
    for (const auto &c : components) {
        if (!c.is_zero()) {
            return false;
        }
    }
    return true;
}

Polynomial VectorField::apply(const Polynomial &f) const
{
    if (f.num_vars() != components.size()) {
        throw DimensionMismatch("vector field of dimension " + std::to_string(components.size())
                                + " applied to a polynomial in " + std::to_string(f.num_vars()) + " variables");
    }
    Polynomial out(f.num_vars());
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (!components[i].is_zero()) {
            out += components[i] * f.derivative(i);
        }
    }
    return out;
}

int VectorField::max_degree() const
{
    int d = -1;
    for (const auto &c : components) {
        d = std::max(d, c.degree());
    }
    return d;
}

VectorField &VectorField::operator+=(const VectorField &o)
{
    if (o.components.size() != components.size()) {
        throw DimensionMismatch("sum of vector fields of different dimension");
    }
    for (std::size_t i = 0; i < components.size(); ++i) {
        components[i] += o.components[i];
    }
    return *this;
}

VectorField operator*(const Scalar &c, VectorField x)
{
    for (auto &comp : x.components) {
        comp *= c;
    }
    return x;
}

VectorField VectorField::operator-() const
{
    return Scalar(-1) * *this;
}

VectorField lie_bracket(const VectorField &x, const VectorField &y)
{
    if (x.dim() != y.dim()) {
        throw DimensionMismatch("bracket of vector fields of different dimension");
    }
    VectorField out;
    out.components.reserve(x.dim());
    for (std::size_t i = 0; i < x.dim(); ++i) {
        out.components.push_back(x.apply(y.components[i]) - y.apply(x.components[i]));
    }
    return out;
}

namespace
{

void require_dim(const PhaseSpace &space, const Polynomial &f)
{
    if (f.num_vars() != space.dim()) {
        throw DimensionMismatch("polynomial in " + std::to_string(f.num_vars()) + " variables on a phase space of dimension "
                                + std::to_string(space.dim()));
    }
}

} // namespace

Polynomial poisson_bracket(const PhaseSpace &space, const Polynomial &f, const Polynomial &g)
{
    require_dim(space, f);
    require_dim(space, g);
    const auto d = space.dim();
    Polynomial out(d);
    std::vector<Polynomial> df, dg;
    for (std::size_t i = 0; i < d; ++i) {
        df.push_back(f.derivative(i));
        dg.push_back(g.derivative(i));
    }
    for (std::size_t i = 0; i < d; ++i) {
        if (df[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar &p = space.pi()[i][j];
            if (p.is_zero() || dg[j].is_zero()) {
                continue;
            }
            out += (df[i] * dg[j]) * p;
        }
    }
    return out;
}

VectorField hamiltonian_vf(const PhaseSpace &space, const Polynomial &f)
{
    require_dim(space, f);
    const auto d = space.dim();
    VectorField x = VectorField::zero(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Polynomial dj = f.derivative(j);
        if (dj.is_zero()) {
            continue;
        }
        for (std::size_t i = 0; i < d; ++i) {
            if (!space.pi()[i][j].is_zero()) {
                x.components[i] += dj * space.pi()[i][j];
            }
        }
    }
    return x;
}

OneForm interior_omega(const PhaseSpace &space, const VectorField &x)
{
    const auto d = space.dim();
    if (x.dim() != d) {
        throw DimensionMismatch("vector field dimension does not match phase space");
    }
    OneForm alpha(d, Polynomial(d));
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            if (!space.omega()[i][k].is_zero()) {
                alpha[k] += x.components[i] * space.omega()[i][k];
            }
        }
    }
    return alpha;
}

Polynomial evaluate_omega(const PhaseSpace &space, const VectorField &x, const VectorField &y)
{
    const OneForm ix = interior_omega(space, x);
    Polynomial out(space.dim());
    for (std::size_t j = 0; j < space.dim(); ++j) {
        out += ix[j] * y.components[j];
    }
    return out;
}

OneForm exterior_derivative(const Polynomial &f)
{
    OneForm df;
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        df.push_back(f.derivative(i));
    }
    return df;
}

std::optional<std::pair<std::size_t, std::size_t>> symplectic_defect(const PhaseSpace &space, const VectorField &x)
{
    // (L_X omega)_{ab} = d_a X^c omega_{cb} + omega_{ac} d_b X^c for constant omega.
    const auto d = space.dim();
    for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
            Polynomial s(d);
            for (std::size_t c = 0; c < d; ++c) {
                if (!space.omega()[c][b].is_zero()) {
                    s += x.components[c].derivative(a) * space.omega()[c][b];
                }
                if (!space.omega()[a][c].is_zero()) {
                    s += x.components[c].derivative(b) * space.omega()[a][c];
                }
            }
            if (!s.is_zero()) {
                return std::make_pair(a, b);
            }
        }
    }
    return std::nullopt;
}

bool is_closed(const OneForm &alpha)
{
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (std::size_t j = i + 1; j < alpha.size(); ++j) {
            if (alpha[j].derivative(i) != alpha[i].derivative(j)) {
                return false;
            }
        }
    }
    return true;
}

Polynomial integrate_closed_one_form(const OneForm &alpha)
{
    const auto d = alpha.size();
    for (const auto &a : alpha) {
        if (a.num_vars() != d) {
            throw DimensionMismatch("one-form components must be polynomials in " + std::to_string(d) + " variables");
        }
    }
    if (!is_closed(alpha)) {
        throw NotClosed("one-form is not closed, no primitive exists");
    }
    Polynomial f(d);
    for (std::size_t i = 0; i < d; ++i) {
        for (const auto &[e, c] : alpha[i].terms()) {
            Exponents raised = e;
            ++raised[i];
            f.add_term(raised, c / Scalar(total_degree(e) + 1));
        }
    }
    if (exterior_derivative(f) != alpha) {
        throw NotClosed("radial primitive does not reproduce the one-form");
    }
    return f;
}

} // namespace qmm
