#include <gtest/gtest.h>

#include <random>

#include "qmm/errors.hpp"
#include "qmm/fedosov.hpp"
#include "qmm/phase_space.hpp"
#include "qmm/star_axioms.hpp"
#include "qmm/star_product.hpp"
#include "qmm/two_form.hpp"
#include "support/oracles.hpp"

using namespace qmm;
using namespace qmm::testing;

namespace
{

const PhaseSpace plane = PhaseSpace::standard(1);
const Polynomial q = Polynomial::variable(2, 0);
const Polynomial p = Polynomial::variable(2, 1);
const Polynomial one = Polynomial::constant(2, Scalar(1));

FormalSeries s(const Polynomial &f, int order = 3)
{
    return FormalSeries::from_polynomial(f, order);
}

FormalSeries hbar_poly(std::initializer_list<Polynomial> coeffs)
{
    FormalSeries out(2, static_cast<int>(coeffs.size()) - 1);
    int r = 0;
    for (const auto &c : coeffs) {
        out.set_coeff(r++, c);
    }
    return out;
}

} // namespace

TEST(PhaseSpace, StandardCompatibility)
{
    const Matrix prod = matmul(plane.pi(), plane.omega());
    Matrix minus_id = identity_matrix(2);
    for (auto &row : minus_id) {
        for (auto &x : row) {
            x = -x;
        }
    }
    EXPECT_EQ(prod, minus_id);
    EXPECT_EQ(plane.variable_names(), (std::vector<std::string>{"q", "p"}));
}

TEST(PhaseSpace, RejectsDegenerateOmega)
{
    Matrix omega = zero_matrix(2, 2);
    EXPECT_THROW(PhaseSpace(1, omega), InvariantViolation);
    omega[0][1] = Scalar(1);
    omega[1][0] = Scalar(1);
    EXPECT_THROW(PhaseSpace(1, omega), InvariantViolation);
}

TEST(PhaseSpace, RejectsIncompatiblePi)
{
    Matrix omega = zero_matrix(2, 2);
    omega[0][1] = Scalar(1);
    omega[1][0] = Scalar(-1);
    Matrix pi = omega;
    pi[0][1] = Scalar(-1);
    pi[1][0] = Scalar(1);
    EXPECT_THROW(PhaseSpace(1, omega, pi), InvariantViolation);
}

TEST(PoissonBracket, CanonicalPair)
{
    EXPECT_EQ(poisson_bracket(plane, q, p), one);
    const Polynomial half = Polynomial::constant(2, Scalar::rational(1, 2));
    EXPECT_EQ(poisson_bracket(plane, half * q * q, half * p * p), q * p);
}

TEST(HamiltonianField, Examples)
{
    const Scalar a(3);
    const Scalar b(-2);
    const VectorField x = hamiltonian_vf(plane, a * p - b * q);
    EXPECT_EQ(x.components[0], Polynomial::constant(2, a));
    EXPECT_EQ(x.components[1], Polynomial::constant(2, b));
    EXPECT_TRUE(hamiltonian_vf(plane, one * Scalar(7)).is_zero());
    const VectorField xqp = hamiltonian_vf(plane, q * p);
    EXPECT_EQ(xqp.components[0], q);
    EXPECT_EQ(xqp.components[1], -p);
}

TEST(HamiltonianField, InteriorProductIsDifferential)
{
    std::mt19937 rng(fixed_seed);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial f = random_polynomial(rng, 2, 4, 6);
        EXPECT_EQ(interior_omega(plane, hamiltonian_vf(plane, f)), exterior_derivative(f));
    }
}

TEST(PoissonProperty, MatchesHandFormulaAndIdentities)
{
    std::mt19937 rng(fixed_seed + 1);
    const PhaseSpace space4 = PhaseSpace::standard(2);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = random_polynomial(rng, 2, 4, 5);
        const Polynomial g = random_polynomial(rng, 2, 4, 5);
        const Polynomial h = random_polynomial(rng, 2, 3, 4);
        ASSERT_EQ(poisson_bracket(plane, f, g), canonical_bracket(f, g));
        ASSERT_TRUE(poisson_bracket(plane, f, f).is_zero());
        const Polynomial jacobi = poisson_bracket(plane, f, poisson_bracket(plane, g, h))
                                  + poisson_bracket(plane, g, poisson_bracket(plane, h, f))
                                  + poisson_bracket(plane, h, poisson_bracket(plane, f, g));
        ASSERT_TRUE(jacobi.is_zero());
        ASSERT_EQ(poisson_bracket(plane, f, g * h), poisson_bracket(plane, f, g) * h + g * poisson_bracket(plane, f, h));
        ASSERT_EQ(evaluate_omega(plane, hamiltonian_vf(plane, f), hamiltonian_vf(plane, g)),
                  poisson_bracket(plane, f, g));

        const Polynomial a = random_polynomial(rng, 4, 3, 4);
        const Polynomial b = random_polynomial(rng, 4, 3, 4);
        const Polynomial c = random_polynomial(rng, 4, 3, 4);
        const Polynomial jac4 = poisson_bracket(space4, a, poisson_bracket(space4, b, c))
                                + poisson_bracket(space4, b, poisson_bracket(space4, c, a))
                                + poisson_bracket(space4, c, poisson_bracket(space4, a, b));
        ASSERT_TRUE(jac4.is_zero());
        ASSERT_EQ(evaluate_omega(space4, hamiltonian_vf(space4, a), hamiltonian_vf(space4, b)),
                  poisson_bracket(space4, a, b));
    }
}

TEST(Moyal, SpecExamples)
{
    const Polynomial half = Polynomial::constant(2, Scalar::rational(1, 2));
    EXPECT_EQ(moyal_product(plane, s(q), s(p)), hbar_poly({q * p, half, Polynomial(2), Polynomial(2)}));
    EXPECT_EQ(moyal_product(plane, s(q * q), s(p * p)),
              hbar_poly({q * q * p * p, Scalar(2) * q * p, half, Polynomial(2)}));
    std::mt19937 rng(fixed_seed + 2);
    const FormalSeries f = random_series(rng, 2, 3, 4, 5);
    EXPECT_EQ(moyal_product(plane, s(one), f), f);
    EXPECT_EQ(moyal_product(plane, f, s(one)), f);
}

TEST(Moyal, MinusIHalfConvention)
{
    const PhaseSpace complex_plane = PhaseSpace::standard(1, Convention::minus_i_half);
    const FormalSeries qp = moyal_product(complex_plane, s(q), s(p));
    EXPECT_EQ(qp.coeff(1), Polynomial::constant(2, Scalar(0, mpq_class(-1, 2))));
    const MoyalProduct star(complex_plane);
    EXPECT_EQ(scaled_bracket(star, s(q), s(p), 2), FormalSeries::from_polynomial(one, 2));
}

TEST(MoyalProperty, AgreesWithBidifferentialSum)
{
    std::mt19937 rng(fixed_seed + 3);
    for (int n = 1; n <= 2; ++n) {
        for (auto conv : {Convention::real_half, Convention::minus_i_half}) {
            const PhaseSpace space = PhaseSpace::standard(n, conv);
            for (int trial = 0; trial < 25; ++trial) {
                const Polynomial f = random_polynomial(rng, space.dim(), 4, 5);
                const Polynomial g = random_polynomial(rng, space.dim(), 4, 5);
                ASSERT_EQ(moyal_product(space, s(f, 4), s(g, 4)), naive_moyal(space, f, g, 4))
                    << f.to_string() << " * " << g.to_string();
            }
        }
    }
}

TEST(MoyalProperty, AssociativeOnSeries)
{
    std::mt19937 rng(fixed_seed + 4);
    for (int n = 1; n <= 2; ++n) {
        const PhaseSpace space = PhaseSpace::standard(n);
        for (int order = 0; order <= 5; ++order) {
            for (int trial = 0; trial < 4; ++trial) {
                const FormalSeries f = random_series(rng, space.dim(), order, 3, 3);
                const FormalSeries g = random_series(rng, space.dim(), order, 3, 3);
                const FormalSeries h = random_series(rng, space.dim(), order, 3, 3);
                ASSERT_EQ(moyal_product(space, moyal_product(space, f, g), h),
                          moyal_product(space, f, moyal_product(space, g, h)));
            }
        }
    }
}

TEST(StarCommutator, Examples)
{
    const MoyalProduct star(plane);
    const FormalSeries c1 = star_commutator_scaled(star, s(q), s(p));
    EXPECT_EQ(c1, FormalSeries::from_polynomial(one, 2));
    const FormalSeries c2 = star_commutator_scaled(star, s(q * q), s(p * p));
    EXPECT_EQ(c2, FormalSeries::from_polynomial(Scalar(4) * q * p, 2));
    std::mt19937 rng(fixed_seed + 5);
    const FormalSeries f = random_series(rng, 2, 3, 4, 5);
    FormalSeries c = FormalSeries::constant(2, 3, Scalar(5));
    c.set_coeff(2, Polynomial::constant(2, Scalar(-1)));
    EXPECT_TRUE(star_commutator_scaled(star, f, c).is_zero());
}

TEST(StarCommutator, ScaledBracketNeedsEnoughOrder)
{
    const MoyalProduct star(plane);
    EXPECT_THROW((void)scaled_bracket(star, s(q, 1), s(p, 1), 2), OrderMismatch);
}

TEST(StarProperty, QuadraticBracketIsExact)
{
    std::mt19937 rng(fixed_seed + 6);
    const MoyalProduct star(plane);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial f = random_polynomial(rng, 2, 2, 4);
        const Polynomial g = random_polynomial(rng, 2, 5, 5);
        ASSERT_EQ(scaled_bracket(star, s(f, 4), s(g, 4), 4), s(poisson_bracket(plane, f, g), 4));
    }
}

TEST(StarAxioms, MoyalPasses)
{
    for (auto conv : {Convention::real_half, Convention::minus_i_half}) {
        const MoyalProduct star(PhaseSpace::standard(1, conv));
        const StarAxiomReport report = verify_star_axioms(star, {s(one), s(q), s(p), s(q * p), s(q * q)});
        EXPECT_TRUE(report.passed());
        EXPECT_EQ(report.axioms.size(), 5U);
    }
}

TEST(StarAxioms, PointwiseFailsC1)
{
    const PointwiseProduct star(plane);
    const StarAxiomReport report = verify_star_axioms(star, {s(one), s(q), s(p)});
    const AxiomResult &c1 = report.get("C1");
    EXPECT_FALSE(c1.passed);
    EXPECT_EQ(c1.witness, "f=q, g=p");
    EXPECT_TRUE(report.get("associativity").passed);
}

TEST(StarAxioms, FlatFedosovPassesAndMatchesMoyal)
{
    const FedosovStar star(FedosovConfig::flat(plane, 10));
    const std::vector<FormalSeries> samples = {s(one), s(q), s(p), s(q * p), s(q * q)};
    EXPECT_TRUE(verify_star_axioms(star, {s(one, 2), s(q, 2), s(p, 2), s(q * p, 2), s(q * q, 2)}).passed());
    for (const auto &f : samples) {
        for (const auto &g : samples) {
            ASSERT_EQ(star.multiply(f, g), moyal_product(plane, f, g));
        }
    }
}

TEST(TwoForm, Invariants)
{
    PolyMatrix m = zero_poly_matrix(2);
    m[0][1] = one;
    m[1][0] = -one;
    EXPECT_THROW(TwoFormSeries(2, {m}), InvariantViolation);
    EXPECT_NO_THROW(TwoFormSeries(2, {zero_poly_matrix(2), m}));
    PolyMatrix asym = zero_poly_matrix(2);
    asym[0][1] = one;
    EXPECT_THROW(TwoFormSeries(2, {zero_poly_matrix(2), asym}), InvariantViolation);

    // On R^4 the form y3 dy1^dy2 is not closed.
    const Polynomial y3 = Polynomial::variable(4, 2);
    PolyMatrix open = zero_poly_matrix(4);
    open[0][1] = y3;
    open[1][0] = -y3;
    EXPECT_THROW(TwoFormSeries(4, {zero_poly_matrix(4), open}), InvariantViolation);
}

TEST(TwoForm, EvaluateAndInvariance)
{
    const TwoFormSeries omega = TwoFormSeries::multiple_of_omega(plane, 3, 1, Scalar::rational(3, 5));
    VectorField dq{{one, Polynomial(2)}};
    VectorField dp{{Polynomial(2), one}};
    FormalSeries expected(2, 3);
    expected.set_coeff(1, Polynomial::constant(2, Scalar::rational(3, 5)));
    EXPECT_EQ(omega.evaluate(dq, dp), expected);
    EXPECT_FALSE(omega.invariance_defect(dq).has_value());

    PolyMatrix m = zero_poly_matrix(2);
    m[0][1] = q;
    m[1][0] = -q;
    const TwoFormSeries moving(2, {zero_poly_matrix(2), m});
    EXPECT_TRUE(moving.invariance_defect(dq).has_value());
}
