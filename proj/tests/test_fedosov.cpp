#include <gtest/gtest.h>

#include <random>

#include "qmm/errors.hpp"
#include "qmm/fedosov.hpp"
#include "qmm/star_product.hpp"
#include "qmm/weyl.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

using namespace qmm;
using namespace qmm::testing;

namespace
{

const PhaseSpace plane = PhaseSpace::standard(1);
constexpr std::size_t dim = 2;

Polynomial x(std::size_t i)
{
    return Polynomial::variable(dim, i);
}

Polynomial num(const Scalar &c)
{
    return Polynomial::constant(dim, c);
}

WeylKey key(int hbar, Exponents alpha, std::uint32_t forms = 0)
{
    return {hbar, std::move(alpha), forms};
}

constexpr std::uint32_t dx1 = 1U;
constexpr std::uint32_t dx2 = 2U;

WeylElement element(int cap, std::initializer_list<std::pair<WeylKey, Polynomial>> terms)
{
    WeylElement out(dim, cap);
    for (const auto &[k, c] : terms) {
        out.add_term(k, c);
    }
    return out;
}

// Embeds sigma(a) back into W at the cap of a.
WeylElement lift(const FormalSeries &f, int cap)
{
    return WeylElement::from_series(f, cap);
}

FedosovConfig magnetic_config(int cap)
{
    return FedosovConfig::with_omega(plane, magnetic_form(cap / 2), cap);
}

} // namespace

TEST(FiberProduct, Examples)
{
    const int cap = 6;
    const WeylElement y1 = element(cap, {{key(0, {1, 0}), num(1)}});
    const WeylElement y2 = element(cap, {{key(0, {0, 1}), num(1)}});
    const Scalar half_pi12 = Scalar::rational(1, 2) * plane.pi()[0][1];
    EXPECT_TRUE(agree(fiber_circ(plane, y1, y2),
                      element(cap, {{key(0, {1, 1}), num(1)}, {key(1, {0, 0}), num(half_pi12)}})));

    std::mt19937 rng(fixed_seed);
    const WeylElement a = random_weyl(rng, dim, cap, cap, 6);
    EXPECT_TRUE(agree(fiber_circ(plane, element(cap, {{key(0, {0, 0}), num(1)}}), a), a));

    const WeylElement y1dx1 = element(cap, {{key(0, {1, 0}, dx1), num(1)}});
    const WeylElement y2dx2 = element(cap, {{key(0, {0, 1}, dx2), num(1)}});
    EXPECT_TRUE(agree(fiber_circ(plane, y1dx1, y2dx2),
                      element(cap, {{key(0, {1, 1}, dx1 | dx2), num(1)}, {key(1, {0, 0}, dx1 | dx2), num(half_pi12)}})));
}

TEST(FiberProductProperty, Associative)
{
    std::mt19937 rng(fixed_seed + 1);
    for (int trial = 0; trial < 20; ++trial) {
        const WeylElement a = random_weyl(rng, dim, 7, 4, 3);
        const WeylElement b = random_weyl(rng, dim, 7, 4, 3);
        const WeylElement c = random_weyl(rng, dim, 7, 4, 3);
        ASSERT_TRUE(agree(fiber_circ(plane, fiber_circ(plane, a, b), c), fiber_circ(plane, a, fiber_circ(plane, b, c))));
    }
}

TEST(Delta, Examples)
{
    const int cap = 6;
    const WeylElement y1 = element(cap, {{key(0, {1, 0}), num(1)}});
    const WeylElement dx1_only = element(cap, {{key(0, {0, 0}, dx1), num(1)}});
    EXPECT_TRUE(agree(delta(y1), dx1_only));
    EXPECT_TRUE(agree(delta_inv(dx1_only), y1));

    const WeylElement a = element(cap, {{key(0, {1, 1}, dx1), num(1)}});
    EXPECT_TRUE(agree(delta(delta_inv(a)) + delta_inv(delta(a)) + lift(sigma(a), cap), a));

    const WeylElement mixed =
        element(cap, {{key(0, {0, 0}), x(0)}, {key(0, {1, 0}), num(1)}, {key(0, {1, 0}, dx2), num(1)}});
    EXPECT_EQ(sigma(mixed).coeff(0), x(0));
}

TEST(Nabla, Examples)
{
    const int cap = 6;
    EXPECT_TRUE(agree(nabla(WeylElement::from_polynomial(x(0), cap)), element(cap, {{key(0, {0, 0}, dx1), num(1)}})));
    EXPECT_TRUE(vanishes(nabla(element(cap, {{key(0, {1, 0}), num(1)}}))));
    const WeylElement a = element(cap, {{key(0, {0, 0}, dx1), x(0) * x(1)}});
    EXPECT_TRUE(agree(nabla(a), element(cap, {{key(0, {0, 0}, dx1 | dx2), -x(0)}})));
}

TEST(WeylProperty, HomotopyAndSquares)
{
    std::mt19937 rng(fixed_seed + 2);
    const int cap = 8;
    const WeylElement r = build_r(magnetic_config(cap));
    for (int trial = 0; trial < 40; ++trial) {
        const WeylElement a = random_weyl(rng, dim, cap, cap - 1, 5);
        ASSERT_TRUE(agree(delta(delta_inv(a)) + delta_inv(delta(a)) + lift(sigma(a), cap), a));
        ASSERT_TRUE(vanishes(delta(delta(a))));
        ASSERT_TRUE(vanishes(delta_inv(delta_inv(a))));
        ASSERT_TRUE(vanishes(nabla(nabla(a))));
        ASSERT_TRUE(vanishes(delta(nabla(a)) + nabla(delta(a))));
        const WeylElement dda = fedosov_derivation(plane, fedosov_derivation(plane, a, r), r);
        ASSERT_GE(dda.bound(), cap - 4);
        ASSERT_TRUE(vanishes(dda));
    }
}

TEST(BuildR, FlatIsZero)
{
    const WeylElement r = build_r(FedosovConfig::flat(plane, 8));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(r.bound(), 8);
}

TEST(BuildR, MagneticLeadingTerm)
{
    const int cap = 8;
    const WeylElement r = build_r(magnetic_config(cap));
    const Scalar half_beta = magnetic_beta() * Scalar::rational(1, 2);
    const WeylElement expected = element(cap, {{key(1, {1, 0}, dx2), num(half_beta)}, {key(1, {0, 1}, dx1), num(-half_beta)}});
    EXPECT_TRUE(agree(r.truncated(3), expected.truncated(3)));
    for (const auto &[k, c] : r.terms()) {
        EXPECT_EQ(k.form_degree(), 1);
        EXPECT_GE(k.total_degree(), 2);
    }
    const WeylElement omega = omega_element(magnetic_form(cap / 2), cap);
    const WeylElement rhs = nabla(r) - divide_by_hbar(fiber_circ(plane, r, r)) + omega;
    EXPECT_TRUE(agree(delta(r), rhs));
    EXPECT_TRUE(vanishes(delta_inv(r)));
}

TEST(BuildR, NormalizationIsRecovered)
{
    const int cap = 8;
    FedosovConfig config = FedosovConfig::flat(plane, cap);
    config.s.add_term(key(0, {3, 0}), num(1));
    config.s.add_term(key(0, {1, 2}), x(1));
    const WeylElement r = build_r(config);
    EXPECT_FALSE(r.is_zero());
    EXPECT_TRUE(agree(delta_inv(r), config.s));
}

TEST(FedosovConfig, Validation)
{
    FedosovConfig c = FedosovConfig::flat(plane, 8);
    c.s.add_term(key(0, {1, 0}), num(1));
    EXPECT_THROW(c.validate(), ConfigViolation);

    FedosovConfig sigma_part = FedosovConfig::flat(plane, 8);
    sigma_part.s.add_term(key(2, {0, 0}), num(1));
    EXPECT_THROW(sigma_part.validate(), ConfigViolation);

    FedosovConfig form_part = FedosovConfig::flat(plane, 8);
    form_part.s.add_term(key(0, {3, 0}, dx1), num(1));
    EXPECT_THROW(form_part.validate(), ConfigViolation);

    FedosovConfig w4 = FedosovConfig::flat(plane, 8);
    w4.normalization = NormalizationBound::w4;
    w4.s.add_term(key(2, {1, 0}), num(1));
    EXPECT_THROW(w4.validate(), ConfigViolation);
    w4.normalization = NormalizationBound::w3;
    EXPECT_NO_THROW(w4.validate());
}

TEST(FedosovDerivation, Examples)
{
    const int cap = 6;
    const WeylElement r = build_r(FedosovConfig::flat(plane, cap));
    EXPECT_TRUE(vanishes(fedosov_derivation(plane, WeylElement::from_polynomial(num(1), cap), r)));
    const WeylElement a = element(cap, {{key(0, {0, 0}), x(0)}, {key(0, {1, 0}), num(1)}});
    EXPECT_TRUE(vanishes(fedosov_derivation(plane, a, r)));
    const WeylElement rm = build_r(magnetic_config(cap));
    EXPECT_TRUE(vanishes(fedosov_derivation(plane, WeylElement::from_polynomial(num(1), cap), rm)));
}

TEST(FedosovTaylor, FlatExamples)
{
    const int cap = 6;
    const WeylElement r = build_r(FedosovConfig::flat(plane, cap));
    const WeylElement t1 = fedosov_taylor(plane, FormalSeries::from_polynomial(x(0), 0), r);
    EXPECT_TRUE(agree(t1, element(cap, {{key(0, {0, 0}), x(0)}, {key(0, {1, 0}), num(1)}})));
    const WeylElement t0 = fedosov_taylor(plane, FormalSeries::from_polynomial(num(1), 0), r);
    EXPECT_TRUE(agree(t0, WeylElement::from_polynomial(num(1), cap)));
    const WeylElement t2 = fedosov_taylor(plane, FormalSeries::from_polynomial(x(0) * x(1), 0), r);
    EXPECT_TRUE(agree(t2, element(cap, {{key(0, {0, 0}), x(0) * x(1)},
                                        {key(0, {0, 1}), x(0)},
                                        {key(0, {1, 0}), x(1)},
                                        {key(0, {1, 1}), num(1)}})));
}

TEST(FedosovTaylorProperty, FlatSections)
{
    std::mt19937 rng(fixed_seed + 3);
    const int cap = 8;
    const WeylElement r = build_r(magnetic_config(cap));
    for (int trial = 0; trial < 10; ++trial) {
        const FormalSeries f = FormalSeries::from_polynomial(random_polynomial(rng, dim, 3, 4), 0);
        const WeylElement tau = fedosov_taylor(plane, f, r);
        ASSERT_EQ(sigma(tau).coeff(0), f.coeff(0));
        ASSERT_TRUE(vanishes(fedosov_derivation(plane, tau, r)));
        ASSERT_GE(tau.bound(), cap - 1);
    }
}

TEST(FedosovStar, FlatMatchesMoyal)
{
    const FedosovStar star(FedosovConfig::flat(plane, 10));
    const FormalSeries a = FormalSeries::from_polynomial(x(0), 3);
    const FormalSeries b = FormalSeries::from_polynomial(x(1), 3);
    EXPECT_EQ(star.multiply(a, b), moyal_product(plane, a, b));
    std::mt19937 rng(fixed_seed + 4);
    for (int trial = 0; trial < 10; ++trial) {
        const FormalSeries f = random_series(rng, dim, 2, 2, 3);
        const FormalSeries g = random_series(rng, dim, 2, 2, 3);
        ASSERT_EQ(star.multiply(f, g), moyal_product(plane, f, g));
        ASSERT_EQ(star.multiply(FormalSeries::constant(dim, 2, Scalar(1)), f), f);
    }
}

TEST(FedosovStar, TruncationTooLow)
{
    const FedosovStar star(FedosovConfig::flat(plane, 6));
    const FormalSeries f = FormalSeries::from_polynomial(x(0) * x(0), 3);
    EXPECT_THROW((void)star.multiply(f, f), TruncationTooLow);
    EXPECT_EQ(FedosovStar::required_weyl_order(2, 2, 3), 10);
    EXPECT_EQ(FedosovStar::required_weyl_order(0, 0, 3), 7);
}

TEST(FedosovStar, MagneticAssociativeOnSpecTriple)
{
    const FedosovStar star(magnetic_config(10));
    const FormalSeries a = FormalSeries::from_polynomial(x(0), 3);
    const FormalSeries b = FormalSeries::from_polynomial(x(1), 3);
    const FormalSeries c = FormalSeries::from_polynomial(x(0) * x(1), 3);
    EXPECT_EQ(star.multiply(star.multiply(a, b), c), star.multiply(a, star.multiply(b, c)));
    // [q, p] = hbar_eff with hbar_eff = hbar / (1 + hbar beta).
    const FormalSeries bracket = star.multiply(a, b) - star.multiply(b, a);
    const Scalar beta = magnetic_beta();
    FormalSeries expected(dim, 3);
    expected.set_coeff(1, num(1));
    expected.set_coeff(2, num(-beta));
    expected.set_coeff(3, num(beta * beta));
    EXPECT_EQ(bracket, expected);
}

TEST(FedosovStarProperty, MagneticAssociativeOnRandomTriples)
{
    std::mt19937 rng(fixed_seed + 5);
    const FedosovStar star(magnetic_config(10));
    for (int trial = 0; trial < 8; ++trial) {
        const FormalSeries f = random_series(rng, dim, 2, 2, 2);
        const FormalSeries g = random_series(rng, dim, 2, 2, 2);
        const FormalSeries h = random_series(rng, dim, 2, 2, 2);
        ASSERT_EQ(star.multiply(star.multiply(f, g), h), star.multiply(f, star.multiply(g, h)));
    }
}

TEST(Invariance, Examples)
{
    const SymplecticAction heis = heisenberg_action();
    EXPECT_TRUE(check_invariance(heis, magnetic_config(8)).passed());

    PolyMatrix m = zero_poly_matrix(dim);
    m[0][1] = x(0);
    m[1][0] = -x(0);
    const FedosovConfig moving = FedosovConfig::with_omega(plane, TwoFormSeries(dim, {zero_poly_matrix(dim), m}), 8);
    const InvarianceReport bad = check_invariance(heis, moving);
    EXPECT_FALSE(bad.omega_invariant);
    EXPECT_EQ(bad.omega_witness, std::optional<std::size_t>(0));

    const Polynomial zero(dim);
    const SymplecticAction shear(plane, LieAlgebra::abelian(1), {VectorField{{x(1) * x(1), zero}}});
    const InvarianceReport nonaffine = check_invariance(shear, FedosovConfig::flat(plane, 8));
    EXPECT_FALSE(nonaffine.affine);
}

TEST(Invariance, NormalizationMustBeInvariant)
{
    FedosovConfig config = FedosovConfig::flat(plane, 8);
    config.s.add_term(key(0, {3, 0}), num(1));
    EXPECT_FALSE(check_invariance(sl2_action(), config).s_invariant);
    EXPECT_TRUE(check_invariance(heisenberg_action(), config).s_invariant);
}
