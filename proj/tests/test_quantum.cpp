#include <gtest/gtest.h>

#include <random>

#include "qmm/errors.hpp"
#include "qmm/fedosov.hpp"
#include "qmm/quantum.hpp"
#include "support/models.hpp"
#include "support/oracles.hpp"

using namespace qmm;
using namespace qmm::testing;

namespace
{

constexpr int order = 3;
constexpr int weyl_order = 12;

const Polynomial q = plane_q();
const Polynomial p = plane_p();

Polynomial c(long num, long den = 1)
{
    return Polynomial::constant(2, Scalar::rational(num, den));
}

FedosovStar magnetic_star()
{
    return FedosovStar(FedosovConfig::with_omega(PhaseSpace::standard(1), magnetic_form(order), weyl_order));
}

// (1 + hbar beta) f.
FormalSeries dressed(const Polynomial &f)
{
    return one_plus_hbar(magnetic_beta(), order, 2) * series_of(f, order);
}

QuantumHamiltonian hamiltonian(const SymplecticAction &action, const std::vector<FormalSeries> &values)
{
    return QuantumHamiltonian{action, values};
}

QuantumHamiltonian undressed(const SymplecticAction &action)
{
    std::vector<FormalSeries> values;
    const ClassicalMomentumMap j0 = solve_momentum(action);
    for (const auto &v : j0.values()) {
        values.push_back(series_of(v, order));
    }
    return hamiltonian(action, values);
}

QuantumHamiltonian magnetic(const SymplecticAction &action)
{
    std::vector<FormalSeries> values;
    const ClassicalMomentumMap j0 = solve_momentum(action);
    for (const auto &v : j0.values()) {
        values.push_back(dressed(v));
    }
    return hamiltonian(action, values);
}

FormalSeries constant_series(const Scalar &x)
{
    return FormalSeries::constant(0, order, x);
}

TwoFormSeries moving_form()
{
    PolyMatrix m = zero_poly_matrix(2);
    m[0][1] = q;
    m[1][0] = -q;
    return TwoFormSeries(2, {zero_poly_matrix(2), m});
}

} // namespace

TEST(SolveJPlus, Examples)
{
    const Scalar beta = magnetic_beta();
    for (const SymplecticAction &action : {heisenberg_action(), sl2_action()}) {
        const std::vector<FormalSeries> jp = solve_j_plus(action, magnetic_form(order), order);
        const std::vector<Polynomial> j0 = solve_momentum(action).values();
        ASSERT_EQ(jp.size(), j0.size());
        for (std::size_t i = 0; i < jp.size(); ++i) {
            FormalSeries expected(2, order);
            expected.set_coeff(1, j0[i] * beta);
            EXPECT_EQ(jp[i], expected);
        }
    }
    const TwoFormSeries zero(2, {zero_poly_matrix(2)});
    for (const auto &v : solve_j_plus(sl2_action(), zero, order)) {
        EXPECT_TRUE(v.is_zero());
    }
}

TEST(SolveJPlus, RejectsNonInvariantForm)
{
    EXPECT_THROW((void)solve_j_plus(heisenberg_action(), moving_form(), 1), NotInvariant);
}

TEST(VerifyQuantumHamiltonian, MoyalExamples)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    EXPECT_TRUE(verify_quantum_hamiltonian(undressed(heisenberg_action()), moyal, 4, order).passed);
    EXPECT_TRUE(verify_quantum_hamiltonian(undressed(sl2_action()), moyal, 4, order).passed);

    const QuantumHamiltonian flipped = hamiltonian(heisenberg_action(), {series_of(-p, order), series_of(q, order)});
    const HamiltonianCheck check = verify_quantum_hamiltonian(flipped, moyal, 4, order);
    EXPECT_FALSE(check.passed);
    EXPECT_EQ(check.basis, std::optional<std::size_t>(0));
    EXPECT_EQ(check.monomial, std::optional<Exponents>(Exponents{1, 0}));
    EXPECT_EQ(check.hbar_order, std::optional<int>(0));
}

TEST(VerifyQuantumHamiltonian, MagneticFedosov)
{
    const FedosovStar star = magnetic_star();
    EXPECT_TRUE(verify_quantum_hamiltonian(magnetic(heisenberg_action()), star, 2, order).passed);
    EXPECT_TRUE(verify_quantum_hamiltonian(magnetic(sl2_action()), star, 2, order).passed);
    // Undressed J0 is off by hbar beta J0 in the bracket.
    const HamiltonianCheck bare = verify_quantum_hamiltonian(undressed(sl2_action()), star, 2, order);
    EXPECT_FALSE(bare.passed);
    EXPECT_EQ(bare.hbar_order, std::optional<int>(1));
}

TEST(Lambda, HeisenbergMoyal)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const Cochain lambda = lambda_cocycle(undressed(heisenberg_action()), moyal, order);
    EXPECT_EQ(lambda.at({0, 1}), constant_series(Scalar(1)));
    EXPECT_EQ(lambda.at({1, 0}), constant_series(Scalar(-1)));
    const LambdaForms forms = lambda_forms(undressed(heisenberg_action()), moyal, order);
    EXPECT_EQ(forms.commutator, forms.closed);
}

TEST(Lambda, MagneticExamples)
{
    const FedosovStar star = magnetic_star();
    const Cochain heis = lambda_cocycle(magnetic(heisenberg_action()), star, order);
    EXPECT_EQ(heis.at({0, 1}), one_plus_hbar(magnetic_beta(), order));
    EXPECT_TRUE(lambda_cocycle(magnetic(sl2_action()), star, order).is_zero());
}

TEST(Lambda, WrongStarIsDetected)
{
    // Dressed J against Moyal: not a quantum Hamiltonian for this product.
    const MoyalProduct moyal(PhaseSpace::standard(1));
    EXPECT_THROW((void)lambda_cocycle(magnetic(sl2_action()), moyal, order), NonConstant);
}

TEST(ClassifyQuantum, Examples)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const Cochain sigma_heis = sigma_2cocycle(solve_momentum(heisenberg_action()));
    const Cochain lambda = lambda_cocycle(undressed(heisenberg_action()), moyal, order);
    const QuantumClass anomalous = classify_quantum(lambda, sigma_heis);
    EXPECT_EQ(anomalous.kind, QuantumKind::anomalous);
    EXPECT_EQ(anomalous.lambda, lambda);
    EXPECT_EQ(to_string(anomalous.kind), "anomalous");

    const FedosovStar star = magnetic_star();
    const Cochain sigma_sl2 = sigma_2cocycle(solve_momentum(sl2_action()));
    const QuantumClass genuine = classify_quantum(lambda_cocycle(magnetic(sl2_action()), star, order), sigma_sl2);
    EXPECT_EQ(genuine.kind, QuantumKind::quantum_momentum_map);

    EXPECT_THROW((void)classify_quantum(lambda, Cochain::constant(2, 2, 0)), InternalConsistency);
}

TEST(QuantumExistence, Sl2Magnetic)
{
    const FedosovStar star = magnetic_star();
    const ExistenceResult r = quantum_momentum_exists(solve_momentum(sl2_action()), magnetic_form(order), star, order);
    ASSERT_TRUE(r.exists) << r.reason;
    ASSERT_TRUE(r.j.has_value());
    const std::vector<Polynomial> j0 = solve_momentum(sl2_action()).values();
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(r.j->values[i], dressed(j0[i]));
    }
    EXPECT_TRUE(r.sigma.is_zero());
}

TEST(QuantumExistence, FlatEquivariant)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const TwoFormSeries zero(2, {zero_poly_matrix(2)});
    const ExistenceResult r = quantum_momentum_exists(solve_momentum(sl2_action()), zero, moyal, order);
    ASSERT_TRUE(r.exists);
    EXPECT_EQ(r.j->classical(), solve_momentum(sl2_action()).values());
    for (const auto &v : r.j->j_plus()) {
        EXPECT_TRUE(v.is_zero());
    }
}

TEST(QuantumExistence, HeisenbergMagneticIsObstructed)
{
    const FedosovStar star = magnetic_star();
    const ExistenceResult r =
        quantum_momentum_exists(solve_momentum(heisenberg_action()), magnetic_form(order), star, order);
    EXPECT_FALSE(r.exists);
    EXPECT_FALSE(r.sigma.is_zero());
    ASSERT_TRUE(r.residual.has_value());
    // Omega(X1, X2) = hbar beta against d J+ = 2 hbar beta.
    FormalSeries expected(0, order);
    expected.set_coeff(1, Polynomial::constant(0, -magnetic_beta()));
    EXPECT_EQ(r.residual->at({0, 1}), expected);
}

TEST(QuantumExistence, StarMustMatchForm)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    EXPECT_THROW((void)quantum_momentum_exists(solve_momentum(sl2_action()), magnetic_form(order), moyal, order),
                 FormMismatch);
}

TEST(ExtendedExistence, HeisenbergMagnetic)
{
    const FedosovStar star = magnetic_star();
    const ClassicalMomentumMap j0 = solve_momentum(heisenberg_action());
    const Cochain sigma = sigma_2cocycle(j0);
    const ExtendedExistenceResult r = extended_qmm_exists(j0, sigma, magnetic_form(order), star, order);
    ASSERT_TRUE(r.exists) << r.reason;
    EXPECT_EQ(r.first_condition_g, r.first_condition_gtilde);
    ASSERT_TRUE(r.j.has_value());
    EXPECT_EQ(r.j->base.values[0], dressed(p));
    EXPECT_EQ(r.j->base.values[1], dressed(-q));
    EXPECT_EQ(r.j->central_value, dressed(c(1)));
    // J~(xi, a) = (1 + hbar beta) J~0(xi, a) on a general element.
    const ExtendedElement x = r.j->extension.element({Scalar(2), Scalar(-3)}, FormalSeries::constant(0, 0, Scalar(5)));
    EXPECT_EQ(r.j->value(x), dressed(c(2) * p + c(3) * q + c(5)));
}

TEST(ExtendedExistence, FlatIsClassicalExtension)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const ClassicalMomentumMap j0 = solve_momentum(heisenberg_action());
    const TwoFormSeries zero(2, {zero_poly_matrix(2)});
    const ExtendedExistenceResult r = extended_qmm_exists(j0, sigma_2cocycle(j0), zero, moyal, order);
    ASSERT_TRUE(r.exists);
    EXPECT_EQ(r.j->base.values[0], series_of(p, order));
    EXPECT_EQ(r.j->central_value, series_of(c(1), order));
}

TEST(ExtendedExistence, NonInvariantFormIsNo)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const ClassicalMomentumMap j0 = solve_momentum(heisenberg_action());
    const ExtendedExistenceResult r = extended_qmm_exists(j0, sigma_2cocycle(j0), moving_form(), moyal, 1);
    EXPECT_FALSE(r.exists);
    EXPECT_FALSE(r.reason.empty());
}

TEST(RestrictToG, HeisenbergMagneticIsAnomalous)
{
    const FedosovStar star = magnetic_star();
    const ClassicalMomentumMap j0 = solve_momentum(heisenberg_action());
    const Cochain sigma = sigma_2cocycle(j0);
    const ExtendedExistenceResult ext = extended_qmm_exists(j0, sigma, magnetic_form(order), star, order);
    ASSERT_TRUE(ext.j.has_value());
    const RestrictionReport r = restrict_to_g(*ext.j, heisenberg_action(), j0, sigma, star, 2, order);
    EXPECT_TRUE(r.hamiltonian.passed);
    EXPECT_FALSE(r.homomorphism);
    EXPECT_TRUE(r.defect_is_lambda);
    EXPECT_TRUE(r.defect_mod_hbar_is_sigma);
    EXPECT_TRUE(r.classical_limit_is_j0);
    EXPECT_EQ(r.defect.at({0, 1}), one_plus_hbar(magnetic_beta(), order, 2));
    EXPECT_EQ(r.j.values[0], dressed(p));

    // The restriction of the canonical extension is J itself.
    const Cochain lambda = lambda_cocycle(r.j, star, order);
    const CanonicalExtensionReport hat = canonical_quantum_extension(r.j, lambda, star, 2);
    const RestrictionReport dot = restrict_to_g(hat.jhat, heisenberg_action(), j0, sigma, star, 2, order);
    EXPECT_TRUE(restrictions_agree(r.j, dot.j));
}

TEST(RestrictToG, EquivariantIsHomomorphism)
{
    const FedosovStar star = magnetic_star();
    const ClassicalMomentumMap j0 = solve_momentum(sl2_action());
    const Cochain sigma = sigma_2cocycle(j0);
    const ExtendedExistenceResult ext = extended_qmm_exists(j0, sigma, magnetic_form(order), star, order);
    ASSERT_TRUE(ext.exists) << ext.reason;
    const RestrictionReport r = restrict_to_g(*ext.j, sl2_action(), j0, sigma, star, 2, order);
    EXPECT_TRUE(r.hamiltonian.passed);
    EXPECT_TRUE(r.homomorphism);
    EXPECT_TRUE(r.defect.is_zero());
}

TEST(CanonicalExtension, HeisenbergMoyal)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const QuantumHamiltonian j = undressed(heisenberg_action());
    const Cochain lambda = lambda_cocycle(j, moyal, order);
    const CanonicalExtensionReport r = canonical_quantum_extension(j, lambda, moyal, 3);
    EXPECT_TRUE(r.central_brackets_vanish);
    EXPECT_TRUE(r.homomorphism);
    const ExtendedAlgebra &hat = r.jhat.extension;
    EXPECT_EQ(hat.tag(), CenterTag::formal_reals);
    const ExtendedElement b = hat.bracket(hat.basis(0), hat.basis(1));
    EXPECT_EQ(b.base, (Vector{Scalar(0), Scalar(0)}));
    EXPECT_EQ(b.central, constant_series(Scalar(1)));
    // J^(xi, x) = J(xi) + x for a central x with an hbar part.
    FormalSeries x = FormalSeries::constant(0, order, Scalar(2));
    x.set_coeff(2, Polynomial::constant(0, Scalar(7)));
    const ExtendedElement e = hat.element({Scalar(1), Scalar(0)}, x);
    EXPECT_EQ(r.jhat.value(e), series_of(p, order) + x.with_num_vars(2));
}

TEST(CanonicalExtension, MagneticBrackets)
{
    const FedosovStar star = magnetic_star();
    const QuantumHamiltonian heis = magnetic(heisenberg_action());
    const CanonicalExtensionReport r = canonical_quantum_extension(heis, lambda_cocycle(heis, star, order), star, 2);
    EXPECT_TRUE(r.homomorphism);
    const ExtendedAlgebra &hat = r.jhat.extension;
    EXPECT_EQ(hat.bracket(hat.basis(0), hat.basis(1)).central, one_plus_hbar(magnetic_beta(), order));

    const QuantumHamiltonian sl2 = magnetic(sl2_action());
    const Cochain zero = lambda_cocycle(sl2, star, order);
    const CanonicalExtensionReport direct = canonical_quantum_extension(sl2, zero, star, 2);
    EXPECT_TRUE(direct.homomorphism);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_TRUE(direct.jhat.extension.bracket(direct.jhat.extension.basis(i), direct.jhat.extension.basis(3))
                        .central.is_zero());
    }
}

TEST(ClassicalLimitQuotient, Examples)
{
    const MoyalProduct moyal(PhaseSpace::standard(1));
    const ClassicalMomentumMap heis0 = solve_momentum(heisenberg_action());
    const Cochain sigma = sigma_2cocycle(heis0);
    const QuantumHamiltonian j = undressed(heisenberg_action());
    const CanonicalExtensionReport hat = canonical_quantum_extension(j, lambda_cocycle(j, moyal, order), moyal, 2);
    const QuotientReport r = classical_limit_quotient(hat.jhat, heis0, sigma);
    EXPECT_TRUE(r.matches_extended_classical);
    EXPECT_EQ(r.values, (std::vector<Polynomial>{p, -q, c(1)}));

    const FedosovStar star = magnetic_star();
    const QuantumHamiltonian jm = magnetic(heisenberg_action());
    const CanonicalExtensionReport hm = canonical_quantum_extension(jm, lambda_cocycle(jm, star, order), star, 2);
    EXPECT_TRUE(classical_limit_quotient(hm.jhat, heis0, sigma).matches_extended_classical);

    const ClassicalMomentumMap sl20 = solve_momentum(sl2_action());
    EXPECT_THROW((void)classical_limit_quotient(hat.jhat, heis0, Cochain::constant(2, 2, 0)), CocycleMismatch);
    const QuantumHamiltonian js = undressed(sl2_action());
    const CanonicalExtensionReport hs = canonical_quantum_extension(js, lambda_cocycle(js, moyal, order), moyal, 2);
    const QuotientReport rs = classical_limit_quotient(hs.jhat, sl20, sigma_2cocycle(sl20));
    EXPECT_TRUE(rs.matches_extended_classical);
    EXPECT_EQ(rs.values.back(), c(1));
}

TEST(QuantumProperty, ClassicalLimitOfQuantumHamiltonian)
{
    // Shifting J by constant series keeps it a quantum Hamiltonian, and its
    // classical limit stays a classical momentum map.
    std::mt19937 rng(fixed_seed + 11);
    const MoyalProduct moyal(PhaseSpace::standard(1));
    for (int trial = 0; trial < 10; ++trial) {
        QuantumHamiltonian j = undressed(sl2_action());
        for (auto &v : j.values) {
            FormalSeries shift(2, order);
            for (int r = 0; r <= order; ++r) {
                shift.set_coeff(r, Polynomial::constant(2, small_rational(rng)));
            }
            v += shift;
        }
        ASSERT_TRUE(verify_quantum_hamiltonian(j, moyal, 3, order).passed);
        ASSERT_TRUE(validate_momentum(sl2_action(), j.classical()).passed());
        const Cochain lambda = lambda_cocycle(j, moyal, order);
        const QuantumClass k = classify_quantum(lambda, sigma_2cocycle(ClassicalMomentumMap(sl2_action(), j.classical())));
        ASSERT_EQ(k.kind, lambda.is_zero() ? QuantumKind::quantum_momentum_map : QuantumKind::anomalous);
    }
}

TEST(QuantumProperty, QuantumMomentumMapsHaveEquivariantLimit)
{
    const FedosovStar star = magnetic_star();
    const QuantumHamiltonian j = magnetic(sl2_action());
    ASSERT_TRUE(lambda_cocycle(j, star, order).is_zero());
    EXPECT_TRUE(sigma_2cocycle(ClassicalMomentumMap(sl2_action(), j.classical())).is_zero());
}
