#include <gtest/gtest.h>

#include "k3taut/grr.hpp"
#include "k3taut/tautring.hpp"
#include "test_support.hpp"

using k3taut::KClass;
using k3taut::Rational;
using k3taut::Series;
using k3taut::TautClass;

namespace {

constexpr std::size_t kT = k3taut::kDefaultTruncation;

const k3taut::PushforwardTable& table9() {
    static const auto t = k3taut::solve_pushforwards(9);
    return t;
}

Series geometric(std::size_t step, std::size_t order) {
    Series s(order);
    for (std::size_t k = 0; k < order; k += step) {
        s.set(k, 1);
    }
    return s;
}

KClass random_kclass(std::size_t truncation) {
    return KClass(TautClass(k3taut::testing::random_series(truncation, 6)));
}

}  // namespace

TEST(KClassLine, ChernCharacters) {
    EXPECT_EQ(KClass::line(0).ch(), TautClass::one());
    EXPECT_EQ(KClass::line(-1).ch().series(), k3taut::exp(Series::monomial(-1, 1, kT)));
    EXPECT_EQ(KClass::line(-2).ch().series(), k3taut::exp(Series::monomial(-2, 1, kT)));
    EXPECT_EQ(KClass::line(3).rank(), Rational(1));
}

TEST(KClassOps, TangentBundleOfModuli) {
    const KClass theta = k3taut::tangent_moduli();
    const Series expected =
        Series::constant(-1, kT) + Rational(21) * k3taut::exp_series(-1, kT) - k3taut::exp_series(-2, kT);
    EXPECT_EQ(theta.ch().series(), expected);
    EXPECT_EQ(theta.rank(), Rational(19));
}

TEST(KClassOps, DualIsAnInvolution) {
    for (int i = 0; i < 20; ++i) {
        const KClass a = random_kclass(kT);
        EXPECT_EQ(a.dual().dual(), a);
    }
    EXPECT_EQ(KClass::line(2).dual(), KClass::line(-2));
}

TEST(KClassOps, TensorWithTrivialLine) {
    const KClass a = random_kclass(kT);
    EXPECT_EQ(tensor(a, KClass::line(0)), a);
}

TEST(KClassOps, TruncationMismatchThrows) {
    EXPECT_THROW(KClass::line(1, 5) + KClass::line(1, 6), std::invalid_argument);
    EXPECT_THROW(tensor(KClass::line(1, 5), KClass::line(1, 6)), std::invalid_argument);
}

TEST(TotalChern, TangentOfModuli) {
    const TautClass c = k3taut::ch_to_total_chern(k3taut::tangent_moduli());
    EXPECT_EQ(c.coeff(0), Rational(1));
    EXPECT_EQ(c.coeff(1), Rational(-19));
    // (1 - v)^21 / (1 - 2v): c_2 = C(21,2) - 21*2 + 4 = 172.
    EXPECT_EQ(c.coeff(2), Rational(172));
}

TEST(TotalChern, LineBundles) {
    EXPECT_EQ(k3taut::ch_to_total_chern(KClass::line(-1)).series(), (Series::constant(1, kT) - Series::variable(kT)));
    EXPECT_EQ(k3taut::ch_to_total_chern(KClass::trivial(22)), TautClass::one());
}

TEST(TotalChern, HodgeF1) {
    const KClass f1 = k3taut::hodge_f1();
    EXPECT_EQ(f1.rank(), Rational(21));
    EXPECT_EQ(k3taut::ch_to_total_chern(f1).series(), geometric(1, kT));
}

TEST(TotalChern, FirstCohomologyOfCotangent) {
    const KClass r1 = k3taut::r1_cotangent(table9());
    EXPECT_EQ(r1.rank(), Rational(20));
    EXPECT_EQ(k3taut::ch_to_total_chern(r1).series(), geometric(2, kT));
}

TEST(TotalChernProperty, Whitney) {
    for (int i = 0; i < 50; ++i) {
        const KClass a = random_kclass(10);
        const KClass b = random_kclass(10);
        EXPECT_EQ(k3taut::ch_to_total_chern(a + b),
                  k3taut::ch_to_total_chern(a) * k3taut::ch_to_total_chern(b));
    }
}

TEST(TotalChernProperty, DualFlipsOddClasses) {
    for (int i = 0; i < 50; ++i) {
        const KClass a = random_kclass(10);
        const TautClass c = k3taut::ch_to_total_chern(a);
        const TautClass cd = k3taut::ch_to_total_chern(a.dual());
        for (std::size_t k = 0; k < 10; ++k) {
            EXPECT_EQ(cd.coeff(k), k3taut::sign_power(static_cast<int>(k)) * c.coeff(k));
        }
    }
}

TEST(Duality, GlobalDualityHolds) {
    const auto report = k3taut::duality_report(table9());
    EXPECT_EQ(report.rank_tangent, Rational(20));
    EXPECT_EQ(report.rank_cotangent, Rational(20));
    EXPECT_EQ(report.lhs.truncation(), kT);
    EXPECT_TRUE(report.ok);
    EXPECT_TRUE(k3taut::duality_check(table9()));
}

TEST(Duality, NeedsALongEnoughTable) {
    EXPECT_THROW(k3taut::duality_check(k3taut::solve_pushforwards(3)), std::out_of_range);
}

TEST(Nilpotence, DefaultTruncation) {
    const auto r = k3taut::nilpotence_report(18);
    EXPECT_TRUE(r.v_T_zero);
    EXPECT_TRUE(r.v_Tminus1_nonzero);
}

TEST(Nilpotence, SmallTruncations) {
    EXPECT_TRUE(TautClass::v_power(1, 1).is_zero());
    EXPECT_FALSE(TautClass::one(1).is_zero());
    const auto r1 = k3taut::nilpotence_report(1);
    EXPECT_TRUE(r1.v_T_zero && r1.v_Tminus1_nonzero);

    EXPECT_TRUE((TautClass::v_power(1, 2) * TautClass::v_power(1, 2)).is_zero());
    EXPECT_FALSE(TautClass::v_power(1, 2).is_zero());
    EXPECT_THROW(k3taut::nilpotence_report(0), std::invalid_argument);
}
