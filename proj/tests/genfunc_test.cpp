#include <gtest/gtest.h>

#include "golden.hpp"
#include "k3taut/genfunc.hpp"
#include "k3taut/grr.hpp"

using k3taut::GenFunction;
using k3taut::PushforwardTable;
using k3taut::Rational;
using k3taut::Series;

namespace {

GenFunction golden() {
    std::vector<Rational> a;
    for (auto s : k3taut::testing::kPushforwardTable) {
        a.push_back(Rational::parse(s));
    }
    return GenFunction(Series(std::move(a)));
}

}  // namespace

TEST(TransformSeries, LowOddCoefficientsByHand) {
    const Series s = k3taut::transform_series(golden(), 7);
    EXPECT_EQ(s[1], Rational(24));
    EXPECT_EQ(s[3], Rational(-240));
    EXPECT_EQ(s[5], Rational(504));
}

TEST(TransformSeries, ShortfallIsReported) {
    const GenFunction a(Series{24, 88});
    EXPECT_NO_THROW(k3taut::transform_series(a, 4));
    try {
        (void)k3taut::transform_series(a, 5);
        FAIL() << "expected invalid_argument";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("a_0 .. a_2"), std::string::npos) << e.what();
    }
}

TEST(VerifyBernoulli, GoldenTablePasses) {
    const auto checks = k3taut::verify_bernoulli_property(golden(), 10);
    ASSERT_EQ(checks.size(), 10u);
    EXPECT_EQ(checks[0].lhs, Rational(24));
    EXPECT_EQ(checks[0].rhs, Rational(24));
    EXPECT_EQ(checks[1].lhs, Rational(-240));
    EXPECT_EQ(checks[1].rhs, Rational(-240));
    for (const auto& c : checks) {
        EXPECT_TRUE(c.ok) << "n = " << c.n;
    }
}

TEST(VerifyBernoulli, DetectsPerturbation) {
    Series a = golden().series();
    a.set(1, 89);
    const auto checks = k3taut::verify_bernoulli_property(GenFunction(a), 2);
    EXPECT_TRUE(checks[0].ok);
    EXPECT_FALSE(checks[1].ok);
}

TEST(VerifyBernoulli, RejectsEmptyRange) {
    EXPECT_THROW(k3taut::verify_bernoulli_property(golden(), 0), std::invalid_argument);
}

TEST(BernoulliPivot, MatchesUnitVectorResponse) {
    // a_{n-1} enters [t^{2n-1}] with the coefficient of the unit sequence e_{n-1}.
    for (int n = 1; n <= 10; ++n) {
        Series unit(static_cast<std::size_t>(n));
        unit.set(static_cast<std::size_t>(n - 1), 1);
        const auto order = static_cast<std::size_t>(2 * n);
        EXPECT_EQ(k3taut::transform_series(GenFunction(unit), order)[order - 1], k3taut::bernoulli_pivot(n))
            << "n = " << n;
    }
    EXPECT_EQ(k3taut::bernoulli_pivot(2), Rational(-3));
}

TEST(SolveFromBernoulli, MatchesTable) {
    const auto t1 = k3taut::solve_from_bernoulli(1);
    EXPECT_EQ(t1.a, (std::vector<Rational>{24, 88}));
    const auto t5 = k3taut::solve_from_bernoulli(5);
    EXPECT_EQ(t5.a[5], Rational(1295488, 691));
}

TEST(SolveFromBernoulli, AgreesWithGrrSolver) {
    for (int n = 0; n <= 12; ++n) {
        EXPECT_EQ(k3taut::solve_from_bernoulli(n), k3taut::solve_pushforwards(n)) << "n = " << n;
    }
}

TEST(Uniqueness, EveryPerturbationIsDetected) {
    const PushforwardTable t = k3taut::solve_pushforwards(12);
    const int nmax = 13;
    for (std::size_t j = 0; j < t.a.size(); ++j) {
        Series a(t.a);
        a.set(j, a[j] + Rational(1));
        const auto checks = k3taut::verify_bernoulli_property(GenFunction(a), nmax);
        bool broken = false;
        for (const auto& c : checks) {
            if (2 * c.n - 1 >= 2 * static_cast<int>(j)) {
                broken = broken || !c.ok;
            }
        }
        EXPECT_TRUE(broken) << "perturbing a_" << j << " went unnoticed";
    }
}

TEST(TransformSeries, EvenCoefficientsAreReported) {
    const auto even = k3taut::transform_even_coefficients(golden(), 3);
    ASSERT_EQ(even.size(), 4u);
    // By hand: [t^0] = 2 a_0 = 48, [t^2] = 2(-a_1) + a_0 = -152.
    EXPECT_EQ(even[0], Rational(48));
    EXPECT_EQ(even[1], Rational(-152));
}
