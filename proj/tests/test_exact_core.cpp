#include "support.hpp"

#include <gtest/gtest.h>

using namespace chpf;
using chpf::test::R;

TEST(Rational, ParseAndPrint)
{
    EXPECT_EQ(Rational::parse("6/8"), R(3, 4));
    EXPECT_EQ(Rational::parse("-2"), R(-2));
    EXPECT_EQ(R(3, 4).str(), "3/4");
    EXPECT_THROW(Rational::parse("1/0"), Error);
    EXPECT_THROW(Rational::parse("x"), Error);
    EXPECT_EQ(frac(R(-7, 3)), R(2, 3));
}

TEST(QCombinatorics, QNumber)
{
    EXPECT_EQ(qnum(0, R(1, 4)), R(0));
    EXPECT_EQ(qnum(1, R(1, 4)), R(1));
    EXPECT_EQ(qnum(3, R(1, 4)), R(21, 16));
    EXPECT_THROW(qnum(3, R(1)), Error);
}

TEST(QCombinatorics, Pochhammer)
{
    EXPECT_EQ(qpoch(R(-5, 3), R(1, 4), 0), R(1));
    EXPECT_EQ(qpoch(R(1, 4), R(1, 4), 2), R(45, 64));
    EXPECT_EQ(qpoch(R(1, 2), R(1, 4), -1), R(-1));
    // (a; q)_{-n} (a q^{-n}; q)_n = 1
    for (long n = 1; n <= 4; ++n) {
        Rational a(3, 7), q(2, 5);
        EXPECT_EQ(qpoch(a, q, -n) * qpoch(a * q.pow(-n), q, n), R(1));
    }
    EXPECT_THROW(qpoch(R(1, 4), R(1, 4), -1), Error);
}

TEST(QCombinatorics, Binomial)
{
    EXPECT_EQ(qbinom(5, 0, R(1, 4)), R(1));
    EXPECT_EQ(qbinom(2, 1, R(1, 4)), R(5, 4));
    EXPECT_EQ(qbinom(4, 2, R(1, 4)), R(357, 256));
    EXPECT_EQ(qbinom(2, 3, R(1, 4)), R(0));
    // q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    Rational q(4, 9);
    for (long n = 1; n <= 7; ++n)
        for (long k = 1; k < n; ++k)
            EXPECT_EQ(qbinom(n, k, q), qbinom(n - 1, k - 1, q) + q.pow(k) * qbinom(n - 1, k, q));
}

TEST(ExactValue, NormalizeShiftsGammaArguments)
{
    ExactValue g = ExactValue::gamma(R(5, 2));
    EXPECT_EQ(g.coeff(), R(3, 4));
    EXPECT_EQ(g.pi_half_exp(), 1);
    EXPECT_TRUE(g.gammas().empty());

    EXPECT_EQ(ExactValue::gamma(R(1)) * ExactValue(7), ExactValue(7));
    EXPECT_TRUE((ExactValue::gamma(R(1)) * ExactValue(7)).is_rational());
    EXPECT_EQ(ExactValue::gamma(R(7, 3)) / ExactValue::gamma(R(1, 3)), ExactValue(R(4, 9)));

    // negative non-integer arguments shift upward
    ExactValue neg = ExactValue::gamma(R(-1, 3));
    EXPECT_EQ(neg.coeff(), R(-3));
    EXPECT_EQ(neg.gammas().at(R(2, 3)), 1);
    EXPECT_THROW(ExactValue::gamma(R(-2)), Error);
    EXPECT_THROW(ExactValue::gamma(R(0)), Error);
}

TEST(ExactValue, TwoExponentCarriesIntegerPart)
{
    ExactValue v = ExactValue::two_pow(R(-1, 3));
    EXPECT_EQ(v.two_exp(), R(2, 3));
    EXPECT_EQ(v.coeff(), R(1, 2));
    EXPECT_EQ(ExactValue::two_pow(R(5)), ExactValue(32));
}

TEST(ExactValue, ZeroIsNeutral)
{
    ExactValue z = ExactValue::gamma(R(1, 3)) * ExactValue(0);
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.gammas().empty());
    EXPECT_EQ(z.kappa_grade(), 0);
    EXPECT_TRUE((ExactValue::sqrt_pi() - ExactValue::sqrt_pi()).is_rational());
}

TEST(ExactValue, Combine)
{
    EXPECT_EQ(combine(ExactValue::sqrt_pi(), ExactValue::sqrt_pi(), Combine::Mul), ExactValue::pi_half(2));
    // Gamma(7/2) = (5/2) Gamma(5/2): sum = (7/2)(3/4) sqrt(pi) = 21/8 sqrt(pi)
    ExactValue sum = combine(ExactValue::gamma(R(7, 2)), ExactValue::gamma(R(5, 2)), Combine::Add);
    EXPECT_EQ(sum, ExactValue(R(21, 8)) * ExactValue::sqrt_pi());
    try {
        combine(ExactValue::sqrt_pi(), ExactValue(1), Combine::Add);
        FAIL() << "expected an inhomogeneous sum";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InhomogeneousSum);
    }
    EXPECT_THROW(combine(ExactValue(1), ExactValue(0), Combine::Div), Error);
}

TEST(ExactValue, KappaGrades)
{
    ExactValue k = ExactValue::kappa("asc") * ExactValue(R(3, 4));
    EXPECT_EQ(k.kappa_grade(), 1);
    EXPECT_EQ((k * k).kappa_grade(), 2);
    EXPECT_TRUE((k / k).is_rational());
    EXPECT_THROW(k + ExactValue(1), Error);
}

TEST(Ratio, Identity)
{
    ExactValue x = ExactValue::gamma(R(1, 5), 3) * ExactValue::pi_half(-1) * ExactValue(R(7, 2));
    ExactValue r = ratio(x, x);
    EXPECT_EQ(r, ExactValue(1));
    EXPECT_TRUE(r.is_rational());
}

TEST(Ratio, LegendreDuplication)
{
    FactorList f;
    f.gammas = {{R(1, 3), 1}, {R(5, 6), 1}};
    f.two_exp = R(-1, 3);
    f.pi_half_exp = -1;
    ExactValue lhs = normalize(f);
    ExactValue r = ratio(lhs, ExactValue::gamma(R(2, 3)));
    EXPECT_EQ(r, ExactValue(1));
    // the same value numerically
    auto num = numeric_eval(lhs / ExactValue::gamma(R(2, 3)), 30);
    EXPECT_EQ(num.decimal, "1.00000000000000000000000000000");
}

TEST(Ratio, DistinctBuildsOfSameValue)
{
    ExactValue a = ExactValue(R(3, 2)) * ExactValue::pi_half(2);
    ExactValue b = ExactValue::gamma(R(1, 2), 2) * ExactValue::gamma(R(4)) / ExactValue(4);
    EXPECT_EQ(ratio(a, b), ExactValue(1));
}

TEST(Ratio, GammaMeasureNeverIncreases)
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> den(2, 12), exp(-2, 2);
    for (int trial = 0; trial < 60; ++trial) {
        FactorList f;
        for (int k = 0; k < 3; ++k) {
            long d = den(rng);
            std::uniform_int_distribution<long> num(1, d - 1);
            f.gammas.emplace_back(R(num(rng), d), exp(rng));
        }
        ExactValue x = normalize(f);
        ExactValue r = ratio(x, ExactValue(1));
        long before = 0, after = 0;
        for (const auto& [a, e] : x.gammas()) before += std::labs(e);
        for (const auto& [a, e] : r.gammas()) after += std::labs(e);
        EXPECT_LE(after, before);
        // value unchanged
        EXPECT_TRUE(chpf::test::close(chpf::test::oracle_value(r), chpf::test::oracle_value(x), Real("1e-60")));
    }
}

TEST(Numeric, SqrtPi)
{
    auto r = numeric_eval(ExactValue::sqrt_pi(), 12);
    // round-half-even of 1.7724538509055...
    EXPECT_EQ(r.decimal, "1.77245385091");
    EXPECT_EQ(r.error_bound, "1e-11");
    EXPECT_TRUE(abs(r.value - sqrt(boost::math::constants::pi<Real>())) < r.bound);
}

TEST(Numeric, GammaThird)
{
    auto r = numeric_eval(ExactValue::gamma(R(1, 3)), 10);
    EXPECT_EQ(r.decimal, "2.678938535");
    EXPECT_EQ(r.error_bound, "1e-9");
}

TEST(Numeric, Zero)
{
    auto r = numeric_eval(ExactValue(0), 20);
    EXPECT_EQ(r.decimal, "0");
    EXPECT_EQ(r.value, Real(0));
}

TEST(Numeric, AgreesWithMpfrGamma)
{
    for (auto arg : {R(1, 7), R(2, 3), R(5, 6), R(-7, 3), R(41, 5), R(1, 100)}) {
        ExactValue g = ExactValue::gamma(arg);
        auto r = numeric_eval(g, 45);
        Real oracle = chpf::test::mpfr_gamma(arg);
        EXPECT_TRUE(abs(r.value - oracle) <= r.bound) << arg.str();
    }
}

TEST(Numeric, KappaHandling)
{
    ExactValue v = ExactValue::kappa("sw") * ExactValue(R(3, 2));
    EXPECT_THROW(numeric_eval(v, 10), Error);
    auto r = numeric_eval(v, 10, {{"sw", "2"}});
    EXPECT_EQ(r.decimal, "3.000000000");
}

TEST(Numeric, PrecisionLimits)
{
    EXPECT_THROW(numeric_eval(ExactValue::sqrt_pi(), 51), Error);
    NumericOptions shallow;
    shallow.series_depth = 2;
    shallow.max_shift = 10;
    try {
        numeric_eval(ExactValue::gamma(R(1, 3)), 40, {}, shallow);
        FAIL() << "expected precision-unreachable";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PrecisionUnreachable);
    }
}
