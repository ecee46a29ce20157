#include "hypsum/polynomial.hpp"

#include <gtest/gtest.h>

#include "hypsum/fuzz.hpp"

using namespace hypsum;

namespace {

RationalPolynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.push_back(make_rational(v));
    return RationalPolynomial::from_coefficients(std::move(c));
}

RationalPolynomial random_poly(SplitMix64& rng, unsigned max_degree = 4) {
    std::vector<Rational> c;
    const auto d = static_cast<unsigned>(rng.uniform(0, max_degree));
    for (unsigned i = 0; i <= d; ++i) c.push_back(rng.rational(6, 4));
    return RationalPolynomial::from_coefficients(std::move(c));
}

}  // namespace

TEST(Polynomial, CanonicalDegree) {
    EXPECT_EQ(RationalPolynomial().degree(), std::nullopt);
    EXPECT_TRUE(RationalPolynomial::constant(Rational(0)).is_zero());
    const auto trimmed = RationalPolynomial::from_coefficients(
        {make_rational(1), make_rational(0), make_rational(0)});
    EXPECT_EQ(trimmed.degree(), 0u);
    EXPECT_EQ(poly({0, 1}).degree(), 1u);
}

TEST(Polynomial, RingOperations) {
    const auto t = RationalPolynomial::variable();
    EXPECT_EQ(t * poly({1, 1}), poly({0, 1, 1}));          // t(t+1) = t^2 + t
    EXPECT_EQ(RationalPolynomial() + poly({3, 2}), poly({3, 2}));
    EXPECT_EQ(poly({-1, 2}) * poly({1, 2}), poly({-1, 0, 4}));  // (2t-1)(2t+1) = 4t^2 - 1
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
    SplitMix64 rng(201);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = random_poly(rng);
        const auto q = random_poly(rng);
        const auto r = random_poly(rng);
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p - p, RationalPolynomial());
    }
}

TEST(Polynomial, Evaluation) {
    EXPECT_EQ(poly({1, 0, 1})(make_rational(2)), 5);  // t^2 + 1 at 2
    const auto p = poly({7, -3, 2});
    EXPECT_EQ(p(Rational(0)), 7);  // constant coefficient
    // 1 - t/6 at t = -3 is 3/2
    const auto q = RationalPolynomial::from_coefficients({make_rational(1), make_rational(-1, 6)});
    EXPECT_EQ(q(make_rational(-3)), make_rational(3, 2));
}

TEST(Polynomial, NegatedVariable) {
    // p(t) = 1 + 2t + 3t^2  ->  p(-t) = 1 - 2t + 3t^2
    EXPECT_EQ(poly({1, 2, 3}).with_negated_variable(), poly({1, -2, 3}));
    SplitMix64 rng(202);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_poly(rng);
        const Rational x = rng.rational(6, 4);
        EXPECT_EQ(p.with_negated_variable()(x), p(-x));
    }
}

TEST(Polynomial, ToStringFormat) {
    EXPECT_EQ(RationalPolynomial().to_string(), "0");
    EXPECT_EQ(poly({5}).to_string(), "5");
    const auto p = RationalPolynomial::from_coefficients(
        {make_rational(1), make_rational(-1, 2), make_rational(0), make_rational(2, 3)});
    EXPECT_EQ(p.to_string(), "1 + -1/2*t + 0*t^2 + 2/3*t^3");
}

TEST(RisingFactorialPoly, SmallCases) {
    EXPECT_EQ(rising_factorial_poly(make_rational(1), 0), poly({1}));
    EXPECT_EQ(rising_factorial_poly(make_rational(1), 1), poly({1, 1}));
    // (x + 1/2)(x + 3/2) = x^2 + 2x + 3/4
    EXPECT_EQ(rising_factorial_poly(make_rational(1, 2), 2),
              RationalPolynomial::from_coefficients(
                  {make_rational(3, 4), make_rational(2), make_rational(1)}));
}

TEST(RisingFactorialPoly, TiesToScalarPochhammer) {
    // evaluating (f + x)_m at x = s gives (f+s)_m
    SplitMix64 rng(203);
    for (int trial = 0; trial < 100; ++trial) {
        const Rational f = rng.rational();
        const auto m = static_cast<unsigned>(rng.uniform(0, 5));
        const auto s = static_cast<unsigned>(rng.uniform(0, 10));
        EXPECT_EQ(rising_factorial_poly(f, m)(Rational(s)), pochhammer(f + Rational(s), m));
    }
}

TEST(SigmaCoefficients, SmallCases) {
    EXPECT_EQ(sigma_coefficients({}, {}), std::vector<Rational>{Rational(1)});

    const Rational f = make_rational(7, 3);
    const auto linear = sigma_coefficients({f}, {1});
    ASSERT_EQ(linear.size(), 2u);
    EXPECT_EQ(linear[0], f);
    EXPECT_EQ(linear[1], 1);

    // (x+2)(x+3) = 6 + 5x + x^2
    const auto quad = sigma_coefficients({make_rational(2), make_rational(3)}, {1, 1});
    EXPECT_EQ(quad, (std::vector<Rational>{Rational(6), Rational(5), Rational(1)}));
}

TEST(SigmaCoefficients, ConstantTermIsLambda) {
    SplitMix64 rng(204);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Rational> f;
        std::vector<unsigned> m;
        const auto r = static_cast<unsigned>(rng.uniform(0, 3));
        for (unsigned j = 0; j < r; ++j) {
            f.push_back(rng.rational());
            m.push_back(static_cast<unsigned>(rng.uniform(1, 3)));
        }
        const auto sigma = sigma_coefficients(f, m);
        Rational lambda = 1;
        for (std::size_t j = 0; j < f.size(); ++j) lambda *= pochhammer(f[j], m[j]);
        EXPECT_EQ(sigma.front(), lambda);
        EXPECT_EQ(sigma.back(), 1);  // monic
    }
}
