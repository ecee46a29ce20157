#include "hypsum/series.hpp"

#include <gtest/gtest.h>

#include "hypsum/fuzz.hpp"

using namespace hypsum;

namespace {

TruncatedSeries series(std::initializer_list<long long> coeffs) {
    std::vector<Rational> c;
    for (long long v : coeffs) c.push_back(make_rational(v));
    return TruncatedSeries::from_coefficients(std::move(c));
}

TruncatedSeries random_series(SplitMix64& rng, std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) out[i] = rng.rational(6, 4);
    return out;
}

// Power-series expansion of num(x)/den(x) by long division, den[0] != 0.
TruncatedSeries divide_series(const std::vector<Rational>& num, const std::vector<Rational>& den,
                              std::size_t order) {
    TruncatedSeries out(order);
    for (std::size_t k = 0; k <= order; ++k) {
        Rational acc = k < num.size() ? num[k] : Rational(0);
        for (std::size_t i = 1; i <= k && i < den.size(); ++i) acc -= den[i] * out[k - i];
        out[k] = acc / den[0];
    }
    return out;
}

// Coefficients of (1-x)^K for K >= 0.
std::vector<Rational> one_minus_x_power(unsigned K) {
    std::vector<Rational> out{Rational(1)};
    for (unsigned i = 0; i < K; ++i) {
        std::vector<Rational> next(out.size() + 1, Rational(0));
        for (std::size_t j = 0; j < out.size(); ++j) {
            next[j] += out[j];
            next[j + 1] -= out[j];
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

TEST(TruncatedSeries, LengthIsAlwaysOrderPlusOne) {
    const TruncatedSeries s(4);
    EXPECT_EQ(s.order(), 4u);
    EXPECT_EQ(s.coefficients().size(), 5u);
    EXPECT_THROW(TruncatedSeries::from_coefficients({}), Error);
}

TEST(TruncatedSeries, UnequalOrderIsAnError) {
    const TruncatedSeries a(3), b(4);
    EXPECT_THROW(a + b, OrderMismatch);
    EXPECT_THROW(a * b, OrderMismatch);
    EXPECT_THROW((void)a.first_mismatch(b), OrderMismatch);
}

TEST(TruncatedSeries, CauchyProduct) {
    EXPECT_EQ(series({1, 1}) * series({1, -1}), series({1, 0}));
    const auto s = series({3, -2, 5});
    auto one = TruncatedSeries(2);
    one[0] = 1;
    EXPECT_EQ(s * one, s);
}

TEST(TruncatedSeries, MulIsCommutativeAndAssociative) {
    SplitMix64 rng(301);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_series(rng, 8);
        const auto b = random_series(rng, 8);
        const auto c = random_series(rng, 8);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(BinomialSeries, KnownExpansions) {
    EXPECT_EQ(binomial_series(Rational(0), 1, 3), series({1, 0, 0, 0}));
    EXPECT_EQ(binomial_series(Rational(1), 1, 3), series({1, 1, 1, 1}));  // geometric
    const auto half = binomial_series(make_rational(1, 2), 2, 4);
    EXPECT_EQ(half.coefficients(),
              (std::vector<Rational>{Rational(1), Rational(0), make_rational(1, 2), Rational(0),
                                     make_rational(3, 8)}));
}

TEST(BinomialSeries, InversePairMultipliesToOne) {
    const auto plus = binomial_series(make_rational(1, 2), 2, 12);
    const auto minus = binomial_series(make_rational(-1, 2), 2, 12);
    auto one = TruncatedSeries(12);
    one[0] = 1;
    EXPECT_EQ(plus * minus, one);
}

TEST(ComposeMobius, ConstantPassesThrough) {
    auto outer = TruncatedSeries(5);
    outer[0] = make_rational(7, 2);
    const auto composed = compose_mobius(outer, 5);
    EXPECT_EQ(composed[0], make_rational(7, 2));
    for (std::size_t i = 1; i <= 5; ++i) EXPECT_EQ(composed[i], 0);
}

TEST(ComposeMobius, VariableItself) {
    // u = x/(x-1) = -x(1 + x + x^2 + ...)
    auto outer = TruncatedSeries(3);
    outer[1] = 1;
    EXPECT_EQ(compose_mobius(outer, 3), series({0, -1, -1, -1}));
}

TEST(ComposeMobius, GeometricOuterCollapsesToOneMinusX) {
    // 1/(1-u) with u = x/(x-1) equals exactly 1-x.
    const auto outer = binomial_series(Rational(1), 1, 8);
    EXPECT_EQ(compose_mobius(outer, 8), series({1, -1, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(ComposeMobius, MatchesLongDivisionForNegativeIntegerExponents) {
    // outer (1-u)^K composed with u = x/(x-1) equals (1-x)^{-K}; oracle is
    // long division of 1 by (1-x)^K.
    for (unsigned K : {1u, 2u, 3u}) {
        const std::size_t order = 10;
        const auto composed =
            compose_mobius(binomial_series(Rational(-static_cast<long long>(K)), 1, order), order);
        const auto oracle = divide_series({Rational(1)}, one_minus_x_power(K), order);
        EXPECT_EQ(composed, oracle) << "K=" << K;
        EXPECT_EQ(composed, binomial_series(Rational(K), 1, order)) << "K=" << K;
    }
}

TEST(TruncatedSeries, PolynomialEvaluation) {
    const auto s = series({1, 2, 3});
    EXPECT_EQ(s.eval_polynomial(make_rational(1, 2)), make_rational(11, 4));
}
