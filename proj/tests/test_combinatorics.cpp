#include "hypsum/combinatorics.hpp"

#include <gtest/gtest.h>

#include "hypsum/fuzz.hpp"

using namespace hypsum;

TEST(Pochhammer, EmptyProductIsOne) {
    EXPECT_EQ(pochhammer(make_rational(3), 0), 1);
}

TEST(Pochhammer, HalfIntegerValue) {
    // (1/2)(3/2)(5/2) = 15/8
    EXPECT_EQ(pochhammer(make_rational(1, 2), 3), make_rational(15, 8));
}

TEST(Pochhammer, VanishesOnNonpositiveIntegerHit) {
    // (-2)_4 contains the factor (-2+2) = 0
    EXPECT_EQ(pochhammer(make_rational(-2), 4), 0);
    EXPECT_NE(pochhammer(make_rational(-2), 2), 0);
}

TEST(Pochhammer, ProductOverList) {
    EXPECT_EQ(pochhammer_product({}, 5), 1);
    EXPECT_EQ(pochhammer_product({make_rational(1), make_rational(2)}, 2), 12);
    // ((1/2)(3/2)) * ((-1/2)(1/2)) = (3/4)(-1/4) = -3/16
    EXPECT_EQ(pochhammer_product({make_rational(1, 2), make_rational(-1, 2)}, 2),
              make_rational(-3, 16));
}

TEST(Pochhammer, SplitIdentity) {
    // (a)_{n+k} = (a)_k (a+k)_n
    SplitMix64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
        const Rational a = rng.rational();
        const auto n = static_cast<unsigned>(rng.uniform(0, 20));
        const auto k = static_cast<unsigned>(rng.uniform(0, 20));
        EXPECT_EQ(pochhammer(a, n + k), pochhammer(a, k) * pochhammer(a + Rational(k), n));
    }
}

TEST(Pochhammer, ReversalIdentities) {
    // (1/2)_{j-k} = (-1)^k (1/2)_j / (1/2 - j)_k   and
    // 1/(j-k)! = (-1)^k (-j)_k / j!   for 0 <= k <= j <= 12.
    const Rational half = make_rational(1, 2);
    for (unsigned j = 0; j <= 12; ++j) {
        for (unsigned k = 0; k <= j; ++k) {
            const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
            EXPECT_EQ(pochhammer(half, j - k),
                      sign * pochhammer(half, j) / pochhammer(half - Rational(j), k));
            EXPECT_EQ(Rational(1) / Rational(factorial(j - k)),
                      sign * pochhammer(Rational(-static_cast<long long>(j)), k) /
                          Rational(factorial(j)));
        }
    }
}

TEST(PochhammerNonzero, MatchesDirectComputation) {
    SplitMix64 rng(102);
    for (int trial = 0; trial < 200; ++trial) {
        const Rational a = rng.rational(6, 2);
        const auto n = static_cast<unsigned>(rng.uniform(0, 8));
        EXPECT_EQ(pochhammer_nonzero(a, n), pochhammer(a, n) != 0)
            << to_string(a) << " n=" << n;
    }
}

namespace {

// Independent triangle built from scratch, no memoization.
Integer stirling2_oracle(unsigned j, unsigned k) {
    std::vector<std::vector<Integer>> s(j + 1);
    for (unsigned jj = 0; jj <= j; ++jj) {
        s[jj].assign(jj + 1, 0);
        for (unsigned kk = 0; kk <= jj; ++kk) {
            if (jj == 0)
                s[jj][kk] = 1;
            else if (kk == 0)
                s[jj][kk] = 0;
            else
                s[jj][kk] = Integer(kk) * (kk < jj ? s[jj - 1][kk] : 0) + s[jj - 1][kk - 1];
        }
    }
    return k <= j ? s[j][k] : 0;
}

// Bell numbers by the Bell triangle, independent of stirling2.
Integer bell_oracle(unsigned n) {
    std::vector<Integer> row{1};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<Integer> next;
        next.reserve(i + 1);
        next.push_back(row.back());
        for (const Integer& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace

TEST(Stirling2, BaseCasesAndKnownValues) {
    EXPECT_EQ(stirling2(0, 0), 1);
    EXPECT_EQ(stirling2(3, 0), 0);
    EXPECT_EQ(stirling2(3, 5), 0);
    EXPECT_EQ(stirling2(4, 2), 7);
}

TEST(Stirling2, MatchesIndependentTriangle) {
    for (unsigned j = 0; j <= 12; ++j)
        for (unsigned k = 0; k <= j + 2; ++k) EXPECT_EQ(stirling2(j, k), stirling2_oracle(j, k));
}

TEST(Stirling2, RowSumsAreBellNumbers) {
    for (unsigned j = 0; j <= 12; ++j) {
        Integer sum = 0;
        for (unsigned k = 0; k <= j; ++k) sum += stirling2(j, k);
        EXPECT_EQ(sum, bell_oracle(j)) << "row " << j;
    }
}

TEST(ShiftedPochhammerRatio, KnownValues) {
    EXPECT_EQ(shifted_pochhammer_ratio(make_rational(2), 1, 3), make_rational(5, 2));
    EXPECT_EQ(shifted_pochhammer_ratio(make_rational(1, 3), 2, 0), 1);
    // (7/2)(9/2) / ((3/2)(5/2)) = 21/5
    EXPECT_EQ(shifted_pochhammer_ratio(make_rational(3, 2), 2, 2), make_rational(21, 5));
}

TEST(ShiftedPochhammerRatio, DegenerateDenominatorThrows) {
    EXPECT_THROW(shifted_pochhammer_ratio(make_rational(-1), 2, 3), DegenerateParameter);
    EXPECT_THROW(shifted_pochhammer_ratio(make_rational(-2), 1, 3), DegenerateParameter);
}

TEST(ShiftedPochhammerRatio, CrossMultipliedEquality) {
    // ratio * (f)_s = (f+m)_s, both sides by direct multiplication.
    SplitMix64 rng(103);
    int checked = 0;
    while (checked < 200) {
        const Rational f = rng.rational();
        const auto m = static_cast<unsigned>(rng.uniform(1, 4));
        const auto s = static_cast<unsigned>(rng.uniform(0, 10));
        if (!pochhammer_nonzero(f, m) || !pochhammer_nonzero(f, s)) continue;
        ++checked;
        EXPECT_EQ(shifted_pochhammer_ratio(f, m, s) * pochhammer(f, s),
                  pochhammer(f + Rational(m), s));
    }
}
