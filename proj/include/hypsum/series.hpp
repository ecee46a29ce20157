#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/rational.hpp"

namespace hypsum {

/// Formal power series over Rational truncated at a fixed order N: exactly
/// the coefficients of x^0 ... x^N. Arithmetic between series of unequal
/// order is an error, never silent truncation to the shorter.
class TruncatedSeries {
public:
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, Rational(0)) {}

    static TruncatedSeries from_coefficients(std::vector<Rational> coeffs) {
        if (coeffs.empty()) throw Error("a truncated series needs at least the x^0 coefficient");
        TruncatedSeries s(coeffs.size() - 1);
        s.coeffs_ = std::move(coeffs);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t degree) const { return coeffs_[degree]; }
    Rational& operator[](std::size_t degree) { return coeffs_[degree]; }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) out.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return out;
    }

    /// Cauchy product truncated at the common order.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        TruncatedSeries out(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; i + j <= a.order(); ++j)
                out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    TruncatedSeries scaled(const Rational& s) const {
        TruncatedSeries out(order());
        for (std::size_t i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] * s;
        return out;
    }

    bool operator==(const TruncatedSeries&) const = default;

    /// Smallest degree where the coefficients differ, if any.
    std::optional<std::size_t> first_mismatch(const TruncatedSeries& other) const {
        require_same_order(other);
        for (std::size_t i = 0; i <= order(); ++i)
            if (coeffs_[i] != other.coeffs_[i]) return i;
        return std::nullopt;
    }

    /// Partial-sum evaluation: the truncation treated as a polynomial.
    Rational eval_polynomial(const Rational& x) const {
        Rational out = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) out = out * x + coeffs_[i];
        return out;
    }

private:
    void require_same_order(const TruncatedSeries& other) const {
        if (order() != other.order()) throw OrderMismatch(order(), other.order());
    }

    std::vector<Rational> coeffs_;
};

/// (1 - x^p)^{-alpha}: the coefficient of x^{p*j} is (alpha)_j / j!.
inline TruncatedSeries binomial_series(const Rational& alpha, unsigned argument_power,
                                       std::size_t order) {
    if (argument_power == 0) throw Error("binomial_series: argument power must be positive");
    TruncatedSeries out(order);
    Rational term = 1;
    for (std::size_t j = 0; j * argument_power <= order; ++j) {
        out[j * argument_power] = term;
        term *= (alpha + Rational(j)) / Rational(j + 1);
    }
    return out;
}

/// Re-expands sum_n c_n u^n, u = x/(x-1), as a series in x to the given
/// order, using u^n = (-1)^n x^n (1-x)^{-n}: the coefficient of x^{n+j}
/// gains (-1)^n c_n (n)_j / j!.
inline TruncatedSeries compose_mobius(const TruncatedSeries& outer, std::size_t order) {
    TruncatedSeries out(order);
    const std::size_t top = std::min(order, outer.order());
    for (std::size_t n = 0; n <= top; ++n) {
        if (outer[n] == 0) continue;
        const Rational scale = (n % 2 == 0) ? outer[n] : -outer[n];
        Rational tail = 1;  // (n)_j / j!
        for (std::size_t j = 0; n + j <= order; ++j) {
            out[n + j] += scale * tail;
            tail *= (Rational(n) + Rational(j)) / Rational(j + 1);
        }
    }
    return out;
}

}  // namespace hypsum
