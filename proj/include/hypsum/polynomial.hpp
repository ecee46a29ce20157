#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypsum/combinatorics.hpp"
#include "hypsum/rational.hpp"

namespace hypsum {

/// Dense univariate polynomial over Rational in a formal variable t.
/// Canonical form: no trailing zero coefficients; the zero polynomial is the
/// empty coefficient list and its degree is a distinguished "none", never -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;

    static RationalPolynomial constant(Rational value) {
        RationalPolynomial p;
        if (value != 0) p.coeffs_.push_back(std::move(value));
        return p;
    }

    static RationalPolynomial variable() { return from_coefficients({Rational(0), Rational(1)}); }

    static RationalPolynomial from_coefficients(std::vector<Rational> coeffs) {
        RationalPolynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }

    std::optional<std::size_t> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return coeffs_.size() - 1;
    }

    const Rational& coefficient(std::size_t k) const {
        static const Rational zero(0);
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const std::vector<Rational>& coefficients() const { return coeffs_; }

    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
        std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
        return from_coefficients(std::move(out));
    }

    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a + b.scaled(Rational(-1));
    }

    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return from_coefficients(std::move(out));
    }

    RationalPolynomial scaled(const Rational& s) const {
        if (s == 0) return {};
        std::vector<Rational> out = coeffs_;
        for (Rational& c : out) c *= s;
        return from_coefficients(std::move(out));
    }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& x) const {
        Rational out = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) out = out * x + coeffs_[i];
        return out;
    }

    /// p(-t): flips the sign of odd-degree coefficients.
    RationalPolynomial with_negated_variable() const {
        std::vector<Rational> out = coeffs_;
        for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
        return from_coefficients(std::move(out));
    }

    bool operator==(const RationalPolynomial&) const = default;

    /// "c0 + c1*t + c2*t^2 + ..." with rationals in p/q form; "0" for the
    /// zero polynomial. Every coefficient up to the degree is printed.
    std::string to_string(std::string_view var = "t") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i > 0) out += " + ";
            out += hypsum::to_string(coeffs_[i]);
            if (i == 1)
                out += "*" + std::string(var);
            else if (i > 1)
                out += "*" + std::string(var) + "^" + std::to_string(i);
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

/// The rising factorial (shift + x)_m = prod_{i=0}^{m-1} (shift + x + i)
/// as a degree-m polynomial in x.
inline RationalPolynomial rising_factorial_poly(const Rational& shift, unsigned m) {
    RationalPolynomial out = RationalPolynomial::constant(1);
    for (unsigned i = 0; i < m; ++i)
        out = out * RationalPolynomial::from_coefficients({shift + Rational(i), Rational(1)});
    return out;
}

/// Coefficients (sigma_0, ..., sigma_m), m = sum m_j, of the generating
/// product prod_j (f_j + x)_{m_j}. The product is monic, so sigma_m = 1;
/// empty lists give [1].
inline std::vector<Rational> sigma_coefficients(const std::vector<Rational>& f_list,
                                                const std::vector<unsigned>& m_list) {
    if (f_list.size() != m_list.size())
        throw Error("sigma_coefficients: f and m lists differ in length");
    RationalPolynomial product = RationalPolynomial::constant(1);
    for (std::size_t j = 0; j < f_list.size(); ++j)
        product = product * rising_factorial_poly(f_list[j], m_list[j]);
    return product.coefficients();
}

}  // namespace hypsum
