#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/hyper.hpp"
#include "hypsum/polynomial.hpp"
#include "hypsum/rational.hpp"

namespace hypsum {

/// Parameters of the extended summation setting: scalars a, b, c plus r
/// integer-shifted pairs (f_j + m_j, f_j). Validated on construction:
/// (c-a-m)_k and (c-b-m)_k must be nonzero for 0 <= k <= m, and
/// Lambda = prod_j (f_j)_{m_j} must be nonzero.
struct ParametricContext {
    Rational a, b, c;
    std::vector<Rational> f;
    std::vector<unsigned> shifts;

    ParametricContext(Rational a_, Rational b_, Rational c_, std::vector<Rational> f_,
                      std::vector<unsigned> shifts_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), f(std::move(f_)),
          shifts(std::move(shifts_)) {
        if (f.size() != shifts.size()) throw Error("parametric context: f and m lists differ in length");
        for (unsigned m_j : shifts)
            if (m_j == 0) throw Error("parametric context: shifts must be positive integers");
        const unsigned m = total_shift();
        detail::require_nonzero_within(c - a - Rational(m), m, "c-a-m");
        detail::require_nonzero_within(c - b - Rational(m), m, "c-b-m");
        for (std::size_t j = 0; j < f.size(); ++j)
            if (!pochhammer_nonzero(f[j], shifts[j]))
                throw DegenerateParameter("f", to_string(f[j]), shifts[j]);
    }

    unsigned total_shift() const {
        return std::accumulate(shifts.begin(), shifts.end(), 0u);
    }

    Rational sigma() const { return c - a - b - 1; }

    std::vector<ParameterShift> shift_pairs() const {
        std::vector<ParameterShift> out;
        out.reserve(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) out.push_back({f[j], shifts[j]});
        return out;
    }
};

/// C_{k,r} = (1/Lambda) sum_{j=k}^{m} sigma_j S(j,k) with S the Stirling
/// numbers of the second kind and sigma_j the coefficients of the
/// generating product. Always C_0 = 1 and C_m = 1/Lambda.
inline std::vector<Rational> coefficients_C(const std::vector<Rational>& f_list,
                                            const std::vector<unsigned>& m_list) {
    Rational lambda_product = 1;
    for (std::size_t j = 0; j < f_list.size(); ++j) {
        if (!pochhammer_nonzero(f_list[j], m_list[j]))
            throw DegenerateParameter("f", to_string(f_list[j]), m_list[j]);
        lambda_product *= pochhammer(f_list[j], m_list[j]);
    }
    const std::vector<Rational> sigma = sigma_coefficients(f_list, m_list);
    const std::size_t m = sigma.size() - 1;
    std::vector<Rational> out(m + 1, Rational(0));
    for (std::size_t k = 0; k <= m; ++k) {
        Rational sum = 0;
        for (std::size_t j = k; j <= m; ++j) sum += sigma[j] * Rational(stirling2(j, k));
        out[k] = sum / lambda_product;
    }
    return out;
}

/// Independent route to the same coefficients:
/// C_{k,r} = ((-1)^k / k!) * {r+1}F{r}(-k, (f+m); (f); 1).
/// Exists solely as an oracle for coefficients_C.
inline std::vector<Rational> coefficients_C_via_remark1(const std::vector<Rational>& f_list,
                                                        const std::vector<unsigned>& m_list) {
    std::vector<ParameterShift> shifts;
    unsigned m = 0;
    for (std::size_t j = 0; j < f_list.size(); ++j) {
        if (!pochhammer_nonzero(f_list[j], m_list[j]))
            throw DegenerateParameter("f", to_string(f_list[j]), m_list[j]);
        shifts.push_back({f_list[j], m_list[j]});
        m += m_list[j];
    }
    std::vector<Rational> out;
    out.reserve(m + 1);
    Rational sign_over_factorial = 1;  // (-1)^k / k!
    for (unsigned k = 0; k <= m; ++k) {
        const HyperParams base{{Rational(-static_cast<long long>(k))}, {}};
        out.push_back(sign_over_factorial * eval_shifted_pfq(base, shifts, k));
        sign_over_factorial /= -Rational(k + 1);
    }
    return out;
}

/// G_{m,k}(t): the terminating 3F2 with upper parameters
/// (-m+k, t+k, c-a-b-m) and lower (c-a-m+k, c-b-m+k) at unit argument,
/// expanded with (t+k)_i kept symbolic. A polynomial in t of degree m-k.
inline RationalPolynomial G_polynomial(const ParametricContext& ctx, unsigned k) {
    const unsigned m = ctx.total_shift();
    if (k > m) throw Error("G polynomial index exceeds total shift");
    const unsigned terms = m - k;
    const Rational lower1 = ctx.c - ctx.a - Rational(m) + Rational(k);
    const Rational lower2 = ctx.c - ctx.b - Rational(m) + Rational(k);
    detail::require_nonzero_within(lower1, terms, "c-a-m+k");
    detail::require_nonzero_within(lower2, terms, "c-b-m+k");
    const Rational joint = ctx.c - ctx.a - ctx.b - Rational(m);

    RationalPolynomial sum;
    Rational scalar = 1;  // (-m+k)_i (c-a-b-m)_i / ((c-a-m+k)_i (c-b-m+k)_i i!)
    RationalPolynomial rising = RationalPolynomial::constant(1);  // (t+k)_i
    for (unsigned i = 0; i <= terms; ++i) {
        sum = sum + rising.scaled(scalar);
        if (i == terms) break;
        scalar *= (Rational(i) - Rational(terms)) * (joint + Rational(i));
        scalar /= (lower1 + Rational(i)) * (lower2 + Rational(i)) * Rational(i + 1);
        rising = rising * RationalPolynomial::from_coefficients({Rational(k) + Rational(i), Rational(1)});
    }
    return sum;
}

/// A parametric polynomial together with the degree-drop flag: the flag is
/// set when the leading coefficient vanished (a zero escaped to infinity)
/// and the polynomial's degree fell below the nominal m.
struct ParametricPolynomial {
    RationalPolynomial poly;
    bool degree_drop = false;
};

/// Assembles the Saalschutz-side polynomial from explicitly supplied
/// C coefficients. This is the raw assembly hook; the context route below
/// additionally checks the normalization.
inline ParametricPolynomial q_hat_polynomial(const ParametricContext& ctx,
                                             const std::vector<Rational>& c_coefficients) {
    const unsigned m = ctx.total_shift();
    if (c_coefficients.size() != m + 1) throw Error("expected m+1 C coefficients");
    const Rational ca = ctx.c - ctx.a - Rational(m);
    const Rational cb = ctx.c - ctx.b - Rational(m);

    RationalPolynomial sum;
    Rational weight = 1;  // (-1)^k (a)_k (b)_k / ((c-a-m)_k (c-b-m)_k)
    RationalPolynomial rising = RationalPolynomial::constant(1);  // (t)_k
    for (unsigned k = 0; k <= m; ++k) {
        sum = sum + (rising * G_polynomial(ctx, k)).scaled(weight * c_coefficients[k]);
        if (k == m) break;
        weight *= -(ctx.a + Rational(k)) * (ctx.b + Rational(k));
        weight /= (ca + Rational(k)) * (cb + Rational(k));
        rising = rising * RationalPolynomial::from_coefficients({Rational(k), Rational(1)});
    }
    const bool drop = !sum.degree() || *sum.degree() < m;
    return {sum, drop};
}

/// The associated parametric polynomial Q-hat_m(t) of degree at most m,
/// normalized so that Q-hat_m(0) = 1. Degree below m is a legal, flagged
/// state; zeros are never extracted.
inline ParametricPolynomial q_hat_polynomial(const ParametricContext& ctx) {
    ParametricPolynomial out = q_hat_polynomial(ctx, coefficients_C(ctx.f, ctx.shifts));
    if (out.poly.coefficient(0) != 1) throw Error("parametric polynomial lost its normalization");
    return out;
}

/// H_n = Q-hat_m(-n), computed both by polynomial evaluation and by the
/// truncated sum over k <= min(m, n); the two routes must agree exactly.
inline Rational h_n(const ParametricContext& ctx, unsigned n) {
    const Rational minus_n(-static_cast<long long>(n));
    const Rational by_evaluation = q_hat_polynomial(ctx).poly(minus_n);

    const unsigned m = ctx.total_shift();
    const std::vector<Rational> c_coeffs = coefficients_C(ctx.f, ctx.shifts);
    const Rational ca = ctx.c - ctx.a - Rational(m);
    const Rational cb = ctx.c - ctx.b - Rational(m);
    Rational by_sum = 0;
    Rational weight = 1;  // (-1)^k (a)_k (b)_k (-n)_k / ((c-a-m)_k (c-b-m)_k)
    const unsigned top = std::min(m, n);
    for (unsigned k = 0; k <= top; ++k) {
        by_sum += weight * c_coeffs[k] * G_polynomial(ctx, k)(minus_n);
        if (k == top) break;
        weight *= -(ctx.a + Rational(k)) * (ctx.b + Rational(k)) * (minus_n + Rational(k));
        weight /= (ca + Rational(k)) * (cb + Rational(k));
    }
    if (by_sum != by_evaluation) throw Error("H_n routes disagree; internal defect");
    return by_evaluation;
}

/// The Vandermonde-Chu-side polynomial
/// Q_m(t) = (1/(lambda)_m) sum_k (weight)_k C_{k,r} (t)_k (lambda-t)_{m-k},
/// normalized so that Q_m(0) = 1. Requires (lambda)_m != 0.
inline ParametricPolynomial q_vc_polynomial(const Rational& weight, const Rational& lambda,
                                            const std::vector<Rational>& f_list,
                                            const std::vector<unsigned>& m_list) {
    const std::vector<Rational> c_coeffs = coefficients_C(f_list, m_list);
    const unsigned m = static_cast<unsigned>(c_coeffs.size() - 1);
    if (!pochhammer_nonzero(lambda, m))
        throw DegenerateParameter("lambda", to_string(lambda), m);

    RationalPolynomial sum;
    Rational scalar = 1;  // (weight)_k
    RationalPolynomial rising = RationalPolynomial::constant(1);  // (t)_k
    for (unsigned k = 0; k <= m; ++k) {
        const RationalPolynomial falling =
            rising_factorial_poly(lambda, m - k).with_negated_variable();  // (lambda - t)_{m-k}
        sum = sum + (rising * falling).scaled(scalar * c_coeffs[k]);
        if (k == m) break;
        scalar *= weight + Rational(k);
        rising = rising * RationalPolynomial::from_coefficients({Rational(k), Rational(1)});
    }
    RationalPolynomial normalized = sum.scaled(Rational(1) / pochhammer(lambda, m));
    if (normalized.coefficient(0) != 1) throw Error("parametric polynomial lost its normalization");
    const bool drop = !normalized.degree() || *normalized.degree() < m;
    return {normalized, drop};
}

}  // namespace hypsum
