#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypsum/hyper.hpp"
#include "hypsum/parametric.hpp"
#include "hypsum/record.hpp"

namespace hypsum {

namespace detail {

inline void require_nonzero_value(const Rational& value, const char* what) {
    if (value == 0) throw DegenerateParameter(std::string("vanishing denominator ") + what);
}

inline Json shift_inputs(const std::vector<Rational>& f, const std::vector<unsigned>& m) {
    Json out = Json::object();
    out["f"] = json_rational_list(f);
    out["m"] = m;
    return out;
}

}  // namespace detail

/// 3F2(-n, a, b; c, -n-sigma; 1) = (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n),
/// sigma = c-a-b-1.
inline VerificationRecord verify_saalschutz_classical(const Rational& a, const Rational& b,
                                                      const Rational& c, unsigned n) {
    const Rational sigma = c - a - b - 1;
    const Rational nn(static_cast<long long>(n));
    const Rational lhs = eval_terminating_pfq({{-nn, a, b}, {c, -nn - sigma}}, n);

    const Rational den = pochhammer(c, n) * pochhammer(c - a - b, n);
    detail::require_nonzero_value(den, "(c)_n (c-a-b)_n");
    const Rational rhs = pochhammer(c - a, n) * pochhammer(c - b, n) / den;

    Json inputs{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"n", n}};
    return make_scalar_record("classical-saalschutz", std::move(inputs), lhs, rhs);
}

/// 3F2(-n, a, b; c, p-n-sigma; 1)
///   = [(c-a-p)_n (c-b-p)_n / ((c)_n (c-a-b-p)_n)]
///     * 3F2(-p, -n, c-a-b-p; c-a-p, c-b-p; 1)   for p = 0, 1, 2, ...
inline VerificationRecord verify_saalschutz_contiguous(const Rational& a, const Rational& b,
                                                       const Rational& c, unsigned n, unsigned p) {
    const Rational sigma = c - a - b - 1;
    const Rational nn(static_cast<long long>(n));
    const Rational pp(static_cast<long long>(p));
    const Rational lhs = eval_terminating_pfq({{-nn, a, b}, {c, pp - nn - sigma}}, n);

    const Rational den = pochhammer(c, n) * pochhammer(c - a - b - pp, n);
    detail::require_nonzero_value(den, "(c)_n (c-a-b-p)_n");
    const Rational ratio = pochhammer(c - a - pp, n) * pochhammer(c - b - pp, n) / den;
    const Rational tail = eval_terminating_pfq(
        {{-pp, -nn, c - a - b - pp}, {c - a - pp, c - b - pp}}, std::min(p, n));
    const Rational rhs = ratio * tail;

    Json inputs{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"n", n}, {"p", p}};
    return make_scalar_record("contiguous-saalschutz", std::move(inputs), lhs, rhs);
}

/// The extended summation: the terminating {r+3}F{r+2}(1) with r
/// integer-shifted pairs equals
/// (c-a-m)_n (c-b-m)_n / ((c)_n (c-a-b-m)_n) * H_n with H_n = Q-hat_m(-n).
inline VerificationRecord verify_extended_saalschutz(const ParametricContext& ctx, unsigned n) {
    const unsigned m = ctx.total_shift();
    const Rational nn(static_cast<long long>(n));
    const Rational mm(static_cast<long long>(m));
    const Rational lhs = eval_shifted_pfq(
        {{-nn, ctx.a, ctx.b}, {ctx.c, mm - nn - ctx.sigma()}}, ctx.shift_pairs(), n);

    const Rational den = pochhammer(ctx.c, n) * pochhammer(ctx.c - ctx.a - ctx.b - mm, n);
    detail::require_nonzero_value(den, "(c)_n (c-a-b-m)_n");
    const Rational rhs = pochhammer(ctx.c - ctx.a - mm, n) * pochhammer(ctx.c - ctx.b - mm, n) / den *
                         h_n(ctx, n);

    Json inputs{{"a", to_string(ctx.a)}, {"b", to_string(ctx.b)}, {"c", to_string(ctx.c)}};
    inputs.update(detail::shift_inputs(ctx.f, ctx.shifts));
    inputs["n"] = n;
    return make_scalar_record("extended-saalschutz", std::move(inputs), lhs, rhs);
}

/// The extended Vandermonde-Chu summation: the terminating {r+2}F{r+1}(1)
/// with r integer-shifted pairs equals (c-a-m)_n / (c)_n * Q_m(-n), under
/// the provisos (c-a-m)_m != 0 and a != f_j.
inline VerificationRecord verify_extended_vandermonde_chu(const Rational& a, const Rational& c,
                                                          const std::vector<Rational>& f,
                                                          const std::vector<unsigned>& m_list,
                                                          unsigned n) {
    unsigned m = 0;
    std::vector<ParameterShift> pairs;
    for (std::size_t j = 0; j < f.size(); ++j) {
        if (a == f[j]) throw ProvisoViolated("extended Vandermonde-Chu requires a != f_j");
        pairs.push_back({f[j], m_list.at(j)});
        m += m_list[j];
    }
    const Rational lambda = c - a - Rational(m);
    if (!pochhammer_nonzero(lambda, m))
        throw ProvisoViolated("extended Vandermonde-Chu requires (c-a-m)_m != 0");

    const Rational nn(static_cast<long long>(n));
    const Rational lhs = eval_shifted_pfq({{-nn, a}, {c}}, pairs, n);

    const Rational den = pochhammer(c, n);
    detail::require_nonzero_value(den, "(c)_n");
    const ParametricPolynomial q = q_vc_polynomial(a, lambda, f, m_list);
    const Rational rhs = pochhammer(lambda, n) / den * q.poly(-nn);

    Json inputs{{"a", to_string(a)}, {"c", to_string(c)}};
    inputs.update(detail::shift_inputs(f, m_list));
    inputs["n"] = n;
    return make_scalar_record("extended-vandermonde-chu", std::move(inputs), lhs, rhs,
                              q.degree_drop ? "degree drop: leading coefficient vanished" : "");
}

/// The transformation pair for n arbitrary (p = 0 or 1):
/// (1-x^2)^{-1/2} {r+2}F{r+1}[-n+p/2, n+p/2, (f+m); p+1/2+m, (f); x^2]
///   = {m+2}F{m+1}[1/2+p/2-n, 1/2+p/2+n, (eta+1); p+1/2+m, (eta); x^2],
/// verified coefficient-wise to the given order with the (eta) side realized
/// through Q-hat_m(-j).
inline VerificationRecord verify_ramanujan_extension(int p, const Rational& n,
                                                     const std::vector<Rational>& f,
                                                     const std::vector<unsigned>& m_list,
                                                     std::size_t order) {
    if (p != 0 && p != 1) throw Error("the transformation is stated for p = 0 or 1 only");
    unsigned m = 0;
    for (unsigned m_j : m_list) m += m_j;
    const Rational half(1, 2);
    const Rational p_half = Rational(p) / 2;
    const ParametricContext ctx(n + p_half, -n + p_half, Rational(p) + half + Rational(m), f,
                                m_list);

    std::vector<ParameterShift> pairs = ctx.shift_pairs();
    const TruncatedSeries lhs =
        binomial_series(half, 2, order) *
        pfq_truncated_series({{p_half - n, p_half + n}, {ctx.c}}, pairs, 2, order);

    const ParametricPolynomial qhat = q_hat_polynomial(ctx);
    TruncatedSeries rhs(order);
    const Rational upper1 = half + p_half - n;
    const Rational upper2 = half + p_half + n;
    Rational term = 1;  // (1/2+p/2-n)_j (1/2+p/2+n)_j / ((p+1/2+m)_j j!)
    for (std::size_t j = 0; 2 * j <= order; ++j) {
        rhs[2 * j] = term * qhat.poly(Rational(-static_cast<long long>(j)));
        term *= (upper1 + Rational(j)) * (upper2 + Rational(j));
        term /= (ctx.c + Rational(j)) * Rational(j + 1);
    }

    Json inputs{{"p", p}, {"n", to_string(n)}};
    inputs.update(detail::shift_inputs(f, m_list));
    inputs["order"] = order;
    return make_series_record("ramanujan-extension", std::move(inputs), lhs, rhs,
                              qhat.degree_drop ? "degree drop: leading coefficient vanished" : "");
}

/// The closed form of the 4F3(-n, a, b, 1+a/2; 1+a-b, 1+2b-n, a/2; 1),
/// equal to (a-2b)_n (-b)_n / ((1+a-b)_n (-2b)_n) when a != 2b.
inline VerificationRecord verify_known_4f3_specialization(const Rational& a, const Rational& b,
                                                          unsigned n) {
    if (a == 2 * b) throw DegenerateParameter("the closed form requires a != 2b");
    const Rational nn(static_cast<long long>(n));
    const Rational half_a = a / 2;
    const Rational lhs = eval_terminating_pfq(
        {{-nn, a, b, 1 + half_a}, {1 + a - b, 1 + 2 * b - nn, half_a}}, n);

    const Rational den = pochhammer(1 + a - b, n) * pochhammer(-2 * b, n);
    detail::require_nonzero_value(den, "(1+a-b)_n (-2b)_n");
    const Rational rhs = pochhammer(a - 2 * b, n) * pochhammer(-b, n) / den;

    Json inputs{{"a", to_string(a)}, {"b", to_string(b)}, {"n", n}};
    return make_scalar_record("known-4f3", std::move(inputs), lhs, rhs);
}

}  // namespace hypsum
