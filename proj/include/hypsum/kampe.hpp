#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypsum/hyper.hpp"
#include "hypsum/parametric.hpp"
#include "hypsum/record.hpp"
#include "hypsum/series.hpp"

namespace hypsum {

/// Parameter lists of the double hypergeometric series: joint lists
/// (alpha_p), (beta_q); first-variable lists (a_r), (c_t); second-variable
/// lists (b_s), (d_u).
struct KdFParams {
    std::vector<Rational> alpha, beta;
    std::vector<Rational> a, b;
    std::vector<Rational> c, d;
};

namespace detail {

/// table[k] = (x)_k for k <= order.
inline std::vector<Rational> pochhammer_table(const Rational& x, std::size_t order) {
    std::vector<Rational> out(order + 1);
    out[0] = 1;
    for (std::size_t k = 0; k < order; ++k) out[k + 1] = out[k] * (x + Rational(k));
    return out;
}

inline std::vector<std::vector<Rational>> pochhammer_tables(const std::vector<Rational>& xs,
                                                            std::size_t order) {
    std::vector<std::vector<Rational>> out;
    out.reserve(xs.size());
    for (const Rational& x : xs) out.push_back(pochhammer_table(x, order));
    return out;
}

inline void require_tables_nonzero(const std::vector<Rational>& xs, std::size_t order,
                                   const char* name) {
    for (const Rational& x : xs) require_nonzero_within(x, static_cast<unsigned>(order), name);
}

}  // namespace detail

/// The double series evaluated on the diagonal x = y, collected by total
/// degree i+j <= order. Sign flags evaluate F(sign_x * x, sign_y * x)
/// without leaving rational arithmetic.
inline TruncatedSeries eval_kdf_diagonal(const KdFParams& params, std::size_t order,
                                         int sign_x = +1, int sign_y = +1) {
    detail::require_tables_nonzero(params.beta, order, "beta");
    detail::require_tables_nonzero(params.c, order, "c");
    detail::require_tables_nonzero(params.d, order, "d");

    const auto alpha_t = detail::pochhammer_tables(params.alpha, order);
    const auto beta_t = detail::pochhammer_tables(params.beta, order);
    const auto a_t = detail::pochhammer_tables(params.a, order);
    const auto b_t = detail::pochhammer_tables(params.b, order);
    const auto c_t = detail::pochhammer_tables(params.c, order);
    const auto d_t = detail::pochhammer_tables(params.d, order);
    const auto product_at = [](const std::vector<std::vector<Rational>>& tables, std::size_t k) {
        Rational out = 1;
        for (const auto& table : tables) out *= table[k];
        return out;
    };

    TruncatedSeries out(order);
    for (std::size_t i = 0; i <= order; ++i) {
        const Rational first = product_at(a_t, i) / (product_at(c_t, i) * Rational(factorial(static_cast<unsigned>(i))));
        for (std::size_t j = 0; i + j <= order; ++j) {
            Rational term = product_at(alpha_t, i + j) / product_at(beta_t, i + j);
            term *= first;
            term *= product_at(b_t, j) / (product_at(d_t, j) * Rational(factorial(static_cast<unsigned>(j))));
            if (sign_x < 0 && i % 2 == 1) term = -term;
            if (sign_y < 0 && j % 2 == 1) term = -term;
            out[i + j] += term;
        }
    }
    return out;
}

namespace detail {

inline Json kdf_inputs(const KdFParams& params) {
    Json out = Json::object();
    out["alpha"] = json_rational_list(params.alpha);
    out["beta"] = json_rational_list(params.beta);
    out["a"] = json_rational_list(params.a);
    out["b"] = json_rational_list(params.b);
    out["c"] = json_rational_list(params.c);
    out["d"] = json_rational_list(params.d);
    return out;
}

}  // namespace detail

/// Series rearrangement at x = y: the double series equals the single sum
/// over n of the prefactor times a terminating {r+u+1}F{s+t} whose unit
/// argument carries the sign (-1)^{s-u+1}.
inline VerificationRecord verify_kdf_rearrangement(const KdFParams& params, std::size_t order) {
    const TruncatedSeries lhs = eval_kdf_diagonal(params, order);

    const int sign = ((params.b.size() + params.d.size() + 1) % 2 == 0) ? +1 : -1;
    TruncatedSeries rhs(order);
    for (std::size_t n = 0; n <= order; ++n) {
        const Rational nn(static_cast<long long>(n));
        Rational prefactor = pochhammer_product(params.alpha, static_cast<unsigned>(n)) *
                             pochhammer_product(params.b, static_cast<unsigned>(n));
        const Rational den = pochhammer_product(params.beta, static_cast<unsigned>(n)) *
                             pochhammer_product(params.d, static_cast<unsigned>(n)) *
                             Rational(factorial(static_cast<unsigned>(n)));
        if (den == 0) throw DegenerateParameter("rearranged prefactor denominator vanishes at n=" +
                                                std::to_string(n));
        prefactor /= den;

        HyperParams inner;
        inner.upper.push_back(-nn);
        for (const Rational& a : params.a) inner.upper.push_back(a);
        for (const Rational& d : params.d) inner.upper.push_back(1 - d - nn);
        for (const Rational& c : params.c) inner.lower.push_back(c);
        for (const Rational& b : params.b) inner.lower.push_back(1 - b - nn);
        rhs[n] = prefactor * eval_terminating_pfq(inner, static_cast<unsigned>(n), sign);
    }

    Json inputs = detail::kdf_inputs(params);
    inputs["order"] = order;
    return make_series_record("kdf-rearrangement", std::move(inputs), lhs, rhs);
}

/// First reduction: F^{p: r+2; 1}_{q: r+1; 0}[(alpha): a, b, (f+m); c-a-b-m
/// | (beta): c, (f); -](x, x) collapses to the single-variable series whose
/// coefficient j is ((alpha))_j (c-a-m)_j (c-b-m)_j Q-hat_m(-j)
/// / (((beta))_j (c)_j j!).
inline VerificationRecord verify_first_reduction(const std::vector<Rational>& alpha,
                                                 const std::vector<Rational>& beta,
                                                 const ParametricContext& ctx, std::size_t order) {
    const unsigned m = ctx.total_shift();
    const Rational mm(static_cast<long long>(m));

    KdFParams lhs_params;
    lhs_params.alpha = alpha;
    lhs_params.beta = beta;
    lhs_params.a = {ctx.a, ctx.b};
    for (std::size_t j = 0; j < ctx.f.size(); ++j) lhs_params.a.push_back(ctx.f[j] + Rational(ctx.shifts[j]));
    lhs_params.c = {ctx.c};
    for (const Rational& fj : ctx.f) lhs_params.c.push_back(fj);
    lhs_params.b = {ctx.c - ctx.a - ctx.b - mm};
    const TruncatedSeries lhs = eval_kdf_diagonal(lhs_params, order);

    detail::require_tables_nonzero(beta, order, "beta");
    detail::require_nonzero_within(ctx.c, static_cast<unsigned>(order), "c");
    const ParametricPolynomial qhat = q_hat_polynomial(ctx);
    TruncatedSeries rhs(order);
    Rational term = 1;  // ((alpha))_j (c-a-m)_j (c-b-m)_j / (((beta))_j (c)_j j!)
    const Rational ca = ctx.c - ctx.a - mm;
    const Rational cb = ctx.c - ctx.b - mm;
    for (std::size_t j = 0; j <= order; ++j) {
        rhs[j] = term * qhat.poly(Rational(-static_cast<long long>(j)));
        Rational step = (ca + Rational(j)) * (cb + Rational(j));
        for (const Rational& al : alpha) step *= al + Rational(j);
        for (const Rational& be : beta) step /= be + Rational(j);
        step /= (ctx.c + Rational(j)) * Rational(j + 1);
        term *= step;
    }

    Json inputs = Json::object();
    inputs["alpha"] = json_rational_list(alpha);
    inputs["beta"] = json_rational_list(beta);
    inputs["a"] = to_string(ctx.a);
    inputs["b"] = to_string(ctx.b);
    inputs["c"] = to_string(ctx.c);
    inputs.update(detail::shift_inputs(ctx.f, ctx.shifts));
    inputs["order"] = order;
    return make_series_record("kdf-first-reduction", std::move(inputs), lhs, rhs,
                              qhat.degree_drop ? "degree drop: leading coefficient vanished" : "");
}

/// Second reduction: F^{1: r+2; 1}_{1: r+1; 0}[alpha: a, beta-d, (f+m); d
/// | beta: c, (f); -](x, x) equals (1-x)^{-alpha} times the Mobius-composed
/// series whose u-coefficients are
/// (alpha)_n (beta-d)_n (c-a-m)_n Q_m(-n) / ((beta)_n (c)_n n!).
inline VerificationRecord verify_second_reduction(const Rational& alpha, const Rational& beta,
                                                  const Rational& a, const Rational& c,
                                                  const Rational& d,
                                                  const std::vector<Rational>& f,
                                                  const std::vector<unsigned>& m_list,
                                                  std::size_t order) {
    unsigned m = 0;
    for (unsigned m_j : m_list) m += m_j;
    const Rational lambda = c - a - Rational(m);

    KdFParams lhs_params;
    lhs_params.alpha = {alpha};
    lhs_params.beta = {beta};
    lhs_params.a = {a, beta - d};
    for (std::size_t j = 0; j < f.size(); ++j) lhs_params.a.push_back(f[j] + Rational(m_list[j]));
    lhs_params.c = {c};
    for (const Rational& fj : f) lhs_params.c.push_back(fj);
    lhs_params.b = {d};
    const TruncatedSeries lhs = eval_kdf_diagonal(lhs_params, order);

    detail::require_nonzero_within(beta, static_cast<unsigned>(order), "beta");
    detail::require_nonzero_within(c, static_cast<unsigned>(order), "c");
    const ParametricPolynomial q = q_vc_polynomial(a, lambda, f, m_list);
    TruncatedSeries outer(order);
    Rational term = 1;  // (alpha)_n (beta-d)_n (c-a-m)_n / ((beta)_n (c)_n n!)
    for (std::size_t nidx = 0; nidx <= order; ++nidx) {
        outer[nidx] = term * q.poly(Rational(-static_cast<long long>(nidx)));
        term *= (alpha + Rational(nidx)) * (beta - d + Rational(nidx)) * (lambda + Rational(nidx));
        term /= (beta + Rational(nidx)) * (c + Rational(nidx)) * Rational(nidx + 1);
    }
    const TruncatedSeries rhs = binomial_series(alpha, 1, order) * compose_mobius(outer, order);

    Json inputs{{"alpha", to_string(alpha)}, {"beta", to_string(beta)}, {"a", to_string(a)},
                {"c", to_string(c)},         {"d", to_string(d)}};
    inputs.update(detail::shift_inputs(f, m_list));
    inputs["order"] = order;
    return make_series_record("kdf-second-reduction", std::move(inputs), lhs, rhs,
                              q.degree_drop ? "degree drop: leading coefficient vanished" : "");
}

/// Euler's first transformation as a standalone series identity:
/// 2F1(a, b; c; x) = (1-x)^{-a} 2F1(a, c-b; c; x/(x-1)), coefficient-wise.
inline VerificationRecord verify_euler_transformation(const Rational& a, const Rational& b,
                                                      const Rational& c, std::size_t order) {
    const TruncatedSeries lhs = pfq_truncated_series({{a, b}, {c}}, {}, 1, order);
    const TruncatedSeries outer = pfq_truncated_series({{a, c - b}, {c}}, {}, 1, order);
    const TruncatedSeries rhs = binomial_series(a, 1, order) * compose_mobius(outer, order);

    Json inputs{{"a", to_string(a)}, {"b", to_string(b)}, {"c", to_string(c)}, {"order", order}};
    return make_series_record("euler-transformation", std::move(inputs), lhs, rhs);
}

}  // namespace hypsum
