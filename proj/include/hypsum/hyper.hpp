#pragma once

#include <cstddef>
#include <vector>

#include "hypsum/combinatorics.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/rational.hpp"
#include "hypsum/series.hpp"

namespace hypsum {

/// Parameter lists of a generalized hypergeometric series: p upper and q
/// lower Pochhammer parameters per term.
struct HyperParams {
    std::vector<Rational> upper;
    std::vector<Rational> lower;
};

/// One numeratorial/denominatorial pair (base + shift, base) differing by a
/// positive integer shift.
struct ParameterShift {
    Rational base;
    unsigned shift = 1;
};

namespace detail {

/// Throws unless (value)_k != 0 for every k <= range.
inline void require_nonzero_within(const Rational& value, unsigned range, const char* name) {
    if (pochhammer_nonzero(value, range)) return;
    // First index k with (value)_k = 0 is -value + 1.
    const long hit = 1 - static_cast<long>(*as_integer(value));
    throw DegenerateParameter(name, to_string(value), hit);
}

inline bool contains_nonpositive_integer(const std::vector<Rational>& params, long long target) {
    for (const Rational& a : params)
        if (is_integer(a) && numerator(a) == -Integer(target)) return true;
    return false;
}

}  // namespace detail

/// Terminating pFq at unit argument (argument_sign = -1 evaluates at -1):
/// sum_{k=0}^{n} ((upper))_k / ((lower))_k / k!. The caller supplies the
/// termination order n; -n must appear among the upper parameters.
inline Rational eval_terminating_pfq(const HyperParams& params, unsigned n,
                                     int argument_sign = +1) {
    if (!detail::contains_nonpositive_integer(params.upper, n))
        throw Error("terminating evaluation requires the upper parameter -" + std::to_string(n));
    for (const Rational& b : params.lower) detail::require_nonzero_within(b, n, "lower");

    Rational sum = 0;
    Rational term = 1;
    for (unsigned k = 0; k <= n; ++k) {
        sum += term;
        if (k == n) break;
        for (const Rational& a : params.upper) term *= a + Rational(k);
        for (const Rational& b : params.lower) term /= b + Rational(k);
        term /= Rational(k + 1);
        if (argument_sign < 0) term = -term;
    }
    return sum;
}

/// Terminating series with r extra integer-shifted parameter pairs: each pair
/// contributes (f_j + m_j)_k / (f_j)_k per term, computed through the shifted
/// Pochhammer ratio (f_j + k)_{m_j} / (f_j)_{m_j}.
inline Rational eval_shifted_pfq(const HyperParams& base, const std::vector<ParameterShift>& shifts,
                                 unsigned n, int argument_sign = +1) {
    if (!detail::contains_nonpositive_integer(base.upper, n))
        throw Error("terminating evaluation requires the upper parameter -" + std::to_string(n));
    for (const Rational& b : base.lower) detail::require_nonzero_within(b, n, "lower");
    for (const ParameterShift& s : shifts) detail::require_nonzero_within(s.base, n, "f");

    Rational sum = 0;
    Rational term = 1;
    for (unsigned k = 0; k <= n; ++k) {
        Rational factor = term;
        for (const ParameterShift& s : shifts) factor *= shifted_pochhammer_ratio(s.base, s.shift, k);
        sum += factor;
        if (k == n) break;
        for (const Rational& a : base.upper) term *= a + Rational(k);
        for (const Rational& b : base.lower) term /= b + Rational(k);
        term /= Rational(k + 1);
        if (argument_sign < 0) term = -term;
    }
    return sum;
}

/// Coefficients of the (possibly shifted) pFq series in x up to x^order;
/// argument_power = 2 places term k at degree 2k. Lower-parameter degeneracy
/// is checked only over the indices that contribute to the truncation.
inline TruncatedSeries pfq_truncated_series(const HyperParams& params,
                                            const std::vector<ParameterShift>& shifts,
                                            unsigned argument_power, std::size_t order) {
    if (argument_power == 0) throw Error("pfq_truncated_series: argument power must be positive");
    const unsigned terms = static_cast<unsigned>(order / argument_power);  // term k sits at degree k*power
    for (const Rational& b : params.lower) detail::require_nonzero_within(b, terms, "lower");
    for (const ParameterShift& s : shifts) detail::require_nonzero_within(s.base, terms, "f");

    TruncatedSeries out(order);
    Rational term = 1;
    for (unsigned k = 0; k <= terms; ++k) {
        Rational coefficient = term;
        for (const ParameterShift& s : shifts)
            coefficient *= shifted_pochhammer_ratio(s.base, s.shift, k);
        out[static_cast<std::size_t>(k) * argument_power] = coefficient;
        if (k == terms) break;
        for (const Rational& a : params.upper) term *= a + Rational(k);
        for (const Rational& b : params.lower) term /= b + Rational(k);
        term /= Rational(k + 1);
    }
    return out;
}

}  // namespace hypsum
