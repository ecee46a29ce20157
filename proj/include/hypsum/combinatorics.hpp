#pragma once

#include <mutex>
#include <vector>

#include "hypsum/rational.hpp"

namespace hypsum {

inline Integer factorial(unsigned n) {
    Integer out = 1;
    for (unsigned i = 2; i <= n; ++i) out *= i;
    return out;
}

/// Pochhammer symbol (ascending factorial): (a)_n = a(a+1)...(a+n-1), (a)_0 = 1.
inline Rational pochhammer(const Rational& a, unsigned n) {
    Rational out = 1;
    Rational factor = a;
    for (unsigned i = 0; i < n; ++i, ++factor) out *= factor;
    return out;
}

/// Product of Pochhammer symbols over a parameter list; empty list gives 1.
inline Rational pochhammer_product(const std::vector<Rational>& params, unsigned n) {
    Rational out = 1;
    for (const Rational& a : params) out *= pochhammer(a, n);
    return out;
}

/// (a)_n != 0  <=>  a is not in {0, -1, ..., -(n-1)}. Constant-time test.
inline bool pochhammer_nonzero(const Rational& a, unsigned n) {
    if (n == 0 || !is_integer(a)) return true;
    const Integer& num = numerator(a);
    return !(num <= 0 && num > -Integer(n));
}

/// Stirling numbers of the second kind via the additive recurrence
/// S(j,k) = k*S(j-1,k) + S(j-1,k-1), memoized row by row. The shared
/// triangle is guarded so concurrent callers observe a consistent state.
inline Integer stirling2(unsigned j, unsigned k) {
    if (k > j) return 0;
    if (j == 0) return 1;  // S(0,0); k > j handled above
    if (k == 0) return 0;

    static std::mutex guard;
    static std::vector<std::vector<Integer>> triangle{{1}};  // triangle[j][k], k <= j

    std::lock_guard<std::mutex> lock(guard);
    while (triangle.size() <= j) {
        const std::size_t row = triangle.size();
        const auto& prev = triangle[row - 1];
        std::vector<Integer> next(row + 1);
        next[0] = 0;
        for (std::size_t i = 1; i < row; ++i) next[i] = Integer(i) * prev[i] + prev[i - 1];
        next[row] = 1;
        triangle.push_back(std::move(next));
    }
    return triangle[j][k];
}

/// (f+m)_s / (f)_s computed as (f+s)_m / (f)_m. Requires (f)_m != 0 and
/// (f)_s != 0; a vanishing denominator Pochhammer is an error here, never
/// a silent zero or infinity.
inline Rational shifted_pochhammer_ratio(const Rational& f, unsigned m, unsigned s) {
    if (!pochhammer_nonzero(f, m)) throw DegenerateParameter("f", to_string(f), static_cast<long>(m));
    if (!pochhammer_nonzero(f, s)) throw DegenerateParameter("f", to_string(f), static_cast<long>(s));
    return pochhammer(f + s, m) / pochhammer(f, m);
}

}  // namespace hypsum
