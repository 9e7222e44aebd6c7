#pragma once

/// Closed-form clique/chromatic numbers, each guarded by its own
/// applicability predicate. A formula never guesses: outside its
/// hypothesis it reports not-applicable instead of a value.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "igz/family.hpp"
#include "igz/number.hpp"

namespace igz {

struct FormulaResult {
    std::string name;
    bool applicable = false;
    std::optional<u64> value;
};

namespace detail {

inline u64 binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    u128 r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return static_cast<u64>(r);
}

inline u64 ipow(u64 b, unsigned e) {
    u64 r = 1;
    while (e--) r *= b;
    return r;
}

/// e_j(n_1..n_m) for j = 0..m: the total weight of the size-j supports.
inline std::vector<u64> elementary_symmetric(const Signature& s) {
    std::vector<u64> e(s.m() + 1, 0);
    e[0] = 1;
    for (std::size_t i = 0; i < s.m(); ++i)
        for (std::size_t j = std::min(i + 1, s.m()); j >= 1; --j) e[j] += e[j - 1] * s[i];
    return e;
}

/// Product of the k largest exponents vs the m-k smallest (signature is
/// sorted ascending).
inline u64 prod_largest(const Signature& s, std::size_t k) {
    u64 p = 1;
    for (std::size_t i = s.m() - k; i < s.m(); ++i) p *= s[i];
    return p;
}

inline u64 prod_smallest(const Signature& s, std::size_t k) {
    u64 p = 1;
    for (std::size_t i = 0; i < k; ++i) p *= s[i];
    return p;
}

/// Count of vertices whose support has at least `min_size` slots.
inline u64 vertices_with_support_at_least(const Signature& s, std::size_t min_size) {
    const auto e = elementary_symmetric(s);
    u64 total = 0;
    for (std::size_t j = min_size; j <= s.m(); ++j) total += e[j];
    return total - 1; // the unit ideal sits in the full-support family
}

/// Clique-set contribution of the equal-size support pairs at m/2:
/// the heavier side of each pair (either side on a tie).
inline u64 half_support_pair_contribution(const Signature& s) {
    const std::size_t m = s.m();
    const u64 full = (u64(1) << m) - 1;
    u64 total = 0;
    for (u64 mask = 1; mask < full; ++mask) {
        if (!(mask & 1)) continue; // visit each pair from the side holding slot 0
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != m / 2) continue;
        const u64 w = family_weight(s, mask);
        const u64 wc = family_weight(s, full ^ mask);
        total += std::max(w, wc);
    }
    return total;
}

} // namespace detail

/// m = 1: the graph is complete on n_1 - 1 vertices.
inline FormulaResult omega_prime_power(const Signature& s) {
    FormulaResult r{"prime_power", s.m() == 1, std::nullopt};
    if (r.applicable) r.value = u64(s[0]) - 1;
    return r;
}

/// m = 2: n_2 (n_1 + 1) - 1.
inline FormulaResult omega_two_primes(const Signature& s) {
    FormulaResult r{"two_primes", s.m() == 2, std::nullopt};
    if (r.applicable) r.value = u64(s[1]) * (s[0] + 1) - 1;
    return r;
}

/// All exponents 1: 2^{m-1} - 1.
inline FormulaResult omega_squarefree(const Signature& s) {
    FormulaResult r{"squarefree", s.squarefree(), std::nullopt};
    if (r.applicable) r.value = (u64(1) << (s.m() - 1)) - 1;
    return r;
}

/// Dominant last exponent n_m >= n_1...n_{m-1}: n_m prod (n_i + 1) - 1.
inline FormulaResult omega_dominant(const Signature& s) {
    const std::size_t m = s.m();
    const u64 rest = detail::prod_smallest(s, m - 1);
    FormulaResult r{"dominant_exponent", s[m - 1] >= rest, std::nullopt};
    if (r.applicable) {
        u64 v = s[m - 1];
        for (std::size_t i = 0; i + 1 < m; ++i) v *= s[i] + 1;
        r.value = v - 1;
    }
    return r;
}

/// Odd m: with the top floor(m/2) exponents dominated by the rest, the
/// clique is everything with at most floor(m/2) zero components.
inline FormulaResult omega_odd_m(const Signature& s) {
    const std::size_t m = s.m();
    const bool applies = m > 1 && m % 2 == 1 &&
                         detail::prod_largest(s, m / 2) <= detail::prod_smallest(s, m - m / 2);
    FormulaResult r{"odd_m", applies, std::nullopt};
    if (r.applicable) r.value = detail::vertices_with_support_at_least(s, m - m / 2);
    return r;
}

/// Odd m, all exponents alpha: sum_{i<=floor(m/2)} C(m,i) alpha^{m-i} - 1.
inline FormulaResult omega_odd_equal(const Signature& s) {
    const std::size_t m = s.m();
    const bool equal = std::all_of(s.exponents.begin(), s.exponents.end(),
                                   [&](unsigned e) { return e == s[0]; });
    FormulaResult r{"odd_m_equal_exponents", m % 2 == 1 && equal, std::nullopt};
    if (r.applicable) {
        const unsigned alpha = s[0];
        u64 v = 0;
        for (std::size_t i = 0; i <= m / 2; ++i)
            v += detail::binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) *
                 detail::ipow(alpha, static_cast<unsigned>(m - i));
        r.value = v - 1;
    }
    return r;
}

/// Even m > 2 with the top m/2-1 exponents dominated by the rest:
/// everything with at most m/2-1 zero components, plus the heavier side
/// of each complementary pair at support size m/2. (Counting only the
/// tied pairs undercounts whenever a size-m/2 pair has a strict winner,
/// e.g. exponents 1,2,2,4; the chosen side is what the clique actually
/// contains, and ties contribute the same weight from either side.)
inline FormulaResult omega_even_m(const Signature& s) {
    const std::size_t m = s.m();
    const bool applies = m > 2 && m % 2 == 0 &&
                         detail::prod_largest(s, m / 2 - 1) <= detail::prod_smallest(s, m / 2 + 1);
    FormulaResult r{"even_m", applies, std::nullopt};
    if (r.applicable)
        r.value = detail::vertices_with_support_at_least(s, m / 2 + 1) +
                  detail::half_support_pair_contribution(s);
    return r;
}

/// Even m, all exponents alpha:
/// sum_{i<m/2} C(m,i) alpha^{m-i} + C(m,m/2) alpha^{m/2} / 2 - 1.
inline FormulaResult omega_even_equal(const Signature& s) {
    const std::size_t m = s.m();
    const bool equal = std::all_of(s.exponents.begin(), s.exponents.end(),
                                   [&](unsigned e) { return e == s[0]; });
    FormulaResult r{"even_m_equal_exponents", m % 2 == 0 && equal, std::nullopt};
    if (r.applicable) {
        const unsigned alpha = s[0];
        u64 v = 0;
        for (std::size_t i = 0; i < m / 2; ++i)
            v += detail::binomial(static_cast<unsigned>(m), static_cast<unsigned>(i)) *
                 detail::ipow(alpha, static_cast<unsigned>(m - i));
        v += detail::binomial(static_cast<unsigned>(m), static_cast<unsigned>(m / 2)) *
             detail::ipow(alpha, static_cast<unsigned>(m / 2)) / 2;
        r.value = v - 1;
    }
    return r;
}

inline std::vector<FormulaResult> evaluate_all_formulas(const Signature& s) {
    return {omega_prime_power(s), omega_two_primes(s),  omega_squarefree(s), omega_dominant(s),
            omega_odd_m(s),       omega_odd_equal(s),   omega_even_m(s),     omega_even_equal(s)};
}

} // namespace igz
