#pragma once

/// Integer factorization and exponent signatures.
///
/// A modulus n = p1^e1 * ... * pm^em is reduced to its sorted exponent
/// multiset (the "signature"); everything downstream depends on the
/// signature only, while the primes are kept around to label vertices
/// with honest divisors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace igz {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
    u64 r = m > 1 ? 1 : 0;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
/// The base set {2,...,37} decides primality for all n < 3.3e24.
inline bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace detail {

/// Brent's cycle variant of Pollard's rho. Deterministic: the increment c
/// walks 1,2,3,... until a factor shows up, so repeated runs agree.
inline u64 pollard_brent(u64 n) {
    if ((n & 1) == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 q = 1;
        int lam = 1;
        while (d == 1) {
            x = y;
            for (int i = 0; i < lam; ++i) y = (mulmod(y, y, n) + c) % n;
            int k = 0;
            while (k < lam && d == 1) {
                u64 ys = y;
                int lim = std::min(128, lam - k);
                for (int i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
                if (d == n) {
                    // backtrack one step at a time
                    d = 1;
                    y = ys;
                    do {
                        y = (mulmod(y, y, n) + c) % n;
                        d = std::gcd(x > y ? x - y : y - x, n);
                    } while (d == 1);
                    break;
                }
                k += lim;
            }
            lam *= 2;
        }
        if (d != n) return d;
    }
}

} // namespace detail

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition with primes strictly increasing.
using Factorization = std::vector<PrimePower>;

/// Factor n >= 2. Trial division over a small wheel first, then
/// Miller-Rabin plus Brent rho for what remains.
inline Factorization factorize(u64 n) {
    if (n < 2) throw std::domain_error("no proper ideals to analyze");
    Factorization out;
    auto strip = [&](u64 p) {
        if (n % p) return;
        unsigned e = 0;
        while (n % p == 0) n /= p, ++e;
        out.push_back({p, e});
    };
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        strip(p);
    for (u64 p = 41; p * p <= n && p < 100000; p += 2) strip(p);
    if (n > 1) {
        std::vector<u64> stack = {n};
        std::vector<u64> primes;
        while (!stack.empty()) {
            u64 v = stack.back();
            stack.pop_back();
            if (is_prime(v)) {
                primes.push_back(v);
                continue;
            }
            u64 d = detail::pollard_brent(v);
            stack.push_back(d);
            stack.push_back(v / d);
        }
        std::sort(primes.begin(), primes.end());
        for (std::size_t i = 0; i < primes.size();) {
            std::size_t j = i;
            while (j < primes.size() && primes[j] == primes[i]) ++j;
            out.push_back({primes[i], static_cast<unsigned>(j - i)});
            i = j;
        }
    }
    std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
    return out;
}

inline u64 factorization_value(const Factorization& f) {
    u64 v = 1;
    for (const auto& pp : f)
        for (unsigned i = 0; i < pp.exponent; ++i) v *= pp.prime;
    return v;
}

/// Sorted exponent multiset n1 <= n2 <= ... <= nm. Two moduli with equal
/// signatures have the same ideal intersection graph.
struct Signature {
    std::vector<unsigned> exponents;

    Signature() = default;
    explicit Signature(std::vector<unsigned> e) : exponents(std::move(e)) {
        if (exponents.empty()) throw std::invalid_argument("signature must be non-empty");
        for (unsigned x : exponents)
            if (x < 1) throw std::invalid_argument("signature entries must be >= 1");
        std::sort(exponents.begin(), exponents.end());
        if (exponents.size() > 20)
            throw std::invalid_argument("signature too large: at most 20 prime factors supported");
    }

    std::size_t m() const { return exponents.size(); }
    unsigned operator[](std::size_t i) const { return exponents[i]; }
    bool squarefree() const {
        return std::all_of(exponents.begin(), exponents.end(), [](unsigned e) { return e == 1; });
    }
    friend bool operator==(const Signature&, const Signature&) = default;
};

inline Signature signature_of(const Factorization& f) {
    std::vector<unsigned> e;
    e.reserve(f.size());
    for (const auto& pp : f) e.push_back(pp.exponent);
    return Signature(std::move(e));
}

/// Signature slot i (0-based) gets the prime whose exponent landed in
/// that slot: pairs are ordered by exponent, ties by the prime itself.
/// Only labels depend on this; the graph does not.
struct SlotAssignment {
    Signature sig;
    std::vector<u64> primes; // primes[i] belongs to sig.exponents[i]
};

inline SlotAssignment assign_slots(const Factorization& f) {
    std::vector<std::pair<unsigned, u64>> slots;
    slots.reserve(f.size());
    for (const auto& pp : f) slots.emplace_back(pp.exponent, pp.prime);
    std::sort(slots.begin(), slots.end());
    SlotAssignment out;
    std::vector<unsigned> e;
    for (const auto& [exp, p] : slots) {
        e.push_back(exp);
        out.primes.push_back(p);
    }
    out.sig = Signature(std::move(e));
    return out;
}

} // namespace igz
