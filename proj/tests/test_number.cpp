#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "igz/number.hpp"

using namespace igz;

namespace {

// Test-side primality oracle, kept independent of the library path:
// plain deterministic Miller-Rabin written against the textbook
// description, no shared helpers.
bool oracle_is_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    auto mul = [n](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    auto pw = [&](std::uint64_t b, std::uint64_t e) {
        std::uint64_t acc = 1;
        while (e) {
            if (e % 2) acc = mul(acc, b);
            b = mul(b, b);
            e /= 2;
        }
        return acc;
    };
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (a % n == 0) continue;
        std::uint64_t x = pw(a, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = mul(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace

TEST_CASE("factorize on small pinned inputs") {
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(30) == Factorization{{2, 1}, {3, 1}, {5, 1}});
    CHECK(factorize(32) == Factorization{{2, 5}});
    CHECK(factorize(2) == Factorization{{2, 1}});
}

TEST_CASE("factorize rejects n < 2") {
    CHECK_THROWS_MATCHES(factorize(1), std::domain_error,
                         Catch::Matchers::Message("no proper ideals to analyze"));
    CHECK_THROWS_AS(factorize(0), std::domain_error);
}

TEST_CASE("large prime recognized as a single factor") {
    const std::uint64_t p = 9007199254740881ull;
    REQUIRE(oracle_is_prime(p));
    CHECK(factorize(p) == Factorization{{p, 1}});
    CHECK(is_prime(p));
}

TEST_CASE("is_prime agrees with the independent oracle") {
    for (std::uint64_t n = 0; n < 2000; ++n) CHECK(is_prime(n) == oracle_is_prime(n));
    std::mt19937_64 rng(42);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t n = rng() % 1000000000000ull;
        CHECK(is_prime(n) == oracle_is_prime(n));
    }
}

TEST_CASE("factorization round-trips and is well-formed") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 400; ++i) {
        const std::uint64_t n = 2 + rng() % 100000000ull;
        const Factorization f = factorize(n);
        CHECK(factorization_value(f) == n);
        for (std::size_t k = 0; k < f.size(); ++k) {
            CHECK(oracle_is_prime(f[k].prime));
            CHECK(f[k].exponent >= 1);
            if (k > 0) CHECK(f[k - 1].prime < f[k].prime);
        }
    }
    // semiprimes with large factors exercise the rho path
    CHECK(factorize(1000003ull * 1000033ull) == Factorization{{1000003, 1}, {1000033, 1}});
}

TEST_CASE("signature_of sorts exponents and drops primes") {
    CHECK(signature_of({{2, 2}, {3, 1}}).exponents == std::vector<unsigned>{1, 2});
    CHECK(signature_of({{2, 1}, {3, 1}, {5, 1}}).exponents == std::vector<unsigned>{1, 1, 1});
    CHECK(signature_of({{2, 5}}).exponents == std::vector<unsigned>{5});
    // permutation invariance of the input pairs
    CHECK(signature_of({{3, 1}, {2, 2}}) == signature_of({{2, 2}, {3, 1}}));
}

TEST_CASE("slot assignment orders primes by exponent then value") {
    const SlotAssignment s12 = assign_slots(factorize(12));
    CHECK(s12.sig.exponents == std::vector<unsigned>{1, 2});
    CHECK(s12.primes == std::vector<u64>{3, 2});
    const SlotAssignment s36 = assign_slots(factorize(36));
    CHECK(s36.sig.exponents == std::vector<unsigned>{2, 2});
    CHECK(s36.primes == std::vector<u64>{2, 3});
}

TEST_CASE("signature validation") {
    CHECK_THROWS_AS(Signature(std::vector<unsigned>{}), std::invalid_argument);
    CHECK_THROWS_AS(Signature({1, 0, 2}), std::invalid_argument);
    CHECK(Signature({3, 1, 2}).exponents == std::vector<unsigned>{1, 2, 3});
}
