#pragma once

/// Ideals of Z_n as exponent vectors and their intersection graph.
///
/// Over the CRT decomposition an ideal is a vector a with 0 <= a_i <= n_i,
/// standing for the divisor prod p_i^{a_i}. Component i is zero exactly
/// when a_i = n_i. Two proper nontrivial ideals are adjacent when their
/// intersection is nonzero, i.e. when some component stays nonzero in the
/// componentwise maximum — equivalently, when their supports meet.

#include <cassert>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "igz/number.hpp"

namespace igz {

inline constexpr std::size_t kDefaultVertexCap = 4096;

/// Exponent vector of one ideal against an ambient signature.
struct IdealCode {
    std::vector<unsigned> a;

    friend bool operator==(const IdealCode&, const IdealCode&) = default;
    friend auto operator<=>(const IdealCode& x, const IdealCode& y) { return x.a <=> y.a; }
};

inline bool is_unit_ideal(const IdealCode& c) {
    for (unsigned x : c.a)
        if (x != 0) return false;
    return true;
}

inline bool is_zero_ideal(const Signature& s, const IdealCode& c) {
    for (std::size_t i = 0; i < c.a.size(); ++i)
        if (c.a[i] != s[i]) return false;
    return true;
}

/// Indices of non-zero components, as a bit word (bit i = slot i).
inline u64 support_mask(const Signature& s, const IdealCode& c) {
    u64 mask = 0;
    for (std::size_t i = 0; i < c.a.size(); ++i)
        if (c.a[i] < s[i]) mask |= u64(1) << i;
    return mask;
}

/// prod (n_i+1) - 2, the number of proper nontrivial ideals.
inline u64 vertex_count_of(const Signature& s) {
    u128 p = 1;
    for (unsigned e : s.exponents) {
        p *= e + 1;
        if (p > (u128(1) << 40)) throw std::overflow_error("signature too large: vertex count exceeds 2^40");
    }
    return static_cast<u64>(p) - 2;
}

/// All vertices in canonical (lexicographic) order.
inline std::vector<IdealCode> enumerate_vertices(const Signature& s) {
    const std::size_t m = s.m();
    std::vector<IdealCode> out;
    out.reserve(static_cast<std::size_t>(vertex_count_of(s)));
    IdealCode cur;
    cur.a.assign(m, 0);
    // mixed-radix odometer, least-significant digit last => lex order
    for (;;) {
        std::size_t i = m;
        while (i > 0) {
            --i;
            if (cur.a[i] < s[i]) {
                ++cur.a[i];
                for (std::size_t j = i + 1; j < m; ++j) cur.a[j] = 0;
                break;
            }
            if (i == 0) return out;
        }
        if (!is_zero_ideal(s, cur)) out.push_back(cur);
        else return out;
    }
}

/// Rank of a code among all codes in lex order, minus the leading unit
/// ideal; yields the canonical vertex id without a lookup table.
inline std::size_t vertex_id(const Signature& s, const IdealCode& c) {
    u64 rank = 0;
    for (std::size_t i = 0; i < s.m(); ++i) rank = rank * (s[i] + 1) + c.a[i];
    assert(rank > 0); // the unit ideal is not a vertex
    return static_cast<std::size_t>(rank - 1);
}

/// Componentwise maximum: the code of dZ ∩ eZ = lcm(d,e)Z.
inline IdealCode intersect(const IdealCode& x, const IdealCode& y) {
    if (x.a.size() != y.a.size()) throw std::invalid_argument("intersect: mismatched signatures");
    IdealCode r;
    r.a.resize(x.a.size());
    for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = std::max(x.a[i], y.a[i]);
    return r;
}

/// Adjacency: the intersection is a nonzero ideal. Irreflexive by contract.
inline bool adjacent(const Signature& s, const IdealCode& x, const IdealCode& y) {
    if (x == y) throw std::invalid_argument("adjacent: adjacency is irreflexive");
    return (support_mask(s, x) & support_mask(s, y)) != 0;
}

inline u64 divisor_of(const IdealCode& c, const std::vector<u64>& slot_primes) {
    u64 d = 1;
    for (std::size_t i = 0; i < c.a.size(); ++i)
        for (unsigned k = 0; k < c.a[i]; ++k) d *= slot_primes[i];
    return d;
}

/// Fixed-capacity dynamic bitset over vertex ids.
class Bitset {
  public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : n_(bits), w_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { w_[i >> 6] |= u64(1) << (i & 63); }
    void reset(std::size_t i) { w_[i >> 6] &= ~(u64(1) << (i & 63)); }
    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return n_; }

    std::size_t count() const {
        std::size_t c = 0;
        for (u64 w : w_) c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }
    bool intersects(const Bitset& o) const {
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < w_.size(); ++i) {
            u64 w = w_[i];
            while (w) {
                f((i << 6) + static_cast<std::size_t>(__builtin_ctzll(w)));
                w &= w - 1;
            }
        }
    }
  private:
    std::size_t n_ = 0;
    std::vector<u64> w_;
};

/// Immutable intersection graph over the canonical vertex list.
struct Graph {
    Signature sig;
    std::vector<IdealCode> vertices;
    std::vector<u64> supports;   // support mask per vertex
    std::vector<Bitset> adj;     // symmetric, irreflexive
    std::vector<u64> divisors;   // empty unless slot primes were attached
    std::optional<u64> n;

    std::size_t size() const { return vertices.size(); }
    bool has_edge(std::size_t i, std::size_t j) const { return adj[i].test(j); }
    std::size_t degree(std::size_t i) const { return adj[i].count(); }
    u64 edge_count() const {
        u64 e = 0;
        for (const auto& row : adj) e += row.count();
        return e / 2;
    }
    std::string label(std::size_t i) const {
        if (!divisors.empty()) return std::to_string(divisors[i]);
        std::string s = "[";
        for (std::size_t k = 0; k < vertices[i].a.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(vertices[i].a[k]);
        }
        return s + "]";
    }
};

inline Graph build_graph(const Signature& s, std::size_t vertex_cap = kDefaultVertexCap,
                         const std::vector<u64>* slot_primes = nullptr,
                         std::optional<u64> n = std::nullopt) {
    const u64 vc = vertex_count_of(s);
    if (vc > vertex_cap)
        throw std::length_error("graph too large: " + std::to_string(vc) + " vertices exceeds cap " +
                                std::to_string(vertex_cap));
    Graph g;
    g.sig = s;
    g.n = n;
    g.vertices = enumerate_vertices(s);
    g.supports.reserve(g.vertices.size());
    for (const auto& v : g.vertices) g.supports.push_back(support_mask(s, v));
    if (slot_primes) {
        g.divisors.reserve(g.vertices.size());
        for (const auto& v : g.vertices) g.divisors.push_back(divisor_of(v, *slot_primes));
    }
    const std::size_t nv = g.vertices.size();
    g.adj.assign(nv, Bitset(nv));
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if (g.supports[i] & g.supports[j]) {
                g.adj[i].set(j);
                g.adj[j].set(i);
            }
    return g;
}

inline Graph build_graph_for_n(u64 n, std::size_t vertex_cap = kDefaultVertexCap) {
    const auto slots = assign_slots(factorize(n));
    return build_graph(slots.sig, vertex_cap, &slots.primes, n);
}

/// Degree without touching adjacency: everything is a neighbour except
/// the vertex itself and the ideals supported inside the complement.
inline u64 degree_closed_form(const Signature& s, const IdealCode& c) {
    const u64 vc = vertex_count_of(s);
    const u64 sup = support_mask(s, c);
    u64 off_support = 1;
    for (std::size_t i = 0; i < s.m(); ++i)
        if (!(sup >> i & 1)) off_support *= s[i] + 1;
    return vc - 1 - (off_support - 1);
}

/// Max degree over all vertices, by scanning support classes.
inline u64 max_degree(const Signature& s) {
    const std::size_t m = s.m();
    const u64 vc = vertex_count_of(s);
    const u64 full = (u64(1) << m) - 1;
    u64 best = 0;
    for (u64 mask = 1; mask <= full; ++mask) {
        if (mask == full) {
            u64 members = 1;
            for (unsigned e : s.exponents) members *= e;
            if (members - 1 == 0) continue; // only the unit ideal has full support
        }
        u64 off_support = 1;
        for (std::size_t i = 0; i < m; ++i)
            if (!(mask >> i & 1)) off_support *= s[i] + 1;
        best = std::max(best, vc - 1 - (off_support - 1));
    }
    return vc == 0 ? 0 : best;
}

/// Edge count from the family decomposition; cross-checked against
/// built graphs in tests.
inline u64 edge_count_closed_form(const Signature& s) {
    const std::size_t m = s.m();
    const u64 full = (u64(1) << m) - 1;
    const u64 vc = vertex_count_of(s);
    u128 twice = 0;
    for (u64 mask = 1; mask <= full; ++mask) {
        u64 members = 1, off_support = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (mask >> i & 1) members *= s[i];
            else off_support *= s[i] + 1;
        }
        if (mask == full) members -= 1;
        if (members == 0) continue;
        // degree depends only on the support
        twice += u128(members) * (vc - 1 - (off_support - 1));
    }
    return static_cast<u64>(twice / 2);
}

} // namespace igz
