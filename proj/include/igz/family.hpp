#pragma once

/// Support families, the weighted clique set, and the matching coloring.
///
/// Vertices are partitioned by support. The family over support S has
/// weight W(S) = prod_{i in S} n_i, which is also its member count
/// (one less at full support, where the unit ideal drops out). For each
/// complementary support pair the heavier family joins the clique set;
/// exact ties go to the side containing the last slot, so any two chosen
/// supports meet and their union really is a clique. Unchosen families
/// borrow the colors of their complements, index-aligned in canonical
/// order, which yields a proper coloring with exactly |clique| colors.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "igz/lattice.hpp"
#include "igz/number.hpp"

namespace igz {

struct Family {
    u64 mask = 0;         // support, bit i = slot i
    u64 weight = 0;       // W = prod of exponents over the support
    u64 vertex_count = 0; // weight, minus one at full support

    friend bool operator==(const Family&, const Family&) = default;
};

inline u64 family_weight(const Signature& s, u64 mask) {
    u64 w = 1;
    for (std::size_t i = 0; i < s.m(); ++i)
        if (mask >> i & 1) w *= s[i];
    return w;
}

inline Family make_family(const Signature& s, u64 mask) {
    if (mask == 0) throw std::invalid_argument("family support must be non-empty");
    const u64 full = (u64(1) << s.m()) - 1;
    Family f;
    f.mask = mask;
    f.weight = family_weight(s, mask);
    f.vertex_count = (mask == full) ? f.weight - 1 : f.weight;
    return f;
}

inline Family family_of(const Signature& s, const IdealCode& c) {
    const u64 mask = support_mask(s, c);
    if (mask == 0) throw std::invalid_argument("the zero ideal belongs to no family");
    return make_family(s, mask);
}

inline Family complement(const Signature& s, const Family& f) {
    const u64 full = (u64(1) << s.m()) - 1;
    if (f.mask == full) throw std::invalid_argument("the full support has no complementary family");
    return make_family(s, full ^ f.mask);
}

/// The supports whose families form the maximum clique.
struct CliqueSet {
    std::vector<u64> chosen;                   // ascending masks
    std::vector<std::pair<u64, u64>> tie_pairs; // complementary pairs of equal weight
};

inline CliqueSet build_clique_set(const Signature& s) {
    const std::size_t m = s.m();
    vertex_count_of(s); // bounds every family weight below 2^40
    const u64 full = (u64(1) << m) - 1;
    const u64 top = u64(1) << (m - 1);
    CliqueSet cs;
    cs.chosen.push_back(full); // unopposed: the complement would be empty
    for (u64 mask = 1; mask < full; ++mask) {
        const u64 comp = full ^ mask;
        if (mask > comp) continue; // one visit per pair
        const u64 w = family_weight(s, mask);
        const u64 wc = family_weight(s, comp);
        if (w > wc) {
            cs.chosen.push_back(mask);
        } else if (wc > w) {
            cs.chosen.push_back(comp);
        } else {
            // tie: take the side holding the last slot (largest exponent)
            cs.chosen.push_back((mask & top) ? mask : comp);
            cs.tie_pairs.emplace_back(mask, comp);
        }
    }
    std::sort(cs.chosen.begin(), cs.chosen.end());
    return cs;
}

namespace detail {

/// Members of the family over `mask` in canonical (lex) order.
/// Off-support exponents sit at n_i; on-support ones run 0..n_i-1.
template <typename F>
inline void for_each_family_member(const Signature& s, u64 mask, F&& fn) {
    const std::size_t m = s.m();
    const u64 full = (u64(1) << m) - 1;
    IdealCode cur;
    cur.a.resize(m);
    for (std::size_t i = 0; i < m; ++i) cur.a[i] = (mask >> i & 1) ? 0 : s[i];
    const bool skip_unit = (mask == full);
    for (;;) {
        if (!(skip_unit && is_unit_ideal(cur))) fn(cur);
        std::size_t i = m;
        while (true) {
            if (i == 0) return;
            --i;
            if (!(mask >> i & 1)) continue;
            if (cur.a[i] + 1 < s[i]) {
                ++cur.a[i];
                for (std::size_t j = i + 1; j < m; ++j)
                    if (mask >> j & 1) cur.a[j] = 0;
                break;
            }
            if (i == 0 || (mask & ((u64(1) << i) - 1)) == 0) return;
        }
    }
}

} // namespace detail

/// Union of the chosen families, in canonical vertex order.
inline std::vector<IdealCode> clique_members(const CliqueSet& cs, const Signature& s) {
    std::vector<IdealCode> out;
    for (u64 mask : cs.chosen)
        detail::for_each_family_member(s, mask, [&](const IdealCode& c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

/// Clique number: total vertex count over the chosen families.
inline u64 omega(const Signature& s) {
    u64 total = 0;
    for (u64 mask : build_clique_set(s).chosen) total += make_family(s, mask).vertex_count;
    return total;
}

struct ColoringCertificate {
    u64 omega = 0;
    u64 chi = 0;
    std::vector<std::size_t> clique; // canonical vertex ids, ascending
    std::vector<int> colors;         // color per vertex id, in [0, chi)
};

inline ColoringCertificate build_coloring(const Signature& s) {
    const u64 vc = vertex_count_of(s);
    if (vc > kDefaultVertexCap)
        throw std::length_error("coloring certificate needs the full vertex list; vertex count exceeds cap");
    const u64 full = (u64(1) << s.m()) - 1;
    const CliqueSet cs = build_clique_set(s);

    ColoringCertificate cert;
    cert.colors.assign(static_cast<std::size_t>(vc), -1);
    for (const IdealCode& c : clique_members(cs, s)) cert.clique.push_back(vertex_id(s, c));
    std::sort(cert.clique.begin(), cert.clique.end());
    cert.omega = cert.clique.size();
    cert.chi = cert.omega;
    for (std::size_t k = 0; k < cert.clique.size(); ++k)
        cert.colors[cert.clique[k]] = static_cast<int>(k);

    std::vector<bool> chosen(static_cast<std::size_t>(full) + 1, false);
    for (u64 mask : cs.chosen) chosen[static_cast<std::size_t>(mask)] = true;

    for (u64 mask = 1; mask < full; ++mask) {
        if (chosen[static_cast<std::size_t>(mask)]) continue;
        const u64 comp = full ^ mask;
        std::vector<std::size_t> mine, donors;
        detail::for_each_family_member(s, mask, [&](const IdealCode& c) { mine.push_back(vertex_id(s, c)); });
        detail::for_each_family_member(s, comp, [&](const IdealCode& c) { donors.push_back(vertex_id(s, c)); });
        if (mine.size() > donors.size())
            throw std::logic_error("family outweighs its chosen complement"); // cannot happen
        for (std::size_t k = 0; k < mine.size(); ++k) cert.colors[mine[k]] = cert.colors[donors[k]];
    }
    return cert;
}

/// Independent check: clique pairwise adjacent, coloring proper, counts
/// consistent. Never relies on how the certificate was produced.
inline bool validate(const ColoringCertificate& cert, const Graph& g) {
    const std::size_t n = g.size();
    if (cert.colors.size() != n) return false;
    if (cert.omega != cert.chi || cert.omega != cert.clique.size()) return false;
    std::vector<bool> used(static_cast<std::size_t>(cert.chi), false);
    for (std::size_t v = 0; v < n; ++v) {
        const int c = cert.colors[v];
        if (c < 0 || static_cast<u64>(c) >= cert.chi) return false;
        used[static_cast<std::size_t>(c)] = true;
    }
    for (bool u : used)
        if (!u) return false;
    if (n == 0 && cert.chi != 0) return false;
    for (std::size_t i = 0; i < cert.clique.size(); ++i) {
        if (cert.clique[i] >= n) return false;
        for (std::size_t j = i + 1; j < cert.clique.size(); ++j)
            if (!g.has_edge(cert.clique[i], cert.clique[j])) return false;
    }
    for (std::size_t v = 0; v < n; ++v) {
        bool ok = true;
        g.adj[v].for_each([&](std::size_t u) {
            if (cert.colors[u] == cert.colors[v]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

} // namespace igz
