#pragma once

/// Edge-chromatic classification of the intersection graph, straight
/// from the signature, plus the degree bookkeeping that audits the
/// classification's preconditions on concrete graphs.
///
/// Outcomes: chi' = Delta ("class1") for every modulus except prime
/// powers p^k with k even and k >= 4 (complete graphs of odd order,
/// "class2"). Edgeless graphs (k <= 2, or exactly two prime factors
/// with both exponents 1) are reported "trivial" with chi' = 0.

#include <cstdint>
#include <optional>
#include <string>

#include "igz/lattice.hpp"
#include "igz/number.hpp"

namespace igz {

enum class EdgeClassification { class1, class2, trivial };

enum class EdgeReason {
    prime_power_odd,
    prime_power_even,
    two_primes_null,
    squarefree_case1,
    all_even_exponents_case2,
    mixed_case3,
    empty_graph,
};

inline const char* to_string(EdgeClassification c) {
    switch (c) {
        case EdgeClassification::class1: return "class1";
        case EdgeClassification::class2: return "class2";
        case EdgeClassification::trivial: return "trivial";
    }
    return "?";
}

inline const char* to_string(EdgeReason r) {
    switch (r) {
        case EdgeReason::prime_power_odd: return "prime_power_odd";
        case EdgeReason::prime_power_even: return "prime_power_even";
        case EdgeReason::two_primes_null: return "two_primes_null";
        case EdgeReason::squarefree_case1: return "squarefree_case1";
        case EdgeReason::all_even_exponents_case2: return "all_even_exponents_case2";
        case EdgeReason::mixed_case3: return "mixed_case3";
        case EdgeReason::empty_graph: return "empty_graph";
    }
    return "?";
}

struct EdgeClassReport {
    u64 delta = 0;
    EdgeClassification classification = EdgeClassification::trivial;
    EdgeReason reason = EdgeReason::empty_graph;
    u64 chi_prime = 0;

    friend bool operator==(const EdgeClassReport&, const EdgeClassReport&) = default;
};

inline EdgeClassReport classify(const Signature& s) {
    EdgeClassReport r;
    r.delta = max_degree(s);
    const std::size_t m = s.m();
    auto finish = [&](EdgeClassification c, EdgeReason why) {
        r.classification = c;
        r.reason = why;
        r.chi_prime = (c == EdgeClassification::class2) ? r.delta + 1
                      : (c == EdgeClassification::class1) ? r.delta
                                                          : 0;
        return r;
    };
    if (m == 1) {
        // complete graph on n_1 - 1 vertices
        if (s[0] <= 2) return finish(EdgeClassification::trivial, EdgeReason::empty_graph);
        if (s[0] % 2 == 0) return finish(EdgeClassification::class2, EdgeReason::prime_power_even);
        return finish(EdgeClassification::class1, EdgeReason::prime_power_odd);
    }
    if (m == 2 && s[0] == 1 && s[1] == 1)
        return finish(EdgeClassification::trivial, EdgeReason::two_primes_null);
    if (s.squarefree())
        return finish(EdgeClassification::class1, EdgeReason::squarefree_case1);
    const bool all_even = std::all_of(s.exponents.begin(), s.exponents.end(),
                                      [](unsigned e) { return e % 2 == 0; });
    if (all_even)
        return finish(EdgeClassification::class1, EdgeReason::all_even_exponents_case2);
    return finish(EdgeClassification::class1, EdgeReason::mixed_case3);
}

/// Audits, on the actual graph, the sufficient condition used for the
/// squarefree classification: every max-degree vertex has a neighbour v
/// with Delta - d(v) + 2 larger than the number of max-degree vertices.
/// Not a gate for classify(); a diagnostic only.
inline std::optional<bool> case1_precondition_check(const Signature& s,
                                                    std::size_t vertex_cap = kDefaultVertexCap) {
    if (!s.squarefree() || s.m() < 3) return std::nullopt;
    const Graph g = build_graph(s, vertex_cap);
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    std::size_t delta = 0;
    for (std::size_t v = 0; v < n; ++v) delta = std::max(delta, deg[v] = g.degree(v));
    std::size_t max_deg_count = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (deg[v] == delta) ++max_deg_count;
    for (std::size_t u = 0; u < n; ++u) {
        if (deg[u] != delta) continue;
        bool found = false;
        g.adj[u].for_each([&](std::size_t v) {
            if (delta - deg[v] + 2 > max_deg_count) found = true;
        });
        if (!found) return false;
    }
    return true;
}

struct EdgeDeficit {
    u64 vertices = 0;      // 2s + 1
    u64 s_bound = 0;       // s
    u64 complete_edges = 0; // 2s^2 + s
    u64 actual_edges = 0;
    u64 missing_edges = 0;
    bool confirms = false; // missing > s
};

/// All-even-exponent diagnostic: the graph on an odd number 2s+1 of
/// vertices misses strictly more than s edges, which keeps it in class 1.
inline std::optional<EdgeDeficit> case2_edge_deficit(const Signature& s) {
    const bool all_even = std::all_of(s.exponents.begin(), s.exponents.end(),
                                      [](unsigned e) { return e % 2 == 0; });
    if (!all_even) return std::nullopt;
    EdgeDeficit d;
    d.vertices = vertex_count_of(s);
    d.s_bound = (d.vertices - 1) / 2;
    d.complete_edges = d.vertices * (d.vertices - 1) / 2;
    d.actual_edges = edge_count_closed_form(s);
    d.missing_edges = d.complete_edges - d.actual_edges;
    d.confirms = d.missing_edges > d.s_bound;
    return d;
}

} // namespace igz
