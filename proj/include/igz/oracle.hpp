#pragma once

/// Exact brute-force ground truth, independent of the constructions it
/// certifies. Every oracle returns an explicit "undecided" when its
/// budget runs out — never a guess.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "igz/lattice.hpp"

namespace igz {

struct OracleBudget {
    std::size_t max_vertices = 200;
    double seconds = 30.0;
    std::size_t max_edges = 80; // exact edge classification only

    static OracleBudget clique_default() { return {200, 30.0, 80}; }
    static OracleBudget edge_default() { return {24, 30.0, 80}; }
};

namespace detail {

struct TimeUp {};

class Deadline {
  public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds))) {}
    void tick() {
        if (++n_ % 4096 == 0 && std::chrono::steady_clock::now() > end_) throw TimeUp{};
    }

  private:
    std::chrono::steady_clock::time_point end_;
    std::uint64_t n_ = 0;
};

} // namespace detail

struct CliqueOutcome {
    bool decided = false;
    u64 omega = 0;
    std::vector<std::size_t> witness;
};

/// Exact maximum clique by branch and bound over bitset candidate sets,
/// with a greedy-coloring upper bound at every node (Tomita style).
inline CliqueOutcome max_clique_exact(const std::vector<Bitset>& adj, const OracleBudget& budget = OracleBudget::clique_default()) {
    const std::size_t n = adj.size();
    if (n > budget.max_vertices) return {};
    if (n == 0) return {true, 0, {}};

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

    std::vector<std::size_t> best, current;
    // greedy warm start in degree order
    {
        Bitset cand(n);
        for (std::size_t v = 0; v < n; ++v) cand.set(v);
        for (std::size_t v : order)
            if (cand.test(v)) {
                best.push_back(v);
                cand &= adj[v];
            }
    }

    detail::Deadline deadline(budget.seconds);
    std::vector<int> color(n);

    auto expand = [&](auto&& self, Bitset P) -> void {
        deadline.tick();
        // greedy coloring of the candidates, in static degree order
        std::vector<std::size_t> verts;
        verts.reserve(P.count());
        for (std::size_t v : order)
            if (P.test(v)) verts.push_back(v);
        if (verts.empty()) {
            if (current.size() > best.size()) best = current;
            return;
        }
        std::vector<Bitset> classes;
        for (std::size_t v : verts) {
            bool placed = false;
            for (std::size_t c = 0; c < classes.size(); ++c)
                if (!classes[c].intersects(adj[v])) {
                    classes[c].set(v);
                    color[v] = static_cast<int>(c);
                    placed = true;
                    break;
                }
            if (!placed) {
                classes.emplace_back(n);
                classes.back().set(v);
                color[v] = static_cast<int>(classes.size()) - 1;
            }
        }
        std::stable_sort(verts.begin(), verts.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
        for (std::size_t k = verts.size(); k-- > 0;) {
            const std::size_t v = verts[k];
            if (current.size() + static_cast<std::size_t>(color[v]) + 1 <= best.size()) return;
            current.push_back(v);
            self(self, P & adj[v]);
            current.pop_back();
            P.reset(v);
        }
    };

    try {
        Bitset all(n);
        for (std::size_t v = 0; v < n; ++v) all.set(v);
        expand(expand, all);
    } catch (detail::TimeUp) {
        return {};
    }
    std::sort(best.begin(), best.end());
    return {true, best.size(), best};
}

inline CliqueOutcome max_clique_exact(const Graph& g, const OracleBudget& budget = OracleBudget::clique_default()) {
    return max_clique_exact(g.adj, budget);
}

/// DSATUR greedy coloring; returns the number of colors used. Used as an
/// upper bound seed, not as ground truth.
inline int greedy_vertex_coloring(const std::vector<Bitset>& adj, std::vector<int>* out = nullptr) {
    const std::size_t n = adj.size();
    std::vector<int> color(n, -1);
    std::vector<std::size_t> satdeg(n, 0);
    std::vector<std::vector<bool>> seen(n);
    int used = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (pick == n || satdeg[v] > satdeg[pick] ||
                (satdeg[v] == satdeg[pick] && adj[v].count() > adj[pick].count()))
                pick = v;
        }
        std::vector<bool> busy(static_cast<std::size_t>(used) + 2, false);
        adj[pick].for_each([&](std::size_t u) {
            if (color[u] >= 0 && static_cast<std::size_t>(color[u]) < busy.size()) busy[color[u]] = true;
        });
        int c = 0;
        while (busy[c]) ++c;
        color[pick] = c;
        used = std::max(used, c + 1);
        adj[pick].for_each([&](std::size_t u) {
            if (color[u] >= 0) return;
            if (seen[u].empty()) seen[u].assign(n, false);
            if (!seen[u][static_cast<std::size_t>(c)]) {
                seen[u][static_cast<std::size_t>(c)] = true;
                ++satdeg[u];
            }
        });
    }
    if (out) *out = std::move(color);
    return used;
}

struct ChromaticOutcome {
    bool decided = false;
    u64 chi = 0;
    std::vector<int> colors; // witness from the search; empty when the
                             // answer came straight from the caller's bounds
};

namespace detail {

inline bool k_colorable(const std::vector<Bitset>& adj, int k, const std::vector<std::size_t>& seed_clique,
                        Deadline& deadline, std::vector<int>* witness = nullptr) {
    const std::size_t n = adj.size();
    if (k <= 0) return n == 0;
    std::vector<int> color(n, -1);
    int max_used = -1;
    if (static_cast<std::size_t>(k) < seed_clique.size()) return false;
    // a clique takes distinct colors in every proper coloring, so pinning
    // them is symmetry breaking, not a restriction
    for (std::size_t i = 0; i < seed_clique.size(); ++i) {
        color[seed_clique[i]] = static_cast<int>(i);
        max_used = static_cast<int>(i);
    }
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();

    auto feasible_mask = [&](std::size_t v) {
        u64 busy = 0;
        adj[v].for_each([&](std::size_t u) {
            if (color[u] >= 0) busy |= u64(1) << color[u];
        });
        return busy;
    };

    auto rec = [&](auto&& self, std::size_t colored, int used) -> bool {
        deadline.tick();
        if (colored == n) return true;
        // most saturated first, then degree
        std::size_t pick = n;
        u64 pick_busy = 0;
        int pick_sat = -1;
        for (std::size_t v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            const u64 busy = feasible_mask(v);
            const int sat = __builtin_popcountll(busy);
            if (sat > pick_sat || (sat == pick_sat && deg[v] > deg[pick])) {
                pick = v;
                pick_sat = sat;
                pick_busy = busy;
            }
        }
        const int limit = std::min(k - 1, used + 1);
        for (int c = 0; c <= limit; ++c) {
            if (pick_busy >> c & 1) continue;
            color[pick] = c;
            if (self(self, colored + 1, std::max(used, c)))
                return true;
            color[pick] = -1;
        }
        return false;
    };
    const bool ok = rec(rec, seed_clique.size(), max_used);
    if (ok && witness) *witness = color;
    return ok;
}

} // namespace detail

/// Exact chromatic number by iterative deepening from the clique lower
/// bound; `upper` must come with a witness coloring on the caller's side.
inline ChromaticOutcome chromatic_exact(const std::vector<Bitset>& adj, u64 lower, u64 upper,
                                        const OracleBudget& budget = OracleBudget::clique_default(),
                                        const std::vector<std::size_t>& seed_clique = {}) {
    const std::size_t n = adj.size();
    if (n > budget.max_vertices) return {};
    if (n == 0) return {true, 0, {}};
    lower = std::max<u64>(lower, 1);
    if (upper > static_cast<u64>(n)) upper = static_cast<u64>(n);
    if (upper < lower) return {}; // malformed bounds
    if (lower == upper) return {true, lower, {}};
    detail::Deadline deadline(budget.seconds);
    try {
        // color masks are 64-bit, so only candidate counts k <= 64 are searchable
        const u64 search_top = std::min<u64>(upper - 1, 64);
        std::vector<int> witness;
        for (u64 k = lower; k <= search_top; ++k)
            if (detail::k_colorable(adj, static_cast<int>(k), seed_clique, deadline, &witness))
                return {true, k, std::move(witness)};
    } catch (detail::TimeUp) {
        return {};
    }
    if (upper - 1 <= 64) return {true, upper, {}};
    return {};
}

inline ChromaticOutcome chromatic_exact(const Graph& g, u64 lower, u64 upper,
                                        const OracleBudget& budget = OracleBudget::clique_default(),
                                        const std::vector<std::size_t>& seed_clique = {}) {
    return chromatic_exact(g.adj, lower, upper, budget, seed_clique);
}

inline bool is_proper_vertex_coloring(const std::vector<Bitset>& adj, const std::vector<int>& colors) {
    if (colors.size() != adj.size()) return false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (colors[v] < 0) return false;
        bool ok = true;
        adj[v].for_each([&](std::size_t u) {
            if (colors[u] == colors[v]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// edge coloring

struct EdgeColoring {
    std::vector<std::pair<std::size_t, std::size_t>> edges; // canonical order, i < j
    std::vector<int> colors;                                // per edge
    int colors_used = 0;
};

inline std::vector<std::pair<std::size_t, std::size_t>> edge_list(const std::vector<Bitset>& adj) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t i = 0; i < adj.size(); ++i)
        adj[i].for_each([&](std::size_t j) {
            if (j > i) edges.emplace_back(i, j);
        });
    return edges;
}

inline bool is_proper_edge_coloring(const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                    const std::vector<int>& colors, std::size_t n_vertices) {
    if (colors.size() != edges.size()) return false;
    for (int c : colors)
        if (c < 0) return false;
    std::vector<std::vector<int>> at(n_vertices);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        for (std::size_t v : {edges[e].first, edges[e].second}) {
            for (int c : at[v])
                if (c == colors[e]) return false;
            at[v].push_back(colors[e]);
        }
    }
    return true;
}

/// Constructive Misra-Gries fan/rotation coloring: proper, at most
/// Delta+1 colors, deterministic.
inline EdgeColoring greedy_edge_coloring(const std::vector<Bitset>& adj) {
    const std::size_t n = adj.size();
    EdgeColoring out;
    out.edges = edge_list(adj);
    out.colors.assign(out.edges.size(), -1);
    if (out.edges.empty()) return out;

    std::size_t delta = 0;
    for (std::size_t v = 0; v < n; ++v) delta = std::max(delta, adj[v].count());
    const int palette = static_cast<int>(delta) + 1;

    // slot[v][c] = edge currently colored c at v, or -1
    std::vector<std::vector<int>> slot(n, std::vector<int>(static_cast<std::size_t>(palette), -1));
    std::vector<std::vector<int>> incident(n); // edge ids per vertex
    for (std::size_t e = 0; e < out.edges.size(); ++e) {
        incident[out.edges[e].first].push_back(static_cast<int>(e));
        incident[out.edges[e].second].push_back(static_cast<int>(e));
    }
    auto other = [&](int e, std::size_t v) {
        const auto& [a, b] = out.edges[static_cast<std::size_t>(e)];
        return a == v ? b : a;
    };
    auto free_color = [&](std::size_t v) {
        for (int c = 0; c < palette; ++c)
            if (slot[v][static_cast<std::size_t>(c)] < 0) return c;
        throw std::logic_error("no free color within Delta+1 palette");
    };
    auto set_color = [&](int e, int c) {
        const auto& [a, b] = out.edges[static_cast<std::size_t>(e)];
        if (out.colors[static_cast<std::size_t>(e)] >= 0) {
            slot[a][static_cast<std::size_t>(out.colors[static_cast<std::size_t>(e)])] = -1;
            slot[b][static_cast<std::size_t>(out.colors[static_cast<std::size_t>(e)])] = -1;
        }
        out.colors[static_cast<std::size_t>(e)] = c;
        if (c >= 0) {
            slot[a][static_cast<std::size_t>(c)] = e;
            slot[b][static_cast<std::size_t>(c)] = e;
        }
    };

    for (std::size_t e0 = 0; e0 < out.edges.size(); ++e0) {
        const std::size_t u = out.edges[e0].first;
        // maximal fan from u starting at the other endpoint
        std::vector<std::size_t> fan = {out.edges[e0].second};
        std::vector<int> fan_edge = {static_cast<int>(e0)};
        std::vector<bool> in_fan(n, false);
        in_fan[fan[0]] = true;
        for (;;) {
            const int cl = free_color(fan.back());
            const int e = slot[u][static_cast<std::size_t>(cl)];
            if (e < 0 || in_fan[other(e, u)]) break;
            fan.push_back(other(e, u));
            fan_edge.push_back(e);
            in_fan[fan.back()] = true;
        }
        const int c = free_color(u);
        const int d = free_color(fan.back());
        if (c != d && slot[u][static_cast<std::size_t>(d)] >= 0) {
            // invert the maximal (d,c)-path starting at u; uncolor the whole
            // path before recoloring so the slot tables never hold stale ids
            std::vector<int> path;
            std::size_t x = u;
            int want = d;
            for (;;) {
                const int e = slot[x][static_cast<std::size_t>(want)];
                if (e < 0) break;
                path.push_back(e);
                x = other(e, x);
                want = (want == d) ? c : d;
            }
            std::vector<int> flipped(path.size());
            for (std::size_t k = 0; k < path.size(); ++k)
                flipped[k] = out.colors[static_cast<std::size_t>(path[k])] == c ? d : c;
            for (int e : path) set_color(e, -1);
            for (std::size_t k = 0; k < path.size(); ++k) set_color(path[k], flipped[k]);
        }
        // rotate the shortest prefix that is still a fan and ends where d is free
        std::size_t w_idx = fan.size();
        for (std::size_t i = 0; i < fan.size(); ++i) {
            if (i > 0) {
                const int ce = out.colors[static_cast<std::size_t>(fan_edge[i])];
                if (ce < 0 || slot[fan[i - 1]][static_cast<std::size_t>(ce)] >= 0) break; // prefix no longer a fan
            }
            if (slot[fan[i]][static_cast<std::size_t>(d)] < 0) {
                w_idx = i;
                break;
            }
        }
        if (w_idx == fan.size()) throw std::logic_error("fan rotation target not found");
        std::vector<int> shifted(w_idx + 1);
        for (std::size_t i = 0; i < w_idx; ++i) shifted[i] = out.colors[static_cast<std::size_t>(fan_edge[i + 1])];
        shifted[w_idx] = d;
        for (std::size_t i = 0; i <= w_idx; ++i) set_color(fan_edge[i], -1);
        for (std::size_t i = 0; i <= w_idx; ++i) set_color(fan_edge[i], shifted[i]);
    }
    int used = 0;
    for (int c : out.colors) used = std::max(used, c + 1);
    out.colors_used = used;
    return out;
}

inline EdgeColoring greedy_edge_coloring(const Graph& g) { return greedy_edge_coloring(g.adj); }

enum class EdgeClassKind { class1, class2 };

struct EdgeClassOutcome {
    bool decided = false;
    EdgeClassKind kind = EdgeClassKind::class1;
    u64 chi_prime = 0;
    EdgeColoring witness; // proper coloring with chi_prime colors when decided
};

namespace detail {

/// Does a proper Delta-edge-coloring exist? Backtracking over edges,
/// most-constrained edge first, with one max-degree star pinned to the
/// identity permutation of colors.
inline bool delta_edge_coloring_search(const std::vector<Bitset>& adj,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                                       int delta, Deadline& deadline, std::vector<int>& colors) {
    const std::size_t n = adj.size();
    const std::size_t m = edges.size();
    if (delta > 63) throw TimeUp{}; // beyond the exact oracle's intended range
    colors.assign(m, -1);
    std::vector<u64> busy(n, 0); // colors used at each vertex
    const u64 all_colors = (delta == 64) ? ~u64(0) : ((u64(1) << delta) - 1);

    std::vector<std::size_t> deg(n, 0);
    for (const auto& [a, b] : edges) ++deg[a], ++deg[b];

    std::size_t star_center = 0;
    for (std::size_t v = 1; v < n; ++v)
        if (deg[v] > deg[star_center]) star_center = v;
    std::size_t assigned = 0;
    int next = 0;
    for (std::size_t e = 0; e < m; ++e)
        if (edges[e].first == star_center || edges[e].second == star_center) {
            colors[e] = next;
            busy[edges[e].first] |= u64(1) << next;
            busy[edges[e].second] |= u64(1) << next;
            ++next;
            ++assigned;
        }

    auto rec = [&](auto&& self, std::size_t done) -> bool {
        deadline.tick();
        if (done == m) return true;
        std::size_t pick = m;
        int pick_n = delta + 1;
        u64 pick_free = 0;
        for (std::size_t e = 0; e < m; ++e) {
            if (colors[e] >= 0) continue;
            const u64 free = all_colors & ~(busy[edges[e].first] | busy[edges[e].second]);
            const int cnt = __builtin_popcountll(free);
            if (cnt == 0) return false;
            if (cnt < pick_n ||
                (cnt == pick_n && deg[edges[e].first] + deg[edges[e].second] >
                                      deg[edges[pick].first] + deg[edges[pick].second])) {
                pick = e;
                pick_n = cnt;
                pick_free = free;
            }
        }
        u64 free = pick_free;
        while (free) {
            const int c = __builtin_ctzll(free);
            free &= free - 1;
            colors[pick] = c;
            busy[edges[pick].first] |= u64(1) << c;
            busy[edges[pick].second] |= u64(1) << c;
            if (self(self, done + 1)) return true;
            busy[edges[pick].first] &= ~(u64(1) << c);
            busy[edges[pick].second] &= ~(u64(1) << c);
            colors[pick] = -1;
        }
        return false;
    };
    return rec(rec, assigned);
}

} // namespace detail

/// class1 iff a proper Delta-edge-coloring exists. A matching-capacity
/// count settles the dense class-2 cases without search.
inline EdgeClassOutcome edge_class_exact(const std::vector<Bitset>& adj,
                                         const OracleBudget& budget = OracleBudget::edge_default()) {
    const std::size_t n = adj.size();
    if (n > budget.max_vertices) return {};
    auto edges = edge_list(adj);
    if (edges.size() > budget.max_edges) return {};
    if (edges.empty()) {
        EdgeClassOutcome out{true, EdgeClassKind::class1, 0, {}};
        return out;
    }
    std::size_t delta = 0;
    for (std::size_t v = 0; v < n; ++v) delta = std::max(delta, adj[v].count());

    // each color class is a matching of at most floor(n/2) edges
    if (edges.size() > delta * (n / 2)) {
        EdgeClassOutcome out{true, EdgeClassKind::class2, delta + 1, greedy_edge_coloring(adj)};
        return out;
    }
    EdgeColoring mg = greedy_edge_coloring(adj);
    if (static_cast<std::size_t>(mg.colors_used) <= delta) {
        return {true, EdgeClassKind::class1, delta, std::move(mg)};
    }
    detail::Deadline deadline(budget.seconds);
    std::vector<int> colors;
    try {
        if (detail::delta_edge_coloring_search(adj, edges, static_cast<int>(delta), deadline, colors)) {
            EdgeColoring witness{edges, colors, static_cast<int>(delta)};
            return {true, EdgeClassKind::class1, delta, std::move(witness)};
        }
        return {true, EdgeClassKind::class2, delta + 1, std::move(mg)};
    } catch (detail::TimeUp) {
        return {};
    }
}

inline EdgeClassOutcome edge_class_exact(const Graph& g, const OracleBudget& budget = OracleBudget::edge_default()) {
    return edge_class_exact(g.adj, budget);
}

} // namespace igz
