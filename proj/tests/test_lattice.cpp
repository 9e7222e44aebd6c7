#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "igz/lattice.hpp"

using namespace igz;

namespace {

// Element-level oracle: the subgroup dZ_n \cap eZ_n as a residue set,
// reported by its least positive element (0 for the zero subgroup).
u64 subgroup_intersection_generator(u64 n, u64 d, u64 e) {
    for (u64 x = d; x < n; x += d)
        if (x % e == 0) return x;
    return 0;
}

Signature sig(std::initializer_list<unsigned> e) { return Signature(std::vector<unsigned>(e)); }

IdealCode code(std::initializer_list<unsigned> a) { return IdealCode{std::vector<unsigned>(a)}; }

std::map<u64, IdealCode> divisor_index(const Graph& g) {
    REQUIRE(!g.divisors.empty());
    std::map<u64, IdealCode> out;
    for (std::size_t i = 0; i < g.size(); ++i) out[g.divisors[i]] = g.vertices[i];
    return out;
}

} // namespace

TEST_CASE("vertex enumeration matches the counting identity") {
    CHECK(enumerate_vertices(sig({1, 2})).size() == 4);
    CHECK(enumerate_vertices(sig({1})).empty());
    CHECK(enumerate_vertices(sig({1, 1, 1})).size() == 6);
    for (auto s : {sig({3}), sig({2, 2}), sig({1, 2, 3}), sig({1, 1, 1, 1})}) {
        const auto verts = enumerate_vertices(s);
        CHECK(verts.size() == vertex_count_of(s));
        CHECK(std::is_sorted(verts.begin(), verts.end()));
        std::set<IdealCode> uniq(verts.begin(), verts.end());
        CHECK(uniq.size() == verts.size());
        for (std::size_t i = 0; i < verts.size(); ++i) CHECK(vertex_id(s, verts[i]) == i);
    }
}

TEST_CASE("divisor labels for n=12 come from the slot primes") {
    const Graph g = build_graph_for_n(12);
    CHECK(g.divisors == std::vector<u64>{2, 4, 3, 6});
    std::set<u64> ds(g.divisors.begin(), g.divisors.end());
    CHECK(ds == std::set<u64>{2, 3, 4, 6});
}

TEST_CASE("intersect is the componentwise maximum / divisor lcm") {
    CHECK(intersect(code({1, 0}), code({0, 2})) == code({1, 2}));
    const IdealCode i = code({1, 0, 2});
    CHECK(intersect(i, i) == i);
    CHECK(intersect(code({1, 0, 0}), code({0, 1, 0})) == code({1, 1, 0}));
}

TEST_CASE("intersect agrees with the element-level subgroup oracle") {
    for (u64 n : {12ull, 30ull, 360ull, 2310ull, 9240ull}) {
        const auto slots = assign_slots(factorize(n));
        const Graph g = build_graph(slots.sig, kDefaultVertexCap, &slots.primes, n);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = i; j < g.size(); ++j) {
                const IdealCode meet = intersect(g.vertices[i], g.vertices[j]);
                const u64 lcm_div = divisor_of(meet, slots.primes);
                const u64 gen = subgroup_intersection_generator(n, g.divisors[i], g.divisors[j]);
                CHECK(lcm_div == std::lcm(g.divisors[i], g.divisors[j]));
                CHECK(gen == (lcm_div == n ? 0 : lcm_div));
            }
    }
    CHECK(subgroup_intersection_generator(30, 2, 3) == 6);
    CHECK(subgroup_intersection_generator(12, 3, 4) == 0);
}

TEST_CASE("adjacency examples in Z_12 and Z_30") {
    const Graph g12 = build_graph_for_n(12);
    const auto by12 = divisor_index(g12);
    CHECK(adjacent(g12.sig, by12.at(2), by12.at(6)));
    CHECK_FALSE(adjacent(g12.sig, by12.at(3), by12.at(4)));
    const Graph g30 = build_graph_for_n(30);
    const auto by30 = divisor_index(g30);
    CHECK_FALSE(adjacent(g30.sig, by30.at(2), by30.at(15)));
    CHECK_THROWS_AS(adjacent(g12.sig, by12.at(2), by12.at(2)), std::invalid_argument);
}

TEST_CASE("edge set of G(Z_12)") {
    const Graph g = build_graph_for_n(12);
    std::set<std::pair<u64, u64>> edges;
    for (std::size_t i = 0; i < g.size(); ++i)
        g.adj[i].for_each([&](std::size_t j) {
            if (j > i)
                edges.insert({std::min(g.divisors[i], g.divisors[j]), std::max(g.divisors[i], g.divisors[j])});
        });
    CHECK(edges == std::set<std::pair<u64, u64>>{{2, 3}, {2, 4}, {2, 6}, {3, 6}});
}

TEST_CASE("null graph and complete graph shapes") {
    const Graph null2 = build_graph(sig({1, 1}));
    CHECK(null2.size() == 2);
    CHECK(null2.edge_count() == 0);
    const Graph k4 = build_graph(sig({5}));
    CHECK(k4.size() == 4);
    CHECK(k4.edge_count() == 6);
    for (std::size_t i = 0; i < 4; ++i) CHECK(k4.degree(i) == 3);
}

TEST_CASE("closed-form degree equals counted degree") {
    const Graph g30 = build_graph_for_n(30);
    const auto by30 = divisor_index(g30);
    CHECK(degree_closed_form(g30.sig, by30.at(2)) == 4);
    for (std::size_t i = 0; i < g30.size(); ++i)
        CHECK(degree_closed_form(g30.sig, g30.vertices[i]) == g30.degree(i));
    // squarefree m=3: single-prime divisors hit the maximum degree 2^m - 4
    for (u64 p : {2ull, 3ull, 5ull}) CHECK(degree_closed_form(g30.sig, by30.at(p)) == 4);
    const Graph g12 = build_graph_for_n(12);
    CHECK(degree_closed_form(g12.sig, divisor_index(g12).at(3)) == 2);
}

TEST_CASE("max degree") {
    CHECK(max_degree(sig({1, 1, 1})) == 4);
    CHECK(max_degree(sig({1, 1})) == 0);
    CHECK(max_degree(sig({2, 2})) == 6);
    for (auto s : {sig({1, 2}), sig({2, 2, 2}), sig({1, 1, 2}), sig({4})}) {
        const Graph g = build_graph(s);
        std::size_t counted = 0;
        for (std::size_t i = 0; i < g.size(); ++i) counted = std::max(counted, g.degree(i));
        CHECK(max_degree(s) == counted);
    }
}

TEST_CASE("edge count closed form matches built graphs") {
    for (auto s : {sig({1, 2}), sig({1, 1}), sig({5}), sig({2, 2}), sig({1, 1, 1, 1}), sig({1, 2, 3})}) {
        const Graph g = build_graph(s);
        CHECK(edge_count_closed_form(s) == g.edge_count());
    }
}

TEST_CASE("vertex cap is enforced with a clear error") {
    CHECK_THROWS_AS(build_graph(sig({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 4096), std::length_error);
    CHECK_NOTHROW(build_graph(sig({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}), 4096));
}

TEST_CASE("full-support vertices are adjacent to everything") {
    for (auto s : {sig({2, 2}), sig({1, 2}), sig({2, 2, 2})}) {
        const Graph g = build_graph(s);
        const u64 full = (u64(1) << s.m()) - 1;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g.supports[i] == full) CHECK(g.degree(i) == g.size() - 1);
    }
}
