#include <catch2/catch_amalgamated.hpp>

#include "igz/export.hpp"

using namespace igz;

namespace {

Signature sig(std::initializer_list<unsigned> e) { return Signature(std::vector<unsigned>(e)); }

std::size_t count_occurrences(const std::string& hay, const std::string& needle) {
    std::size_t n = 0, pos = 0;
    while ((pos = hay.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

} // namespace

TEST_CASE("DOT export of G(Z_12)") {
    const std::string dot = to_dot(build_graph_for_n(12));
    CHECK(dot.rfind("graph \"G(Z_12)\" {", 0) == 0);
    CHECK(dot.back() == '\n');
    CHECK(count_occurrences(dot, ";\n") == 8);   // four node statements, four edges
    CHECK(count_occurrences(dot, " -- ") == 4);
    CHECK(dot.find("\"3\" -- \"6\";") != std::string::npos);
    CHECK(dot.find("\"3\" -- \"4\"") == std::string::npos);
}

TEST_CASE("DOT export of isolated vertices and signature labels") {
    const std::string dot6 = to_dot(build_graph_for_n(6));
    CHECK(count_occurrences(dot6, " -- ") == 0);
    CHECK(count_occurrences(dot6, ";\n") == 2); // two isolated nodes

    const std::string dotk4 = to_dot(build_graph(sig({5})));
    CHECK(count_occurrences(dotk4, " -- ") == 6); // K4
    CHECK(dotk4.find("\"[1]\";") != std::string::npos);
}

TEST_CASE("JSON adjacency document") {
    const Graph g = build_graph_for_n(12);
    const json doc = graph_to_json(g);
    CHECK(doc.at("n") == 12);
    CHECK(doc.at("signature") == std::vector<unsigned>{1, 2});
    CHECK(doc.at("labels") == std::vector<std::string>{"2", "4", "3", "6"});
    const auto adj = doc.at("adjacency");
    REQUIRE(adj.size() == 4);
    // symmetric, sorted neighbour lists
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<std::size_t> row = adj[i].get<std::vector<std::size_t>>();
        CHECK(std::is_sorted(row.begin(), row.end()));
        for (std::size_t j : row) {
            auto back = adj[j].get<std::vector<std::size_t>>();
            CHECK(std::find(back.begin(), back.end(), i) != back.end());
        }
    }
    u64 edges = 0;
    for (const auto& row : adj) edges += row.size();
    CHECK(edges / 2 == g.edge_count());
}

TEST_CASE("exports are deterministic") {
    const Graph a = build_graph_for_n(60);
    const Graph b = build_graph_for_n(60);
    CHECK(to_dot(a) == to_dot(b));
    CHECK(graph_to_json(a).dump(2) == graph_to_json(b).dump(2));
}
