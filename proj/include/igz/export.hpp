#pragma once

/// Graph serialization: undirected DOT and a JSON adjacency-list
/// document. Vertex labels are divisors when a modulus is attached,
/// exponent vectors otherwise; both follow canonical vertex order.

#include <string>

#include <json.hpp>

#include "igz/lattice.hpp"
#include "igz/version.hpp"

namespace igz {

using json = nlohmann::ordered_json;

inline std::string to_dot(const Graph& g) {
    std::string name = g.n ? "G(Z_" + std::to_string(*g.n) + ")" : "G";
    std::string out = "graph \"" + name + "\" {\n";
    for (std::size_t i = 0; i < g.size(); ++i) out += "  \"" + g.label(i) + "\";\n";
    for (std::size_t i = 0; i < g.size(); ++i)
        g.adj[i].for_each([&](std::size_t j) {
            if (j > i) out += "  \"" + g.label(i) + "\" -- \"" + g.label(j) + "\";\n";
        });
    out += "}\n";
    return out;
}

inline json graph_to_json(const Graph& g) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;
    if (g.n) doc["n"] = *g.n;
    doc["signature"] = g.sig.exponents;
    json labels = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) labels.push_back(g.label(i));
    doc["labels"] = labels;
    json adjacency = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        json row = json::array();
        g.adj[i].for_each([&](std::size_t j) { row.push_back(j); });
        adjacency.push_back(row);
    }
    doc["adjacency"] = adjacency;
    return doc;
}

} // namespace igz
