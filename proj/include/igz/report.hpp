#pragma once

/// Analysis reports, certificates, and the sweep driver.
///
/// Reports are deterministic byte-for-byte for fixed inputs, flags and
/// version: ordered JSON, canonical vertex order, no wall-clock content.
/// Everything keyed by the signature lives under "structure", so two
/// moduli with the same signature produce byte-identical structure
/// sections; the modulus, its factorization and the divisor labels sit
/// outside.

#include <atomic>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "igz/edge_class.hpp"
#include "igz/export.hpp"
#include "igz/family.hpp"
#include "igz/formulas.hpp"
#include "igz/oracle.hpp"
#include "igz/version.hpp"

namespace igz {

struct AnalyzeOptions {
    bool with_oracle = false;
    OracleBudget budget = OracleBudget::clique_default();
    OracleBudget edge_budget = OracleBudget::edge_default();
    std::size_t vertex_cap = kDefaultVertexCap;
};

struct AnalysisResult {
    json doc;
    bool failed = false;
};

namespace detail {

inline json formula_json(const FormulaResult& f) {
    json j;
    j["name"] = f.name;
    j["applicable"] = f.applicable;
    if (f.value) j["value"] = *f.value;
    return j;
}

inline json edge_class_json(const EdgeClassReport& r) {
    json j;
    j["delta"] = r.delta;
    j["classification"] = to_string(r.classification);
    j["reason"] = to_string(r.reason);
    j["chi_prime"] = r.chi_prime;
    return j;
}

/// The convention split: the classifier reports edgeless graphs as
/// "trivial" with chi' = 0, while the oracle grades them class1 with 0
/// colors. Everything else must match exactly.
inline bool edge_class_matches(const EdgeClassReport& c, const EdgeClassOutcome& o, u64 edges) {
    if (!o.decided) return true;
    if (c.classification == EdgeClassification::trivial)
        return edges == 0 && o.kind == EdgeClassKind::class1 && o.chi_prime == 0;
    if (c.classification == EdgeClassification::class1)
        return o.kind == EdgeClassKind::class1 && o.chi_prime == c.chi_prime;
    return o.kind == EdgeClassKind::class2 && o.chi_prime == c.chi_prime;
}

} // namespace detail

inline AnalysisResult analyze(const Signature& sig, const std::optional<u64>& n,
                              const std::vector<u64>* slot_primes, const AnalyzeOptions& opt) {
    AnalysisResult res;
    json& doc = res.doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;

    const u64 vc = vertex_count_of(sig);
    const u64 edges = edge_count_closed_form(sig);
    const u64 delta = max_degree(sig);
    const u64 w = omega(sig);

    if (n) doc["n"] = *n;
    if (n && slot_primes) {
        Factorization f = factorize(*n);
        json fact = json::array();
        for (const auto& pp : f) fact.push_back({pp.prime, pp.exponent});
        doc["factorization"] = fact;
    }

    std::optional<Graph> graph;
    std::optional<ColoringCertificate> cert;
    std::vector<std::string> notes;
    bool failed = false;

    if (vc <= opt.vertex_cap) {
        cert = build_coloring(sig);
        std::vector<IdealCode> verts = enumerate_vertices(sig);
        json labels = json::array();
        for (const auto& v : verts) {
            if (slot_primes) labels.push_back(std::to_string(divisor_of(v, *slot_primes)));
            else {
                std::string l = "[";
                for (std::size_t k = 0; k < v.a.size(); ++k) {
                    if (k) l += ",";
                    l += std::to_string(v.a[k]);
                }
                labels.push_back(l + "]");
            }
        }
        doc["labels"] = labels;
    } else {
        notes.push_back("vertex list not materialized: vertex count exceeds cap " +
                        std::to_string(opt.vertex_cap));
    }

    const u64 chi = cert ? cert->chi : w;
    const EdgeClassReport ec = classify(sig);
    if (ec.classification == EdgeClassification::trivial)
        notes.push_back("edgeless graph: chi' reported as 0 (some conventions assign Delta+1 to null graphs)");

    json structure;
    structure["signature"] = sig.exponents;
    structure["vertex_count"] = vc;
    structure["edge_count"] = edges;
    structure["max_degree"] = delta;
    structure["omega"] = w;
    structure["chi"] = chi;
    structure["weakly_perfect"] = (w == chi);
    structure["clique_size"] = cert ? cert->clique.size() : static_cast<std::size_t>(w);

    json formulas = json::array();
    for (const FormulaResult& f : evaluate_all_formulas(sig)) {
        formulas.push_back(detail::formula_json(f));
        if (f.applicable && *f.value != w) failed = true;
    }
    structure["formulas"] = formulas;
    structure["edge_class"] = detail::edge_class_json(ec);

    if (opt.with_oracle) {
        json osec;
        osec["budget"] = {{"max_vertices", opt.budget.max_vertices},
                          {"seconds", opt.budget.seconds},
                          {"edge_max_vertices", opt.edge_budget.max_vertices},
                          {"max_edges", opt.edge_budget.max_edges}};
        if (vc <= opt.vertex_cap && vc <= opt.budget.max_vertices) {
            graph = build_graph(sig, opt.vertex_cap);
            if (cert && !validate(*cert, *graph)) failed = true;
            const CliqueOutcome co = max_clique_exact(*graph, opt.budget);
            if (co.decided) {
                osec["omega"] = {{"status", "decided"}, {"value", co.omega}};
                if (co.omega != w) failed = true;
                const ChromaticOutcome ch = chromatic_exact(*graph, co.omega, chi, opt.budget, co.witness);
                if (ch.decided) {
                    osec["chi"] = {{"status", "decided"}, {"value", ch.chi}};
                    if (ch.chi != chi) failed = true;
                } else {
                    osec["chi"] = {{"status", "undecided"}};
                }
            } else {
                osec["omega"] = {{"status", "undecided"}};
                osec["chi"] = {{"status", "undecided"}};
            }
            const EdgeClassOutcome eo = edge_class_exact(*graph, opt.edge_budget);
            if (eo.decided) {
                osec["edge_class"] = {{"status", "decided"},
                                      {"classification", eo.kind == EdgeClassKind::class1 ? "class1" : "class2"},
                                      {"chi_prime", eo.chi_prime}};
                if (!detail::edge_class_matches(ec, eo, edges)) failed = true;
            } else {
                osec["edge_class"] = {{"status", "undecided"}};
            }
        } else {
            osec["omega"] = {{"status", "undecided"}};
            osec["chi"] = {{"status", "undecided"}};
            osec["edge_class"] = {{"status", "undecided"}};
        }
        osec["agreement"] = failed ? "FAILED" : "ok";
        structure["oracle"] = osec;
    }

    structure["notes"] = notes;
    structure["verdict"] = failed ? "FAILED" : "ok";
    doc["structure"] = structure;
    res.failed = failed;
    return res;
}

inline AnalysisResult analyze_n(u64 n, const AnalyzeOptions& opt) {
    const SlotAssignment slots = assign_slots(factorize(n));
    return analyze(slots.sig, n, &slots.primes, opt);
}

inline AnalysisResult analyze_signature(const Signature& sig, const AnalyzeOptions& opt) {
    return analyze(sig, std::nullopt, nullptr, opt);
}

// ---------------------------------------------------------------------------
// certificates

inline json certificate_json(const Signature& sig, const std::optional<u64>& n,
                             const std::vector<u64>* slot_primes, const AnalyzeOptions& opt) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;
    if (n) doc["n"] = *n;
    doc["signature"] = sig.exponents;

    const Graph g = build_graph(sig, opt.vertex_cap, slot_primes, n);
    const ColoringCertificate cert = build_coloring(sig);
    if (!validate(cert, g)) throw std::logic_error("constructed certificate failed validation");

    doc["omega"] = cert.omega;
    doc["chi"] = cert.chi;
    json clique = json::array();
    for (std::size_t id : cert.clique) clique.push_back(g.label(id));
    doc["clique"] = clique;
    json colors;
    for (std::size_t v = 0; v < g.size(); ++v) colors[g.label(v)] = cert.colors[v];
    doc["colors"] = colors;

    const EdgeClassReport ec = classify(sig);
    doc["edge_class"] = detail::edge_class_json(ec);

    const EdgeClassOutcome eo = edge_class_exact(g, opt.edge_budget);
    const EdgeColoring* coloring = nullptr;
    EdgeColoring fallback;
    std::string edge_note;
    if (eo.decided && !eo.witness.edges.empty()) {
        coloring = &eo.witness;
    } else if (g.edge_count() > 0) {
        fallback = greedy_edge_coloring(g);
        coloring = &fallback;
        edge_note = "edge coloring from the constructive Delta+1 procedure; exact search out of budget";
    }
    if (coloring) {
        json ecol;
        ecol["colors_used"] = coloring->colors_used;
        json list = json::array();
        for (std::size_t e = 0; e < coloring->edges.size(); ++e)
            list.push_back({g.label(coloring->edges[e].first), g.label(coloring->edges[e].second),
                            coloring->colors[e]});
        ecol["edges"] = list;
        doc["edge_coloring"] = ecol;
    }
    json notes = json::array();
    if (!edge_note.empty()) notes.push_back(edge_note);
    if (ec.classification == EdgeClassification::trivial)
        notes.push_back("edgeless graph: chi' reported as 0 (some conventions assign Delta+1 to null graphs)");
    doc["notes"] = notes;
    return doc;
}

/// Re-reads a certificate against a freshly built graph. Throws on
/// malformed documents; returns the validate() verdict.
inline bool certificate_roundtrip_valid(const json& doc, const Graph& g) {
    ColoringCertificate cert;
    cert.omega = doc.at("omega").get<u64>();
    cert.chi = doc.at("chi").get<u64>();
    std::vector<std::string> labels(g.size());
    for (std::size_t v = 0; v < g.size(); ++v) labels[v] = g.label(v);
    auto id_of = [&](const std::string& l) {
        for (std::size_t v = 0; v < g.size(); ++v)
            if (labels[v] == l) return v;
        throw std::invalid_argument("certificate label not in graph: " + l);
    };
    for (const auto& l : doc.at("clique")) cert.clique.push_back(id_of(l.get<std::string>()));
    cert.colors.assign(g.size(), -1);
    for (const auto& [label, color] : doc.at("colors").items()) cert.colors[id_of(label)] = color.get<int>();
    if (!validate(cert, g)) return false;
    if (doc.contains("edge_coloring")) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        std::vector<int> colors;
        for (const auto& e : doc.at("edge_coloring").at("edges")) {
            std::size_t a = id_of(e.at(0).get<std::string>());
            std::size_t b = id_of(e.at(1).get<std::string>());
            if (!g.has_edge(a, b)) return false;
            edges.emplace_back(a, b);
            colors.push_back(e.at(2).get<int>());
        }
        if (edges.size() != g.edge_count()) return false;
        if (!is_proper_edge_coloring(edges, colors, g.size())) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// sweep driver

enum class SweepCheck { weakly_perfect, formulas, edge_class };

struct SweepOptions {
    SweepCheck check = SweepCheck::weakly_perfect;
    OracleBudget budget = OracleBudget::clique_default();
    OracleBudget edge_budget = OracleBudget::edge_default();
    std::size_t vertex_cap = kDefaultVertexCap;
    unsigned jobs = 1;
};

struct SweepInstance {
    std::optional<u64> n;
    Signature sig;
};

enum class InstanceStatus { verified, undecided, failed };

struct InstanceOutcome {
    InstanceStatus status = InstanceStatus::verified;
    std::string detail;
};

inline InstanceOutcome run_sweep_instance(const SweepInstance& inst, const SweepOptions& opt) {
    const Signature& sig = inst.sig;
    const u64 vc = vertex_count_of(sig);
    switch (opt.check) {
        case SweepCheck::weakly_perfect: {
            if (vc > opt.vertex_cap || vc > opt.budget.max_vertices)
                return {InstanceStatus::undecided, "vertex budget exceeded"};
            const Graph g = build_graph(sig, opt.vertex_cap);
            const ColoringCertificate cert = build_coloring(sig);
            if (!validate(cert, g)) return {InstanceStatus::failed, "constructed certificate invalid"};
            if (cert.omega != omega(sig) || cert.chi != cert.omega)
                return {InstanceStatus::failed, "certificate counts inconsistent"};
            const CliqueOutcome co = max_clique_exact(g, opt.budget);
            if (!co.decided) return {InstanceStatus::undecided, "clique oracle budget exhausted"};
            if (co.omega != cert.omega)
                return {InstanceStatus::failed, "exact clique " + std::to_string(co.omega) +
                                                    " != constructed " + std::to_string(cert.omega)};
            const ChromaticOutcome ch = chromatic_exact(g, co.omega, cert.chi, opt.budget, co.witness);
            if (!ch.decided) return {InstanceStatus::undecided, "chromatic oracle budget exhausted"};
            if (ch.chi != cert.chi)
                return {InstanceStatus::failed,
                        "exact chi " + std::to_string(ch.chi) + " != constructed " + std::to_string(cert.chi)};
            return {InstanceStatus::verified, {}};
        }
        case SweepCheck::formulas: {
            const u64 w = omega(sig);
            for (const FormulaResult& f : evaluate_all_formulas(sig))
                if (f.applicable && *f.value != w)
                    return {InstanceStatus::failed, "formula " + f.name + " = " + std::to_string(*f.value) +
                                                        " != construction " + std::to_string(w)};
            if (vc > opt.vertex_cap || vc > opt.budget.max_vertices)
                return {InstanceStatus::undecided, "formulas agree; clique oracle out of budget"};
            const Graph g = build_graph(sig, opt.vertex_cap);
            const CliqueOutcome co = max_clique_exact(g, opt.budget);
            if (!co.decided) return {InstanceStatus::undecided, "clique oracle budget exhausted"};
            if (co.omega != w)
                return {InstanceStatus::failed,
                        "exact clique " + std::to_string(co.omega) + " != construction " + std::to_string(w)};
            return {InstanceStatus::verified, {}};
        }
        case SweepCheck::edge_class: {
            const EdgeClassReport ec = classify(sig);
            if (vc > opt.vertex_cap || vc > opt.edge_budget.max_vertices)
                return {InstanceStatus::undecided, "vertex budget exceeded"};
            if (edge_count_closed_form(sig) > opt.edge_budget.max_edges)
                return {InstanceStatus::undecided, "edge budget exceeded"};
            const Graph g = build_graph(sig, opt.vertex_cap);
            const EdgeClassOutcome eo = edge_class_exact(g, opt.edge_budget);
            if (!eo.decided) return {InstanceStatus::undecided, "edge oracle budget exhausted"};
            if (!detail::edge_class_matches(ec, eo, g.edge_count()))
                return {InstanceStatus::failed,
                        std::string("classification ") + to_string(ec.classification) +
                            " contradicts exact oracle"};
            return {InstanceStatus::verified, {}};
        }
    }
    return {InstanceStatus::undecided, "unknown check"};
}

/// Counterexample replay payload: the full analyze report with oracles.
inline json sweep_failure_report(const SweepInstance& inst, const SweepOptions& opt) {
    AnalyzeOptions aopt;
    aopt.with_oracle = true;
    aopt.budget = opt.budget;
    aopt.edge_budget = opt.edge_budget;
    aopt.vertex_cap = opt.vertex_cap;
    if (inst.n) return analyze_n(*inst.n, aopt).doc;
    return analyze_signature(inst.sig, aopt).doc;
}

inline json run_sweep(const std::vector<SweepInstance>& instances, const SweepOptions& opt,
                      bool* any_failed = nullptr) {
    std::vector<InstanceOutcome> outcomes(instances.size());
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) outcomes[i] = run_sweep_instance(instances[i], opt);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= instances.size()) return;
                outcomes[i] = run_sweep_instance(instances[i], opt);
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kVersion;
    doc["check"] = opt.check == SweepCheck::weakly_perfect ? "weakly-perfect"
                   : opt.check == SweepCheck::formulas     ? "formulas"
                                                           : "edge-class";
    std::size_t verified = 0, undecided = 0, failed = 0;
    json failures = json::array();
    // outcomes merge in instance order, independent of completion order
    for (std::size_t i = 0; i < instances.size(); ++i) {
        switch (outcomes[i].status) {
            case InstanceStatus::verified: ++verified; break;
            case InstanceStatus::undecided: ++undecided; break;
            case InstanceStatus::failed: {
                ++failed;
                json entry;
                if (instances[i].n) entry["n"] = *instances[i].n;
                entry["signature"] = instances[i].sig.exponents;
                entry["detail"] = outcomes[i].detail;
                entry["report"] = sweep_failure_report(instances[i], opt);
                failures.push_back(entry);
                break;
            }
        }
    }
    doc["instances"] = instances.size();
    doc["verified"] = verified;
    doc["undecided"] = undecided;
    doc["failed"] = failed;
    doc["failures"] = failures;
    if (any_failed) *any_failed = failed > 0;
    return doc;
}

/// n = 2..max_n, factorized through a shared sieve-free path (the range
/// stays small enough for direct factorization).
inline std::vector<SweepInstance> instances_for_range(u64 max_n) {
    std::vector<SweepInstance> out;
    for (u64 n = 2; n <= max_n; ++n) out.push_back({n, signature_of(factorize(n))});
    return out;
}

/// All sorted exponent multisets with m <= max_m and entries <= max_exp.
inline std::vector<SweepInstance> instances_for_signatures(unsigned max_m, unsigned max_exp) {
    std::vector<SweepInstance> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned low) -> void {
        if (!cur.empty()) out.push_back({std::nullopt, Signature(cur)});
        if (cur.size() == max_m) return;
        for (unsigned e = low; e <= max_exp; ++e) {
            cur.push_back(e);
            self(self, e);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

} // namespace igz
