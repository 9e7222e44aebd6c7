// igz: intersection graphs of ideals of Z_n.
// Subcommands: analyze, certify, export, sweep.
// Exit codes: 0 ok, 1 usage error, 2 verification failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "igz/report.hpp"

namespace {

igz::Signature parse_signature(const std::string& text) {
    std::vector<unsigned> exps;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        const std::string tok = text.substr(pos, next - pos);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad signature entry '" + tok + "': expected a positive integer");
        }
        if (used != tok.size() || v < 1 || v > 1u << 20)
            throw std::invalid_argument("bad signature entry '" + tok + "': expected an integer in [1, 2^20]");
        exps.push_back(static_cast<unsigned>(v));
        pos = next + 1;
    }
    return igz::Signature(exps);
}

void emit(const std::string& body, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << body;
        if (body.empty() || body.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << body;
    if (body.empty() || body.back() != '\n') f << '\n';
}

struct SourceArgs {
    std::optional<igz::u64> n;
    std::string signature_text;

    igz::SlotAssignment resolve() const {
        if (n && !signature_text.empty())
            throw std::invalid_argument("give either a modulus or --signature, not both");
        if (n) {
            if (*n < 2) throw std::domain_error("no proper ideals to analyze");
            return igz::assign_slots(igz::factorize(*n));
        }
        if (signature_text.empty()) throw std::invalid_argument("a modulus or --signature is required");
        return {parse_signature(signature_text), {}};
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"intersection graph of ideals of Z_n: clique, chromatic and edge-chromatic analysis"};
    app.require_subcommand(1);

    SourceArgs src;
    std::string out_path;
    std::string format = "json";
    igz::AnalyzeOptions aopt;
    bool budget_vertices_given = false;
    std::size_t budget_vertices = 0;
    double budget_seconds = 30.0;
    bool budget_seconds_given = false;

    auto add_source = [&](CLI::App* sub) {
        sub->add_option("n", src.n, "modulus n >= 2");
        sub->add_option("--signature", src.signature_text, "exponent signature, e.g. 1,2,2");
    };
    auto add_budgets = [&](CLI::App* sub) {
        sub->add_option("--budget-vertices", budget_vertices, "oracle vertex budget")
            ->each([&](const std::string&) { budget_vertices_given = true; });
        sub->add_option("--budget-seconds", budget_seconds, "oracle time budget per instance")
            ->each([&](const std::string&) { budget_seconds_given = true; });
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one modulus or signature");
    add_source(analyze);
    analyze->add_flag("--oracle", aopt.with_oracle, "add brute-force verification within budget");
    add_budgets(analyze);

    CLI::App* certify = app.add_subcommand("certify", "write the clique/coloring certificate");
    add_source(certify);
    certify->add_option("--out", out_path, "output path (stdout when omitted)");
    add_budgets(certify);

    CLI::App* exp = app.add_subcommand("export", "write the graph as DOT or JSON");
    add_source(exp);
    exp->add_option("--format", format, "dot|json")->check(CLI::IsMember({"dot", "json"}));
    exp->add_option("--out", out_path, "output path (stdout when omitted)");

    CLI::App* sweep = app.add_subcommand("sweep", "batch verification against the oracles");
    igz::u64 sweep_max = 0;
    std::string sweep_sigs, check_name = "weakly-perfect";
    unsigned jobs = 1;
    sweep->add_option("--max", sweep_max, "verify every n in 2..N");
    sweep->add_option("--signatures", sweep_sigs, "signature family, e.g. m<=4,exp<=3");
    sweep->add_option("--check", check_name, "weakly-perfect|formulas|edge-class")
        ->check(CLI::IsMember({"weakly-perfect", "formulas", "edge-class"}));
    sweep->add_option("--jobs", jobs, "parallel workers (results merge in instance order)");
    add_budgets(sweep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (budget_seconds_given) {
            aopt.budget.seconds = budget_seconds;
            aopt.edge_budget.seconds = budget_seconds;
        }
        if (budget_vertices_given) {
            aopt.budget.max_vertices = budget_vertices;
            aopt.edge_budget.max_vertices = budget_vertices;
        }

        if (*analyze) {
            const igz::SlotAssignment slots = src.resolve();
            const igz::AnalysisResult res =
                src.n ? igz::analyze(slots.sig, src.n, &slots.primes, aopt)
                      : igz::analyze_signature(slots.sig, aopt);
            std::cout << res.doc.dump(2) << '\n';
            return res.failed ? 2 : 0;
        }
        if (*certify) {
            const igz::SlotAssignment slots = src.resolve();
            const igz::json doc = igz::certificate_json(slots.sig, src.n, src.n ? &slots.primes : nullptr, aopt);
            emit(doc.dump(2), out_path);
            return 0;
        }
        if (*exp) {
            const igz::SlotAssignment slots = src.resolve();
            const igz::Graph g = igz::build_graph(slots.sig, aopt.vertex_cap,
                                                  src.n ? &slots.primes : nullptr, src.n);
            emit(format == "dot" ? igz::to_dot(g) : igz::graph_to_json(g).dump(2), out_path);
            return 0;
        }
        if (*sweep) {
            igz::SweepOptions sopt;
            sopt.check = check_name == "weakly-perfect" ? igz::SweepCheck::weakly_perfect
                         : check_name == "formulas"     ? igz::SweepCheck::formulas
                                                        : igz::SweepCheck::edge_class;
            sopt.jobs = jobs;
            if (budget_seconds_given) {
                sopt.budget.seconds = budget_seconds;
                sopt.edge_budget.seconds = budget_seconds;
            }
            if (budget_vertices_given) {
                sopt.budget.max_vertices = budget_vertices;
                sopt.edge_budget.max_vertices = budget_vertices;
            }
            std::vector<igz::SweepInstance> instances;
            if (sweep_max >= 2 && sweep_sigs.empty()) {
                instances = igz::instances_for_range(sweep_max);
            } else if (!sweep_sigs.empty() && sweep_max == 0) {
                unsigned max_m = 0, max_exp = 0;
                if (std::sscanf(sweep_sigs.c_str(), "m<=%u,exp<=%u", &max_m, &max_exp) != 2 || max_m == 0 ||
                    max_exp == 0)
                    throw std::invalid_argument("--signatures expects the form m<=M,exp<=E");
                instances = igz::instances_for_signatures(max_m, max_exp);
            } else {
                throw std::invalid_argument("sweep needs exactly one of --max N or --signatures m<=M,exp<=E");
            }
            bool any_failed = false;
            const igz::json doc = igz::run_sweep(instances, sopt, &any_failed);
            std::cout << doc.dump(2) << '\n';
            return any_failed ? 2 : 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "igz: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
