// critideal: critical ideals, co-rank, critical groups and family checks
// for simple graphs, batch-oriented. Exit codes: 0 success, 1 domain error,
// 2 resource budget exhausted.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "critideal/critical.hpp"
#include "critideal/families.hpp"
#include "critideal/search.hpp"
#include "critideal/zlinalg.hpp"

using namespace critideal;

namespace {

// A graph argument is either a literal graph6 string or @file with one
// graph6 line per graph.
std::vector<Graph> load_graphs(const std::string& arg) {
    if (!arg.empty() && arg[0] == '@') return read_graph6_lines(arg.substr(1));
    return {parse_graph6(arg)};
}

const char* path_name(DecisionPath p) {
    switch (p) {
        case DecisionPath::UnitMinor: return "unit-minor";
        case DecisionPath::UnitGenerator: return "unit-minor";
        case DecisionPath::ConstantGcd: return "constant-gcd";
        case DecisionPath::Evaluation: return "evaluation";
        case DecisionPath::Groebner: return "groebner";
    }
    return "?";
}

std::string group_string(const CriticalGroup& g) {
    std::string out;
    for (const auto& f : g.factors) {
        if (f == 1) continue;
        if (!out.empty()) out += " ⊕ ";
        out += "Z_" + f.get_str();
    }
    return out.empty() ? "trivial" : out;
}

std::vector<int> parse_weights(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        int w = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad weight '" + item + "'");
        out.push_back(w);
    }
    if (out.empty()) throw std::invalid_argument("empty weight vector");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"critical ideals of simple graphs over Z[x_v]"};
    app.require_subcommand(1);

    long budget_pairs = GbBudget{}.max_pair_reductions;
    app.add_option("--budget", budget_pairs, "Groebner pair-reduction budget")
        ->capture_default_str();
    auto budget = [&] {
        GbBudget b;
        b.max_pair_reductions = budget_pairs;
        return b;
    };

    std::string graph_arg, weights_arg, input_file, checkpoint_file;
    int ideal_index = 0, level_k = 3, max_n = 6, jobs = 1, omega = 0, enum_n = 5;
    bool exhaustive = false, no_prune = false;

    auto* cmd_gamma = app.add_subcommand("gamma", "algebraic co-rank with decision paths");
    cmd_gamma->add_option("graph", graph_arg, "graph6 string or @file")->required();
    cmd_gamma->add_flag("--exhaustive", exhaustive, "test every index, not just up to gamma");

    auto* cmd_ideal = app.add_subcommand("ideal", "reduced strong Groebner basis of I_i(G, X)");
    cmd_ideal->add_option("graph", graph_arg)->required();
    cmd_ideal->add_option("i", ideal_index, "critical ideal index")->required();

    auto* cmd_snf = app.add_subcommand("snf", "invariant factors of the Laplacian");
    cmd_snf->add_option("graph", graph_arg)->required();

    auto* cmd_group = app.add_subcommand("critical-group", "critical group as a sum of cyclics");
    cmd_group->add_option("graph", graph_arg)->required();

    auto* cmd_blowup = app.add_subcommand("blowup", "clique/stable-set blow-up, as graph6");
    cmd_blowup->add_option("graph", graph_arg)->required();
    cmd_blowup->add_option("weights", weights_arg, "comma-separated nonzero weights")->required();

    auto* cmd_family = app.add_subcommand("family-check", "F3 freeness and F1/F2 membership");
    cmd_family->add_option("graph", graph_arg)->required();

    auto* cmd_search = app.add_subcommand("forb-search", "minimal forbidden graphs in a stream");
    cmd_search->add_option("--k", level_k, "co-rank level")->required();
    cmd_search->add_option("--input", input_file, "graph6 file")->required();
    cmd_search->add_option("--jobs", jobs, "worker count");
    cmd_search->add_option("--checkpoint", checkpoint_file, "resume file of canonical forms");
    cmd_search->add_flag("--no-prune", no_prune, "disable containment pruning");

    auto* cmd_verify = app.add_subcommand("verify", "desk-scale classification sweeps");
    cmd_verify->add_option("--omega", omega, "clique number to classify (2 or 3)");
    cmd_verify->add_option("--max-n", max_n, "largest vertex count")->capture_default_str();
    cmd_verify->add_option("--jobs", jobs, "worker count");

    auto* cmd_enum = app.add_subcommand("enumerate", "connected graphs up to isomorphism");
    cmd_enum->add_option("--n", enum_n, "vertex count")->required();

    // Global options like --budget may follow the subcommand.
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (*cmd_gamma) {
        std::vector<Graph> graphs = load_graphs(graph_arg);
        for (const Graph& g : graphs) {
            GammaReport rep = gamma(g, budget(), exhaustive);
            if (graph_arg[0] != '@') {
                std::cout << "gamma = " << rep.gamma << "\n";
                if (!rep.connected) std::cout << "note: graph is disconnected\n";
                for (const auto& v : rep.per_index)
                    std::cout << "I_" << v.index << ": "
                              << (v.trivial ? "trivial" : "nontrivial") << " ("
                              << path_name(v.path) << ")\n";
            } else {
                std::string paths;
                for (const auto& v : rep.per_index) {
                    if (!paths.empty()) paths += ",";
                    paths += path_name(v.path);
                }
                std::cout << write_graph6(g) << "\t" << rep.gamma << "\t" << paths << "\n";
            }
        }
    } else if (*cmd_ideal) {
        for (const Graph& g : load_graphs(graph_arg)) {
            auto gens = critical_ideal_generators(g, ideal_index);
            GroebnerBasis gb = strong_groebner(gens, budget());
            if (graph_arg[0] == '@') std::cout << "# " << write_graph6(g) << "\n";
            for (const auto& p : gb.basis) std::cout << p.to_string() << "\n";
        }
    } else if (*cmd_snf) {
        for (const Graph& g : load_graphs(graph_arg)) {
            SnfResult snf = smith_normal_form(laplacian(g));
            std::string line;
            for (const auto& f : snf.factors) {
                if (!line.empty()) line += ",";
                line += f.get_str();
            }
            std::cout << (line.empty() ? "(empty)" : line) << "\n";
        }
    } else if (*cmd_group) {
        for (const Graph& g : load_graphs(graph_arg))
            std::cout << group_string(critical_group(g)) << "\n";
    } else if (*cmd_blowup) {
        std::vector<int> d = parse_weights(weights_arg);
        for (const Graph& g : load_graphs(graph_arg))
            std::cout << write_graph6(blowup(g, d)) << "\n";
    } else if (*cmd_family) {
        for (const Graph& g : load_graphs(graph_arg)) {
            auto witness = f3_free(g);
            auto in_f1 = family_member(g, f1_templates());
            auto in_f2 = family_member(g, f2_templates());
            std::cout << write_graph6(g) << "\tf3-free=" << (witness ? "no" : "yes");
            if (witness) std::cout << "(" << witness->name << ")";
            std::cout << "\tF1=" << (in_f1 ? in_f1->template_name : "-")
                      << "\tF2=" << (in_f2 ? in_f2->template_name : "-") << "\n";
        }
    } else if (*cmd_search) {
        SearchOptions opts;
        opts.jobs = jobs;
        opts.checkpoint_path = checkpoint_file;
        opts.prune = !no_prune;
        opts.budget = budget();
        SearchReport rep = find_minimal_forbidden(read_graph6_lines(input_file), level_k, opts);
        for (const auto& h : rep.hits)
            std::cout << h.graph6 << "\t" << h.gamma << "\t"
                      << (h.gamma_critical ? "critical" : "-") << "\n";
        std::cerr << "processed " << rep.processed << ", pruned " << rep.skipped_by_pruning
                  << ", checkpointed " << rep.skipped_by_checkpoint << ", hits "
                  << rep.hits.size() << "\n";
    } else if (*cmd_verify) {
        SearchOptions opts;
        opts.jobs = jobs;
        opts.budget = budget();
        VerifyReport rep;
        if (cmd_verify->count("--omega")) {
            rep = verify_omega_classification(max_n, omega, opts);
            std::cout << "omega=" << omega;
        } else {
            rep = verify_gamma_equals_f3_free(max_n, opts);
            std::cout << "gamma-vs-f3";
        }
        std::cout << " max-n=" << max_n << " checked=" << rep.checked
                  << " counterexamples=" << rep.counterexamples.size() << "\n";
        for (const auto& c : rep.counterexamples) std::cout << c << "\n";
    } else if (*cmd_enum) {
        for (const Graph& g : enumerate_connected(enum_n)) std::cout << write_graph6(g) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetExhausted& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
