// vmchain — vertex-minor chain toolkit.
//
// Verbs: rank, check, reduce, chain, orbit, verify, gen.
// Exit codes are a stable contract:
//   0   holds / success
//   1   definitional negative (class fails, no step inside the permitted
//       regime, chain stopped early)
//   2   input or resource error (bad graph6, vertex out of range, cap hit,
//       generation starvation)
//   3   theorem violation — a guaranteed search came up empty; the full
//       instance report is printed
//   64  usage error (unknown verb, class or suite, bad flags)

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "vmchain/connectivity.hpp"
#include "vmchain/graph.hpp"
#include "vmchain/graph6.hpp"
#include "vmchain/orbit.hpp"
#include "vmchain/random.hpp"
#include "vmchain/reducer.hpp"
#include "vmchain/verify.hpp"

namespace {

using nlohmann::json;
using namespace vmchain;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open input file: " + path, 0);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Graph read_graph(const std::string& path, const std::string& format) {
    std::string text = read_all(path);
    if (format == "edgelist") return parse_edge_list(text);
    // graph6: first non-empty line
    std::size_t start = 0;
    while (start < text.size() && (text[start] == '\n' || text[start] == '\r'))
        ++start;
    std::size_t end = text.find_first_of("\r\n", start);
    if (end == std::string::npos) end = text.size();
    if (start == end) throw parse_error("no graph in input", start);
    return from_graph6(std::string_view(text).substr(start, end - start));
}

std::vector<int> mask_to_list(VertexSet m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

json verdict_to_json(const std::string& cls, const Graph& g,
                     const ConnectivityVerdict& v) {
    json out = {{"class", cls}, {"n", g.order()}, {"holds", v.holds}};
    if (v.witness) out["witness"] = mask_to_list(*v.witness);
    if (v.witness_order) out["witness_order"] = *v.witness_order;
    return out;
}

VertexSet parse_set_spec(const std::string& spec, const Graph& g) {
    VertexSet m = 0;
    if (spec.empty()) return 0;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string::npos) comma = spec.size();
        std::string tok = spec.substr(pos, comma - pos);
        try {
            int v = std::stoi(tok);
            g.check_vertex(v);
            m |= bit(v);
        } catch (const std::exception&) {
            throw argument_error("bad vertex token '" + tok + "' in set spec");
        }
        pos = comma + 1;
    }
    return m;
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vmchain: vertex-minor algebra, rank-connectivity checks and "
                 "chain reduction"};
    app.require_subcommand(1);

    std::string input = "-", format = "graph6";
    std::string set_spec, class_name, suite, trials_spec;
    std::uint64_t seed = 0;
    bool have_seed = false, as_json = false, timing = false, list_suites = false;
    int floor_order = 0;
    std::size_t cap = 1000000;
    int gen_n = 0, max_rejects = 1000;
    double gen_p = 0.5;
    std::string gen_filter;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", input, "input file, or - for stdin");
        cmd->add_option("--format", format, "graph6 | edgelist")
            ->check(CLI::IsMember({"graph6", "edgelist"}));
    };

    auto* c_rank = app.add_subcommand("rank", "cut-rank of a vertex set");
    add_input(c_rank);
    c_rank->add_option("--set", set_spec, "comma-separated vertex list")
        ->required();
    c_rank->add_flag("--json", as_json, "JSON output");

    auto* c_check = app.add_subcommand("check", "test a connectivity class");
    add_input(c_check);
    c_check->add_option("--class", class_name,
                        "prime | krank:k | weak3rc | internal3rc | seq3rc")
        ->required();

    auto* c_reduce =
        app.add_subcommand("reduce", "find one same-class reduction step");
    add_input(c_reduce);
    c_reduce->add_option("--class", class_name, "prime | seq3rc")->required();
    c_reduce->add_flag("--json", as_json, "JSON output");

    auto* c_chain =
        app.add_subcommand("chain", "iterate reductions down to a floor");
    add_input(c_chain);
    c_chain->add_option("--class", class_name, "prime | seq3rc")->required();
    c_chain->add_option("--floor", floor_order, "stop at this order")
        ->required();
    c_chain->add_flag("--json", as_json, "JSON output");

    auto* c_orbit =
        app.add_subcommand("orbit", "local-equivalence orbit of a graph");
    add_input(c_orbit);
    c_orbit->add_option("--cap", cap, "maximum orbit size");
    c_orbit->add_flag("--json", as_json, "JSON output");

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "suite id (see --list)");
    c_verify->add_option("--trials", trials_spec,
                         "trial count, or exhaustive:n for T3.2");
    c_verify->add_option("--seed", seed, "RNG seed (required when sampling)")
        ->each([&](const std::string&) { have_seed = true; });
    c_verify->add_flag("--timing", timing, "include elapsed_ms in the report");
    c_verify->add_flag("--list", list_suites, "list suite ids and summaries");

    auto* c_gen = app.add_subcommand("gen", "seeded random graph");
    c_gen->add_option("--n", gen_n, "vertex count")->required();
    c_gen->add_option("--p", gen_p, "edge probability");
    c_gen->add_option("--filter", gen_filter,
                      "rejection filter: prime | krank:k | weak3rc | "
                      "internal3rc | seq3rc");
    c_gen->add_option("--seed", seed, "RNG seed")
        ->required()
        ->each([&](const std::string&) { have_seed = true; });
    c_gen->add_option("--max-rejects", max_rejects,
                      "rejection budget before giving up");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        if (c_rank->parsed()) {
            Graph g = read_graph(input, format);
            VertexSet x = parse_set_spec(set_spec, g);
            int rho = cut_rank(g, x);
            int rows = std::popcount(x);
            int cols = g.order() - rows;
            if (as_json) {
                print_json({{"rho", rho},
                            {"rows", rows},
                            {"cols", cols},
                            {"set", mask_to_list(x)},
                            {"n", g.order()}});
            } else {
                std::cout << "rho = " << rho << " (slice " << rows << " x "
                          << cols << ")\n";
            }
            return 0;
        }

        if (c_check->parsed()) {
            GraphClass cls;
            try {
                cls = GraphClass::parse(class_name);
            } catch (const argument_error& e) {
                std::cerr << e.what() << "\n";
                return 64;
            }
            Graph g = read_graph(input, format);
            auto verdict = check_class(g, cls);
            print_json(verdict_to_json(cls.name(), g, verdict));
            return verdict.holds ? 0 : 1;
        }

        if (c_reduce->parsed() || c_chain->parsed()) {
            GraphClass cls;
            try {
                cls = GraphClass::parse(class_name);
                if (cls.kind != GraphClass::Kind::prime &&
                    cls.kind != GraphClass::Kind::seq3rc)
                    throw argument_error(
                        "reduction supports classes prime and seq3rc");
            } catch (const argument_error& e) {
                std::cerr << e.what() << "\n";
                return 64;
            }
            Graph g = read_graph(input, format);
            auto pre = check_class(g, cls);
            if (!pre.holds) {
                print_json(verdict_to_json(cls.name(), g, pre));
                return 1;
            }
            int floor = c_reduce->parsed() ? g.order() - 1 : floor_order;
            Chain chain = build_chain(g, cls.name(), floor);
            if (as_json)
                print_json(chain_to_json(chain));
            else
                std::cout << chain_to_text(chain);
            if (chain.stop_reason == StopReason::exhausted) return 1;
            return 0;
        }

        if (c_orbit->parsed()) {
            Graph g = read_graph(input, format);
            auto orbit = local_equivalence_orbit(g, cap);
            if (as_json) {
                json members = json::array();
                for (const auto& h : orbit) members.push_back(to_graph6(h));
                print_json({{"size", orbit.size()}, {"members", members}});
            } else {
                for (const auto& h : orbit) std::cout << to_graph6(h) << "\n";
            }
            return 0;
        }

        if (c_verify->parsed()) {
            if (list_suites) {
                for (const auto& name : suite_names())
                    std::cout << name << "\t" << suite_summary(name) << "\n";
                return 0;
            }
            if (suite.empty()) {
                std::cerr << "verify needs --suite (or --list)\n";
                return 64;
            }
            if (!has_suite(suite)) {
                std::cerr << "unknown suite: " << suite << "\n";
                return 64;
            }
            VerifyReport report;
            if (trials_spec.rfind("exhaustive:", 0) == 0) {
                if (suite != "T3.2") {
                    std::cerr << "exhaustive mode applies to suite T3.2\n";
                    return 64;
                }
                int n = 0;
                try {
                    n = std::stoi(trials_spec.substr(11));
                } catch (...) {
                    std::cerr << "bad exhaustive spec: " << trials_spec << "\n";
                    return 64;
                }
                report = run_exhaustive_bouchet(n);
            } else {
                if (!have_seed) {
                    std::cerr << "sampled suites require an explicit --seed\n";
                    return 64;
                }
                std::uint64_t trials = suite_default_trials(suite);
                if (!trials_spec.empty()) {
                    try {
                        trials = std::stoull(trials_spec);
                    } catch (...) {
                        std::cerr << "bad trial count: " << trials_spec << "\n";
                        return 64;
                    }
                }
                report = run_suite(suite, trials, seed);
            }
            print_json(report_to_json(report, timing));
            std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
            if (report.effective_trials < report.trials)
                std::cerr << "warning: hypothesis sampling starved "
                          << (report.trials - report.effective_trials) << "/"
                          << report.trials << " trials\n";
            return report.failures == 0 ? 0 : 1;
        }

        if (c_gen->parsed()) {
            GenSpec spec;
            spec.n = gen_n;
            spec.edge_probability = gen_p;
            spec.seed = seed;
            spec.max_rejects = max_rejects;
            if (!gen_filter.empty()) {
                try {
                    spec.filter = GraphClass::parse(gen_filter);
                } catch (const argument_error& e) {
                    std::cerr << e.what() << "\n";
                    return 64;
                }
            }
            Graph g = gen_random(spec);
            std::cout << to_graph6(g) << "\n";
            return 0;
        }
    } catch (const theorem_violation& e) {
        std::cerr << e.what() << "\n";
        std::cout << e.report_json << "\n";
        return 3;
    } catch (const parse_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const generation_error& e) {
        std::cerr << e.what() << " (rejected " << e.rejects << ")\n";
        return 2;
    } catch (const resource_limit_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const argument_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 64;
}
