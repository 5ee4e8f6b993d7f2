#pragma once

// Chain reduction: given a graph in a connectivity class, find an elementary
// one-vertex-smaller vertex-minor in the same class, and iterate.
//
// Search order is fixed for reproducibility: vertices ascending, kinds in the
// order DELETE, LC_DELETE, PIVOT_DELETE. Both reducers are complete decision
// procedures for their guarantees: every one-vertex-smaller vertex-minor is
// locally equivalent to a canonical reduction at some vertex, and the class
// predicates only read cut-ranks, which local equivalence preserves. A miss
// inside the guaranteed regime (prime with n >= 6, sequentially
// 3-rank-connected with n >= 13) is therefore reported as a
// theorem_violation carrying the instance and the full trial log — never
// returned as a quiet nullopt.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vmchain/connectivity.hpp"
#include "vmchain/graph.hpp"
#include "vmchain/graph6.hpp"
#include "vmchain/structures.hpp"

namespace vmchain {

struct ReductionStep {
    int vertex = 0;  // label in the graph the step was found on; chains
                     // translate this to the start graph's labeling
    ReductionKind kind = ReductionKind::Delete;
    std::string pre_check;  // class the reduced graph was validated against
    std::optional<std::string> certificate;
};

namespace detail {

inline std::optional<ReductionStep> reduce_in_class(
    const Graph& g, const GraphClass& cls, int guaranteed_from,
    const std::string& claim) {
    auto pre = check_class(g, cls);
    if (!pre.holds) {
        std::string msg = "input graph is not " + cls.name();
        if (pre.witness)
            msg += " (violating set mask " + std::to_string(*pre.witness) + ")";
        throw precondition_error(msg);
    }
    nlohmann::json trial_log = nlohmann::json::array();
    for (int v = 0; v < g.order(); ++v) {
        for (auto& [kind, reduced] : elementary_reductions(g, v)) {
            auto verdict = check_class(reduced, cls);
            if (verdict.holds)
                return ReductionStep{v, kind, cls.name(), std::nullopt};
            nlohmann::json entry = {{"vertex", v},
                                    {"kind", to_string(kind)},
                                    {"holds", false}};
            if (verdict.witness) entry["witness_mask"] = *verdict.witness;
            trial_log.push_back(std::move(entry));
        }
    }
    if (g.order() >= guaranteed_from) {
        nlohmann::json report = {{"claim", claim},
                                 {"class", cls.name()},
                                 {"graph6", to_graph6(g)},
                                 {"n", g.order()},
                                 {"trials", std::move(trial_log)}};
        throw theorem_violation("no " + cls.name() +
                                    " reduction found on a graph of order " +
                                    std::to_string(g.order()) +
                                    ", inside the guaranteed regime",
                                report.dump());
    }
    return std::nullopt;
}

}  // namespace detail

// First prime single-vertex reduction of a prime graph. Empty only for
// n <= 5; a miss at n >= 6 throws theorem_violation.
inline std::optional<ReductionStep> reduce_prime(const Graph& g) {
    return detail::reduce_in_class(
        g, GraphClass{GraphClass::Kind::prime, 0}, 6,
        "every prime graph on at least 6 vertices has a prime elementary "
        "reduction");
}

// First sequentially-3-rank-connected reduction of a sequentially
// 3-rank-connected graph. Empty only for n <= 12; a miss at n >= 13 throws
// theorem_violation.
inline std::optional<ReductionStep> reduce_seq3rc(const Graph& g) {
    return detail::reduce_in_class(
        g, GraphClass{GraphClass::Kind::seq3rc, 0}, 13,
        "every sequentially 3-rank-connected graph on at least 13 vertices "
        "has a sequentially 3-rank-connected elementary reduction");
}

// For a triplet T of an internally 3-rank-connected graph on >= 12 vertices,
// returns the least t in T whose deletion is sequentially 3-rank-connected.
inline int reduce_internal_triplet(const Graph& g, VertexSet t) {
    if (g.order() < 12)
        throw precondition_error(
            "triplet reduction requires at least 12 vertices");
    if (!is_internally_3rc(g).holds)
        throw precondition_error(
            "triplet reduction requires an internally 3-rank-connected graph");
    if (std::popcount(t) != 3 || !is_triplet(g, t))
        throw precondition_error("the given set is not a triplet of the graph");
    nlohmann::json trial_log = nlohmann::json::array();
    for (VertexSet m = t; m;) {
        int x = std::countr_zero(m);
        m &= m - 1;
        auto verdict = is_sequentially_3rc(delete_vertex(g, x));
        if (verdict.holds) return x;
        nlohmann::json entry = {{"vertex", x}, {"holds", false}};
        if (verdict.witness) entry["witness_mask"] = *verdict.witness;
        trial_log.push_back(std::move(entry));
    }
    nlohmann::json report = {
        {"claim",
         "a triplet of an internally 3-rank-connected graph on at least 12 "
         "vertices has a member whose deletion is sequentially "
         "3-rank-connected"},
        {"graph6", to_graph6(g)},
        {"n", g.order()},
        {"triplet_mask", t},
        {"trials", std::move(trial_log)}};
    throw theorem_violation("no triplet member gave a sequentially "
                            "3-rank-connected deletion",
                            report.dump());
}

enum class StopReason { reached_size_bound, exhausted, predicate_lost };

inline const char* to_string(StopReason r) {
    switch (r) {
        case StopReason::reached_size_bound: return "reached_size_bound";
        case StopReason::exhausted: return "exhausted";
        case StopReason::predicate_lost: return "predicate_lost";
    }
    return "?";
}

inline StopReason stop_reason_from(const std::string& s) {
    if (s == "reached_size_bound") return StopReason::reached_size_bound;
    if (s == "exhausted") return StopReason::exhausted;
    if (s == "predicate_lost") return StopReason::predicate_lost;
    throw argument_error("unknown stop reason: " + s);
}

// A reduction chain. Step vertices are recorded in the start graph's
// labeling (deletion compacts labels, so the replay machinery translates).
// predicate_lost never comes out of build_chain — every emitted step is
// validated — it marks a deserialized chain whose recorded graphs failed
// revalidation.
struct Chain {
    Graph start;
    std::string class_name;
    std::vector<ReductionStep> steps;
    StopReason stop_reason = StopReason::reached_size_bound;
};

// Applies the chain's steps from the start graph and returns the graph after
// each step.
inline std::vector<Graph> replay_chain(const Chain& chain) {
    std::vector<Graph> out;
    Graph cur = chain.start;
    std::vector<int> labels(static_cast<std::size_t>(cur.order()));
    for (int i = 0; i < cur.order(); ++i) labels[static_cast<std::size_t>(i)] = i;
    for (const auto& step : chain.steps) {
        int idx = -1;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == step.vertex) idx = static_cast<int>(i);
        if (idx < 0)
            throw argument_error("chain step removes vertex " +
                                 std::to_string(step.vertex) +
                                 " which is already gone");
        cur = apply_reduction(cur, idx, step.kind);
        labels.erase(labels.begin() + idx);
        out.push_back(cur);
    }
    return out;
}

// Repeatedly reduces g inside the named class ("prime" or "seq3rc") until
// the order reaches `floor` or no step exists.
inline Chain build_chain(const Graph& g, const std::string& class_name,
                         int floor) {
    GraphClass cls = GraphClass::parse(class_name);
    if (cls.kind != GraphClass::Kind::prime &&
        cls.kind != GraphClass::Kind::seq3rc)
        throw argument_error("build_chain supports classes prime and seq3rc");
    auto reduce = [&](const Graph& h) {
        return cls.kind == GraphClass::Kind::prime ? reduce_prime(h)
                                                   : reduce_seq3rc(h);
    };

    Chain chain{g, class_name, {}, StopReason::reached_size_bound};
    auto pre = check_class(g, cls);
    if (!pre.holds)
        throw precondition_error("input graph is not " + cls.name());

    Graph cur = g;
    std::vector<int> labels(static_cast<std::size_t>(g.order()));
    for (int i = 0; i < g.order(); ++i) labels[static_cast<std::size_t>(i)] = i;
    while (cur.order() > floor) {
        auto step = reduce(cur);
        if (!step) {
            chain.stop_reason = StopReason::exhausted;
            return chain;
        }
        int idx = step->vertex;
        chain.steps.push_back(ReductionStep{labels[static_cast<std::size_t>(idx)],
                                            step->kind, step->pre_check,
                                            std::nullopt});
        cur = apply_reduction(cur, idx, step->kind);
        labels.erase(labels.begin() + idx);
    }
    chain.stop_reason = StopReason::reached_size_bound;
    return chain;
}

// Line-oriented chain format: the start graph6 alone on the first line, then
// one "graph6 <TAB> vertex <TAB> kind" record per step, where graph6 is the
// graph after that step.
inline std::string chain_to_text(const Chain& chain) {
    std::ostringstream os;
    os << to_graph6(chain.start) << '\n';
    auto inter = replay_chain(chain);
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        os << to_graph6(inter[i]) << '\t' << chain.steps[i].vertex << '\t'
           << to_string(chain.steps[i].kind) << '\n';
    }
    return os.str();
}

inline nlohmann::json chain_to_json(const Chain& chain) {
    auto inter = replay_chain(chain);
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        steps.push_back({{"graph6", to_graph6(inter[i])},
                         {"vertex", chain.steps[i].vertex},
                         {"kind", to_string(chain.steps[i].kind)}});
    }
    return {{"start", to_graph6(chain.start)},
            {"class", chain.class_name},
            {"steps", std::move(steps)},
            {"stop_reason", to_string(chain.stop_reason)}};
}

// Parses the text format back and checks the recorded intermediates against
// a fresh replay, bit for bit.
inline Chain chain_from_text(std::string_view text,
                             const std::string& class_name = "",
                             StopReason reason = StopReason::reached_size_bound) {
    Chain chain;
    chain.class_name = class_name;
    chain.stop_reason = reason;
    std::vector<Graph> recorded;
    std::size_t pos = 0, line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        if (line_no == 0) {
            chain.start = from_graph6(line);
        } else {
            std::size_t t1 = line.find('\t');
            std::size_t t2 = t1 == std::string_view::npos
                                 ? std::string_view::npos
                                 : line.find('\t', t1 + 1);
            if (t2 == std::string_view::npos)
                throw parse_error("chain step needs graph6<TAB>vertex<TAB>kind",
                                  pos);
            recorded.push_back(from_graph6(line.substr(0, t1)));
            int vertex = std::stoi(std::string(line.substr(t1 + 1, t2 - t1 - 1)));
            ReductionKind kind =
                reduction_kind_from(std::string(line.substr(t2 + 1)));
            chain.steps.push_back(
                ReductionStep{vertex, kind, class_name, std::nullopt});
        }
        ++line_no;
    }
    auto replayed = replay_chain(chain);
    if (replayed != recorded)
        throw parse_error("chain replay does not reproduce recorded graphs", 0);
    return chain;
}

}  // namespace vmchain
