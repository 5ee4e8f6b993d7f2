#pragma once

// The verification catalog: seeded random instance generators, brute-force
// oracles, and one suite per identity/inequality/guarantee the library is
// built on. Every suite samples instances satisfying its hypotheses
// (rejection sampling, with starvation reported rather than papered over),
// evaluates the stated conclusion, and reports counterexamples. Reports are
// a pure function of (suite, trials, seed) — trials draw from independent
// splitmix64 streams, so worker count never changes the output.
//
// Suite ids are the library's internal catalog names (L2.1 ... P5.8); the
// summary strings state what each one checks.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "vmchain/connectivity.hpp"
#include "vmchain/cutrank.hpp"
#include "vmchain/errors.hpp"
#include "vmchain/gf2.hpp"
#include "vmchain/graph.hpp"
#include "vmchain/graph6.hpp"
#include "vmchain/orbit.hpp"
#include "vmchain/parallel.hpp"
#include "vmchain/random.hpp"
#include "vmchain/reducer.hpp"
#include "vmchain/structures.hpp"

namespace vmchain {

struct Counterexample {
    std::string graph6;
    nlohmann::json params;
};

struct VerifyReport {
    std::string suite;
    std::uint64_t trials = 0;            // requested
    std::uint64_t effective_trials = 0;  // hypothesis sampling succeeded
    std::uint64_t failures = 0;
    std::vector<Counterexample> counterexamples;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;  // informational; not part of canonical JSON
};

// Canonical JSON: deterministic for fixed (suite, trials, seed). elapsed_ms
// only with include_elapsed, since wall time would break byte-identity.
inline nlohmann::json report_to_json(const VerifyReport& r,
                                     bool include_elapsed = false) {
    nlohmann::json ces = nlohmann::json::array();
    for (const auto& ce : r.counterexamples)
        ces.push_back({{"graph6", ce.graph6}, {"params", ce.params}});
    nlohmann::json out = {{"suite", r.suite},
                          {"trials", r.trials},
                          {"effective_trials", r.effective_trials},
                          {"failures", r.failures},
                          {"counterexamples", std::move(ces)},
                          {"seed", r.seed}};
    if (include_elapsed) out["elapsed_ms"] = r.elapsed_ms;
    return out;
}

namespace verify_detail {

enum TrialOutcome { kPass = 0, kStarved = 1, kFail = 2 };

constexpr int kOrbitCap = 1000000;
constexpr int kSampleAttempts = 400;

inline Graph rg(SplitMix64& rng, int n_lo, int n_hi, double p = 0.5) {
    int n = rng.next_int(n_lo, n_hi);
    return random_graph(n, p, rng);
}

// rank of A[rows, cols] for a raw matrix
inline int matrix_slice_rank(const Gf2Matrix& m, std::uint64_t row_mask,
                             std::uint64_t col_mask) {
    std::vector<std::uint64_t> rows;
    for (std::uint64_t t = row_mask; t;) {
        int i = std::countr_zero(t);
        t &= t - 1;
        rows.push_back(m.rows[static_cast<std::size_t>(i)] & col_mask);
    }
    return rank_of_rows(rows);
}

// rho_{G\v}(X) without building the deletion: drop row/column v.
inline int rank_del1(const Graph& g, int v, VertexSet x) {
    return slice_rank(g, x, g.vertices() & ~x & ~bit(v));
}

inline int rank_del2(const Graph& g, int a, int b, VertexSet x) {
    return slice_rank(g, x, g.vertices() & ~x & ~bit(a) & ~bit(b));
}

inline bool connected_graph(const Graph& g) {
    if (g.order() <= 1) return true;
    VertexSet seen = bit(0), frontier = bit(0);
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbors(v);
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == g.vertices();
}

inline bool connected_after_removal(const Graph& g, VertexSet removed) {
    VertexSet rest = g.vertices() & ~removed;
    if (!rest) return false;
    int start = std::countr_zero(rest);
    VertexSet seen = bit(start), frontier = bit(start);
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet m = frontier; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            next |= g.neighbors(v) & rest;
        }
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen == rest;
}

// Standard k-connectivity: more than k vertices and no cutset smaller
// than k. Brute force over small cutsets; fine for k <= 3.
inline bool k_vertex_connected(const Graph& g, int k) {
    if (g.order() <= k) return false;
    if (!connected_after_removal(g, 0)) return false;
    const int n = g.order();
    for (int size = 1; size < k; ++size) {
        // all subsets of the given size
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            VertexSet s = 0;
            for (int i : idx) s |= bit(i);
            if (!connected_after_removal(g, s)) return false;
            int j = size - 1;
            while (j >= 0 && idx[static_cast<std::size_t>(j)] == n - size + j) --j;
            if (j < 0) break;
            ++idx[static_cast<std::size_t>(j)];
            for (int i = j + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] =
                    idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return true;
}

inline Counterexample make_ce(const Graph& g, nlohmann::json params) {
    return Counterexample{to_graph6(g), std::move(params)};
}

// Rejection-samples a graph in `cls`; nullopt on starvation.
inline std::optional<Graph> sample_class(SplitMix64& rng, const GraphClass& cls,
                                         int n_lo, int n_hi, double p = 0.5) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, n_lo, n_hi, p);
        if (check_class(g, cls).holds) return g;
    }
    return std::nullopt;
}

inline GraphClass cls_prime() { return {GraphClass::Kind::prime, 0}; }
inline GraphClass cls_krank(int k) { return {GraphClass::Kind::krank, k}; }

// Plants a 3-set T = {a,b,c} with rank-2 outward rows by rewiring c. In a
// prime host rho(T) = 2 exactly either way, but the two variants differ on
// the triplet conditions:
//   sum_rows  row_c = row_a + row_b outside T; the deleted-pair ranks are
//             then forced to 2, so T is a triplet as planted
//   copy_row  row_c = row_a outside T; the pair {a, c} has outward rank 1,
//             so T is never a triplet and pivoting is required
enum class TriplePlant { sum_rows, copy_row };

inline Graph plant_rank2_triple(Graph g, int a, int b, int c,
                                TriplePlant mode = TriplePlant::sum_rows) {
    for (int d = 0; d < g.order(); ++d) {
        if (d == a || d == b || d == c) continue;
        bool want = mode == TriplePlant::sum_rows
                        ? (g.adjacent(a, d) ^ g.adjacent(b, d))
                        : g.adjacent(a, d);
        if (g.adjacent(c, d) != want) g.toggle_edge(c, d);
    }
    return g;
}

// Internally 3-rank-connected graph with a planted rank-2 triple. With
// require_triplet the sum_rows variant is used and rechecked, so the triple
// is a triplet as returned; otherwise the variant alternates, and roughly
// half the instances need make_triplet to pivot first.
inline std::optional<std::pair<Graph, VertexSet>> sample_internal_with_triplet(
    SplitMix64& rng, int n_lo, int n_hi, bool require_triplet) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, n_lo, n_hi);
        int n = g.order();
        int a = rng.next_int(0, n - 1), b = rng.next_int(0, n - 1),
            c = rng.next_int(0, n - 1);
        if (a == b || a == c || b == c) continue;
        TriplePlant mode = (require_triplet || rng.next_bool())
                               ? TriplePlant::sum_rows
                               : TriplePlant::copy_row;
        g = plant_rank2_triple(std::move(g), a, b, c, mode);
        VertexSet t = bit(a) | bit(b) | bit(c);
        if (!is_internally_3rc(g).holds) continue;
        if (require_triplet && !is_triplet(g, t)) continue;
        if (cut_rank_capped(g, t, 3) != 2) continue;
        return std::make_pair(std::move(g), t);
    }
    return std::nullopt;
}

// --- suite trial functions ------------------------------------------------

// pivot representative independence: for x, y neighbors of v,
// (g^vx)\v and (g^vy)\v are locally equivalent.
inline int trial_L2_1(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 5, 7);
        int v = rng.next_int(0, g.order() - 1);
        VertexSet nb = g.neighbors(v);
        if (std::popcount(nb) < 2) continue;
        std::vector<int> nbs;
        for (VertexSet m = nb; m;) {
            nbs.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        int x = nbs[static_cast<std::size_t>(
            rng.next_int(0, static_cast<int>(nbs.size()) - 1))];
        int y = x;
        while (y == x)
            y = nbs[static_cast<std::size_t>(
                rng.next_int(0, static_cast<int>(nbs.size()) - 1))];
        Graph gx = delete_vertex(pivot(g, v, x), v);
        Graph gy = delete_vertex(pivot(g, v, y), v);
        if (locally_equivalent(gx, gy, kOrbitCap)) return kPass;
        ce = make_ce(g, {{"v", v}, {"x", x}, {"y", y}});
        return kFail;
    }
    return kStarved;
}

// every one-vertex-smaller vertex-minor is locally equivalent to a canonical
// reduction: delete v from a random *-image of g and match against the
// canonical list at v.
inline int trial_L2_3(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 4, 8);
    Graph h = g;
    int len = rng.next_int(0, 6);
    std::vector<int> seq;
    for (int i = 0; i < len; ++i) {
        int v = rng.next_int(0, g.order() - 1);
        seq.push_back(v);
        h = local_complement(h, v);
    }
    int v = rng.next_int(0, g.order() - 1);
    Graph minor = delete_vertex(h, v);
    auto reductions = elementary_reductions(g, v);
    std::vector<Graph> targets;
    for (auto& [k, r] : reductions) targets.push_back(r);
    if (locally_equivalent_any(minor, targets, kOrbitCap) >= 0) return kPass;
    ce = make_ce(g, {{"lc_sequence", seq}, {"deleted", v}});
    return kFail;
}

// cut-rank invariance under local complementation
inline int trial_L2_4(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 2, 10);
    int v = rng.next_int(0, g.order() - 1);
    VertexSet x = random_subset(g.vertices(), rng);
    Graph gv = local_complement(g, v);
    if (cut_rank(g, x) == cut_rank(gv, x)) return kPass;
    ce = make_ce(g, {{"v", v}, {"x_mask", x}});
    return kFail;
}

// deleting a vertex moves any cut-rank by at most one, in both forms
inline int trial_L2_5(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 2, 10);
    int v = rng.next_int(0, g.order() - 1);
    VertexSet x = random_subset(g.vertices() & ~bit(v), rng);
    int del = rank_del1(g, v, x);
    int whole = cut_rank(g, x);
    int with_v = cut_rank(g, x | bit(v));
    bool ok = del <= whole && whole <= del + 1 && del <= with_v &&
              with_v <= del + 1;
    if (ok) return kPass;
    ce = make_ce(g, {{"v", v}, {"x_mask", x}});
    return kFail;
}

// submodular exchange for ranks of submatrices of a raw GF(2) matrix
inline int trial_L2_6(SplitMix64& rng, Counterexample& ce) {
    int r = rng.next_int(1, 8), c = rng.next_int(1, 8);
    Gf2Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        m.rows[static_cast<std::size_t>(i)] = rng.next() & low_mask(c);
    std::uint64_t x1 = rng.next() & low_mask(r), x2 = rng.next() & low_mask(r);
    std::uint64_t y1 = rng.next() & low_mask(c), y2 = rng.next() & low_mask(c);
    int lhs = matrix_slice_rank(m, x1, y1) + matrix_slice_rank(m, x2, y2);
    int rhs = matrix_slice_rank(m, x1 & x2, y1 | y2) +
              matrix_slice_rank(m, x1 | x2, y1 & y2);
    if (lhs >= rhs) return kPass;
    ce = Counterexample{
        "", {{"rows", m.rows}, {"r", r}, {"c", c}, {"x1", x1}, {"x2", x2}, {"y1", y1}, {"y2", y2}}};
    return kFail;
}

// cut-rank submodularity
inline int trial_L2_7(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 1, 10);
    VertexSet x = random_subset(g.vertices(), rng);
    VertexSet y = random_subset(g.vertices(), rng);
    if (cut_rank(g, x) + cut_rank(g, y) >=
        cut_rank(g, x & y) + cut_rank(g, x | y))
        return kPass;
    ce = make_ce(g, {{"x_mask", x}, {"y_mask", y}});
    return kFail;
}

// difference form of submodularity
inline int trial_L2_8(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 1, 10);
    VertexSet x = random_subset(g.vertices(), rng);
    VertexSet y = random_subset(g.vertices(), rng);
    if (cut_rank(g, x) + cut_rank(g, y) >=
        cut_rank(g, y & ~x) + cut_rank(g, x & ~y))
        return kPass;
    ce = make_ce(g, {{"x_mask", x}, {"y_mask", y}});
    return kFail;
}

// mixed deleted/whole submodular inequalities (S1), (S2)
inline int trial_L2_9(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 2, 10);
    int v = rng.next_int(0, g.order() - 1);
    VertexSet rest = g.vertices() & ~bit(v);
    VertexSet x = random_subset(rest, rng), y = random_subset(rest, rng);
    bool s1 = rank_del1(g, v, x) + cut_rank(g, y | bit(v)) >=
              rank_del1(g, v, x & y) + cut_rank(g, (x | y) | bit(v));
    bool s2 = rank_del1(g, v, x) + cut_rank(g, y) >=
              cut_rank(g, x & y) + rank_del1(g, v, x | y);
    if (s1 && s2) return kPass;
    ce = make_ce(g, {{"v", v}, {"x_mask", x}, {"y_mask", y}, {"s1", s1}, {"s2", s2}});
    return kFail;
}

// nested version: if deleting v does not change rho(Y), it does not change
// rho(X) for any X inside Y
inline int trial_cor_s2(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 2, 10);
        int v = rng.next_int(0, g.order() - 1);
        VertexSet y = random_subset(g.vertices() & ~bit(v), rng);
        VertexSet x = random_subset(y, rng);
        if (rank_del1(g, v, y) < cut_rank(g, y)) continue;
        if (rank_del1(g, v, x) == cut_rank(g, x)) return kPass;
        ce = make_ce(g, {{"v", v}, {"x_mask", x}, {"y_mask", y}});
        return kFail;
    }
    return kStarved;
}

// complements of the above: v inside Y, Y inside X
inline int trial_cor_s1(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 2, 10);
        int v = rng.next_int(0, g.order() - 1);
        VertexSet x = random_subset(g.vertices(), rng) | bit(v);
        VertexSet y = (random_subset(x, rng) & x) | bit(v);
        if (rank_del1(g, v, y & ~bit(v)) < cut_rank(g, y)) continue;
        if (rank_del1(g, v, x & ~bit(v)) == cut_rank(g, x)) return kPass;
        ce = make_ce(g, {{"v", v}, {"x_mask", x}, {"y_mask", y}});
        return kFail;
    }
    return kStarved;
}

// difference form of (S1)
inline int trial_subtool_minus(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 2, 10);
    int v = rng.next_int(0, g.order() - 1);
    VertexSet rest = g.vertices() & ~bit(v);
    VertexSet x = random_subset(rest, rng), y = random_subset(rest, rng);
    if (rank_del1(g, v, x) + cut_rank(g, y | bit(v)) >=
        rank_del1(g, v, y & ~x) + cut_rank(g, x & ~y))
        return kPass;
    ce = make_ce(g, {{"v", v}, {"x_mask", x}, {"y_mask", y}});
    return kFail;
}

// two-deletion submodular inequalities (A1)-(A3), case split on membership
inline int trial_A1A3(SplitMix64& rng, Counterexample& ce) {
    Graph g = rg(rng, 2, 10);
    const int n = g.order();
    if (n < 2) return kStarved;
    int a = rng.next_int(0, n - 1), b = a;
    while (b == a) b = rng.next_int(0, n - 1);
    VertexSet A = random_subset(g.vertices() & ~bit(a), rng);
    VertexSet B = random_subset(g.vertices() & ~bit(b), rng);
    int rhs = rank_del1(g, a, A) + rank_del1(g, b, B);
    bool b_in_A = (A & bit(b)) != 0, a_in_B = (B & bit(a)) != 0;
    int lhs;
    const char* form;
    if (!b_in_A && !a_in_B) {
        lhs = cut_rank(g, A & B) + rank_del2(g, a, b, A | B);
        form = "A1";
    } else if (b_in_A && !a_in_B) {
        lhs = rank_del1(g, b, A & B) + rank_del1(g, a, A | B);
        form = "A2";
    } else if (!b_in_A && a_in_B) {
        lhs = rank_del1(g, a, A & B) + rank_del1(g, b, A | B);
        form = "A2-swapped";
    } else {
        lhs = rank_del2(g, a, b, A & B) + cut_rank(g, A | B);
        form = "A3";
    }
    if (lhs <= rhs) return kPass;
    ce = make_ce(g, {{"a", a}, {"b", b}, {"A_mask", A}, {"B_mask", B}, {"form", form}});
    return kFail;
}

// bordered-slice formulas: reduced_cut_rank vs cut-rank of the actually
// reduced graph, for both LC_DELETE and PIVOT_DELETE
inline int trial_L2_10(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 2, 10);
        int x = rng.next_int(0, g.order() - 1);
        if (!g.neighbors(x)) continue;
        VertexSet s = random_subset(g.vertices() & ~bit(x), rng);
        VertexSet s_compact = compact_mask(s, x);
        int lc_formula = reduced_cut_rank(g, x, s, ReductionKind::LcDelete);
        int lc_direct =
            cut_rank(delete_vertex(local_complement(g, x), x), s_compact);
        int pv_formula = reduced_cut_rank(g, x, s, ReductionKind::PivotDelete);
        int pv_direct = cut_rank(contract_vertex(g, x), s_compact);
        if (lc_formula == lc_direct && pv_formula == pv_direct) return kPass;
        ce = make_ce(g, {{"x", x},
                         {"s_mask", s},
                         {"lc_formula", lc_formula},
                         {"lc_direct", lc_direct},
                         {"pv_formula", pv_formula},
                         {"pv_direct", pv_direct}});
        return kFail;
    }
    return kStarved;
}

// when deleting x leaves rho(C) unchanged, one of the two other reductions
// drops rho(C + x) by exactly one
inline int trial_L2_11(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 2, 10);
        int x = rng.next_int(0, g.order() - 1);
        if (!g.neighbors(x)) continue;
        VertexSet c = random_subset(g.vertices() & ~bit(x), rng);
        if (rank_del1(g, x, c) != cut_rank(g, c)) continue;
        int target = cut_rank(g, c | bit(x)) - 1;
        VertexSet cc = compact_mask(c, x);
        bool lc = cut_rank(delete_vertex(local_complement(g, x), x), cc) == target;
        bool pv = cut_rank(contract_vertex(g, x), cc) == target;
        if (lc || pv) return kPass;
        ce = make_ce(g, {{"x", x}, {"c_mask", c}, {"target", target}});
        return kFail;
    }
    return kStarved;
}

// partition inequalities mixing a deletion with one reduced graph
inline int trial_L2_12(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 2, 10);
        int x = rng.next_int(0, g.order() - 1);
        if (!g.neighbors(x)) continue;
        VertexSet rest = g.vertices() & ~bit(x);
        VertexSet x1 = random_subset(rest, rng), x2 = random_subset(rest, rng);
        VertexSet y1 = rest & ~x1, y2 = rest & ~x2;
        int rhs = cut_rank(g, x1 & x2) + cut_rank(g, y1 & y2) - 1;
        Graph lc = delete_vertex(local_complement(g, x), x);
        Graph pv = contract_vertex(g, x);
        bool p1 = rank_del1(g, x, x1) + cut_rank(lc, compact_mask(x2, x)) >= rhs;
        bool p2 = rank_del1(g, x, x1) + cut_rank(pv, compact_mask(x2, x)) >= rhs;
        if (p1 && p2) return kPass;
        ce = make_ce(g, {{"x", x}, {"x1_mask", x1}, {"x2_mask", x2}, {"p1", p1}, {"p2", p2}});
        return kFail;
    }
    return kStarved;
}

// partition inequality mixing the two non-deletion reductions
inline int trial_L2_13(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 2, 10);
        int x = rng.next_int(0, g.order() - 1);
        if (!g.neighbors(x)) continue;
        VertexSet rest = g.vertices() & ~bit(x);
        VertexSet x1 = random_subset(rest, rng), x2 = random_subset(rest, rng);
        VertexSet y1 = rest & ~x1, y2 = rest & ~x2;
        Graph lc = delete_vertex(local_complement(g, x), x);
        Graph pv = contract_vertex(g, x);
        if (cut_rank(lc, compact_mask(x1, x)) + cut_rank(pv, compact_mask(x2, x)) >=
            cut_rank(g, x1 & x2) + cut_rank(g, y1 & y2) - 1)
            return kPass;
        ce = make_ce(g, {{"x", x}, {"x1_mask", x1}, {"x2_mask", x2}});
        return kFail;
    }
    return kStarved;
}

// adding a vertex that does not raise rho preserves sequentiality both ways
inline int trial_L3_1(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        Graph g = rg(rng, 3, 10);
        VertexSet a = random_subset(g.vertices(), rng);
        VertexSet out = g.vertices() & ~a;
        if (!out) continue;
        std::vector<int> outs;
        for (VertexSet m = out; m;) {
            outs.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        int t = outs[static_cast<std::size_t>(
            rng.next_int(0, static_cast<int>(outs.size()) - 1))];
        if (cut_rank(g, a | bit(t)) != cut_rank(g, a)) continue;
        if (is_sequential(g, a | bit(t)).holds == is_sequential(g, a).holds)
            return kPass;
        ce = make_ce(g, {{"a_mask", a}, {"t", t}});
        return kFail;
    }
    return kStarved;
}

// in a prime, non-sequentially-3rc graph, a violating set exists that avoids
// splitting any of a family of disjoint rank-2 triples. Instances are
// constructed: a planted rank<=2 split plus planted rank-2 triples on both
// sides, filtered by the real predicates.
inline int trial_L3_2(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        int n = rng.next_int(10, 11);
        Graph g = rg(rng, n, n);
        n = g.order();
        // left block: vertices 0..4; force their rows over the right block
        // into the span of two patterns
        VertexSet left = low_mask(5), right = g.vertices() & ~left;
        std::uint64_t p1 = rng.next() & right, p2 = rng.next() & right;
        for (int x = 0; x < 5; ++x) {
            std::uint64_t row = 0;
            int c = rng.next_int(0, 3);
            if (c & 1) row ^= p1;
            if (c & 2) row ^= p2;
            for (VertexSet m = right; m;) {
                int d = std::countr_zero(m);
                m &= m - 1;
                bool want = (row >> d) & 1;
                if (g.adjacent(x, d) != want) g.toggle_edge(x, d);
            }
        }
        // planted triples: {0,1,2} on the left, three on the right
        g = plant_rank2_triple(std::move(g), 0, 1, 2);
        std::vector<int> rv;
        for (VertexSet m = right; m;) {
            rv.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        g = plant_rank2_triple(std::move(g), rv[0], rv[1], rv[2]);
        VertexSet t1 = bit(0) | bit(1) | bit(2);
        VertexSet t2 = bit(rv[0]) | bit(rv[1]) | bit(rv[2]);

        if (!is_prime(g).holds) continue;
        if (cut_rank_capped(g, t1, 3) != 2 || cut_rank_capped(g, t2, 3) != 2)
            continue;
        auto seq = is_sequentially_3rc(g);
        if (seq.holds) continue;

        // conclusion: some violating set avoids splitting both triples
        bool found = false;
        const VertexSet end = VertexSet{1} << (n - 1);
        for (VertexSet m = 1; m < end && !found; ++m) {
            if (cut_rank_capped(g, m, 3) > 2) continue;
            VertexSet i1 = m & t1, i2 = m & t2;
            if ((i1 != 0 && i1 != t1) || (i2 != 0 && i2 != t2)) continue;
            if (is_sequential(g, m).holds) continue;
            if (is_sequential(g, g.vertices() & ~m).holds) continue;
            found = true;
        }
        if (found) return kPass;
        ce = make_ce(g, {{"t1_mask", t1}, {"t2_mask", t2}});
        return kFail;
    }
    return kStarved;
}

// minimum degree of 3-rank-connected graphs on >= 6 vertices
inline int trial_deg3(SplitMix64& rng, Counterexample& ce) {
    auto g = sample_class(rng, cls_krank(3), 6, 8);
    if (!g) return kStarved;
    for (int v = 0; v < g->order(); ++v)
        if (g->degree(v) < 3) {
            ce = make_ce(*g, {{"v", v}, {"degree", g->degree(v)}});
            return kFail;
        }
    return kPass;
}

// k-rank-connectivity implies k-vertex-connectivity at order >= 2k
inline int trial_kconn(SplitMix64& rng, Counterexample& ce) {
    int k = rng.next_int(2, 3);
    auto g = sample_class(rng, cls_krank(k), 2 * k, 2 * k + 3);
    if (!g) return kStarved;
    if (k_vertex_connected(*g, k)) return kPass;
    ce = make_ce(*g, {{"k", k}});
    return kFail;
}

// deleting any vertex of a k-rank-connected graph on >= 2k vertices leaves
// a (k-1)-rank-connected graph
inline int trial_krank(SplitMix64& rng, Counterexample& ce) {
    int k = rng.next_int(2, 3);
    auto g = sample_class(rng, cls_krank(k), 2 * k, 2 * k + 3);
    if (!g) return kStarved;
    for (int v = 0; v < g->order(); ++v) {
        if (!is_k_rank_connected(delete_vertex(*g, v), k - 1).holds) {
            ce = make_ce(*g, {{"k", k}, {"v", v}});
            return kFail;
        }
    }
    return kPass;
}

// all three elementary reductions of a 3-rank-connected graph are prime
inline int trial_L4_1(SplitMix64& rng, Counterexample& ce) {
    auto g = sample_class(rng, cls_krank(3), 6, 8);
    if (!g) return kStarved;
    for (int x = 0; x < g->order(); ++x) {
        for (auto& [kind, red] : elementary_reductions(*g, x)) {
            if (!is_prime(red).holds) {
                ce = make_ce(*g, {{"x", x}, {"kind", to_string(kind)}});
                return kFail;
            }
        }
    }
    return kPass;
}

// at least two of the three elementary reductions are weakly 3rc
inline int trial_L4_2(SplitMix64& rng, Counterexample& ce) {
    auto g = sample_class(rng, cls_krank(3), 6, 8);
    if (!g) return kStarved;
    for (int x = 0; x < g->order(); ++x) {
        int good = 0;
        auto reds = elementary_reductions(*g, x);
        for (auto& [kind, red] : reds)
            if (is_weakly_3rc(red).holds) ++good;
        if (good < 2) {
            ce = make_ce(*g, {{"x", x}, {"weakly_3rc_count", good}});
            return kFail;
        }
    }
    return kPass;
}

// every rank-2 set of size <= 4 in a prime graph is a quad or sequential
inline int trial_L4_4(SplitMix64& rng, Counterexample& ce) {
    auto g = sample_class(rng, cls_prime(), 5, 9);
    if (!g) return kStarved;
    const int n = g->order();
    for (VertexSet m = 1; m < (VertexSet{1} << n); ++m) {
        int pc = std::popcount(m);
        if (pc > 4) continue;
        if (cut_rank_capped(*g, m, 3) != 2) continue;
        bool ok = (pc == 4 && is_quad(*g, m)) || is_sequential(*g, m).holds;
        if (!ok) {
            ce = make_ce(*g, {{"a_mask", m}});
            return kFail;
        }
    }
    return kPass;
}

// any rank-2 triple of a prime graph becomes a triplet after some pivots;
// the copy_row variant guarantees the search actually has to pivot
inline int trial_L5_1(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        auto g = sample_class(rng, cls_prime(), 6, 8);
        if (!g) return kStarved;
        const int n = g->order();
        int a = rng.next_int(0, n - 1), b = rng.next_int(0, n - 1),
            c = rng.next_int(0, n - 1);
        if (a == b || b == c || a == c) continue;
        TriplePlant mode =
            rng.next_bool() ? TriplePlant::sum_rows : TriplePlant::copy_row;
        Graph planted = plant_rank2_triple(*g, a, b, c, mode);
        VertexSet t = bit(a) | bit(b) | bit(c);
        if (!is_prime(planted).holds) continue;
        if (cut_rank_capped(planted, t, 3) != 2) continue;
        auto res = make_triplet(planted, t, kOrbitCap);
        Graph replayed = planted;
        for (auto [u, v] : res.pivots) replayed = pivot(replayed, u, v);
        if (is_triplet(res.graph, t) && replayed == res.graph) return kPass;
        ce = make_ce(planted, {{"t_mask", t}, {"pivots", res.pivots.size()}});
        return kFail;
    }
    return kStarved;
}

// deleting any member of a triplet of an internally 3rc graph leaves a prime
// graph
inline int trial_L5_2(SplitMix64& rng, Counterexample& ce) {
    auto inst = sample_internal_with_triplet(rng, 8, 10, true);
    if (!inst) return kStarved;
    auto& [g, t] = *inst;
    for (VertexSet m = t; m;) {
        int x = std::countr_zero(m);
        m &= m - 1;
        if (!is_prime(delete_vertex(g, x)).holds) {
            ce = make_ce(g, {{"t_mask", t}, {"x", x}});
            return kFail;
        }
    }
    return kPass;
}

// a fully closed set of rank >= 2 in a prime graph on >= 8 vertices has a
// member whose deletion or contraction is prime
inline int trial_L6_1(SplitMix64& rng, Counterexample& ce) {
    for (int i = 0; i < kSampleAttempts; ++i) {
        auto g = sample_class(rng, cls_prime(), 8, 10);
        if (!g) return kStarved;
        // grow a fully closed set by closing a random seed pair
        VertexSet a = random_subset(g->vertices(), rng);
        if (std::popcount(a) < 2) continue;
        bool grew = true;
        while (grew) {
            grew = false;
            int r = cut_rank(*g, a);
            for (VertexSet m = g->vertices() & ~a; m;) {
                int v = std::countr_zero(m);
                m &= m - 1;
                if (cut_rank_capped(*g, a | bit(v), r + 1) <= r) {
                    a |= bit(v);
                    grew = true;
                    break;
                }
            }
        }
        if (a == g->vertices() || cut_rank_capped(*g, a, 2) < 2) continue;
        if (!is_fully_closed(*g, a)) continue;  // paranoia; closure built it
        bool ok = false;
        for (VertexSet m = a; m && !ok;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (is_prime(delete_vertex(*g, v)).holds) ok = true;
            else if (g->neighbors(v) && is_prime(contract_vertex(*g, v)).holds)
                ok = true;
        }
        if (ok) return kPass;
        ce = make_ce(*g, {{"a_mask", a}});
        return kFail;
    }
    return kStarved;
}

// prime chain step exists at order >= 6 (sampled; the exhaustive sweep at
// n = 6, 7 is run_exhaustive_bouchet)
inline int trial_T3_2(SplitMix64& rng, Counterexample& ce) {
    auto g = sample_class(rng, cls_prime(), 8, 8);
    if (!g) return kStarved;
    try {
        auto step = reduce_prime(*g);
        if (step &&
            is_prime(apply_reduction(*g, step->vertex, step->kind)).holds)
            return kPass;
        ce = make_ce(*g, {{"reason", step ? "revalidation" : "no_step"}});
        return kFail;
    } catch (const theorem_violation& tv) {
        ce = make_ce(*g, {{"violation", nlohmann::json::parse(tv.report_json)}});
        return kFail;
    }
}

// sequentially 3rc chain step exists at order >= 13
inline int trial_T1_2(SplitMix64& rng, Counterexample& ce) {
    auto g = sample_class(rng, GraphClass{GraphClass::Kind::seq3rc, 0}, 13, 13);
    if (!g) return kStarved;
    try {
        auto step = reduce_seq3rc(*g);
        if (step && is_sequentially_3rc(
                        apply_reduction(*g, step->vertex, step->kind))
                        .holds)
            return kPass;
        ce = make_ce(*g, {{"reason", step ? "revalidation" : "no_step"}});
        return kFail;
    } catch (const theorem_violation& tv) {
        ce = make_ce(*g, {{"violation", nlohmann::json::parse(tv.report_json)}});
        return kFail;
    }
}

// a triplet of an internally 3rc graph on >= 12 vertices has a member whose
// deletion is sequentially 3rc
inline int trial_P5_8(SplitMix64& rng, Counterexample& ce) {
    auto inst = sample_internal_with_triplet(rng, 12, 12, false);
    if (!inst) return kStarved;
    auto& [g0, t] = *inst;
    Graph g = g0;
    if (!is_triplet(g, t)) {
        auto res = make_triplet(g, t, kOrbitCap);
        g = res.graph;
    }
    try {
        int x = reduce_internal_triplet(g, t);
        if (is_sequentially_3rc(delete_vertex(g, x)).holds) return kPass;
        ce = make_ce(g, {{"t_mask", t}, {"x", x}, {"reason", "revalidation"}});
        return kFail;
    } catch (const theorem_violation& tv) {
        ce = make_ce(g, {{"violation", nlohmann::json::parse(tv.report_json)}});
        return kFail;
    }
}

struct Suite {
    const char* name;
    const char* summary;
    std::uint64_t default_trials;
    int (*trial)(SplitMix64&, Counterexample&);
};

inline const std::vector<Suite>& suite_catalog() {
    static const std::vector<Suite> catalog = {
        {"L2.1", "pivot representative independence up to local equivalence", 200, trial_L2_1},
        {"L2.3", "one-vertex vertex-minors match a canonical reduction", 1000, trial_L2_3},
        {"L2.4", "cut-rank invariance under local complementation", 10000, trial_L2_4},
        {"L2.5", "single-deletion cut-rank bounds", 10000, trial_L2_5},
        {"L2.6", "submodular exchange for GF(2) submatrix ranks", 10000, trial_L2_6},
        {"L2.7", "cut-rank submodularity", 10000, trial_L2_7},
        {"L2.8", "cut-rank submodularity, difference form", 10000, trial_L2_8},
        {"L2.9", "deleted/whole submodular inequalities (S1), (S2)", 10000, trial_L2_9},
        {"cor_s1", "rank-preserving deletion propagates to supersets", 10000, trial_cor_s1},
        {"cor_s2", "rank-preserving deletion propagates to subsets", 10000, trial_cor_s2},
        {"subtool_minus", "difference form of (S1)", 10000, trial_subtool_minus},
        {"A1A3", "two-deletion submodular inequalities (A1)-(A3)", 10000, trial_A1A3},
        {"L2.10", "bordered-slice formulas for reduced cut-ranks", 10000, trial_L2_10},
        {"L2.11", "rank-preserving deletion forces a drop in a sibling reduction", 10000, trial_L2_11},
        {"L2.12", "partition inequalities (P1), (P2)", 10000, trial_L2_12},
        {"L2.13", "partition inequality across the two non-deletion reductions", 10000, trial_L2_13},
        {"L3.1", "rank-neutral extensions preserve sequentiality", 10000, trial_L3_1},
        {"L3.2", "violating sets can avoid splitting disjoint rank-2 triples", 100, trial_L3_2},
        {"deg3", "3-rank-connected graphs on >= 6 vertices have min degree 3", 500, trial_deg3},
        {"kconn", "k-rank-connectivity implies k-vertex-connectivity", 500, trial_kconn},
        {"krank", "vertex deletion drops rank-connectivity by at most one level", 500, trial_krank},
        {"L4.1", "every elementary reduction of a 3-rank-connected graph is prime", 500, trial_L4_1},
        {"L4.2", "at least two elementary reductions stay weakly 3rc", 300, trial_L4_2},
        {"L4.4", "rank-2 sets of size <= 4 in prime graphs: quad or sequential", 1000, trial_L4_4},
        {"L5.1", "rank-2 triples become triplets after pivoting", 200, trial_L5_1},
        {"L5.2", "triplet deletions in internally 3rc graphs are prime", 100, trial_L5_2},
        {"L6.1", "fully closed sets admit a prime deletion or contraction", 200, trial_L6_1},
        {"T3.2", "prime chain step exists (sampled at n = 8)", 1000, trial_T3_2},
        {"T1.2", "seq-3rc chain step exists (sampled at n = 13)", 100, trial_T1_2},
        {"P5.8", "triplet member with seq-3rc deletion exists (n = 12)", 50, trial_P5_8},
    };
    return catalog;
}

}  // namespace verify_detail

inline std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto& s : verify_detail::suite_catalog()) out.push_back(s.name);
    return out;
}

inline const char* suite_summary(const std::string& name) {
    for (const auto& s : verify_detail::suite_catalog())
        if (name == s.name) return s.summary;
    throw argument_error("unknown suite: " + name);
}

inline std::uint64_t suite_default_trials(const std::string& name) {
    for (const auto& s : verify_detail::suite_catalog())
        if (name == s.name) return s.default_trials;
    throw argument_error("unknown suite: " + name);
}

inline bool has_suite(const std::string& name) {
    for (const auto& s : verify_detail::suite_catalog())
        if (name == s.name) return true;
    return false;
}

// Runs `trials` independent trials of the named suite. Trial i draws from
// trial_rng(seed, i); results are identical for any worker count.
inline VerifyReport run_suite(const std::string& name, std::uint64_t trials,
                              std::uint64_t seed) {
    const verify_detail::Suite* suite = nullptr;
    for (const auto& s : verify_detail::suite_catalog())
        if (name == s.name) suite = &s;
    if (!suite) throw argument_error("unknown suite: " + name);

    auto t0 = std::chrono::steady_clock::now();
    std::vector<unsigned char> outcome(trials, 0);
    std::vector<Counterexample> ces(trials);
    parallel_for(0, trials, [&](std::uint64_t i) {
        SplitMix64 rng = trial_rng(seed, i);
        Counterexample ce;
        int r = suite->trial(rng, ce);
        outcome[i] = static_cast<unsigned char>(r);
        if (r == verify_detail::kFail) ces[i] = std::move(ce);
    });

    VerifyReport report;
    report.suite = name;
    report.trials = trials;
    report.seed = seed;
    for (std::uint64_t i = 0; i < trials; ++i) {
        if (outcome[i] == verify_detail::kStarved) continue;
        ++report.effective_trials;
        if (outcome[i] == verify_detail::kFail) {
            ++report.failures;
            ces[i].params["trial"] = i;
            report.counterexamples.push_back(std::move(ces[i]));
        }
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

// Exhaustive prime chain sweep over every labeled graph on n vertices:
// every prime one must admit a prime elementary reduction. trials counts the
// prime graphs examined.
inline VerifyReport run_exhaustive_bouchet(int n) {
    if (n < 6 || n > kEnumerationMaxOrder)
        throw argument_error(
            "exhaustive chain sweep supports n = 6 or 7 (guarantee starts at "
            "6, enumeration stops at 7)");
    auto t0 = std::chrono::steady_clock::now();
    const std::uint64_t count = labeled_graph_count(n);
    const int workers = thread_budget();
    std::vector<std::uint64_t> prime_counts(static_cast<std::size_t>(workers), 0);
    std::vector<std::vector<std::uint64_t>> failures(
        static_cast<std::size_t>(workers));
    std::atomic<std::uint64_t> cursor{0};
    std::vector<std::thread> pool;
    auto body = [&](int w) {
        constexpr std::uint64_t kChunk = 4096;
        for (;;) {
            std::uint64_t lo = cursor.fetch_add(kChunk);
            if (lo >= count) return;
            std::uint64_t hi = std::min(lo + kChunk, count);
            for (std::uint64_t code = lo; code < hi; ++code) {
                Graph g = graph_from_code(n, code);
                if (!is_prime(g).holds) continue;
                ++prime_counts[static_cast<std::size_t>(w)];
                bool ok = false;
                try {
                    auto step = reduce_prime(g);
                    ok = step.has_value() &&
                         is_prime(apply_reduction(g, step->vertex, step->kind))
                             .holds;
                } catch (const theorem_violation&) {
                    ok = false;
                }
                if (!ok) failures[static_cast<std::size_t>(w)].push_back(code);
            }
        }
    };
    for (int w = 1; w < workers; ++w) pool.emplace_back(body, w);
    body(0);
    for (auto& th : pool) th.join();

    VerifyReport report;
    report.suite = "T3.2";
    report.seed = 0;
    std::vector<std::uint64_t> all_failures;
    for (int w = 0; w < workers; ++w) {
        report.trials += prime_counts[static_cast<std::size_t>(w)];
        for (auto code : failures[static_cast<std::size_t>(w)])
            all_failures.push_back(code);
    }
    report.effective_trials = report.trials;
    std::sort(all_failures.begin(), all_failures.end());
    for (auto code : all_failures) {
        ++report.failures;
        report.counterexamples.push_back(verify_detail::make_ce(
            graph_from_code(n, code), {{"code", code}, {"n", n}}));
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    return report;
}

}  // namespace vmchain
