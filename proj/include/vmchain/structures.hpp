#pragma once

// Structural gadgets over the cut-rank function.
//
//   quad     a 4-set P with rho(P) = 2 and rho(P - {x}) = 3 for every x in P
//   triplet  a 3-set T with rho(T) = 2 and rho_{G\x}(T - x) = 2 for every
//            x in T
//
// Quads and triplets are represented as plain vertex masks; the predicates
// below are their validity contracts. make_triplet realizes the fact that in
// a prime graph any 3-set of cut-rank 2 becomes a triplet in some
// pivot-equivalent graph; the search is a breadth-first walk of the pivot
// orbit, complete up to the state cap.

#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "vmchain/connectivity.hpp"
#include "vmchain/cutrank.hpp"
#include "vmchain/errors.hpp"
#include "vmchain/graph.hpp"

namespace vmchain {

inline bool is_quad(const Graph& g, VertexSet p) {
    g.check_subset(p);
    if (std::popcount(p) != 4)
        throw argument_error("a quad candidate must have exactly 4 vertices");
    if (cut_rank_capped(g, p, 3) != 2) return false;
    for (VertexSet m = p; m;) {
        VertexSet b = m & (~m + 1);
        m ^= b;
        if (cut_rank_capped(g, p ^ b, 3) != 3) return false;
    }
    return true;
}

// All quads, in ascending lexicographic order of their vertex tuples.
inline std::vector<VertexSet> find_quads(const Graph& g) {
    std::vector<VertexSet> out;
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    VertexSet p = bit(a) | bit(b) | bit(c) | bit(d);
                    if (is_quad(g, p)) out.push_back(p);
                }
    return out;
}

inline bool is_triplet(const Graph& g, VertexSet t) {
    g.check_subset(t);
    if (std::popcount(t) != 3)
        throw argument_error("a triplet candidate must have exactly 3 vertices");
    if (cut_rank_capped(g, t, 3) != 2) return false;
    // rho_{G\x}(T-x) is the rank of rows T-x against columns V-T: deleting x
    // only drops row x and column x, both outside that slice.
    VertexSet outside = g.vertices() & ~t;
    for (VertexSet m = t; m;) {
        VertexSet b = m & (~m + 1);
        m ^= b;
        if (slice_rank(g, t ^ b, outside, 2) != 2) return false;
    }
    return true;
}

struct MakeTripletResult {
    Graph graph;                            // pivot-equivalent to the input
    std::vector<std::pair<int, int>> pivots;  // edge sequence applied in order
};

// Finds a graph pivot-equivalent to g in which `a` is a triplet, together
// with the pivot sequence that reaches it. Existence is guaranteed for prime
// g with rho(a) = 2, so exhausting the cap signals an insufficient cap, not
// nonexistence.
inline MakeTripletResult make_triplet(const Graph& g, VertexSet a,
                                      std::size_t cap = 1000000) {
    g.check_subset(a);
    if (std::popcount(a) != 3)
        throw argument_error("make_triplet needs a 3-element set");
    if (!is_prime(g).holds)
        throw precondition_error("make_triplet requires a prime graph");
    if (cut_rank_capped(g, a, 3) != 2)
        throw precondition_error("make_triplet requires rho(a) = 2");

    struct Node {
        Graph graph;
        std::size_t parent;
        std::pair<int, int> move;
    };
    std::vector<Node> nodes;
    std::unordered_set<Graph, GraphHash> seen;
    std::deque<std::size_t> queue;

    auto unwind = [&](std::size_t i) {
        MakeTripletResult res{nodes[i].graph, {}};
        while (i != 0) {
            res.pivots.push_back(nodes[i].move);
            i = nodes[i].parent;
        }
        std::reverse(res.pivots.begin(), res.pivots.end());
        return res;
    };

    nodes.push_back({g, 0, {-1, -1}});
    seen.insert(g);
    if (is_triplet(g, a)) return unwind(0);
    queue.push_back(0);

    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        const int n = nodes[cur].graph.order();
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!nodes[cur].graph.adjacent(u, v)) continue;
                Graph next = pivot(nodes[cur].graph, u, v);
                if (!seen.insert(next).second) continue;
                if (seen.size() > cap)
                    throw resource_limit_error(
                        "make_triplet pivot search exceeded cap of " +
                        std::to_string(cap) + " states");
                nodes.push_back({std::move(next), cur, {u, v}});
                if (is_triplet(nodes.back().graph, a))
                    return unwind(nodes.size() - 1);
                queue.push_back(nodes.size() - 1);
            }
        }
    }
    // pivot orbit exhausted without a hit: impossible under the preconditions
    throw resource_limit_error(
        "make_triplet exhausted the pivot orbit without finding a triplet");
}

// X is fully closed when every outside vertex strictly raises the cut-rank.
inline bool is_fully_closed(const Graph& g, VertexSet x) {
    g.check_subset(x);
    int r = cut_rank(g, x);
    for (VertexSet m = g.vertices() & ~x; m;) {
        VertexSet b = m & (~m + 1);
        m ^= b;
        if (cut_rank_capped(g, x | b, r + 1) <= r) return false;
    }
    return true;
}

// A sequential set of maximum cardinality (ties broken by least mask),
// computed by the global subset-DP: a set is a feasible prefix iff its
// cut-rank is <= 2 and some one-smaller subset is feasible.
inline VertexSet maximal_sequential_set(const Graph& g) {
    const int n = g.order();
    if (n > kSequential3rcOrderLimit)
        throw resource_limit_error("maximal_sequential_set limited to n <= " +
                                   std::to_string(kSequential3rcOrderLimit));
    if (!is_prime(g).holds)
        throw precondition_error("maximal_sequential_set requires a prime graph");
    const std::uint64_t full = low_mask(n);
    std::vector<bool> reachable(static_cast<std::size_t>(full) + 1, false);
    reachable[0] = true;
    VertexSet best = 0;
    int best_size = 0;
    for (std::uint64_t s = 1; s <= full; ++s) {
        bool has_pred = false;
        for (std::uint64_t t = s; t;) {
            std::uint64_t b = t & (~t + 1);
            t ^= b;
            if (reachable[s ^ b]) {
                has_pred = true;
                break;
            }
        }
        if (!has_pred) continue;
        if (cut_rank_capped(g, s, 3) > 2) continue;
        reachable[s] = true;
        if (std::popcount(s) > best_size) {
            best_size = std::popcount(s);
            best = s;
        }
    }
    return best;
}

}  // namespace vmchain
