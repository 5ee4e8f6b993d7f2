#pragma once

// Local equivalence as breadth-first orbit enumeration: h is locally
// equivalent to g when h lies in the closure of g under local
// complementation at every vertex. Labels stay fixed throughout — this is a
// labeled notion, not isomorphism. Orbits are enumerated with a visited set
// and a hard cap; hitting the cap raises resource_limit_error, which is
// deliberately distinct from a negative answer.

#include <algorithm>
#include <cstddef>
#include <deque>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "vmchain/errors.hpp"
#include "vmchain/graph.hpp"

namespace vmchain {

namespace detail {

// BFS over *-moves from g. Visits every orbit member once; calls visit(graph)
// and stops early when visit returns true. Returns true when stopped early.
template <class Visit>
bool orbit_bfs(const Graph& g, std::size_t cap, Visit&& visit) {
    std::unordered_set<Graph, GraphHash> seen;
    std::deque<Graph> queue;
    seen.insert(g);
    if (visit(g)) return true;
    queue.push_back(g);
    while (!queue.empty()) {
        Graph cur = std::move(queue.front());
        queue.pop_front();
        for (int v = 0; v < cur.order(); ++v) {
            Graph next = local_complement(cur, v);
            if (!seen.insert(next).second) continue;
            if (seen.size() > cap)
                throw resource_limit_error(
                    "local-equivalence orbit exceeds cap of " +
                    std::to_string(cap) + " states");
            if (visit(next)) return true;
            queue.push_back(std::move(next));
        }
    }
    return false;
}

}  // namespace detail

// The complete *-orbit of g, sorted by adjacency rows for a stable order.
inline std::vector<Graph> local_equivalence_orbit(const Graph& g,
                                                  std::size_t cap) {
    std::vector<Graph> orbit;
    detail::orbit_bfs(g, cap, [&](const Graph& h) {
        orbit.push_back(h);
        return false;
    });
    std::sort(orbit.begin(), orbit.end(), [](const Graph& a, const Graph& b) {
        for (int v = 0; v < a.order(); ++v) {
            if (a.neighbors(v) != b.neighbors(v))
                return a.neighbors(v) < b.neighbors(v);
        }
        return false;
    });
    return orbit;
}

// Index of the first of `targets` found in the orbit of g, or -1 after the
// whole orbit has been enumerated without a hit.
inline int locally_equivalent_any(const Graph& g,
                                  std::span<const Graph> targets,
                                  std::size_t cap) {
    for (const Graph& t : targets)
        if (t.order() != g.order())
            throw argument_error(
                "local equivalence is defined between graphs of equal order");
    int found = -1;
    detail::orbit_bfs(g, cap, [&](const Graph& h) {
        for (std::size_t i = 0; i < targets.size(); ++i) {
            if (targets[i] == h) {
                found = static_cast<int>(i);
                return true;
            }
        }
        return false;
    });
    return found;
}

inline bool locally_equivalent(const Graph& g, const Graph& h,
                               std::size_t cap) {
    return locally_equivalent_any(g, {&h, 1}, cap) == 0;
}

}  // namespace vmchain
