#pragma once

// Labeled simple graphs on up to 64 vertices, one 64-bit adjacency row per
// vertex, plus the single-vertex move algebra built on local complementation:
//
//   local_complement(g, v)   g*v   complement the subgraph induced on N(v)
//   pivot(g, u, v)           g^uv  = g*u*v*u, defined for an edge uv
//   delete_vertex(g, v)      g\v   order-preserving relabeling of the rest
//   contract_vertex(g, v)    g/v   = (g^uv)\v for the least neighbor u
//
// Graphs are plain values: operations return fresh graphs and never mutate
// their input, so any value can be shared across threads. Equality is labeled
// and bit-exact; no isomorphism anywhere.

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vmchain/errors.hpp"

namespace vmchain {

// A subset of the vertices of some host graph, as a bit mask (bit i = vertex
// i). All set algebra is the usual bitwise algebra on masks of equal order.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline constexpr std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

class Graph {
public:
    Graph() = default;

    explicit Graph(int n) : n_(n), rows_(static_cast<std::size_t>(n), 0) {
        if (n < 0 || n > kMaxVertices)
            throw argument_error("graph order must be in [0, 64], got " +
                                 std::to_string(n));
    }

    static Graph from_edges(int n,
                            std::span<const std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return low_mask(n_); }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (rows_[static_cast<std::size_t>(u)] & bit(v)) != 0;
    }

    // Adjacency row of v: the neighborhood N(v) as a mask.
    VertexSet neighbors(int v) const {
        check_vertex(v);
        return rows_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int twice = 0;
        for (auto r : rows_) twice += std::popcount(r);
        return twice / 2;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw argument_error("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] |= bit(v);
        rows_[static_cast<std::size_t>(v)] |= bit(u);
    }

    void toggle_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw argument_error("loops are not allowed");
        rows_[static_cast<std::size_t>(u)] ^= bit(v);
        rows_[static_cast<std::size_t>(v)] ^= bit(u);
    }

    // True when rows are symmetric, irreflexive and confined to the first n
    // bits. Construction keeps this invariant; exposed for tests.
    bool valid() const {
        for (int v = 0; v < n_; ++v) {
            std::uint64_t row = rows_[static_cast<std::size_t>(v)];
            if (row & ~vertices()) return false;
            if (row & bit(v)) return false;
            for (std::uint64_t m = row; m;) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if (!(rows_[static_cast<std::size_t>(u)] & bit(v)))
                    return false;
            }
        }
        return true;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw argument_error("vertex " + std::to_string(v) +
                                 " out of range [0, " + std::to_string(n_) +
                                 ")");
    }

    void check_subset(VertexSet x) const {
        if (x & ~vertices())
            throw argument_error("vertex set outside the host graph");
    }

private:
    int n_ = 0;
    std::vector<std::uint64_t> rows_;
};

struct GraphHash {
    std::size_t operator()(const Graph& g) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(g.order());
        for (int v = 0; v < g.order(); ++v) {
            h ^= g.neighbors(v);
            h *= 0xbf58476d1ce4e5b9ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

// g*v: every pair of distinct neighbors of v has its edge toggled; nothing
// else moves. An involution.
inline Graph local_complement(const Graph& g, int v) {
    g.check_vertex(v);
    Graph out = g;
    VertexSet nb = g.neighbors(v);
    for (VertexSet m = nb; m;) {
        int u = std::countr_zero(m);
        m &= m - 1;
        VertexSet others = nb & ~bit(u);
        for (VertexSet t = others; t;) {
            int w = std::countr_zero(t);
            t &= t - 1;
            if (w > u) out.toggle_edge(u, w);
        }
    }
    return out;
}

// g^uv = g*u*v*u; requires uv to be an edge. The result equals g*v*u*v, and
// pivoting the same edge again restores g.
inline Graph pivot(const Graph& g, int u, int v) {
    if (!g.adjacent(u, v))
        throw precondition_error("pivot requires an edge; {" +
                                 std::to_string(u) + "," + std::to_string(v) +
                                 "} is not one");
    return local_complement(local_complement(local_complement(g, u), v), u);
}

// Removes bit v from a mask and shifts the higher bits down by one, matching
// the relabeling delete_vertex applies.
inline VertexSet compact_mask(VertexSet mask, int v) {
    VertexSet lo = mask & (bit(v) - 1);
    VertexSet hi = (mask >> 1) & ~(bit(v) - 1);
    return lo | hi;
}

// g\v on n-1 vertices; every vertex above v slides down one label.
inline Graph delete_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    if (g.order() == 0) throw argument_error("cannot delete from empty graph");
    Graph out(g.order() - 1);
    for (int u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        int nu = u > v ? u - 1 : u;
        VertexSet row = compact_mask(g.neighbors(u) & ~bit(v), v);
        for (VertexSet m = row; m;) {
            int w = std::countr_zero(m);
            m &= m - 1;
            if (w > nu) out.add_edge(nu, w);
        }
    }
    return out;
}

// g/v = (g^uv)\v for the least-labeled neighbor u of v. Any neighbor choice
// gives a locally equivalent result; the least one keeps runs reproducible.
// Undefined (and rejected) for isolated v.
inline Graph contract_vertex(const Graph& g, int v) {
    g.check_vertex(v);
    VertexSet nb = g.neighbors(v);
    if (!nb)
        throw unsupported_error("contraction of isolated vertex " +
                                std::to_string(v) + " is undefined");
    int u = std::countr_zero(nb);
    return delete_vertex(pivot(g, u, v), v);
}

// The three canonical one-vertex reductions at v.
enum class ReductionKind { Delete, LcDelete, PivotDelete };

inline const char* to_string(ReductionKind k) {
    switch (k) {
        case ReductionKind::Delete: return "DELETE";
        case ReductionKind::LcDelete: return "LC_DELETE";
        case ReductionKind::PivotDelete: return "PIVOT_DELETE";
    }
    return "?";
}

inline ReductionKind reduction_kind_from(const std::string& s) {
    if (s == "DELETE") return ReductionKind::Delete;
    if (s == "LC_DELETE") return ReductionKind::LcDelete;
    if (s == "PIVOT_DELETE") return ReductionKind::PivotDelete;
    throw argument_error("unknown reduction kind: " + s);
}

inline Graph apply_reduction(const Graph& g, int v, ReductionKind kind) {
    switch (kind) {
        case ReductionKind::Delete: return delete_vertex(g, v);
        case ReductionKind::LcDelete:
            return delete_vertex(local_complement(g, v), v);
        case ReductionKind::PivotDelete: return contract_vertex(g, v);
    }
    throw argument_error("bad reduction kind");
}

// The canonical reductions at v: three when v has a neighbor, otherwise the
// two that are defined (and then g\v = g*v\v).
inline std::vector<std::pair<ReductionKind, Graph>> elementary_reductions(
    const Graph& g, int v) {
    g.check_vertex(v);
    std::vector<std::pair<ReductionKind, Graph>> out;
    out.emplace_back(ReductionKind::Delete, delete_vertex(g, v));
    out.emplace_back(ReductionKind::LcDelete,
                     delete_vertex(local_complement(g, v), v));
    if (g.neighbors(v))
        out.emplace_back(ReductionKind::PivotDelete, contract_vertex(g, v));
    return out;
}

}  // namespace vmchain
