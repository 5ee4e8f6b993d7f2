#pragma once

// Cut-rank machinery. For a graph G and X ⊆ V(G), the cut-rank rho_G(X) is
// the GF(2) rank of the adjacency slice A_G[X, V(G)-X]. It is symmetric
// (rho(X) = rho(V-X)) and submodular, and is invariant under local
// complementation — which is what makes it the right connectivity measure for
// the vertex-minor order.
//
// Everything here works on the host graph directly: the rank of A_G[R, C] for
// disjoint masks R, C equals the rank of the rows {N(v) & C : v in R}, since
// the columns outside C are zeroed. In particular ranks of deleted graphs
// (rho_{G\v}, rho_{G\u\v}) never require building the deleted graph: deleting
// v only removes row v and column v, so slicing around v is enough.

#include <bit>
#include <cstdint>
#include <string>

#include "vmchain/gf2.hpp"
#include "vmchain/graph.hpp"

namespace vmchain {

// Rank of A_G[rows, cols] for disjoint masks, computed at most to `cap`.
inline int slice_rank(const Graph& g, VertexSet rows, VertexSet cols,
                      int cap = 64) {
    if (cap <= 0 || !rows || !cols) return 0;
    std::uint64_t basis[64];
    int r = 0;
    for (VertexSet m = rows; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        std::uint64_t w = g.neighbors(v) & cols;
        for (int i = 0; i < r; ++i) {
            // basis rows are kept with strictly decreasing leading bits after
            // reduction; xor whenever it lowers the word
            std::uint64_t x = w ^ basis[i];
            if (x < w) w = x;
        }
        if (w) {
            // insert keeping descending order by value (= by leading bit)
            int j = r++;
            while (j > 0 && basis[j - 1] < w) {
                basis[j] = basis[j - 1];
                --j;
            }
            basis[j] = w;
            if (r >= cap) return r;
        }
    }
    return r;
}

// rho_G(X) = rank A_G[X, V-X].
inline int cut_rank(const Graph& g, VertexSet x) {
    g.check_subset(x);
    return slice_rank(g, x, g.vertices() & ~x);
}

// min(rho_G(X), cap); enough for every threshold test and much cheaper.
inline int cut_rank_capped(const Graph& g, VertexSet x, int cap) {
    g.check_subset(x);
    return slice_rank(g, x, g.vertices() & ~x, cap);
}

// rho_G(X, Y) = rank A_G[X, Y] for disjoint X, Y.
inline int cross_rank(const Graph& g, VertexSet x, VertexSet y) {
    g.check_subset(x);
    g.check_subset(y);
    if (x & y) throw argument_error("cross_rank requires disjoint sets");
    return slice_rank(g, x, y);
}

// Cut-rank of X in the reduced graph g*x\x (kind LC_DELETE) or g/x (kind
// PIVOT_DELETE) evaluated on g itself, via the bordered slice
//
//     ( corner  N(x) & D )           D = V - (X + {x}),
//     ( A[X,x]  A[X, D]  )  - rank minus one -
//
// with corner = 1 for LC_DELETE and 0 for PIVOT_DELETE. Agrees with cut_rank
// applied to the actually reduced graph.
inline int reduced_cut_rank(const Graph& g, int x, VertexSet s,
                            ReductionKind kind) {
    g.check_vertex(x);
    g.check_subset(s);
    if (s & bit(x)) throw argument_error("x must not lie in the queried set");
    if (kind == ReductionKind::Delete)
        throw argument_error(
            "reduced_cut_rank covers LC_DELETE and PIVOT_DELETE; a plain "
            "deletion is an ordinary slice");
    if (kind == ReductionKind::PivotDelete && !g.neighbors(x))
        throw precondition_error("contraction of an isolated vertex is undefined");

    VertexSet d = g.vertices() & ~s & ~bit(x);
    // bit x doubles as the corner column: no row uses it otherwise.
    std::uint64_t border[65];
    int count = 0;
    std::uint64_t corner = kind == ReductionKind::LcDelete ? bit(x) : 0;
    border[count++] = corner | (g.neighbors(x) & d);
    VertexSet cols = d | bit(x);
    for (VertexSet m = s; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        border[count++] = g.neighbors(v) & cols;
    }
    return rank_of_rows({border, static_cast<std::size_t>(count)}) - 1;
}

}  // namespace vmchain
