#pragma once

// Brute-force oracles for the test suites. Everything here is deliberately
// written against the naive definitions — explicit 2D int matrices, textbook
// elimination, ordering enumeration — and shares no code path with the
// bit-sliced implementations it checks.

#include <algorithm>
#include <vector>

#include "vmchain/graph.hpp"

namespace oracles {

using vmchain::Graph;
using vmchain::VertexSet;

// Textbook Gaussian elimination over GF(2) on an explicit 0/1 matrix.
inline int naive_rank(std::vector<std::vector<int>> m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != rank && m[r][col]) {
                for (std::size_t c2 = 0; c2 < cols; ++c2)
                    m[r][c2] ^= m[rank][c2];
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

// Explicit submatrix A_G[X, V-X], then naive elimination.
inline int naive_cut_rank(const Graph& g, VertexSet x) {
    std::vector<int> rows, cols;
    for (int v = 0; v < g.order(); ++v) {
        if (x & vmchain::bit(v))
            rows.push_back(v);
        else
            cols.push_back(v);
    }
    std::vector<std::vector<int>> m;
    for (int r : rows) {
        std::vector<int> row;
        for (int c : cols) row.push_back(g.adjacent(r, c) ? 1 : 0);
        m.push_back(std::move(row));
    }
    return naive_rank(std::move(m));
}

// Local complementation by the definition: toggle every neighbor pair.
inline Graph naive_local_complement(const Graph& g, int v) {
    Graph out = g;
    std::vector<int> nbs;
    for (int u = 0; u < g.order(); ++u)
        if (g.adjacent(v, u)) nbs.push_back(u);
    for (std::size_t i = 0; i < nbs.size(); ++i)
        for (std::size_t j = i + 1; j < nbs.size(); ++j)
            out.toggle_edge(nbs[i], nbs[j]);
    return out;
}

// Sequentiality by direct ordering search: depth-first over orderings of A,
// pruning prefixes whose cut-rank exceeds 2. Independent of the subset DP.
inline bool naive_sequential_dfs(const Graph& g, VertexSet chosen,
                                 VertexSet remaining) {
    if (!remaining) return true;
    for (VertexSet m = remaining; m;) {
        VertexSet b = m & (~m + 1);
        m ^= b;
        if (naive_cut_rank(g, chosen | b) <= 2 &&
            naive_sequential_dfs(g, chosen | b, remaining & ~b))
            return true;
    }
    return false;
}

inline bool naive_is_sequential(const Graph& g, VertexSet a) {
    return naive_sequential_dfs(g, 0, a);
}

// 2-rank-connectivity straight from the partition condition, sweeping every
// proper nonempty side. No order floor: callers compare on n >= 4 where the
// convention and the raw condition agree.
inline bool naive_is_prime_unfloored(const Graph& g) {
    const int n = g.order();
    for (VertexSet a = 1; a + 1 < (VertexSet{1} << n); ++a) {
        int rho = naive_cut_rank(g, a);
        if (rho < 2 && std::popcount(a) > rho && n - std::popcount(a) > rho)
            return false;
    }
    return true;
}

}  // namespace oracles
