#pragma once

// The rank-connectivity hierarchy as decision procedures with witnesses.
//
// A graph is k-rank-connected when no partition (A, B) of its vertices has
// |A|, |B| > rho(A) and rho(A) < k. "Prime" means 2-rank-connected. On top of
// prime sit three refinements, all phrased over the low-rank sets:
//
//   weakly 3-rank-connected      no X with rho(X) <= 2 and both sides >= 5
//   internally 3-rank-connected  every X with rho(X) <= 2 has a side <= 3
//   sequentially 3-rank-connected every X with rho(X) <= 2 has a sequential
//                                side (an ordering with all prefixes of
//                                cut-rank <= 2)
//
// Convention: for k >= 2, graphs on fewer than 2k vertices are not considered
// k-rank-connected. Below that order the partition condition is vacuous (one
// side is always too small to violate it), which would make every tiny
// connected graph prime; the usual convention — the smallest prime graph is
// the 5-cycle — is what every consumer of these predicates expects. A verdict
// that fails only this order floor carries no witness set.
//
// Witnesses: the reported violating set is the lexicographically least
// violating mask (as an integer). Violating families are closed under
// complementation, so the least violating mask never contains vertex n-1;
// sweeping the masks free of that vertex in increasing order finds it first
// and halves the work at the same time.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vmchain/cutrank.hpp"
#include "vmchain/errors.hpp"
#include "vmchain/graph.hpp"

namespace vmchain {

struct ConnectivityVerdict {
    bool holds = false;
    std::optional<VertexSet> witness;  // a violating set when holds is false
    std::optional<std::vector<int>> witness_order;  // sequential ordering
    explicit operator bool() const { return holds; }
};

namespace detail {

// Scans the proper nonempty subsets avoiding vertex n-1 in increasing mask
// order and returns the first one `bad` accepts.
template <class Bad>
std::optional<VertexSet> first_violation(const Graph& g, Bad&& bad) {
    int n = g.order();
    if (n <= 1) return std::nullopt;
    const VertexSet end = VertexSet{1} << (n - 1);
    for (VertexSet m = 1; m < end; ++m)
        if (bad(m)) return m;
    return std::nullopt;
}

}  // namespace detail

inline ConnectivityVerdict is_k_rank_connected(const Graph& g, int k) {
    if (k < 1) throw argument_error("k-rank-connectivity needs k >= 1");
    if (k >= 2 && g.order() < 2 * k) return {false, std::nullopt, std::nullopt};
    const int n = g.order();
    auto w = detail::first_violation(g, [&](VertexSet m) {
        int pc = std::popcount(m);
        int t = std::min({k, pc, n - pc});
        return cut_rank_capped(g, m, t) < t;
    });
    if (w) return {false, w, std::nullopt};
    return {true, std::nullopt, std::nullopt};
}

inline ConnectivityVerdict is_prime(const Graph& g) {
    return is_k_rank_connected(g, 2);
}

// Largest |A| this implementation will run the sequential-set DP on.
inline constexpr int kSequentialDpLimit = 28;

// Decides whether `a` admits an ordering a_1,...,a_m with
// rho({a_1,...,a_i}) <= 2 for every prefix, by dynamic programming over the
// subsets of `a`: a subset is a feasible prefix iff its own cut-rank is <= 2
// and some one-smaller subset is feasible. Exact, no greedy shortcuts.
// On success witness_order carries a realizing ordering (lowest-vertex
// tie-break in the reconstruction); on failure the witness is `a` itself and
// the violation is reproduced by re-running the check.
inline ConnectivityVerdict is_sequential(const Graph& g, VertexSet a) {
    g.check_subset(a);
    int m = std::popcount(a);

    std::vector<int> verts;
    verts.reserve(static_cast<std::size_t>(m));
    for (VertexSet t = a; t;) {
        verts.push_back(std::countr_zero(t));
        t &= t - 1;
    }

    if (m <= 2) {
        // prefixes of size <= 2 always have cut-rank <= 2
        return {true, std::nullopt, verts};
    }
    if (cut_rank_capped(g, a, 3) > 2)
        return {false, a, std::nullopt};  // the full prefix already fails
    if (m > kSequentialDpLimit)
        throw resource_limit_error("sequential-set DP limited to |A| <= " +
                                   std::to_string(kSequentialDpLimit));

    auto decompress = [&](std::uint64_t s) {
        VertexSet out = 0;
        for (std::uint64_t t = s; t;) {
            int i = std::countr_zero(t);
            t &= t - 1;
            out |= bit(verts[static_cast<std::size_t>(i)]);
        }
        return out;
    };

    const std::uint64_t full = (std::uint64_t{1} << m) - 1;
    std::vector<bool> reachable(static_cast<std::size_t>(full) + 1, false);
    reachable[0] = true;
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
        if (cut_rank_capped(g, decompress(s), 3) <= 2) reachable[s] = true;
    }
    if (!reachable[full]) return {false, a, std::nullopt};

    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(m));
    std::uint64_t s = full;
    while (s) {
        for (std::uint64_t t = s;;) {
            std::uint64_t b = t & (~t + 1);
            t ^= b;
            if (reachable[s ^ b]) {
                order.push_back(verts[static_cast<std::size_t>(std::countr_zero(b))]);
                s ^= b;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return {true, std::nullopt, order};
}

// Exhaustive by definition; refuses beyond 24 vertices rather than silently
// sampling.
inline constexpr int kSequential3rcOrderLimit = 24;

inline ConnectivityVerdict is_sequentially_3rc(const Graph& g) {
    const int n = g.order();
    if (n > kSequential3rcOrderLimit)
        throw resource_limit_error(
            "sequential 3-rank-connectivity check is exhaustive; refusing n > " +
            std::to_string(kSequential3rcOrderLimit));
    if (n < 4) return {false, std::nullopt, std::nullopt};  // prime order floor
    auto w = detail::first_violation(g, [&](VertexSet m) {
        int pc = std::popcount(m);
        int small = std::min(pc, n - pc);
        int r = cut_rank_capped(g, m, 3);
        if (r < std::min(2, small)) return true;  // primality violation
        if (r > 2) return false;
        // a side of size <= 3 with rho <= 2 is sequential outright
        if (small <= 3) return false;
        if (is_sequential(g, m).holds) return false;
        return !is_sequential(g, g.vertices() & ~m).holds;
    });
    if (w) return {false, w, std::nullopt};
    return {true, std::nullopt, std::nullopt};
}

inline ConnectivityVerdict is_weakly_3rc(const Graph& g) {
    auto prime = is_prime(g);
    if (!prime.holds) return prime;
    const int n = g.order();
    auto w = detail::first_violation(g, [&](VertexSet m) {
        int pc = std::popcount(m);
        return pc >= 5 && n - pc >= 5 && cut_rank_capped(g, m, 3) <= 2;
    });
    if (w) return {false, w, std::nullopt};
    return {true, std::nullopt, std::nullopt};
}

inline ConnectivityVerdict is_internally_3rc(const Graph& g) {
    auto prime = is_prime(g);
    if (!prime.holds) return prime;
    const int n = g.order();
    auto w = detail::first_violation(g, [&](VertexSet m) {
        int pc = std::popcount(m);
        return pc > 3 && n - pc > 3 && cut_rank_capped(g, m, 3) <= 2;
    });
    if (w) return {false, w, std::nullopt};
    return {true, std::nullopt, std::nullopt};
}

// Named graph classes as used by the CLI, generators and reducers.
struct GraphClass {
    enum class Kind { prime, krank, weak3rc, internal3rc, seq3rc };
    Kind kind = Kind::prime;
    int k = 0;  // for krank

    static GraphClass parse(const std::string& text) {
        if (text == "prime") return {Kind::prime, 0};
        if (text == "weak3rc") return {Kind::weak3rc, 0};
        if (text == "internal3rc") return {Kind::internal3rc, 0};
        if (text == "seq3rc") return {Kind::seq3rc, 0};
        if (text.rfind("krank:", 0) == 0) {
            int k = 0;
            try {
                k = std::stoi(text.substr(6));
            } catch (...) {
                throw argument_error("bad class: " + text);
            }
            if (k < 1) throw argument_error("krank:k needs k >= 1");
            return {Kind::krank, k};
        }
        throw argument_error(
            "unknown class '" + text +
            "' (expected prime, krank:k, weak3rc, internal3rc, seq3rc)");
    }

    std::string name() const {
        switch (kind) {
            case Kind::prime: return "prime";
            case Kind::krank: return "krank:" + std::to_string(k);
            case Kind::weak3rc: return "weak3rc";
            case Kind::internal3rc: return "internal3rc";
            case Kind::seq3rc: return "seq3rc";
        }
        return "?";
    }
};

inline ConnectivityVerdict check_class(const Graph& g, const GraphClass& c) {
    switch (c.kind) {
        case GraphClass::Kind::prime: return is_prime(g);
        case GraphClass::Kind::krank: return is_k_rank_connected(g, c.k);
        case GraphClass::Kind::weak3rc: return is_weakly_3rc(g);
        case GraphClass::Kind::internal3rc: return is_internally_3rc(g);
        case GraphClass::Kind::seq3rc: return is_sequentially_3rc(g);
    }
    throw argument_error("bad class");
}

}  // namespace vmchain
