#pragma once

// Seeded generation and exhaustive enumeration.
//
// RNG: splitmix64 (Steele, Lea, Flood; the standard 64-bit finalizer chain),
// fixed here byte-for-byte so reports replay across platforms and languages.
// Streams are split arithmetically: trial i of a run seeded with s draws from
// a fresh generator with state s + (i+1) * 0x9e3779b97f4a7c15. Nothing ever
// touches the platform RNG.
//
// G(n, p) sampling consumes one 64-bit draw per vertex pair in the fixed
// order (0,1),(0,2),(1,2),(0,3),...; an edge appears when the draw falls
// below round(p * 2^64). Identical GenSpecs therefore yield identical graphs.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

#include "vmchain/connectivity.hpp"
#include "vmchain/errors.hpp"
#include "vmchain/graph.hpp"

namespace vmchain {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += kGolden);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform over [0, bound)
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    int next_int(int lo, int hi) {  // inclusive range
        return lo + static_cast<int>(next_below(
                        static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool next_bool() { return next() & 1; }
};

// Generator for trial `index` of a run seeded with `seed`.
inline SplitMix64 trial_rng(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + (index + 1) * kGolden);
}

inline std::uint64_t edge_threshold(double p) {
    if (p <= 0.0) return 0;
    if (p >= 1.0) return ~std::uint64_t{0};
    return static_cast<std::uint64_t>(
        std::llround(p * 9007199254740992.0))  // p * 2^53, exact for dyadics
           << 11;
}

// One G(n, p) draw from an explicit generator.
inline Graph random_graph(int n, double p, SplitMix64& rng) {
    Graph g(n);
    const std::uint64_t threshold = edge_threshold(p);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            std::uint64_t r = rng.next();
            if (p >= 1.0 || r < threshold) g.add_edge(i, j);
        }
    return g;
}

inline VertexSet random_subset(VertexSet universe, SplitMix64& rng) {
    return universe & rng.next();
}

struct GenSpec {
    int n = 0;
    double edge_probability = 0.5;
    std::optional<GraphClass> filter;
    std::uint64_t seed = 0;
    int max_rejects = 1000;
};

// Rejection-samples G(n, p) until the filter class accepts. Attempt k uses
// the trial stream trial_rng(seed, k), so the result is a pure function of
// the spec.
inline Graph gen_random(const GenSpec& spec) {
    for (int attempt = 0; attempt <= spec.max_rejects; ++attempt) {
        SplitMix64 rng =
            trial_rng(spec.seed, static_cast<std::uint64_t>(attempt));
        Graph g = random_graph(spec.n, spec.edge_probability, rng);
        if (!spec.filter || check_class(g, *spec.filter).holds) return g;
    }
    throw generation_error(
        "no graph passed the '" + spec.filter->name() + "' filter within " +
            std::to_string(spec.max_rejects + 1) + " attempts",
        static_cast<std::uint64_t>(spec.max_rejects) + 1);
}

// --- exhaustive labeled enumeration (small n) ---

inline constexpr int kEnumerationMaxOrder = 7;

inline std::uint64_t labeled_graph_count(int n) {
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

// Graph number `code` on n vertices: bit k of the code is the pair
// (0,1),(0,2),(1,2),(0,3),... — ascending codes enumerate ascending
// adjacency bit patterns.
inline Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(n);
    int k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
            if ((code >> k) & 1) g.add_edge(i, j);
    return g;
}

// Visits every labeled graph on n vertices exactly once, ascending by
// adjacency bit pattern. Exhaustive sweeps above n = 7 are not a thing this
// library will do behind your back; sample instead.
template <class F>
void enumerate_graphs(int n, F&& visit) {
    if (n < 0 || n > kEnumerationMaxOrder)
        throw resource_limit_error(
            "exhaustive enumeration supports n <= " +
            std::to_string(kEnumerationMaxOrder) + "; use sampling beyond");
    const std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t code = 0; code < count; ++code)
        visit(graph_from_code(n, code));
}

}  // namespace vmchain
