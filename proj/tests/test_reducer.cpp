#include <catch2/catch_amalgamated.hpp>

#include "vmchain/graph6.hpp"
#include "vmchain/random.hpp"
#include "vmchain/reducer.hpp"
#include "vmchain/verify.hpp"

using namespace vmchain;

namespace {
Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}
Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}
Graph sample(const char* cls, int n, std::uint64_t seed) {
    GenSpec spec;
    spec.n = n;
    spec.seed = seed;
    spec.filter = GraphClass::parse(cls);
    return gen_random(spec);
}
}  // namespace

TEST_CASE("reduce_prime: C5 has no prime reduction; n = 6 always does",
          "[reducer]") {
    CHECK_FALSE(reduce_prime(cycle(5)).has_value());
    CHECK_THROWS_AS(reduce_prime(path(4)), precondition_error);

    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = sample("prime", 6, seed);
        auto step = reduce_prime(g);
        REQUIRE(step.has_value());
        Graph reduced = apply_reduction(g, step->vertex, step->kind);
        CHECK(reduced.order() == 5);
        CHECK(is_prime(reduced).holds);
        // determinism
        auto again = reduce_prime(g);
        CHECK(again->vertex == step->vertex);
        CHECK(again->kind == step->kind);
    }
}

TEST_CASE("reduce_seq3rc on a 13-vertex sample", "[reducer][slow]") {
    Graph g = sample("seq3rc", 13, 77);
    auto step = reduce_seq3rc(g);
    REQUIRE(step.has_value());
    Graph reduced = apply_reduction(g, step->vertex, step->kind);
    CHECK(reduced.order() == 12);
    CHECK(is_sequentially_3rc(reduced).holds);
    CHECK_THROWS_AS(reduce_seq3rc(path(4)), precondition_error);
}

TEST_CASE("build_chain stops at the floor and records original labels",
          "[reducer]") {
    Graph g = sample("prime", 7, 3);
    CHECK_THROWS_AS(build_chain(g, "weak3rc", 5), argument_error);
    CHECK_THROWS_AS(build_chain(path(4), "prime", 3), precondition_error);

    Chain empty = build_chain(g, "prime", g.order());
    CHECK(empty.steps.empty());
    CHECK(empty.stop_reason == StopReason::reached_size_bound);

    Chain chain = build_chain(g, "prime", 5);
    CHECK(chain.steps.size() == 2);
    CHECK(chain.stop_reason == StopReason::reached_size_bound);
    auto inter = replay_chain(chain);
    REQUIRE(inter.size() == 2);
    CHECK(inter.back().order() == 5);
    for (const Graph& h : inter) CHECK(is_prime(h).holds);

    // running to exhaustion ends at or above 5 vertices with reason exhausted
    Chain deep = build_chain(g, "prime", 0);
    CHECK(deep.stop_reason == StopReason::exhausted);
    CHECK(replay_chain(deep).back().order() >= 4);
}

TEST_CASE("chain serialization round trips and revalidates", "[reducer]") {
    Graph g = sample("prime", 7, 9);
    Chain chain = build_chain(g, "prime", 5);
    std::string text = chain_to_text(chain);
    Chain back = chain_from_text(text, "prime", chain.stop_reason);
    CHECK(back.start == chain.start);
    REQUIRE(back.steps.size() == chain.steps.size());
    for (std::size_t i = 0; i < back.steps.size(); ++i) {
        CHECK(back.steps[i].vertex == chain.steps[i].vertex);
        CHECK(back.steps[i].kind == chain.steps[i].kind);
    }
    CHECK(chain_to_text(back) == text);

    auto j = chain_to_json(chain);
    CHECK(j["start"] == to_graph6(g));
    CHECK(j["stop_reason"] == "reached_size_bound");
    CHECK(j["steps"].size() == 2);

    // tampering with a recorded intermediate is caught
    std::string corrupted = text;
    corrupted.replace(corrupted.find('\t') - 1, 1, "?");
    CHECK_THROWS_AS(chain_from_text(corrupted, "prime", chain.stop_reason),
                    parse_error);
}

TEST_CASE("seq3rc chain from 13 vertices with floor 12 has exactly one step",
          "[reducer][slow]") {
    Graph g = sample("seq3rc", 13, 5);
    Chain chain = build_chain(g, "seq3rc", 12);
    CHECK(chain.steps.size() == 1);
    CHECK(chain.stop_reason == StopReason::reached_size_bound);
    CHECK(is_sequentially_3rc(replay_chain(chain).back()).holds);
}

TEST_CASE("reduce_internal_triplet", "[reducer][slow]") {
    CHECK_THROWS_AS(reduce_internal_triplet(cycle(8), 0b111),
                    precondition_error);

    SplitMix64 rng = trial_rng(31, 0);
    auto inst = verify_detail::sample_internal_with_triplet(rng, 12, 12, true);
    REQUIRE(inst.has_value());
    auto& [g, t] = *inst;
    int x = reduce_internal_triplet(g, t);
    CHECK((t & bit(x)) != 0);
    CHECK(is_sequentially_3rc(delete_vertex(g, x)).holds);

    // a non-triplet set is rejected
    VertexSet non_triplet = 0;
    for (VertexSet m = 1; m < (VertexSet{1} << 12); ++m) {
        if (std::popcount(m) != 3) continue;
        if (cut_rank_capped(g, m, 3) == 3) {
            non_triplet = m;
            break;
        }
    }
    REQUIRE(non_triplet != 0);
    CHECK_THROWS_AS(reduce_internal_triplet(g, non_triplet),
                    precondition_error);
}
