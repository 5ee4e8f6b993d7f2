#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "vmchain/cutrank.hpp"
#include "vmchain/gf2.hpp"
#include "vmchain/random.hpp"

using namespace vmchain;

namespace {
Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}
Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}
}  // namespace

TEST_CASE("gf2 rank basics", "[rank]") {
    Gf2Matrix zero(3, 4);
    CHECK(gf2_rank(zero) == 0);
    Gf2Matrix id(5, 5);
    for (int i = 0; i < 5; ++i) id.set(i, i, true);
    CHECK(gf2_rank(id) == 5);
    Gf2Matrix ones(3, 6);
    for (int i = 0; i < 3; ++i) ones.rows[i] = low_mask(6);
    CHECK(gf2_rank(ones) == 1);
    CHECK(gf2_rank(Gf2Matrix(0, 5)) == 0);
    CHECK(gf2_rank(Gf2Matrix(5, 0)) == 0);
    CHECK_THROWS_AS(Gf2Matrix(2, 65), argument_error);
}

TEST_CASE("gf2 rank agrees with naive elimination", "[rank]") {
    SplitMix64 rng(7);
    for (int t = 0; t < 500; ++t) {
        int r = rng.next_int(1, 10), c = rng.next_int(1, 10);
        Gf2Matrix m(r, c);
        std::vector<std::vector<int>> naive(r, std::vector<int>(c, 0));
        for (int i = 0; i < r; ++i) {
            m.rows[i] = rng.next() & low_mask(c);
            for (int j = 0; j < c; ++j) naive[i][j] = (m.rows[i] >> j) & 1;
        }
        CHECK(gf2_rank(m) == oracles::naive_rank(naive));
    }
}

TEST_CASE("cut-rank examples", "[rank]") {
    Graph c5 = cycle(5);
    CHECK(cut_rank(c5, 0) == 0);
    CHECK(cut_rank(c5, 0b00011) == 2);
    for (int n = 2; n <= 7; ++n) {
        Graph kn = complete(n);
        for (VertexSet x = 1; x < kn.vertices(); ++x)
            CHECK(cut_rank(kn, x) == 1);
    }
    CHECK_THROWS_AS(cut_rank(c5, 0b100000), argument_error);
}

TEST_CASE("cut-rank symmetry and naive agreement", "[rank]") {
    SplitMix64 rng(8);
    for (int t = 0; t < 400; ++t) {
        Graph g = random_graph(rng.next_int(1, 10), 0.5, rng);
        VertexSet x = random_subset(g.vertices(), rng);
        int r = cut_rank(g, x);
        CHECK(r == cut_rank(g, g.vertices() & ~x));
        CHECK(r == oracles::naive_cut_rank(g, x));
        CHECK(cut_rank_capped(g, x, 2) == std::min(r, 2));
    }
}

TEST_CASE("cross-rank", "[rank]") {
    Graph c5 = cycle(5);
    CHECK(cross_rank(c5, bit(0), bit(1) | bit(4)) == 1);
    Graph g(4);
    g.add_edge(0, 1);
    CHECK(cross_rank(g, bit(0) | bit(1), bit(2) | bit(3)) == 0);
    CHECK_THROWS_AS(cross_rank(c5, 0b011, 0b110), argument_error);
    SplitMix64 rng(9);
    for (int t = 0; t < 200; ++t) {
        Graph h = random_graph(rng.next_int(1, 10), 0.5, rng);
        VertexSet x = random_subset(h.vertices(), rng);
        CHECK(cross_rank(h, x, h.vertices() & ~x) == cut_rank(h, x));
    }
}

TEST_CASE("reduced cut-rank formulas agree with real reductions", "[rank]") {
    Graph k2 = complete(2);
    CHECK(reduced_cut_rank(k2, 0, 0, ReductionKind::LcDelete) == 0);
    CHECK_THROWS_AS(reduced_cut_rank(k2, 0, 0, ReductionKind::Delete),
                    argument_error);
    CHECK_THROWS_AS(reduced_cut_rank(k2, 0, bit(0), ReductionKind::LcDelete),
                    argument_error);
    Graph lonely(3);
    lonely.add_edge(1, 2);
    CHECK_THROWS_AS(reduced_cut_rank(lonely, 0, 0, ReductionKind::PivotDelete),
                    precondition_error);

    SplitMix64 rng(10);
    int done = 0;
    while (done < 400) {
        Graph g = random_graph(rng.next_int(2, 10), 0.5, rng);
        int x = rng.next_int(0, g.order() - 1);
        VertexSet s = random_subset(g.vertices() & ~bit(x), rng);
        VertexSet sc = compact_mask(s, x);
        CHECK(reduced_cut_rank(g, x, s, ReductionKind::LcDelete) ==
              cut_rank(delete_vertex(local_complement(g, x), x), sc));
        if (g.neighbors(x)) {
            CHECK(reduced_cut_rank(g, x, s, ReductionKind::PivotDelete) ==
                  cut_rank(contract_vertex(g, x), sc));
        }
        ++done;
    }
}
