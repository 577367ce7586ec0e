#include "fdist/chromatic.hpp"
#include "fdist/extremal.hpp"
#include "fdist/fixtures.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <thread>

using namespace fdist;

namespace {

DistanceGraph forbid(const PointSet& ps, std::vector<Rational> ds) {
    return build_graph(classify(ps), std::span<const Rational>(ds));
}

DistanceGraph complete(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return DistanceGraph::from_edges(n, e);
}

DistanceGraph cycle(std::size_t n) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return DistanceGraph::from_edges(n, e);
}

oracle::Adjacency adjacency(const DistanceGraph& g) {
    oracle::Adjacency a(g.vertex_count(), std::vector<bool>(g.vertex_count()));
    for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
    return a;
}

void expect_sound(const DistanceGraph& g, const ChromaticResult& r) {
    EXPECT_TRUE(r.witness.is_valid(g));
    EXPECT_EQ(r.witness.color_count(), r.chi);
    EXPECT_EQ(r.witness.colors_used(), r.chi);
    EXPECT_TRUE(is_clique(g, r.certificate.clique));
    EXPECT_LE(r.certificate.clique.size(), r.chi);
    if (r.certificate.kind == ChromaticCertificate::Kind::clique) {
        EXPECT_EQ(r.certificate.clique.size(), r.chi);
    }
}

}  // namespace

TEST(ChromaticExact, Examples) {
    const DistanceGraph k3 = forbid(line_fixture(2), {Rational(1), Rational(4)});
    EXPECT_EQ(chromatic_exact(k3).chi, 3u);
    const DistanceGraph sq = forbid(square_fixture(), {Rational(1), Rational(2)});
    EXPECT_EQ(chromatic_exact(sq).chi, 4u);
    const DistanceGraph grid = forbid(generate_grid(2, 5, 1), {Rational(1)});
    EXPECT_EQ(grid.vertex_count(), 36u);
    EXPECT_EQ(chromatic_exact(grid).chi, 2u);
    const DistanceGraph l6 = forbid(line_fixture(6), {Rational(1), Rational(4)});
    const ChromaticResult r = chromatic_exact(l6);
    EXPECT_EQ(r.chi, 3u);
    EXPECT_EQ(r.chi, oracle::chromatic_number(adjacency(l6)));
    expect_sound(l6, r);
}

TEST(ChromaticExact, SearchCertificateWhenCliqueIsSmaller) {
    const DistanceGraph c5 = cycle(5);
    const ChromaticResult r = chromatic_exact(c5);
    EXPECT_EQ(r.chi, 3u);
    EXPECT_EQ(r.certificate.kind, ChromaticCertificate::Kind::search);
    expect_sound(c5, r);
}

TEST(ChromaticExact, EmptyAndEdgeless) {
    EXPECT_EQ(chromatic_exact(DistanceGraph(0)).chi, 0u);
    EXPECT_EQ(chromatic_exact(DistanceGraph(4)).chi, 1u);
}

TEST(ChromaticExact, BudgetExhaustionIsDistinguishable) {
    SolverOptions none;
    none.node_budget = 0;
    EXPECT_THROW(chromatic_exact(cycle(5), none), BudgetExhausted);
    SolverOptions tiny;
    tiny.node_budget = 2;
    try {
        chromatic_exact(cycle(7), tiny);
        FAIL() << "expected BudgetExhausted";
    } catch (const BudgetExhausted& e) {
        EXPECT_LE(e.lower_bound(), 3u);
        EXPECT_GE(e.upper_bound(), 3u);
        EXPECT_FALSE(e.cancelled());
    }
}

TEST(ChromaticExact, CancellationThroughStopToken) {
    std::stop_source source;
    source.request_stop();
    SolverOptions opts;
    opts.stop = source.get_token();
    try {
        chromatic_exact(cycle(9), opts);
        FAIL() << "expected cancellation";
    } catch (const BudgetExhausted& e) {
        EXPECT_TRUE(e.cancelled());
    }
}

TEST(ChromaticExact, VertexCap) {
    SolverOptions opts;
    opts.max_vertices = 3;
    EXPECT_THROW(chromatic_exact(DistanceGraph(4), opts), std::length_error);
}

TEST(ChromaticBruteforce, Examples) {
    EXPECT_EQ(chromatic_bruteforce(DistanceGraph(5)), 1u);
    EXPECT_EQ(chromatic_bruteforce(cycle(5)), 3u);
    EXPECT_EQ(chromatic_bruteforce(complete(4)), 4u);
    EXPECT_EQ(chromatic_bruteforce(DistanceGraph(0)), 0u);
    EXPECT_THROW(chromatic_bruteforce(DistanceGraph(13)), std::length_error);
}

TEST(Greedy, OrdersAndBounds) {
    const DistanceGraph g = cycle(6);
    std::vector<std::size_t> order(6);
    std::iota(order.begin(), order.end(), std::size_t{0});
    EXPECT_EQ(greedy_coloring(g, order).colors_used(), 2u);
    EXPECT_TRUE(dsatur_coloring(g).is_valid(g));
    const std::vector<std::size_t> bad{0, 0, 1, 2, 3, 4};
    EXPECT_THROW(greedy_coloring(g, bad), std::invalid_argument);
    EXPECT_EQ(degeneracy(complete(5)), 4u);
    EXPECT_EQ(degeneracy(cycle(8)), 2u);
}

TEST(Bipartition, GridIsBipartite) {
    const DistanceGraph g = forbid(generate_grid(2, 5, 1), {Rational(1)});
    const BipartitionResult r = bipartition(g);
    ASSERT_TRUE(std::holds_alternative<TwoSides>(r));
    const auto& two = std::get<TwoSides>(r);
    EXPECT_EQ(two.left.size() + two.right.size(), 36u);
    EXPECT_TRUE(two.as_coloring().is_valid(g));
    EXPECT_TRUE(verify_bipartition(g, r));
}

TEST(Bipartition, OddCycleCertificate) {
    const DistanceGraph g = forbid(line_fixture(4), {Rational(1), Rational(4)});
    const BipartitionResult r = bipartition(g);
    ASSERT_TRUE(std::holds_alternative<OddCycle>(r));
    const auto& cyc = std::get<OddCycle>(r).vertices;
    EXPECT_EQ(cyc.size() % 2, 1u);
    for (std::size_t i = 0; i < cyc.size(); ++i) EXPECT_TRUE(g.adjacent(cyc[i], cyc[(i + 1) % cyc.size()]));
    EXPECT_TRUE(verify_bipartition(g, r));
    EXPECT_FALSE(verify_bipartition(g, OddCycle{{0, 1}}));
}

// Properties on random graphs: oracle agreement, sandwich, witness validity,
// determinism, bipartition agreement.
TEST(ChromaticProperty, OracleAgreementAndSandwich) {
    testgen::Gen gen(51);
    for (int t = 0; t < 250; ++t) {
        const DistanceGraph g = gen.graph(gen.index(0, 8), 0.1 + 0.8 * (t % 9) / 8.0);
        const auto adj = adjacency(g);
        const ChromaticResult r = chromatic_exact(g);
        EXPECT_EQ(r.chi, oracle::chromatic_number(adj));
        EXPECT_EQ(r.chi, chromatic_bruteforce(g));
        expect_sound(g, r);
        EXPECT_LE(oracle::max_clique(adj), r.chi);
        EXPECT_LE(r.chi, dsatur_coloring(g).colors_used());
        const auto order = degeneracy_order(g);
        EXPECT_LE(r.chi, greedy_coloring(g, order).colors_used());
        EXPECT_LE(greedy_coloring(g, order).colors_used(), degeneracy(g) + 1);
        EXPECT_EQ(std::holds_alternative<TwoSides>(bipartition(g)), oracle::is_bipartite(adj));
        EXPECT_TRUE(verify_bipartition(g, bipartition(g)));
        const ChromaticResult again = chromatic_exact(g);
        EXPECT_EQ(again.witness, r.witness);
        EXPECT_EQ(again.nodes_explored, r.nodes_explored);
    }
}

TEST(ChromaticProperty, LargerGraphsAgreeWithBruteforce) {
    testgen::Gen gen(52);
    for (int t = 0; t < 40; ++t) {
        const DistanceGraph g = gen.graph(gen.index(9, 12), 0.5);
        EXPECT_EQ(chromatic_exact(g).chi, chromatic_bruteforce(g));
    }
}

// Windows of Z with k forbidden distances: chi <= 2k and greedy in
// increasing order uses at most k+1 colors.
TEST(ChromaticProperty, LineWindowsBounds) {
    testgen::Gen gen(53);
    for (int t = 0; t < 60; ++t) {
        const std::size_t k = gen.index(1, 4);
        std::set<std::int64_t> dset;
        while (dset.size() < k) dset.insert(gen.integer(1, 12));
        std::vector<Rational> ds;
        for (auto d : dset) ds.emplace_back(d * d);
        const DistanceGraph g = forbid(generate_grid(1, 40, 1), ds);
        std::vector<std::size_t> order(g.vertex_count());
        std::iota(order.begin(), order.end(), std::size_t{0});
        EXPECT_LE(greedy_coloring(g, order).colors_used(), k + 1);
        EXPECT_LE(chromatic_exact(g).chi, 2 * k);
    }
}

// Even walks: a single distance 2p/q (p, q odd) on a grid of Z^2 never has an
// odd cycle.
TEST(ChromaticProperty, SingleOddRatioDistanceIsBipartite) {
    const PointSet grid = generate_grid(2, 8, 1);
    const DistanceClassMatrix m = classify(grid);
    for (ClassId id : m.class_ids()) {
        const Rational d = *m.squared_distance_of(id);
        const BigInt n = d.numerator();
        if (n % 2 != 0 || (n / 2) % 2 == 0) continue;  // need d = 2 * odd
        const DistanceGraph g = build_graph(m, std::vector<ClassId>{id});
        EXPECT_TRUE(std::holds_alternative<TwoSides>(bipartition(g))) << d.to_string();
    }
}

TEST(MaxClique, Examples) {
    EXPECT_EQ(max_clique(forbid(line_fixture(2), {Rational(1), Rational(4)})).vertices.size(), 3u);
    EXPECT_EQ(max_clique(forbid(square_fixture(), {Rational(1), Rational(2)})).vertices.size(), 4u);
    EXPECT_EQ(max_clique(forbid(generate_grid(2, 4, 1), {Rational(1)})).vertices.size(), 2u);
    testgen::Gen gen(54);
    for (int t = 0; t < 100; ++t) {
        const DistanceGraph g = gen.graph(gen.index(0, 16), 0.5);
        const CliqueResult c = max_clique(g);
        EXPECT_TRUE(c.optimal);
        EXPECT_TRUE(is_clique(g, c.vertices));
        EXPECT_EQ(c.vertices.size(), oracle::max_clique(adjacency(g)));
    }
}
