#include "fdist/bound_ledger.hpp"
#include "fdist/fixtures.hpp"
#include "fdist/serialize.hpp"

#include "generators.hpp"

#include <gtest/gtest.h>

using namespace fdist;

namespace {
ReportOptions explicit_classes(const DistanceClassMatrix& m, std::vector<Rational> ds) {
    ReportOptions opts;
    opts.strategy = ExplicitForbidden{resolve_distances(m, ds).class_ids};
    return opts;
}
}  // namespace

TEST(BoundReport, PlaneTwoDistancesConcludeFour) {
    const PointSet grid = generate_grid(2, 5, 1);
    const DistanceClassMatrix m = classify(grid);
    const BoundLedger ledger = bound_report(m, "grid", 2, explicit_classes(m, {Rational(1), Rational(2)}));
    ASSERT_TRUE(ledger.lower && ledger.upper);
    EXPECT_EQ(ledger.lower->value, 4u);
    EXPECT_EQ(ledger.lower->certificate.kind, LedgerCertificate::Kind::clique);
    EXPECT_EQ(ledger.upper->value, 4u);
    EXPECT_EQ(ledger.upper->certificate.factors, (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(ledger.concluded(), std::optional<std::size_t>(4));
    EXPECT_TRUE(verify_ledger(ledger, m).empty());
    const Json j = to_json(ledger, &m);
    for (const char* key : {"space", "k", "lower", "upper", "strategy"}) EXPECT_TRUE(j.contains(key)) << key;
    EXPECT_EQ(j["lower"]["value"], 4);
    EXPECT_EQ(j["lower"]["certificate"]["type"], "clique");
}

TEST(BoundReport, AutoStrategyOnFixtures) {
    const BoundLedger sq = bound_report(classify(square_fixture()), "square", 2);
    EXPECT_EQ(sq.lower->value, 4u);
    const BoundLedger cube = bound_report(classify(hypercube_fixture(3)), "cube", 3);
    EXPECT_EQ(cube.lower->value, 8u);
    EXPECT_NE(cube.strategy.find("all"), std::string::npos);
    const BoundLedger ico = bound_report(icosahedron_matrix(), "icosahedron", 3);
    EXPECT_EQ(ico.lower->value, 12u);
    EXPECT_EQ(ico.concluded(), std::optional<std::size_t>(12));
}

TEST(BoundReport, StrategySelection) {
    const DistanceClassMatrix m = classify(generate_grid(2, 4, 1));
    std::string desc;
    const auto all = select_forbidden_sets(m, 2, AutoForbidden{}, &desc);
    const std::size_t t = m.class_count();
    EXPECT_EQ(all.size(), t * (t - 1) / 2);
    AutoForbidden sampled;
    sampled.exhaustive_limit = 5;
    sampled.random_sets = 20;
    sampled.seed = 3;
    const auto some = select_forbidden_sets(m, 2, sampled, &desc);
    EXPECT_LE(some.size(), 21u);
    EXPECT_EQ(some, select_forbidden_sets(m, 2, sampled));
    EXPECT_NE(desc.find("seed 3"), std::string::npos);
    EXPECT_THROW(select_forbidden_sets(m, 0, AutoForbidden{}), std::invalid_argument);
    EXPECT_THROW(select_forbidden_sets(m, 1, ExplicitForbidden{{1, 2}}), std::invalid_argument);
}

TEST(BoundReport, ExhaustedSolveFallsBackToClique) {
    const DistanceClassMatrix m = classify(generate_grid(2, 3, 1));
    ReportOptions opts = explicit_classes(m, {Rational(1), Rational(2)});
    opts.solver.node_budget = 0;
    const BoundLedger ledger = bound_report(m, "grid", 2, opts);
    EXPECT_TRUE(ledger.exhausted);
    EXPECT_FALSE(ledger.notes.empty());
    EXPECT_EQ(ledger.lower->value, 4u);
}

// Ledger soundness and thread-count independence on random spaces.
TEST(BoundReportProperty, SoundAndDeterministic) {
    testgen::Gen gen(91);
    for (int t = 0; t < 15; ++t) {
        const PointSet ps = gen.point_set(gen.index(3, 12), 2, 3);
        const DistanceClassMatrix m = classify(ps);
        const std::size_t k = gen.index(1, 3);
        ReportOptions one;
        one.strategy = AutoForbidden{static_cast<std::uint64_t>(t)};
        ReportOptions many = one;
        many.threads = 3;
        const BoundLedger a = bound_report(m, "random", k, one);
        const BoundLedger b = bound_report(m, "random", k, many);
        EXPECT_TRUE(verify_ledger(a, m).empty());
        EXPECT_EQ(to_json(a, &m), to_json(b, &m));
        EXPECT_LE(a.lower->value, a.upper->value);
    }
}
