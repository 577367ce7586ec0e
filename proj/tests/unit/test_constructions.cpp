#include "fdist/chromatic.hpp"
#include "fdist/constructions.hpp"
#include "fdist/fixtures.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace fdist;

namespace {
Coloring alternate(std::size_t n, std::size_t period) {
    std::vector<Color> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back(static_cast<Color>((i / period) % 2));
    return Coloring(a, 2);
}
DistanceGraph forbid(const DistanceClassMatrix& m, std::vector<Rational> ds) {
    return build_graph(m, std::span<const Rational>(ds));
}
}  // namespace

TEST(Product, TwoAlternationsOnLine) {
    const DistanceClassMatrix m = classify(line_fixture(7));
    const DistanceGraph g1 = forbid(m, {Rational(1)});
    const DistanceGraph g2 = forbid(m, {Rational(4)});
    const Coloring c1 = alternate(8, 1);
    const Coloring c2 = alternate(8, 2);
    ASSERT_TRUE(c1.is_valid(g1));
    ASSERT_TRUE(c2.is_valid(g2));
    const Coloring p = product_coloring(c1, c2);
    EXPECT_EQ(p.color_count(), 4u);
    const DistanceGraph both = forbid(m, {Rational(1), Rational(4)});
    EXPECT_TRUE(p.is_valid(both));
    EXPECT_TRUE(both.same_edges(edge_union(g1, g2)));
    EXPECT_EQ(chromatic_exact(both).chi, 3u);  // the product is only an upper bound
}

TEST(Product, SizeMismatch) {
    EXPECT_THROW(product_coloring(alternate(3, 1), alternate(4, 1)), std::invalid_argument);
}

TEST(ProductProperty, ValidOnUnionWithMultipliedCount) {
    testgen::Gen gen(71);
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = gen.index(1, 14);
        const DistanceGraph g1 = gen.graph(n, 0.3);
        const DistanceGraph g2 = gen.graph(n, 0.3);
        const Coloring c1 = dsatur_coloring(g1);
        const Coloring c2 = chromatic_exact(g2).witness;
        const Coloring p = product_coloring(c1, c2);
        EXPECT_TRUE(p.is_valid(edge_union(g1, g2)));
        EXPECT_EQ(p.color_count(), c1.color_count() * c2.color_count());
    }
}

TEST(Parity, CheckExamples) {
    const ParityVerdict v = check_odd_parity_solution(BigInt(1), BigInt(1), BigInt(1), BigInt(1), BigInt(1));
    EXPECT_TRUE(v.all_odd());
    // 3^2 + 1^2 = 10 = 2 * 5 * 1^2
    EXPECT_TRUE(check_odd_parity_solution(BigInt(3), BigInt(1), BigInt(1), BigInt(5), BigInt(1)).all_odd());
    EXPECT_THROW(check_odd_parity_solution(BigInt(1), BigInt(1), BigInt(1), BigInt(2), BigInt(1)),
                 std::invalid_argument);  // p even
    EXPECT_THROW(check_odd_parity_solution(BigInt(2), BigInt(2), BigInt(2), BigInt(1), BigInt(1)),
                 std::invalid_argument);  // not primitive
    EXPECT_THROW(check_odd_parity_solution(BigInt(1), BigInt(2), BigInt(1), BigInt(1), BigInt(1)),
                 std::invalid_argument);  // not a solution
    EXPECT_THROW(check_odd_parity_solution(BigInt(0), BigInt(0), BigInt(0), BigInt(1), BigInt(1)),
                 std::invalid_argument);  // c = 0
}

TEST(Parity, EnumerationMatchesTripleLoop) {
    for (std::int64_t p : {1, 3, 5, 7, 9}) {
        for (std::int64_t q : {1, 3, 5, 7, 9}) {
            const auto got = enumerate_odd_parity_solutions(BigInt(p), BigInt(q), BigInt(30));
            const auto want = oracle::parity_solutions(p, q, 30);
            ASSERT_EQ(got.size(), want.size()) << p << "/" << q;
            for (std::size_t i = 0; i < got.size(); ++i) {
                EXPECT_EQ(got[i].a, want[i].a);
                EXPECT_EQ(got[i].b, want[i].b);
                EXPECT_EQ(got[i].c, want[i].c);
            }
        }
    }
}

TEST(ParityProperty, AllSolutionsOdd) {
    for (std::int64_t p : {1, 3, 5, 7, 9}) {
        for (std::int64_t q : {1, 3, 5, 7, 9}) {
            for (const auto& s : enumerate_odd_parity_solutions(BigInt(p), BigInt(q), BigInt(50))) {
                EXPECT_TRUE(check_odd_parity_solution(s.a, s.b, s.c, BigInt(p), BigInt(q)).all_odd());
                EXPECT_TRUE(s.a % 2 != 0 && s.b % 2 != 0 && s.c % 2 != 0);
            }
        }
    }
    EXPECT_TRUE(enumerate_odd_parity_solutions(BigInt(3), BigInt(1), BigInt(50)).empty());
}
