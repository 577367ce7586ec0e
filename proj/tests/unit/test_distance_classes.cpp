#include "fdist/distance_classes.hpp"
#include "fdist/fixtures.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace fdist;

TEST(Classify, UnitSquareHasTwoClasses) {
    const DistanceClassMatrix m = classify(square_fixture());
    ASSERT_EQ(m.class_count(), 2u);
    ASSERT_TRUE(m.has_class_table());
    EXPECT_EQ(*m.squared_distance_of(1), Rational(1));
    EXPECT_EQ(*m.squared_distance_of(2), Rational(2));
    EXPECT_EQ(m.pair_count(1), 4u);
    EXPECT_EQ(m.pair_count(2), 2u);
}

TEST(Classify, LineHasKClasses) {
    for (std::size_t k = 1; k <= 8; ++k) {
        const DistanceClassMatrix m = classify(line_fixture(k));
        ASSERT_EQ(m.class_count(), k);
        for (std::size_t d = 1; d <= k; ++d) {
            EXPECT_EQ(*m.squared_distance_of(static_cast<ClassId>(d)),
                      Rational(static_cast<std::int64_t>(d * d)));
        }
    }
}

TEST(Classify, SinglePointHasNoClasses) {
    const DistanceClassMatrix m = classify(PointSet(2, {{Rational(1), Rational(1)}}));
    EXPECT_EQ(m.size(), 1u);
    EXPECT_EQ(m.class_count(), 0u);
    EXPECT_EQ(m.at(0, 0), DistanceClassMatrix::self);
}

TEST(ClassMatrix, ValidatesStructure) {
    EXPECT_THROW(DistanceClassMatrix(2, {0, 1, 2, 0}), std::invalid_argument);  // asymmetric
    EXPECT_THROW(DistanceClassMatrix(2, {1, 1, 1, 0}), std::invalid_argument);  // diagonal
    EXPECT_THROW(DistanceClassMatrix(2, {0, 0, 0, 0}), std::invalid_argument);  // off-diagonal self
    EXPECT_THROW(DistanceClassMatrix(2, {0, 1, 1}), std::invalid_argument);     // size
    EXPECT_THROW(DistanceClassMatrix(2, {0, 2, 2, 0}, std::vector<Rational>{Rational(1)}),
                 std::invalid_argument);  // id outside table
    EXPECT_THROW(DistanceClassMatrix(2, {0, 1, 1, 0}, std::vector<Rational>{Rational(2), Rational(1)}),
                 std::invalid_argument);  // table not increasing
    EXPECT_NO_THROW(DistanceClassMatrix(2, {0, 7, 7, 0}));
}

TEST(ClassMatrix, JsonRoundTrip) {
    const DistanceClassMatrix m = classify(generate_grid(2, 2, 2));
    const std::string text = class_matrix_to_json(m);
    EXPECT_EQ(class_matrix_from_json(text), m);
    EXPECT_NE(text.find("\"class_table\""), std::string::npos);
    const DistanceClassMatrix ico = icosahedron_matrix();
    EXPECT_EQ(class_matrix_from_json(class_matrix_to_json(ico)), ico);
}

TEST(ClassMatrix, JsonRejectsBadTables) {
    EXPECT_THROW(class_matrix_from_json(R"({"size":2,"classes":[[0,1],[1,0]],"class_table":{"1":"0.5"}})"),
                 std::invalid_argument);
    EXPECT_THROW(class_matrix_from_json(R"({"size":2,"classes":[[0,1],[1,0]],"class_table":{"x":"1"}})"),
                 std::invalid_argument);
    EXPECT_THROW(class_matrix_from_json(R"({"size":2,"classes":[[0,1]]})"), std::invalid_argument);
    EXPECT_THROW(class_matrix_from_json(R"({"size":2,"classes":[[0,-1],[-1,0]]})"), std::invalid_argument);
}

TEST(ClassMatrix, SubmatrixKeepsIds) {
    const DistanceClassMatrix m = classify(line_fixture(4));
    const DistanceClassMatrix s = m.submatrix({0, 4});
    EXPECT_EQ(s.size(), 2u);
    EXPECT_EQ(s.at(0, 1), 4u);
    EXPECT_EQ(s.class_ids(), std::vector<ClassId>{4});
}

// Property: same class iff same squared distance, ids increase with distance.
TEST(ClassifyProperty, CanonicalPartition) {
    testgen::Gen gen(31);
    for (int t = 0; t < 60; ++t) {
        const PointSet ps = gen.point_set(gen.index(1, 14), gen.index(1, 3), 8, gen.integer(1, 3));
        const DistanceClassMatrix m = classify(ps);
        std::map<Rational, ClassId> seen;
        for (std::size_t i = 0; i < ps.size(); ++i) {
            EXPECT_EQ(m.at(i, i), DistanceClassMatrix::self);
            for (std::size_t j = 0; j < ps.size(); ++j) {
                if (i == j) continue;
                EXPECT_EQ(m.at(i, j), m.at(j, i));
                const Rational d = squared_distance(ps[i], ps[j]);
                EXPECT_EQ(*m.squared_distance_of(m.at(i, j)), d);
                auto [it, inserted] = seen.emplace(d, m.at(i, j));
                if (!inserted) {
                    EXPECT_EQ(it->second, m.at(i, j));
                }
            }
        }
        ClassId expected = 1;
        for (const auto& [d, id] : seen) EXPECT_EQ(id, expected++);
        EXPECT_EQ(m.class_count(), seen.size());
    }
}
