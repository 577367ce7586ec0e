#pragma once

#include "fdist/limits.hpp"
#include "fdist/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fdist {

using Point = std::vector<Rational>;

/// Exact squared Euclidean distance. Throws std::invalid_argument on
/// dimension mismatch.
Rational squared_distance(const Point& p, const Point& q);

/// Immutable finite set of distinct rational points of a fixed dimension.
class PointSet {
public:
    PointSet(std::size_t dimension, std::vector<Point> points,
             std::vector<std::string> labels = {});

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    const Point& operator[](std::size_t i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }
    const std::vector<std::string>& labels() const { return labels_; }
    bool has_labels() const { return !labels_.empty(); }

    /// Index of an exact coordinate match, if present.
    std::optional<std::size_t> find(const Point& p) const;

    /// Subset in the order given by `indices`.
    PointSet subset(std::span<const std::size_t> indices) const;

    friend bool operator==(const PointSet&, const PointSet&) = default;

private:
    std::size_t dimension_;
    std::vector<Point> points_;
    std::vector<std::string> labels_;
};

/// Multiplies every coordinate by `factor` (> 0).
PointSet scale_pointset(const PointSet& ps, const Rational& factor);

/// Adds `offset` to every point.
PointSet translate_pointset(const PointSet& ps, const Point& offset);

/// All points (i_1/d, ..., i_n/d) with 0 <= i_j <= side, in lexicographic
/// order (last coordinate fastest).
PointSet generate_grid(std::size_t dimension, std::size_t side, std::size_t denominator,
                       const Limits& limits = {});

/// {"dimension": n, "points": [["a/b", ...], ...]} with optional "labels".
std::string pointset_to_json(const PointSet& ps);
PointSet pointset_from_json(const std::string& text);

}  // namespace fdist
