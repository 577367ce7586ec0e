#include "fdist/point_set.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <set>
#include <stdexcept>

namespace fdist {

using nlohmann::json;

Limits Limits::from_environment() {
    Limits limits;
    auto read = [](const char* name, std::size_t& target) {
        if (const char* value = std::getenv(name); value != nullptr && *value != '\0') {
            char* end = nullptr;
            const unsigned long long parsed = std::strtoull(value, &end, 10);
            if (end == value || *end != '\0' || parsed == 0) {
                throw std::invalid_argument(std::string("invalid value for ") + name);
            }
            target = static_cast<std::size_t>(parsed);
        }
    };
    read("FDIST_MAX_POINTS", limits.max_points);
    read("FDIST_MAX_SOLVER_VERTICES", limits.max_solver_vertices);
    return limits;
}

Rational squared_distance(const Point& p, const Point& q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("squared_distance: dimension mismatch (" +
                                    std::to_string(p.size()) + " vs " +
                                    std::to_string(q.size()) + ")");
    }
    Rational sum;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Rational d = p[i] - q[i];
        sum += d * d;
    }
    return sum;
}

PointSet::PointSet(std::size_t dimension, std::vector<Point> points,
                   std::vector<std::string> labels)
    : dimension_(dimension), points_(std::move(points)), labels_(std::move(labels)) {
    if (dimension_ == 0) throw std::invalid_argument("PointSet: dimension must be positive");
    if (!labels_.empty() && labels_.size() != points_.size()) {
        throw std::invalid_argument("PointSet: label count does not match point count");
    }
    std::set<Point> seen;
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i].size() != dimension_) {
            throw std::invalid_argument("PointSet: point " + std::to_string(i) +
                                        " has wrong dimension");
        }
        if (!seen.insert(points_[i]).second) {
            throw std::invalid_argument("PointSet: duplicate point at index " +
                                        std::to_string(i));
        }
    }
}

std::optional<std::size_t> PointSet::find(const Point& p) const {
    for (std::size_t i = 0; i < points_.size(); ++i) {
        if (points_[i] == p) return i;
    }
    return std::nullopt;
}

PointSet PointSet::subset(std::span<const std::size_t> indices) const {
    std::vector<Point> pts;
    std::vector<std::string> labels;
    pts.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= points_.size()) throw std::out_of_range("PointSet::subset: index out of range");
        pts.push_back(points_[i]);
        if (has_labels()) labels.push_back(labels_[i]);
    }
    return PointSet(dimension_, std::move(pts), std::move(labels));
}

PointSet scale_pointset(const PointSet& ps, const Rational& factor) {
    if (factor.sign() <= 0) throw std::invalid_argument("scale_pointset: factor must be positive");
    std::vector<Point> pts;
    pts.reserve(ps.size());
    for (const Point& p : ps.points()) {
        Point scaled;
        scaled.reserve(p.size());
        for (const Rational& x : p) scaled.push_back(x * factor);
        pts.push_back(std::move(scaled));
    }
    return PointSet(ps.dimension(), std::move(pts), ps.labels());
}

PointSet translate_pointset(const PointSet& ps, const Point& offset) {
    if (offset.size() != ps.dimension()) {
        throw std::invalid_argument("translate_pointset: dimension mismatch");
    }
    std::vector<Point> pts;
    pts.reserve(ps.size());
    for (const Point& p : ps.points()) {
        Point moved = p;
        for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += offset[i];
        pts.push_back(std::move(moved));
    }
    return PointSet(ps.dimension(), std::move(pts), ps.labels());
}

PointSet generate_grid(std::size_t dimension, std::size_t side, std::size_t denominator,
                       const Limits& limits) {
    if (dimension == 0) throw std::invalid_argument("generate_grid: dimension must be >= 1");
    if (denominator == 0) throw std::invalid_argument("generate_grid: denominator must be >= 1");
    std::size_t count = 1;
    for (std::size_t i = 0; i < dimension; ++i) {
        if (count > limits.max_points / (side + 1)) {
            throw std::length_error("generate_grid: (side+1)^dimension exceeds point cap of " +
                                    std::to_string(limits.max_points));
        }
        count *= side + 1;
    }
    if (count > limits.max_points) {
        throw std::length_error("generate_grid: point cap exceeded");
    }

    std::vector<Rational> values;
    values.reserve(side + 1);
    for (std::size_t i = 0; i <= side; ++i) {
        values.emplace_back(static_cast<std::int64_t>(i), static_cast<std::int64_t>(denominator));
    }

    std::vector<Point> pts;
    pts.reserve(count);
    std::vector<std::size_t> idx(dimension, 0);
    for (std::size_t n = 0; n < count; ++n) {
        Point p;
        p.reserve(dimension);
        for (std::size_t j = 0; j < dimension; ++j) p.push_back(values[idx[j]]);
        pts.push_back(std::move(p));
        for (std::size_t j = dimension; j-- > 0;) {
            if (++idx[j] <= side) break;
            idx[j] = 0;
        }
    }
    return PointSet(dimension, std::move(pts));
}

std::string pointset_to_json(const PointSet& ps) {
    json points = json::array();
    for (const Point& p : ps.points()) {
        json row = json::array();
        for (const Rational& x : p) row.push_back(x.to_string());
        points.push_back(std::move(row));
    }
    json doc = {{"dimension", ps.dimension()}, {"points", std::move(points)}};
    if (ps.has_labels()) doc["labels"] = ps.labels();
    return doc.dump();
}

PointSet pointset_from_json(const std::string& text) {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("dimension") || !doc.contains("points")) {
        throw std::invalid_argument("PointSet JSON: expected object with dimension and points");
    }
    if (!doc["dimension"].is_number_unsigned()) {
        throw std::invalid_argument("PointSet JSON: dimension must be a positive integer");
    }
    const auto dimension = doc["dimension"].get<std::size_t>();
    std::vector<Point> pts;
    for (const json& row : doc["points"]) {
        if (!row.is_array()) throw std::invalid_argument("PointSet JSON: point must be an array");
        Point p;
        for (const json& coord : row) {
            if (!coord.is_string()) {
                throw std::invalid_argument("PointSet JSON: coordinates must be rational strings");
            }
            p.push_back(Rational::parse(coord.get<std::string>()));
        }
        pts.push_back(std::move(p));
    }
    std::vector<std::string> labels;
    if (doc.contains("labels")) labels = doc["labels"].get<std::vector<std::string>>();
    return PointSet(dimension, std::move(pts), std::move(labels));
}

}  // namespace fdist
