#pragma once

#include "fdist/limits.hpp"
#include "fdist/point_set.hpp"
#include "fdist/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fdist {

using ClassId = std::uint32_t;

/// Symmetric N x N matrix of squared-distance class IDs.
///
/// ID 0 is reserved for the diagonal. When built by classify() the IDs run
/// 1..T in increasing order of squared distance and class_table()[id - 1]
/// holds the squared distance of class `id`. Matrices read from JSON may
/// come without a table (fixtures whose coordinates are irrational); the
/// IDs are then purely combinatorial labels.
class DistanceClassMatrix {
public:
    static constexpr ClassId self = 0;

    DistanceClassMatrix() = default;

    /// Validates symmetry, the diagonal sentinel and, with a table, that every
    /// ID is in range and the table is strictly increasing and positive.
    DistanceClassMatrix(std::size_t size, std::vector<ClassId> classes,
                        std::optional<std::vector<Rational>> class_table = std::nullopt);

    std::size_t size() const { return size_; }
    ClassId at(std::size_t i, std::size_t j) const { return classes_[i * size_ + j]; }

    const std::optional<std::vector<Rational>>& class_table() const { return class_table_; }
    bool has_class_table() const { return class_table_.has_value(); }

    /// Distinct IDs realized off the diagonal, ascending.
    const std::vector<ClassId>& class_ids() const { return ids_; }
    std::size_t class_count() const { return ids_.size(); }
    bool is_realized(ClassId id) const;

    /// Number of unordered pairs in class `id`.
    std::size_t pair_count(ClassId id) const;

    std::optional<Rational> squared_distance_of(ClassId id) const;
    std::optional<ClassId> find_class(const Rational& squared) const;

    /// Principal submatrix on `indices`, keeping the original IDs and table.
    DistanceClassMatrix submatrix(const std::vector<std::size_t>& indices) const;

    friend bool operator==(const DistanceClassMatrix&, const DistanceClassMatrix&) = default;

private:
    std::size_t size_ = 0;
    std::vector<ClassId> classes_;
    std::optional<std::vector<Rational>> class_table_;
    std::vector<ClassId> ids_;
    std::vector<std::size_t> pair_counts_;  // parallel to ids_
};

/// Exact partition of all point pairs by squared distance.
DistanceClassMatrix classify(const PointSet& ps, const Limits& limits = {});

/// {"size": N, "classes": [[...]], "class_table": {"1": "2", ...}}
std::string class_matrix_to_json(const DistanceClassMatrix& m);
DistanceClassMatrix class_matrix_from_json(const std::string& text);

}  // namespace fdist
