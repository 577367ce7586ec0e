#include "fdist/distance_classes.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace fdist {

using nlohmann::json;

DistanceClassMatrix::DistanceClassMatrix(std::size_t size, std::vector<ClassId> classes,
                                         std::optional<std::vector<Rational>> class_table)
    : size_(size), classes_(std::move(classes)), class_table_(std::move(class_table)) {
    if (classes_.size() != size_ * size_) {
        throw std::invalid_argument("class matrix: expected " + std::to_string(size_ * size_) +
                                    " entries");
    }
    if (class_table_) {
        const auto& table = *class_table_;
        for (std::size_t i = 0; i < table.size(); ++i) {
            if (table[i].sign() <= 0) {
                throw std::invalid_argument("class matrix: squared distances must be positive");
            }
            if (i > 0 && !(table[i - 1] < table[i])) {
                throw std::invalid_argument(
                    "class matrix: class table must be strictly increasing");
            }
        }
    }
    std::map<ClassId, std::size_t> counts;
    for (std::size_t i = 0; i < size_; ++i) {
        if (at(i, i) != self) throw std::invalid_argument("class matrix: diagonal must be 0");
        for (std::size_t j = i + 1; j < size_; ++j) {
            const ClassId id = at(i, j);
            if (id != at(j, i)) throw std::invalid_argument("class matrix: not symmetric");
            if (id == self) {
                throw std::invalid_argument("class matrix: off-diagonal class 0 (coincident points)");
            }
            if (class_table_ && id > class_table_->size()) {
                throw std::invalid_argument("class matrix: class " + std::to_string(id) +
                                            " missing from class table");
            }
            ++counts[id];
        }
    }
    for (const auto& [id, count] : counts) {
        ids_.push_back(id);
        pair_counts_.push_back(count);
    }
}

bool DistanceClassMatrix::is_realized(ClassId id) const {
    return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t DistanceClassMatrix::pair_count(ClassId id) const {
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) return 0;
    return pair_counts_[static_cast<std::size_t>(it - ids_.begin())];
}

std::optional<Rational> DistanceClassMatrix::squared_distance_of(ClassId id) const {
    if (!class_table_ || id == self || id > class_table_->size()) return std::nullopt;
    return (*class_table_)[id - 1];
}

std::optional<ClassId> DistanceClassMatrix::find_class(const Rational& squared) const {
    if (!class_table_) return std::nullopt;
    const auto& table = *class_table_;
    const auto it = std::lower_bound(table.begin(), table.end(), squared);
    if (it == table.end() || *it != squared) return std::nullopt;
    return static_cast<ClassId>(it - table.begin()) + 1;
}

DistanceClassMatrix DistanceClassMatrix::submatrix(const std::vector<std::size_t>& indices) const {
    std::vector<ClassId> sub(indices.size() * indices.size());
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            sub[a * indices.size() + b] = at(indices.at(a), indices.at(b));
        }
    }
    return DistanceClassMatrix(indices.size(), std::move(sub), class_table_);
}

DistanceClassMatrix classify(const PointSet& ps, const Limits& limits) {
    const std::size_t n = ps.size();
    if (n > limits.max_points) {
        throw std::length_error("classify: " + std::to_string(n) + " points exceeds cap of " +
                                std::to_string(limits.max_points));
    }
    std::vector<Rational> sq(n * n);
    std::map<Rational, ClassId> distinct;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sq[i * n + j] = squared_distance(ps[i], ps[j]);
            distinct.emplace(sq[i * n + j], 0);
        }
    }
    std::vector<Rational> table;
    table.reserve(distinct.size());
    for (auto& [value, id] : distinct) {
        table.push_back(value);
        id = static_cast<ClassId>(table.size());
    }
    std::vector<ClassId> classes(n * n, DistanceClassMatrix::self);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const ClassId id = distinct.at(sq[i * n + j]);
            classes[i * n + j] = id;
            classes[j * n + i] = id;
        }
    }
    return DistanceClassMatrix(n, std::move(classes), std::move(table));
}

std::string class_matrix_to_json(const DistanceClassMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j));
        rows.push_back(std::move(row));
    }
    json doc = {{"size", m.size()}, {"classes", std::move(rows)}};
    if (m.has_class_table()) {
        json table = json::object();
        const auto& t = *m.class_table();
        for (std::size_t i = 0; i < t.size(); ++i) table[std::to_string(i + 1)] = t[i].to_string();
        doc["class_table"] = std::move(table);
    }
    return doc.dump();
}

DistanceClassMatrix class_matrix_from_json(const std::string& text) {
    const json doc = json::parse(text);
    if (!doc.is_object() || !doc.contains("size") || !doc.contains("classes")) {
        throw std::invalid_argument("class matrix JSON: expected object with size and classes");
    }
    const auto n = doc["size"].get<std::size_t>();
    const json& rows = doc["classes"];
    if (!rows.is_array() || rows.size() != n) {
        throw std::invalid_argument("class matrix JSON: classes must have `size` rows");
    }
    std::vector<ClassId> flat;
    flat.reserve(n * n);
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != n) {
            throw std::invalid_argument("class matrix JSON: ragged classes row");
        }
        for (const json& v : row) {
            if (!v.is_number_unsigned()) {
                throw std::invalid_argument("class matrix JSON: class IDs must be non-negative integers");
            }
            flat.push_back(v.get<ClassId>());
        }
    }
    std::optional<std::vector<Rational>> table;
    if (doc.contains("class_table")) {
        const json& t = doc["class_table"];
        std::vector<Rational> values(t.size());
        for (auto it = t.begin(); it != t.end(); ++it) {
            std::size_t id = 0;
            try {
                id = std::stoul(it.key());
            } catch (const std::exception&) {
                throw std::invalid_argument("class matrix JSON: bad class table key " + it.key());
            }
            if (id == 0 || id > values.size()) {
                throw std::invalid_argument("class matrix JSON: class table keys must be 1..T");
            }
            values[id - 1] = Rational::parse(it.value().get<std::string>());
        }
        table = std::move(values);
    }
    return DistanceClassMatrix(n, std::move(flat), std::move(table));
}

}  // namespace fdist
