#pragma once

#include "fdist/bitset.hpp"
#include "fdist/distance_classes.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace fdist {

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph stored as dense bitset rows.
///
/// Graphs built from a class matrix remember which classes (and, when known,
/// which squared distances) produced their edges.
class DistanceGraph {
public:
    DistanceGraph() = default;
    explicit DistanceGraph(std::size_t vertex_count);

    /// Throws on out-of-range endpoints or self-loops; duplicate edges collapse.
    static DistanceGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

    std::size_t vertex_count() const { return rows_.size(); }
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbors(std::size_t v) const { return rows_[v]; }
    std::size_t degree(std::size_t v) const { return rows_[v].count(); }
    std::size_t edge_count() const { return edge_count_; }

    /// Edges with u < v, lexicographic.
    std::vector<Edge> edges() const;

    const std::vector<ClassId>& forbidden_classes() const { return forbidden_classes_; }
    const std::vector<Rational>& forbidden_distances() const { return forbidden_distances_; }

    DistanceGraph induced_subgraph(std::span<const std::size_t> vertices) const;

    /// Same-vertex-set union of edge sets; forbidden classes are merged.
    friend DistanceGraph edge_union(const DistanceGraph& a, const DistanceGraph& b);

    /// Adjacency equality; provenance is ignored.
    bool same_edges(const DistanceGraph& other) const { return rows_ == other.rows_; }

private:
    friend DistanceGraph build_graph(const DistanceClassMatrix&, std::span<const ClassId>);

    void add_edge(std::size_t u, std::size_t v);

    std::vector<Bitset> rows_;
    std::size_t edge_count_ = 0;
    std::vector<ClassId> forbidden_classes_;
    std::vector<Rational> forbidden_distances_;
};

/// Requested squared distances split into those realized by the matrix and
/// those that no pair realizes.
struct ResolvedDistances {
    std::vector<ClassId> class_ids;
    std::vector<Rational> realized;
    std::vector<Rational> unrealized;
};

/// Requires a class table; throws std::invalid_argument otherwise.
ResolvedDistances resolve_distances(const DistanceClassMatrix& m,
                                    std::span<const Rational> squared_distances);

/// Edges are exactly the pairs whose class is in `forbidden`. Throws
/// std::invalid_argument for an ID the matrix does not know.
DistanceGraph build_graph(const DistanceClassMatrix& m, std::span<const ClassId> forbidden);

/// Unrealized squared distances contribute no edges.
DistanceGraph build_graph(const DistanceClassMatrix& m,
                          std::span<const Rational> forbidden_squared);

std::size_t max_degree(const DistanceGraph& g);

/// DIMACS edge format: "p edge N M" then one "e u v" per edge, 1-based.
std::string to_dimacs(const DistanceGraph& g);
DistanceGraph from_dimacs(const std::string& text);

}  // namespace fdist
