#include "fdist/distance_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace fdist {

DistanceGraph::DistanceGraph(std::size_t vertex_count) : rows_(vertex_count, Bitset(vertex_count)) {}

void DistanceGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= vertex_count() || v >= vertex_count()) {
        throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v)) return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++edge_count_;
}

DistanceGraph DistanceGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
    DistanceGraph g(vertex_count);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

std::vector<Edge> DistanceGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < vertex_count(); ++u) {
        for (std::size_t v = rows_[u].next(u + 1); v < vertex_count(); v = rows_[u].next(v + 1)) {
            out.emplace_back(u, v);
        }
    }
    return out;
}

DistanceGraph DistanceGraph::induced_subgraph(std::span<const std::size_t> vertices) const {
    DistanceGraph g(vertices.size());
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (adjacent(vertices[a], vertices[b])) g.add_edge(a, b);
        }
    }
    g.forbidden_classes_ = forbidden_classes_;
    g.forbidden_distances_ = forbidden_distances_;
    return g;
}

DistanceGraph edge_union(const DistanceGraph& a, const DistanceGraph& b) {
    if (a.vertex_count() != b.vertex_count()) {
        throw std::invalid_argument("edge_union: vertex counts differ");
    }
    DistanceGraph g = a;
    for (const auto& [u, v] : b.edges()) g.add_edge(u, v);
    std::set<ClassId> classes(a.forbidden_classes_.begin(), a.forbidden_classes_.end());
    classes.insert(b.forbidden_classes_.begin(), b.forbidden_classes_.end());
    g.forbidden_classes_.assign(classes.begin(), classes.end());
    std::set<Rational> dists(a.forbidden_distances_.begin(), a.forbidden_distances_.end());
    dists.insert(b.forbidden_distances_.begin(), b.forbidden_distances_.end());
    g.forbidden_distances_.assign(dists.begin(), dists.end());
    return g;
}

ResolvedDistances resolve_distances(const DistanceClassMatrix& m,
                                    std::span<const Rational> squared_distances) {
    if (!m.has_class_table()) {
        throw std::invalid_argument(
            "class matrix has no class table; forbid by class ID instead of distance");
    }
    ResolvedDistances out;
    std::set<ClassId> ids;
    for (const Rational& d : squared_distances) {
        const auto id = m.find_class(d);
        if (id && m.is_realized(*id)) {
            ids.insert(*id);
            out.realized.push_back(d);
        } else {
            out.unrealized.push_back(d);
        }
    }
    out.class_ids.assign(ids.begin(), ids.end());
    return out;
}

DistanceGraph build_graph(const DistanceClassMatrix& m, std::span<const ClassId> forbidden) {
    std::set<ClassId> wanted;
    for (ClassId id : forbidden) {
        const bool known = m.has_class_table()
                               ? (id != DistanceClassMatrix::self && id <= m.class_table()->size())
                               : m.is_realized(id);
        if (!known) throw std::invalid_argument("unknown class ID " + std::to_string(id));
        wanted.insert(id);
    }
    const std::size_t n = m.size();
    std::vector<bool> hit;
    ClassId max_id = 0;
    for (ClassId id : wanted) max_id = std::max(max_id, id);
    hit.assign(static_cast<std::size_t>(max_id) + 1, false);
    for (ClassId id : wanted) hit[id] = true;

    DistanceGraph g(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const ClassId id = m.at(i, j);
            if (id <= max_id && hit[id]) g.add_edge(i, j);
        }
    }
    g.forbidden_classes_.assign(wanted.begin(), wanted.end());
    for (ClassId id : wanted) {
        if (auto d = m.squared_distance_of(id)) g.forbidden_distances_.push_back(*d);
    }
    return g;
}

DistanceGraph build_graph(const DistanceClassMatrix& m,
                          std::span<const Rational> forbidden_squared) {
    const ResolvedDistances resolved = resolve_distances(m, forbidden_squared);
    return build_graph(m, std::span<const ClassId>(resolved.class_ids));
}

std::size_t max_degree(const DistanceGraph& g) {
    std::size_t best = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::string to_dimacs(const DistanceGraph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

DistanceGraph from_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Edge> edges;
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("DIMACS line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag) || tag == "c") continue;
        if (tag == "p") {
            std::string format;
            if (have_header) throw fail("duplicate problem line");
            if (!(ls >> format >> n >> m) || (format != "edge" && format != "col")) {
                throw fail("expected 'p edge N M'");
            }
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) throw fail("edge before problem line");
            long long u = 0;
            long long v = 0;
            if (!(ls >> u >> v)) throw fail("expected 'e u v'");
            if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n ||
                static_cast<std::size_t>(v) > n) {
                throw fail("vertex out of range");
            }
            if (u == v) throw fail("self-loop");
            edges.emplace_back(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1));
        } else {
            throw fail("unknown line type '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) throw fail("trailing tokens");
    }
    if (!have_header) throw std::invalid_argument("DIMACS: missing problem line");
    if (edges.size() != m) {
        throw std::invalid_argument("DIMACS: header declares " + std::to_string(m) +
                                    " edges but " + std::to_string(edges.size()) + " present");
    }
    return DistanceGraph::from_edges(n, edges);
}

}  // namespace fdist
