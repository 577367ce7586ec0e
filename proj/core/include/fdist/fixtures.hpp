#pragma once

#include "fdist/distance_classes.hpp"
#include "fdist/point_set.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fdist {

/// A named configuration. Coordinate fixtures carry their PointSet; the
/// regular polygon and the icosahedron have irrational coordinates and are
/// shipped as combinatorial class matrices only.
struct Fixture {
    std::string name;
    std::optional<PointSet> points;
    DistanceClassMatrix matrix;
    std::string provenance;
};

PointSet line_fixture(std::size_t k);              // {0, 1, ..., k}
PointSet square_fixture();                         // unit square
PointSet hypercube_fixture(std::size_t k);         // {0,1}^k
PointSet johnson_fixture(std::size_t n, std::size_t k);  // k-subsets of an (n+1)-set
PointSet triangle_z3_fixture();                    // (0,0,0), (1,1,0), (1,0,1)

/// Vertices of a regular N-gon; class of (i, j) is min(d, N - d) with
/// d = |i - j|, which orders chords by length.
DistanceClassMatrix regular_polygon_matrix(std::size_t vertices);

/// Regular icosahedron: class of a pair is its distance in the icosahedral
/// graph (1 edge, 2 second neighbor, 3 antipodal), which orders the three
/// Euclidean distances 2 < 2*phi < 2*sqrt(phi + 2) for vertices (0, +-1, +-phi).
DistanceClassMatrix icosahedron_matrix();

/// Accepts "line(k)", "square", "hypercube(k)", "johnson(n,k)", "triangle_Z3",
/// "regular_polygon_matrix(N)", "icosahedron_matrix", and the short forms
/// "line:k", "hypercube:k", "johnson:n,k", "regular_polygon:N", "icosahedron".
/// Throws std::invalid_argument for unknown names.
Fixture fixture(std::string_view name);

std::vector<std::string> fixture_names();

}  // namespace fdist
