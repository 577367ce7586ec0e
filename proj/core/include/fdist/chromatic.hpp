#pragma once

#include "fdist/coloring.hpp"
#include "fdist/distance_graph.hpp"
#include "fdist/limits.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <stop_token>
#include <string>
#include <variant>
#include <vector>

namespace fdist {

struct SolverOptions {
    /// Maximum number of search nodes, the root included. 0 explores nothing.
    std::uint64_t node_budget = 50'000'000;
    std::size_t max_vertices = Limits{}.max_solver_vertices;
    /// Checked once per search node.
    std::stop_token stop;
};

/// Thrown when a search runs out of budget or is cancelled. Carries the
/// bounds known at that point; never a claimed answer.
class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted(std::size_t lower, std::size_t upper, std::uint64_t nodes, bool cancelled);

    std::size_t lower_bound() const { return lower_; }
    std::size_t upper_bound() const { return upper_; }
    std::uint64_t nodes_explored() const { return nodes_; }
    bool cancelled() const { return cancelled_; }

private:
    std::size_t lower_;
    std::size_t upper_;
    std::uint64_t nodes_;
    bool cancelled_;
};

/// Lower-bound evidence behind a chromatic number.
struct ChromaticCertificate {
    enum class Kind { clique, search };
    Kind kind = Kind::clique;
    /// Pairwise-adjacent vertices. For Kind::search this is the largest clique
    /// seen, which is smaller than chi; optimality then rests on the search.
    std::vector<std::size_t> clique;
};

struct ChromaticResult {
    std::size_t chi = 0;
    Coloring witness;  // valid, exactly chi colors
    ChromaticCertificate certificate;
    std::uint64_t nodes_explored = 0;
};

/// Exact chromatic number by DSATUR branch and bound.
///
/// Bounds start from a greedy clique and the better of DSATUR-greedy and
/// smallest-last greedy. The clique is precolored 0..|C|-1, and a branch only
/// opens a new color with the next unused index. Vertex selection: highest
/// saturation, then highest degree, then lowest index.
///
/// Throws BudgetExhausted, std::length_error above max_vertices.
ChromaticResult chromatic_exact(const DistanceGraph& g, const SolverOptions& options = {});

/// Exhaustive backtracking over colorings with vertex 0 fixed to color 0.
/// Only for N <= Limits::bruteforce_vertices; throws std::length_error above.
std::size_t chromatic_bruteforce(const DistanceGraph& g);

/// Each vertex in `order` gets the least color missing among its already
/// colored neighbors. Throws if `order` is not a permutation.
Coloring greedy_coloring(const DistanceGraph& g, std::span<const std::size_t> order);

/// Smallest-last vertex order; greedy on it uses at most degeneracy + 1 colors.
std::vector<std::size_t> degeneracy_order(const DistanceGraph& g);
std::size_t degeneracy(const DistanceGraph& g);

/// Plain DSATUR heuristic coloring with the solver's tie-breaking.
Coloring dsatur_coloring(const DistanceGraph& g);

/// Greedy maximal clique, best over all start vertices.
std::vector<std::size_t> greedy_clique(const DistanceGraph& g);

bool is_clique(const DistanceGraph& g, std::span<const std::size_t> vertices);

struct TwoSides {
    std::vector<std::uint8_t> side;  // 0 or 1 per vertex
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;

    Coloring as_coloring() const;
};

struct OddCycle {
    /// v0, v1, ..., v_{L-1} with L odd; consecutive vertices and (v_{L-1}, v0)
    /// are edges.
    std::vector<std::size_t> vertices;
};

using BipartitionResult = std::variant<TwoSides, OddCycle>;

/// BFS two-coloring per component, or an odd cycle found at the first
/// same-side edge.
BipartitionResult bipartition(const DistanceGraph& g);

/// Re-checks either variant against the graph's adjacency.
bool verify_bipartition(const DistanceGraph& g, const BipartitionResult& result);

}  // namespace fdist
