#pragma once

#include "fdist/distance_classes.hpp"
#include "fdist/distance_graph.hpp"

#include <cstdint>
#include <vector>

namespace fdist {

struct KDistanceSetResult {
    std::size_t k = 0;
    std::vector<std::size_t> subset;    // ascending vertex indices
    std::vector<ClassId> classes;       // classes realized inside subset
    bool optimal = false;               // false only on budget exhaustion
    std::uint64_t nodes_explored = 0;

    std::size_t class_count() const { return classes.size(); }
};

/// Largest subset realizing at most k classes, by branch and bound.
/// Candidates are tried in order of how few new classes they would add,
/// ties by index. With k >= class_count() the whole set is returned at once.
KDistanceSetResult max_k_distance_set(const DistanceClassMatrix& m, std::size_t k,
                                      std::uint64_t node_budget = 50'000'000);

/// Distinct classes realized among `subset`, ascending.
std::vector<ClassId> classes_within(const DistanceClassMatrix& m,
                                    const std::vector<std::size_t>& subset);

/// Exhaustive oracle over all 2^N subsets (N <= 20).
std::size_t max_k_distance_set_bruteforce(const DistanceClassMatrix& m, std::size_t k);

struct CliqueResult {
    std::vector<std::size_t> vertices;  // ascending
    bool optimal = false;
    std::uint64_t nodes_explored = 0;
};

/// Maximum clique with a greedy-coloring bound (MCQ style).
CliqueResult max_clique(const DistanceGraph& g, std::uint64_t node_budget = 50'000'000);

}  // namespace fdist
