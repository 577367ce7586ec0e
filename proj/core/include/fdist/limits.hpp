#pragma once

#include <cstddef>

namespace fdist {

/// Size caps shared by generators, classifiers and solvers. The CLI lets
/// FDIST_MAX_POINTS / FDIST_MAX_SOLVER_VERTICES override the defaults.
struct Limits {
    std::size_t max_points = 5000;
    std::size_t max_solver_vertices = 5000;
    static constexpr std::size_t bruteforce_vertices = 12;

    static Limits from_environment();
};

}  // namespace fdist
