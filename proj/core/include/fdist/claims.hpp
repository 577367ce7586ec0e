#pragma once

// Reproduction suite: each claim rebuilds a finite instance, solves it and
// re-verifies every certificate. Used by `fdist verify-paper`.

#include "fdist/serialize.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fdist {

struct ClaimOptions {
    std::uint64_t node_budget = 50'000'000;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
};

enum class ClaimStatus { pass, fail, exhausted };

std::string_view to_string(ClaimStatus s);

struct ClaimOutcome {
    std::string id;
    std::string title;
    ClaimStatus status = ClaimStatus::fail;
    Json details;          // deterministic for fixed options
    double seconds = 0.0;  // excluded from determinism
};

struct ClaimInfo {
    std::string id;
    std::string title;
};

std::vector<ClaimInfo> list_claims();

/// Throws std::invalid_argument for an unknown id.
ClaimOutcome run_claim(std::string_view id, const ClaimOptions& options = {});

/// All claims, or only those in `only` (in suite order).
std::vector<ClaimOutcome> run_claims(const ClaimOptions& options = {},
                                     const std::vector<std::string>& only = {});

/// True when the points of `clique` are exactly `shape` shifted by one
/// rational vector.
bool is_translate(const std::vector<Point>& clique, const std::vector<Point>& shape);

}  // namespace fdist
