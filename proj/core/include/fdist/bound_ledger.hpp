#pragma once

// Instance-level bounds on the forbidden-distance chromatic number B_k of a
// finite configuration: the largest chromatic number of any graph obtained
// by forbidding at most k realized distance classes.

#include "fdist/chromatic.hpp"
#include "fdist/distance_classes.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace fdist {

struct LedgerCertificate {
    enum class Kind {
        clique,          // vertices pairwise adjacent under `forbidden`
        k_distance_set,  // vertices realize only `forbidden` (<= k classes)
        search,          // exact solve without a matching clique; re-solved to verify
        coloring,        // explicit coloring valid under `forbidden`
    };
    Kind kind = Kind::clique;
    std::vector<ClassId> forbidden;
    std::vector<std::size_t> vertices;
    std::optional<Coloring> coloring;
    /// For product colorings: colors used by each single-class factor.
    std::vector<std::size_t> factors;
};

struct Bound {
    std::size_t value = 0;
    LedgerCertificate certificate;
};

struct BoundLedger {
    std::string space;
    std::size_t k = 0;
    std::optional<Bound> lower;
    std::optional<Bound> upper;
    std::string strategy;
    std::vector<std::string> notes;
    bool exhausted = false;  // some solve ran out of budget

    /// Set when lower and upper coincide.
    std::optional<std::size_t> concluded() const;
};

/// Forbidden sets to try for the lower bound.
struct ExplicitForbidden {
    std::vector<ClassId> classes;
};
/// All k-subsets of realized classes when there are at most 500 of them,
/// otherwise the k most frequent classes plus `random_sets` seeded random
/// k-subsets.
struct AutoForbidden {
    std::uint64_t seed = 0;
    std::size_t exhaustive_limit = 500;
    std::size_t random_sets = 100;
};
using ForbiddenStrategy = std::variant<AutoForbidden, ExplicitForbidden>;

struct ReportOptions {
    ForbiddenStrategy strategy = AutoForbidden{};
    SolverOptions solver;
    std::uint64_t search_budget = 50'000'000;  // k-distance and clique searches
    std::size_t threads = 1;
};

/// Lower bound: best of exact chromatic numbers over the selected forbidden
/// sets (falling back to a maximum clique when a solve runs out of budget)
/// and of a maximum k-distance set. Upper bound: (max over single classes of
/// the colors needed for that class)^k, witnessed by the product coloring of
/// the lower bound's forbidden set. Every certificate is re-verified before
/// it is returned.
BoundLedger bound_report(const DistanceClassMatrix& m, std::string space, std::size_t k,
                         const ReportOptions& options = {});

/// Re-checks every certificate in `ledger` against `m`. Empty on success,
/// otherwise one message per failure.
std::vector<std::string> verify_ledger(const BoundLedger& ledger, const DistanceClassMatrix& m,
                                       const SolverOptions& solver = {});

/// The forbidden sets a strategy selects, in evaluation order.
std::vector<std::vector<ClassId>> select_forbidden_sets(const DistanceClassMatrix& m,
                                                        std::size_t k,
                                                        const ForbiddenStrategy& strategy,
                                                        std::string* description = nullptr);

}  // namespace fdist
