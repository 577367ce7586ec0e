#include "fdist/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fdist {

std::vector<ClassId> classes_within(const DistanceClassMatrix& m,
                                    const std::vector<std::size_t>& subset) {
    std::set<ClassId> ids;
    for (std::size_t a = 0; a < subset.size(); ++a) {
        for (std::size_t b = a + 1; b < subset.size(); ++b) ids.insert(m.at(subset[a], subset[b]));
    }
    return {ids.begin(), ids.end()};
}

namespace {

struct BudgetHit {};

class KDistanceSearch {
public:
    KDistanceSearch(const DistanceClassMatrix& m, std::size_t k, std::uint64_t budget)
        : m_(m), k_(k), budget_(budget) {}

    void run() {
        std::vector<std::size_t> all(m_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::vector<std::size_t> chosen;
        std::vector<ClassId> used;
        try {
            expand(chosen, used, all);
            optimal_ = true;
        } catch (const BudgetHit&) {
            optimal_ = false;
        }
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool optimal() const { return optimal_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Classes between u and `chosen` that are not yet in `used`; returns
    // false as soon as the total would exceed k.
    bool new_classes(std::size_t u, const std::vector<std::size_t>& chosen,
                     const std::vector<ClassId>& used, std::vector<ClassId>& fresh) const {
        fresh.clear();
        for (std::size_t s : chosen) {
            const ClassId id = m_.at(u, s);
            if (std::binary_search(used.begin(), used.end(), id)) continue;
            if (std::find(fresh.begin(), fresh.end(), id) != fresh.end()) continue;
            fresh.push_back(id);
            if (used.size() + fresh.size() > k_) return false;
        }
        return true;
    }

    void expand(std::vector<std::size_t>& chosen, const std::vector<ClassId>& used,
                std::vector<std::size_t> candidates) {
        if (++nodes_ > budget_) {
            nodes_ = budget_;
            throw BudgetHit{};
        }
        if (chosen.size() > best_.size()) best_ = chosen;

        std::vector<std::pair<std::size_t, std::size_t>> ranked;  // (novelty, vertex)
        ranked.reserve(candidates.size());
        std::vector<ClassId> fresh;
        for (std::size_t u : candidates) {
            if (new_classes(u, chosen, used, fresh)) ranked.emplace_back(fresh.size(), u);
        }
        std::sort(ranked.begin(), ranked.end());

        for (std::size_t i = 0; i < ranked.size(); ++i) {
            if (chosen.size() + (ranked.size() - i) <= best_.size()) return;
            const std::size_t v = ranked[i].second;
            new_classes(v, chosen, used, fresh);
            std::vector<ClassId> next_used = used;
            next_used.insert(next_used.end(), fresh.begin(), fresh.end());
            std::sort(next_used.begin(), next_used.end());
            std::vector<std::size_t> rest;
            rest.reserve(ranked.size() - i - 1);
            for (std::size_t j = i + 1; j < ranked.size(); ++j) rest.push_back(ranked[j].second);
            chosen.push_back(v);
            expand(chosen, next_used, std::move(rest));
            chosen.pop_back();
        }
    }

    const DistanceClassMatrix& m_;
    std::size_t k_;
    std::uint64_t budget_;
    std::vector<std::size_t> best_;
    bool optimal_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace

KDistanceSetResult max_k_distance_set(const DistanceClassMatrix& m, std::size_t k,
                                      std::uint64_t node_budget) {
    if (k == 0) throw std::invalid_argument("max_k_distance_set: k must be >= 1");
    KDistanceSetResult result;
    result.k = k;
    if (m.class_count() <= k) {
        result.subset.resize(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) result.subset[i] = i;
        result.optimal = true;
    } else {
        KDistanceSearch search(m, k, node_budget);
        search.run();
        result.subset = search.best();
        std::sort(result.subset.begin(), result.subset.end());
        result.optimal = search.optimal();
        result.nodes_explored = search.nodes();
    }
    result.classes = classes_within(m, result.subset);
    return result;
}

std::size_t max_k_distance_set_bruteforce(const DistanceClassMatrix& m, std::size_t k) {
    const std::size_t n = m.size();
    if (n > 20) throw std::length_error("max_k_distance_set_bruteforce: at most 20 points");
    std::size_t best = 0;
    std::vector<std::size_t> members;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        members.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1u) members.push_back(i);
        }
        if (members.size() <= best) continue;
        if (classes_within(m, members).size() <= k) best = members.size();
    }
    return best;
}

namespace {

class CliqueSearch {
public:
    CliqueSearch(const DistanceGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {
        const std::size_t n = g.vertex_count();
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    }

    void run() {
        Bitset all(g_.vertex_count());
        for (std::size_t v = 0; v < g_.vertex_count(); ++v) all.set(v);
        std::vector<std::size_t> current;
        try {
            expand(current, all);
            optimal_ = true;
        } catch (const BudgetHit&) {
            optimal_ = false;
        }
    }

    const std::vector<std::size_t>& best() const { return best_; }
    bool optimal() const { return optimal_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // Greedy sequential coloring of P in degree order; returns vertices in
    // coloring order with their color numbers (1-based), non-decreasing.
    void color_sort(const Bitset& p, std::vector<std::size_t>& verts,
                    std::vector<std::size_t>& colors) const {
        verts.clear();
        colors.clear();
        Bitset uncolored = p;
        std::size_t color = 0;
        while (!uncolored.none()) {
            ++color;
            Bitset available = uncolored;
            for (std::size_t v : order_) {
                if (!available.test(v)) continue;
                verts.push_back(v);
                colors.push_back(color);
                uncolored.reset(v);
                available.reset(v);
                available.subtract(g_.neighbors(v));
            }
        }
    }

    void expand(std::vector<std::size_t>& current, Bitset p) {
        if (++nodes_ > budget_) {
            nodes_ = budget_;
            throw BudgetHit{};
        }
        if (p.none()) {
            if (current.size() > best_.size()) best_ = current;
            return;
        }
        std::vector<std::size_t> verts;
        std::vector<std::size_t> colors;
        color_sort(p, verts, colors);
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current.size() + colors[i] <= best_.size()) return;
            const std::size_t v = verts[i];
            Bitset next = p;
            next &= g_.neighbors(v);
            current.push_back(v);
            expand(current, std::move(next));
            current.pop_back();
            p.reset(v);
        }
    }

    const DistanceGraph& g_;
    std::uint64_t budget_;
    std::vector<std::size_t> order_;
    std::vector<std::size_t> best_;
    bool optimal_ = false;
    std::uint64_t nodes_ = 0;
};

}  // namespace

CliqueResult max_clique(const DistanceGraph& g, std::uint64_t node_budget) {
    CliqueSearch search(g, node_budget);
    search.run();
    CliqueResult result;
    result.vertices = search.best();
    std::sort(result.vertices.begin(), result.vertices.end());
    result.optimal = search.optimal();
    result.nodes_explored = search.nodes();
    return result;
}

}  // namespace fdist
