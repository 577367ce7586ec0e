#include "fdist/chromatic.hpp"

#include <algorithm>
#include <deque>

namespace fdist {

BudgetExhausted::BudgetExhausted(std::size_t lower, std::size_t upper, std::uint64_t nodes,
                                 bool cancelled)
    : std::runtime_error(cancelled ? "search cancelled"
                                   : "node budget exhausted after " + std::to_string(nodes) +
                                         " nodes (bounds " + std::to_string(lower) + ".." +
                                         std::to_string(upper) + ")"),
      lower_(lower),
      upper_(upper),
      nodes_(nodes),
      cancelled_(cancelled) {}

namespace {

constexpr std::size_t uncolored = static_cast<std::size_t>(-1);

// Least color not used by any already-colored neighbor.
Color least_free_color(const DistanceGraph& g, std::size_t v, const std::vector<Color>& color,
                       const std::vector<bool>& done, std::vector<bool>& scratch) {
    std::fill(scratch.begin(), scratch.end(), false);
    g.neighbors(v).for_each([&](std::size_t u) {
        if (done[u] && color[u] < scratch.size()) scratch[color[u]] = true;
    });
    Color c = 0;
    while (c < scratch.size() && scratch[c]) ++c;
    return c;
}

class DsaturSearch {
public:
    DsaturSearch(const DistanceGraph& g, const SolverOptions& options, std::size_t lower,
                 std::size_t upper, std::vector<Color> upper_witness)
        : g_(g),
          options_(options),
          n_(g.vertex_count()),
          lower_(lower),
          best_(upper),
          best_assignment_(std::move(upper_witness)),
          stride_(upper),
          color_(n_, uncolored),
          nbr_count_(n_ * upper, 0),
          saturation_(n_, 0),
          degree_(n_) {
        for (std::size_t v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    }

    std::uint64_t nodes() const { return nodes_; }
    std::size_t best() const { return best_; }
    const std::vector<Color>& best_assignment() const { return best_assignment_; }

    void precolor(const std::vector<std::size_t>& clique) {
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], i);
        colored_ = clique.size();
    }

    void run(std::size_t used) {
        charge_node();
        search(used);
    }

private:
    void charge_node() {
        ++nodes_;
        if (nodes_ > options_.node_budget) {
            throw BudgetExhausted(lower_, best_, nodes_ - 1, false);
        }
        if (options_.stop.stop_requested()) throw BudgetExhausted(lower_, best_, nodes_, true);
    }

    void assign(std::size_t v, std::size_t c) {
        color_[v] = c;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (nbr_count_[u * stride() + c]++ == 0) ++saturation_[u];
        });
    }

    void unassign(std::size_t v) {
        const std::size_t c = color_[v];
        color_[v] = uncolored;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (--nbr_count_[u * stride() + c] == 0) --saturation_[u];
        });
    }

    std::size_t stride() const { return stride_; }

    std::size_t select() const {
        std::size_t pick = uncolored;
        for (std::size_t v = 0; v < n_; ++v) {
            if (color_[v] != uncolored) continue;
            if (pick == uncolored || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && degree_[v] > degree_[pick])) {
                pick = v;
            }
        }
        return pick;
    }

    // Returns true once an optimal coloring (best_ == lower_) is known.
    bool search(std::size_t used) {
        if (colored_ == n_) {
            best_ = used;
            best_assignment_.assign(n_, 0);
            for (std::size_t v = 0; v < n_; ++v) best_assignment_[v] = static_cast<Color>(color_[v]);
            return best_ <= lower_;
        }
        const std::size_t v = select();
        const std::size_t base = v * stride();
        for (std::size_t c = 0; c < used; ++c) {
            if (used >= best_) return false;
            if (nbr_count_[base + c] != 0) continue;
            charge_node();
            assign(v, c);
            ++colored_;
            const bool optimal = search(used);
            --colored_;
            unassign(v);
            if (optimal) return true;
        }
        if (used + 1 < best_) {
            charge_node();
            assign(v, used);
            ++colored_;
            const bool optimal = search(used + 1);
            --colored_;
            unassign(v);
            if (optimal) return true;
        }
        return false;
    }

    const DistanceGraph& g_;
    const SolverOptions& options_;
    std::size_t n_;
    std::size_t lower_;
    std::size_t best_;
    std::vector<Color> best_assignment_;
    std::size_t stride_;
    std::vector<std::size_t> color_;
    std::vector<std::uint32_t> nbr_count_;
    std::vector<std::size_t> saturation_;
    std::vector<std::size_t> degree_;
    std::size_t colored_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ChromaticResult chromatic_exact(const DistanceGraph& g, const SolverOptions& options) {
    const std::size_t n = g.vertex_count();
    if (n > options.max_vertices) {
        throw std::length_error("chromatic_exact: " + std::to_string(n) +
                                " vertices exceeds cap of " + std::to_string(options.max_vertices));
    }
    if (options.node_budget == 0) throw BudgetExhausted(0, n, 0, false);
    if (n == 0) {
        return ChromaticResult{0, Coloring({}, 0), {ChromaticCertificate::Kind::clique, {}}, 1};
    }

    const std::vector<std::size_t> clique = greedy_clique(g);
    Coloring upper = dsatur_coloring(g);
    {
        const auto order = degeneracy_order(g);
        Coloring alt = greedy_coloring(g, order);
        if (alt.color_count() < upper.color_count()) upper = std::move(alt);
    }
    if (clique.size() == upper.color_count()) {
        return ChromaticResult{clique.size(), upper,
                               {ChromaticCertificate::Kind::clique, clique}, 1};
    }

    DsaturSearch search(g, options, clique.size(), upper.color_count(), upper.assignment());
    search.precolor(clique);
    search.run(clique.size());

    ChromaticResult result;
    result.chi = search.best();
    result.witness = Coloring(search.best_assignment(), result.chi).compacted();
    result.nodes_explored = search.nodes();
    result.certificate.clique = clique;
    result.certificate.kind = result.chi == clique.size() ? ChromaticCertificate::Kind::clique
                                                          : ChromaticCertificate::Kind::search;
    return result;
}

std::size_t chromatic_bruteforce(const DistanceGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > Limits::bruteforce_vertices) {
        throw std::length_error("chromatic_bruteforce: at most " +
                                std::to_string(Limits::bruteforce_vertices) + " vertices");
    }
    if (n == 0) return 0;
    std::vector<Color> color(n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
        // Vertex 0 is pinned to color 0; every other vertex ranges over all k colors.
        auto extend = [&](auto&& self, std::size_t v) -> bool {
            if (v == n) return true;
            const Color first = v == 0 ? 0 : static_cast<Color>(k - 1);
            for (Color c = 0; c <= first; ++c) {
                bool ok = true;
                for (std::size_t u = 0; u < v && ok; ++u) {
                    if (g.adjacent(u, v) && color[u] == c) ok = false;
                }
                if (!ok) continue;
                color[v] = c;
                if (self(self, v + 1)) return true;
            }
            return false;
        };
        if (extend(extend, 0)) return k;
    }
    return n;
}

Coloring greedy_coloring(const DistanceGraph& g, std::span<const std::size_t> order) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw std::invalid_argument("greedy_coloring: order is not a permutation");
    std::vector<bool> seen(n, false);
    for (std::size_t v : order) {
        if (v >= n || seen[v]) throw std::invalid_argument("greedy_coloring: order is not a permutation");
        seen[v] = true;
    }
    std::vector<Color> color(n, 0);
    std::vector<bool> done(n, false);
    std::vector<bool> scratch(n + 1, false);
    for (std::size_t v : order) {
        color[v] = least_free_color(g, v, color, done, scratch);
        done[v] = true;
    }
    return Coloring::from_assignment(std::move(color));
}

namespace {

std::pair<std::vector<std::size_t>, std::size_t> smallest_last(const DistanceGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> removal;
    removal.reserve(n);
    std::size_t degen = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = uncolored;
        for (std::size_t v = 0; v < n; ++v) {
            if (!removed[v] && (pick == uncolored || deg[v] < deg[pick])) pick = v;
        }
        degen = std::max(degen, deg[pick]);
        removed[pick] = true;
        removal.push_back(pick);
        g.neighbors(pick).for_each([&](std::size_t u) {
            if (!removed[u]) --deg[u];
        });
    }
    std::reverse(removal.begin(), removal.end());
    return {std::move(removal), degen};
}

}  // namespace

std::vector<std::size_t> degeneracy_order(const DistanceGraph& g) { return smallest_last(g).first; }

std::size_t degeneracy(const DistanceGraph& g) { return smallest_last(g).second; }

Coloring dsatur_coloring(const DistanceGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Color> color(n, 0);
    std::vector<bool> done(n, false);
    std::vector<std::vector<bool>> seen(n);
    std::vector<std::size_t> saturation(n, 0);
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> scratch(n + 1, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = uncolored;
        for (std::size_t v = 0; v < n; ++v) {
            if (done[v]) continue;
            if (pick == uncolored || saturation[v] > saturation[pick] ||
                (saturation[v] == saturation[pick] && degree[v] > degree[pick])) {
                pick = v;
            }
        }
        const Color c = least_free_color(g, pick, color, done, scratch);
        color[pick] = c;
        done[pick] = true;
        g.neighbors(pick).for_each([&](std::size_t u) {
            if (done[u]) return;
            auto& s = seen[u];
            if (s.size() <= c) s.resize(std::size_t{c} + 1, false);
            if (!s[c]) {
                s[c] = true;
                ++saturation[u];
            }
        });
    }
    return Coloring::from_assignment(std::move(color));
}

std::vector<std::size_t> greedy_clique(const DistanceGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> best;
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v) degree[v] = g.degree(v);
    for (std::size_t start = 0; start < n; ++start) {
        if (degree[start] + 1 <= best.size()) continue;
        std::vector<std::size_t> clique{start};
        Bitset candidates = g.neighbors(start);
        while (!candidates.none()) {
            std::size_t pick = uncolored;
            candidates.for_each([&](std::size_t v) {
                if (pick == uncolored || degree[v] > degree[pick]) pick = v;
            });
            clique.push_back(pick);
            candidates &= g.neighbors(pick);
        }
        if (clique.size() > best.size()) best = std::move(clique);
    }
    return best;
}

bool is_clique(const DistanceGraph& g, std::span<const std::size_t> vertices) {
    for (std::size_t a = 0; a < vertices.size(); ++a) {
        if (vertices[a] >= g.vertex_count()) return false;
        for (std::size_t b = a + 1; b < vertices.size(); ++b) {
            if (vertices[b] >= g.vertex_count() || !g.adjacent(vertices[a], vertices[b])) {
                return false;
            }
        }
    }
    return true;
}

Coloring TwoSides::as_coloring() const {
    std::vector<Color> colors(side.begin(), side.end());
    return Coloring(std::move(colors), 2);
}

BipartitionResult bipartition(const DistanceGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::uint8_t> side(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<std::size_t> parent(n, uncolored);
    for (std::size_t root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = true;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            const Bitset& row = g.neighbors(u);
            for (std::size_t w = row.first(); w < n; w = row.next(w + 1)) {
                if (!visited[w]) {
                    visited[w] = true;
                    side[w] = static_cast<std::uint8_t>(1 - side[u]);
                    parent[w] = u;
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    // BFS depths of u and w are equal; climb to the common ancestor.
                    std::vector<std::size_t> up_u{u};
                    std::vector<std::size_t> up_w{w};
                    while (up_u.back() != up_w.back()) {
                        up_u.push_back(parent[up_u.back()]);
                        up_w.push_back(parent[up_w.back()]);
                    }
                    OddCycle cycle;
                    cycle.vertices = up_u;
                    for (std::size_t i = up_w.size() - 1; i-- > 0;) cycle.vertices.push_back(up_w[i]);
                    return cycle;
                }
            }
        }
    }
    TwoSides out;
    out.side = std::move(side);
    for (std::size_t v = 0; v < n; ++v) (out.side[v] == 0 ? out.left : out.right).push_back(v);
    return out;
}

bool verify_bipartition(const DistanceGraph& g, const BipartitionResult& result) {
    if (const auto* sides = std::get_if<TwoSides>(&result)) {
        if (sides->side.size() != g.vertex_count()) return false;
        if (sides->left.size() + sides->right.size() != g.vertex_count()) return false;
        for (std::size_t v : sides->left) {
            if (v >= g.vertex_count() || sides->side[v] != 0) return false;
        }
        for (std::size_t v : sides->right) {
            if (v >= g.vertex_count() || sides->side[v] != 1) return false;
        }
        for (const auto& [u, v] : g.edges()) {
            if (sides->side[u] == sides->side[v]) return false;
        }
        return true;
    }
    const auto& cycle = std::get<OddCycle>(result).vertices;
    if (cycle.size() % 2 == 0 || cycle.size() < 3) return false;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const std::size_t a = cycle[i];
        const std::size_t b = cycle[(i + 1) % cycle.size()];
        if (a >= g.vertex_count() || b >= g.vertex_count() || !g.adjacent(a, b)) return false;
    }
    return true;
}

}  // namespace fdist
