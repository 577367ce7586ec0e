#include "fdist/coloring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace fdist {

Coloring::Coloring(std::vector<Color> assignment, std::size_t color_count)
    : assignment_(std::move(assignment)), color_count_(color_count) {
    for (Color c : assignment_) {
        if (c >= color_count_) {
            throw std::invalid_argument("Coloring: color " + std::to_string(c) +
                                        " outside palette of " + std::to_string(color_count_));
        }
    }
}

Coloring Coloring::from_assignment(std::vector<Color> assignment) {
    std::size_t count = 0;
    for (Color c : assignment) count = std::max<std::size_t>(count, std::size_t{c} + 1);
    return Coloring(std::move(assignment), count);
}

std::size_t Coloring::colors_used() const {
    std::vector<bool> seen(color_count_, false);
    std::size_t used = 0;
    for (Color c : assignment_) {
        if (!seen[c]) {
            seen[c] = true;
            ++used;
        }
    }
    return used;
}

Coloring Coloring::compacted() const {
    constexpr Color unset = std::numeric_limits<Color>::max();
    std::vector<Color> relabel(color_count_, unset);
    std::vector<Color> out(assignment_.size());
    Color next = 0;
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        Color& r = relabel[assignment_[v]];
        if (r == unset) r = next++;
        out[v] = r;
    }
    return Coloring(std::move(out), next);
}

std::vector<std::vector<std::size_t>> Coloring::classes() const {
    std::vector<std::vector<std::size_t>> out(color_count_);
    for (std::size_t v = 0; v < assignment_.size(); ++v) out[assignment_[v]].push_back(v);
    return out;
}

bool Coloring::is_valid(const DistanceGraph& g) const {
    if (assignment_.size() != g.vertex_count()) return false;
    for (std::size_t u = 0; u < g.vertex_count(); ++u) {
        const Bitset& row = g.neighbors(u);
        for (std::size_t v = row.next(u + 1); v < g.vertex_count(); v = row.next(v + 1)) {
            if (assignment_[u] == assignment_[v]) return false;
        }
    }
    return true;
}

}  // namespace fdist
