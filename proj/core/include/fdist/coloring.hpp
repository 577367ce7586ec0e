#pragma once

#include "fdist/distance_graph.hpp"

#include <cstdint>
#include <vector>

namespace fdist {

using Color = std::uint32_t;

/// Total map vertex -> color index in [0, color_count).
class Coloring {
public:
    Coloring() = default;
    Coloring(std::vector<Color> assignment, std::size_t color_count);

    /// color_count = max color + 1 (0 for an empty assignment).
    static Coloring from_assignment(std::vector<Color> assignment);

    std::size_t size() const { return assignment_.size(); }
    std::size_t color_count() const { return color_count_; }
    Color operator[](std::size_t v) const { return assignment_[v]; }
    const std::vector<Color>& assignment() const { return assignment_; }

    /// Number of colors that actually occur.
    std::size_t colors_used() const;

    /// Relabels occurring colors 0, 1, ... by first appearance.
    Coloring compacted() const;

    /// Color classes indexed by color.
    std::vector<std::vector<std::size_t>> classes() const;

    /// No edge of `g` joins two vertices of the same color.
    bool is_valid(const DistanceGraph& g) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<Color> assignment_;
    std::size_t color_count_ = 0;
};

}  // namespace fdist
