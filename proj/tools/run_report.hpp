#pragma once

#include "fdist/coloring.hpp"
#include "fdist/point_set.hpp"
#include "fdist/serialize.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdist::cli {

// Bad flags, unreadable files, malformed input: exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string sha256_hex(std::string_view data);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Everything a run emits besides the result payload itself: command echo,
// digests of what was read and written, the seed and the wall time.
class RunReport {
public:
    RunReport(std::vector<std::string> command, std::uint64_t seed)
        : command_(std::move(command)), seed_(seed) {}

    // Reads `path`, records its digest and returns the contents.
    std::string read_input(const std::string& path);
    void note_input(const std::string& label, std::string_view contents);
    void write_output(const std::string& path, const std::string& contents);

    Json finish(Json result, std::string_view status, double seconds) const;

private:
    std::vector<std::string> command_;
    std::uint64_t seed_;
    Json inputs_ = Json::array();
    Json outputs_ = Json::array();
};

// Best effort picture of a coloring of planar points; edges drawn when given.
std::string coloring_svg(const PointSet& points, const Coloring& coloring,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges);

}  // namespace fdist::cli
