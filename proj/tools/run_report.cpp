#include "run_report.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace fdist::cli {

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    std::ostringstream hex;
    hex << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < length; ++i) hex << std::setw(2) << static_cast<int>(digest[i]);
    return hex.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write " + path);
    out << text;
    if (!out) throw InputError("write failed: " + path);
}

std::string RunReport::read_input(const std::string& path) {
    std::string text = read_file(path);
    note_input(path, text);
    return text;
}

void RunReport::note_input(const std::string& label, std::string_view contents) {
    inputs_.push_back({{"path", label}, {"sha256", sha256_hex(contents)}, {"bytes", contents.size()}});
}

void RunReport::write_output(const std::string& path, const std::string& contents) {
    write_file(path, contents);
    outputs_.push_back({{"path", path}, {"sha256", sha256_hex(contents)}, {"bytes", contents.size()}});
}

Json RunReport::finish(Json result, std::string_view status, double seconds) const {
    return {{"command", command_},
            {"seed", seed_},
            {"inputs", inputs_},
            {"outputs", outputs_},
            {"status", status},
            {"result", std::move(result)},
            {"wall_time_seconds", seconds}};
}

std::string coloring_svg(const PointSet& points, const Coloring& coloring,
                         const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    if (points.dimension() != 2) throw InputError("--svg needs 2-dimensional points");
    if (points.size() != coloring.size()) throw InputError("--svg: point count differs from graph");
    static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                    "#46f0f0", "#f032e6", "#bcf60c", "#fabebe", "#008080"};
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    std::vector<std::pair<double, double>> xy;
    for (std::size_t i = 0; i < points.size(); ++i) {
        xy.emplace_back(points[i][0].to_double(), points[i][1].to_double());
        if (i == 0) {
            min_x = max_x = xy[0].first;
            min_y = max_y = xy[0].second;
        }
        min_x = std::min(min_x, xy.back().first);
        max_x = std::max(max_x, xy.back().first);
        min_y = std::min(min_y, xy.back().second);
        max_y = std::max(max_y, xy.back().second);
    }
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-9});
    const double size = 480, pad = 20;
    auto sx = [&](double x) { return pad + (x - min_x) / span * size; };
    auto sy = [&](double y) { return pad + (max_y - y) / span * size; };

    std::ostringstream svg;
    svg << std::fixed << std::setprecision(2);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size + 2 * pad << "\" height=\""
        << size + 2 * pad << "\">\n";
    for (auto [u, v] : edges) {
        svg << "<line x1=\"" << sx(xy[u].first) << "\" y1=\"" << sy(xy[u].second) << "\" x2=\""
            << sx(xy[v].first) << "\" y2=\"" << sy(xy[v].second)
            << "\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
    }
    for (std::size_t i = 0; i < xy.size(); ++i) {
        svg << "<circle cx=\"" << sx(xy[i].first) << "\" cy=\"" << sy(xy[i].second)
            << "\" r=\"5\" fill=\"" << palette[coloring[i] % 10] << "\"><title>" << i << ": color "
            << coloring[i] << "</title></circle>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace fdist::cli
