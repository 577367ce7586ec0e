#include "fdist/fixtures.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace fdist {

PointSet line_fixture(std::size_t k) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i <= k; ++i) pts.push_back({Rational(static_cast<std::int64_t>(i))});
    return PointSet(1, std::move(pts));
}

PointSet square_fixture() {
    return PointSet(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
}

PointSet hypercube_fixture(std::size_t k) {
    if (k == 0 || k > 20) throw std::invalid_argument("hypercube: k must be in 1..20");
    std::vector<Point> pts;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Point p;
        for (std::size_t bit = k; bit-- > 0;) p.emplace_back((mask >> bit) & 1u ? 1 : 0);
        pts.push_back(std::move(p));
    }
    return PointSet(k, std::move(pts));
}

PointSet johnson_fixture(std::size_t n, std::size_t k) {
    const std::size_t ground = n + 1;
    if (k == 0 || k > ground || ground > 24) {
        throw std::invalid_argument("johnson: need 1 <= k <= n+1 <= 24");
    }
    std::vector<Point> pts;
    // Decreasing indicator bitmask, so {0..k-1} comes first.
    for (std::size_t mask = (std::size_t{1} << ground); mask-- > 0;) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        Point p;
        for (std::size_t bit = ground; bit-- > 0;) p.emplace_back((mask >> bit) & 1u ? 1 : 0);
        pts.push_back(std::move(p));
    }
    return PointSet(ground, std::move(pts));
}

PointSet triangle_z3_fixture() {
    return PointSet(3, {{0, 0, 0}, {1, 1, 0}, {1, 0, 1}});
}

DistanceClassMatrix regular_polygon_matrix(std::size_t vertices) {
    if (vertices < 3) throw std::invalid_argument("regular polygon needs at least 3 vertices");
    std::vector<ClassId> classes(vertices * vertices, DistanceClassMatrix::self);
    for (std::size_t i = 0; i < vertices; ++i) {
        for (std::size_t j = 0; j < vertices; ++j) {
            if (i == j) continue;
            const std::size_t d = i > j ? i - j : j - i;
            classes[i * vertices + j] = static_cast<ClassId>(std::min(d, vertices - d));
        }
    }
    return DistanceClassMatrix(vertices, std::move(classes));
}

DistanceClassMatrix icosahedron_matrix() {
    // Vertex 0 on top, 1..5 upper ring, 6..10 lower ring, 11 at the bottom.
    // Upper vertex i touches lower vertices 5+i and 5+(i mod 5)+1.
    constexpr std::size_t n = 12;
    std::vector<std::vector<std::size_t>> adj(n);
    auto link = [&](std::size_t a, std::size_t b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    };
    for (std::size_t i = 1; i <= 5; ++i) {
        const std::size_t next = i % 5 + 1;
        link(0, i);
        link(i, next);
        link(i, 5 + i);
        link(i, 5 + next);
        link(5 + i, 5 + next);
        link(11, 5 + i);
    }
    std::vector<ClassId> classes(n * n, DistanceClassMatrix::self);
    for (std::size_t src = 0; src < n; ++src) {
        std::vector<int> dist(n, -1);
        dist[src] = 0;
        std::deque<std::size_t> queue{src};
        while (!queue.empty()) {
            const std::size_t u = queue.front();
            queue.pop_front();
            for (std::size_t w : adj[u]) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        for (std::size_t j = 0; j < n; ++j) classes[src * n + j] = static_cast<ClassId>(dist[j]);
    }
    return DistanceClassMatrix(n, std::move(classes));
}

namespace {

std::vector<std::size_t> parse_args(std::string_view args, std::string_view name) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= args.size()) {
        const std::size_t comma = std::min(args.find(',', pos), args.size());
        const std::string_view tok = args.substr(pos, comma - pos);
        if (tok.empty()) throw std::invalid_argument("fixture " + std::string(name) + ": empty argument");
        std::size_t value = 0;
        for (char ch : tok) {
            if (ch < '0' || ch > '9') {
                throw std::invalid_argument("fixture " + std::string(name) + ": bad argument '" +
                                            std::string(tok) + "'");
            }
            value = value * 10 + static_cast<std::size_t>(ch - '0');
        }
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

Fixture from_points(std::string name, PointSet ps, std::string provenance) {
    DistanceClassMatrix m = classify(ps);
    return Fixture{std::move(name), std::move(ps), std::move(m), std::move(provenance)};
}

}  // namespace

Fixture fixture(std::string_view desc) {
    std::string_view base = desc;
    std::string_view args;
    if (const auto open = desc.find('('); open != std::string_view::npos) {
        if (desc.back() != ')') throw std::invalid_argument("fixture: unbalanced parentheses");
        base = desc.substr(0, open);
        args = desc.substr(open + 1, desc.size() - open - 2);
    } else if (const auto colon = desc.find(':'); colon != std::string_view::npos) {
        base = desc.substr(0, colon);
        args = desc.substr(colon + 1);
    }
    auto need = [&](std::size_t count) {
        auto values = parse_args(args, base);
        if (values.size() != count) {
            throw std::invalid_argument("fixture " + std::string(base) + " takes " +
                                        std::to_string(count) + " argument(s)");
        }
        return values;
    };
    auto no_args = [&] {
        if (!args.empty()) throw std::invalid_argument("fixture " + std::string(base) + " takes no arguments");
    };

    const std::string name(desc);
    if (base == "line") {
        const auto v = need(1);
        return from_points(name, line_fixture(v[0]), "integers 0..k");
    }
    if (base == "square") {
        no_args();
        return from_points(name, square_fixture(), "unit square, two classes");
    }
    if (base == "hypercube") {
        const auto v = need(1);
        return from_points(name, hypercube_fixture(v[0]), "{0,1}^k, k classes");
    }
    if (base == "johnson") {
        const auto v = need(2);
        return from_points(name, johnson_fixture(v[0], v[1]),
                           "indicator vectors of k-subsets of an (n+1)-set");
    }
    if (base == "triangle_Z3") {
        no_args();
        return from_points(name, triangle_z3_fixture(), "equilateral triangle of side sqrt(2)");
    }
    if (base == "regular_polygon_matrix" || base == "regular_polygon") {
        const auto v = need(1);
        return Fixture{name, std::nullopt, regular_polygon_matrix(v[0]),
                       "class = min(d, N-d) for cyclic index difference d; chord length "
                       "2 sin(pi d / N) increases in that value"};
    }
    if (base == "icosahedron_matrix" || base == "icosahedron") {
        no_args();
        return Fixture{name, std::nullopt, icosahedron_matrix(),
                       "class = icosahedral graph distance; cross-checked against vertices "
                       "(0,+-1,+-phi) and cyclic shifts in long double with tolerance 1e-9"};
    }
    throw std::invalid_argument("unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
    return {"line(k)",     "square", "hypercube(k)", "johnson(n,k)", "triangle_Z3",
            "regular_polygon_matrix(N)", "icosahedron_matrix"};
}

}  // namespace fdist
