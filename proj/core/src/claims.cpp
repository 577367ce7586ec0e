#include "fdist/claims.hpp"

#include "fdist/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <set>

namespace fdist {

std::string_view to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::pass: return "pass";
        case ClaimStatus::fail: return "fail";
        case ClaimStatus::exhausted: return "exhausted";
    }
    return "?";
}

bool is_translate(const std::vector<Point>& clique, const std::vector<Point>& shape) {
    if (clique.size() != shape.size() || clique.empty()) return false;
    const std::set<Point> target(clique.begin(), clique.end());
    // Try each clique point as the image of shape[0].
    for (const Point& anchor : clique) {
        if (anchor.size() != shape[0].size()) return false;
        Point shift(anchor.size());
        for (std::size_t i = 0; i < anchor.size(); ++i) shift[i] = anchor[i] - shape[0][i];
        std::set<Point> moved;
        for (const Point& p : shape) {
            Point q = p;
            for (std::size_t i = 0; i < q.size(); ++i) q[i] += shift[i];
            moved.insert(std::move(q));
        }
        if (moved == target) return true;
    }
    return false;
}

namespace {

struct Context {
    const ClaimOptions& options;
    Json& details;
    bool exhausted = false;

    SolverOptions solver() const {
        SolverOptions s;
        s.node_budget = options.node_budget;
        return s;
    }
};

using ClaimFn = std::function<bool(Context&)>;

std::vector<Rational> squares(const std::vector<std::int64_t>& distances) {
    std::vector<Rational> out;
    for (auto d : distances) out.emplace_back(d * d);
    return out;
}

// Clique of {0..k} forbidding 1..k.
bool line_clique_lower_bound(Context& ctx) {
    bool ok = true;
    Json rows = Json::array();
    for (std::int64_t k = 1; k <= 6; ++k) {
        const DistanceClassMatrix m = classify(line_fixture(static_cast<std::size_t>(k)));
        std::vector<std::int64_t> ds;
        for (std::int64_t d = 1; d <= k; ++d) ds.push_back(d);
        const auto forbidden = squares(ds);
        const DistanceGraph g = build_graph(m, std::span<const Rational>(forbidden));
        const ChromaticResult r = chromatic_exact(g, ctx.solver());
        const bool row_ok = r.chi == static_cast<std::size_t>(k + 1) && r.witness.is_valid(g);
        ok = ok && row_ok;
        rows.push_back({{"k", k}, {"chi", r.chi}, {"expected", k + 1}, {"ok", row_ok}});
    }
    ctx.details["instances"] = std::move(rows);
    return ok;
}

bool line_upper_bound(Context& ctx) {
    std::mt19937_64 rng(ctx.options.seed ^ 0x5eed0003u);
    const DistanceClassMatrix m = classify(generate_grid(1, 40, 1));
    std::size_t violations = 0;
    std::size_t max_chi_over_k = 0;
    Json worst = nullptr;
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
        std::vector<std::int64_t> pool(40);
        for (std::int64_t d = 1; d <= 40; ++d) pool[static_cast<std::size_t>(d - 1)] = d;
        std::vector<std::int64_t> ds;
        std::sample(pool.begin(), pool.end(), std::back_inserter(ds), static_cast<long>(k), rng);
        const auto forbidden = squares(ds);
        const DistanceGraph g = build_graph(m, std::span<const Rational>(forbidden));
        const ChromaticResult r = chromatic_exact(g, ctx.solver());
        std::vector<std::size_t> increasing(g.vertex_count());
        for (std::size_t v = 0; v < increasing.size(); ++v) increasing[v] = v;
        const Coloring greedy = greedy_coloring(g, increasing);
        const bool bad = r.chi > 2 * k || greedy.color_count() > k + 1 || !greedy.is_valid(g) ||
                         max_degree(g) > 2 * k || !r.witness.is_valid(g);
        if (bad) {
            ++violations;
            worst = {{"distances", ds}, {"chi", r.chi}, {"greedy", greedy.color_count()}};
        }
        max_chi_over_k = std::max(max_chi_over_k, r.chi * 100 / k);
    }
    ctx.details["instances"] = 50;
    ctx.details["violations"] = violations;
    ctx.details["max_chi_over_k_percent"] = max_chi_over_k;
    if (!worst.is_null()) ctx.details["example_violation"] = worst;
    return violations == 0;
}

bool line_three_coloring(Context& ctx) {
    std::mt19937_64 rng(ctx.options.seed ^ 0x5eed0005u);
    std::uniform_int_distribution<std::int64_t> num(1, 30);
    std::uniform_int_distribution<std::int64_t> den(1, 10);
    std::size_t violations = 0;
    std::size_t boundary = 0;
    std::size_t samples = 0;
    std::vector<LineColoringScheme> schemes;
    for (int i = 0; i < 100; ++i) {
        const Rational s1(num(rng), den(rng));
        const Rational s2 = s1 + Rational(num(rng), den(rng));
        LineColoringScheme scheme(s1, s2);
        LineVerificationOptions opts;
        opts.samples = 1000;
        opts.range = Rational(100);
        opts.seed = ctx.options.seed * 1000 + static_cast<std::uint64_t>(i);
        const auto report = verify_line_scheme(scheme, opts);
        violations += report.violations.size();
        boundary += report.boundary_points;
        samples += report.samples;
        if (i == 0) schemes.push_back(scheme);
    }
    // Mutation: the n = 1 (mod 3) block reuses the n = 0 pair.
    auto pairs = LineColoringScheme::standard_pairs;
    pairs[1] = {LineColor::red, LineColor::blue};
    const LineColoringScheme broken(schemes.front().s1(), schemes.front().s2(), pairs);
    LineVerificationOptions opts;
    opts.samples = 1;
    opts.range = Rational(100);
    const auto mutated = verify_line_scheme(broken, opts);

    ctx.details["pairs"] = 100;
    ctx.details["samples"] = samples;
    ctx.details["boundary_points"] = boundary;
    ctx.details["violations"] = violations;
    ctx.details["mutation_sweep_violations"] = mutated.sweep_violation_count;
    return violations == 0 && mutated.sweep_violation_count >= 1;
}

bool single_distance_bipartite(Context& ctx) {
    const DistanceClassMatrix m = classify(generate_grid(2, 10, 1));
    bool ok = true;
    Json rows = Json::array();
    for (std::int64_t sq : {2, 10, 50}) {
        const Rational d(sq);
        const ResolvedDistances resolved = resolve_distances(m, std::span<const Rational>(&d, 1));
        const DistanceGraph g = build_graph(m, std::span<const Rational>(&d, 1));
        const BipartitionResult r = bipartition(g);
        const bool two_sided = std::holds_alternative<TwoSides>(r);
        const bool row_ok = resolved.unrealized.empty() && g.edge_count() > 0 && two_sided &&
                            verify_bipartition(g, r);
        ok = ok && row_ok;
        rows.push_back({{"squared_distance", sq},
                        {"edges", g.edge_count()},
                        {"bipartite", two_sided},
                        {"ok", row_ok}});
    }
    ctx.details["grid"] = "[0..10]^2";
    ctx.details["instances"] = std::move(rows);
    return ok;
}

bool parity_lemma(Context& ctx) {
    std::size_t solutions = 0;
    std::size_t exceptions = 0;
    Json per_pair = Json::array();
    for (int p : {1, 3, 5, 7, 9}) {
        for (int q : {1, 3, 5, 7, 9}) {
            const auto list = enumerate_odd_parity_solutions(p, q, 50);
            for (const auto& s : list) {
                if (!check_odd_parity_solution(s.a, s.b, s.c, p, q).all_odd()) ++exceptions;
            }
            solutions += list.size();
            per_pair.push_back({{"p", p}, {"q", q}, {"solutions", list.size()}});
        }
    }
    ctx.details["c_max"] = 50;
    ctx.details["solutions"] = solutions;
    ctx.details["exceptions"] = exceptions;
    ctx.details["per_pair"] = std::move(per_pair);
    return exceptions == 0 && solutions > 0;
}

bool lattice_triangle(Context& ctx) {
    const PointSet grid = generate_grid(3, 2, 1);
    const DistanceClassMatrix m = classify(grid);
    const Rational two(2);
    const DistanceGraph g = build_graph(m, std::span<const Rational>(&two, 1));
    const ChromaticResult r = chromatic_exact(g, ctx.solver());
    const auto& clique = r.certificate.clique;
    std::vector<Point> pts;
    Json coords = Json::array();
    for (std::size_t v : clique) {
        pts.push_back(grid[v]);
        Json c = Json::array();
        for (const auto& x : grid[v]) c.push_back(x.to_string());
        coords.push_back(std::move(c));
    }
    // The exact certificate may be larger than the triangle (the grid holds a
    // regular tetrahedron at squared distance 2); look for the triangle inside.
    const PointSet tri = triangle_z3_fixture();
    const std::vector<Point> shape(tri.points().begin(), tri.points().end());
    Json found = nullptr;
    for (std::size_t i = 0; i < pts.size() && found.is_null(); ++i) {
        for (std::size_t j = i + 1; j < pts.size() && found.is_null(); ++j) {
            for (std::size_t l = j + 1; l < pts.size() && found.is_null(); ++l) {
                if (is_translate({pts[i], pts[j], pts[l]}, shape)) found = {clique[i], clique[j], clique[l]};
            }
        }
    }
    ctx.details["chi"] = r.chi;
    ctx.details["clique"] = std::move(coords);
    ctx.details["triangle_translate_in_clique"] = found;
    return r.chi >= 3 && clique.size() >= 3 && is_clique(g, clique) && !found.is_null() &&
           r.witness.is_valid(g);
}

bool plane_two_distances(Context& ctx) {
    const PointSet grid = generate_grid(2, 5, 1);
    const DistanceClassMatrix m = classify(grid);
    const std::vector<Rational> forbidden{Rational(1), Rational(2)};
    const ResolvedDistances resolved = resolve_distances(m, forbidden);
    ReportOptions opts;
    opts.strategy = ExplicitForbidden{resolved.class_ids};
    opts.solver = ctx.solver();
    opts.search_budget = ctx.options.node_budget;
    opts.threads = ctx.options.threads;
    const BoundLedger ledger = bound_report(m, "grid [0..5]^2", 2, opts);
    ctx.exhausted = ledger.exhausted;
    ctx.details["ledger"] = to_json(ledger, &m);
    if (!ledger.lower || !ledger.upper) return false;
    std::vector<Point> pts;
    for (std::size_t v : ledger.lower->certificate.vertices) pts.push_back(grid[v]);
    const PointSet sq = square_fixture();
    const bool unit_square = is_translate(pts, {sq.points().begin(), sq.points().end()});
    ctx.details["lower_clique_is_unit_square"] = unit_square;
    return ledger.lower->value == 4 &&
           ledger.lower->certificate.kind == LedgerCertificate::Kind::clique && unit_square &&
           ledger.upper->value == 4 && ledger.upper->certificate.factors.size() == 2 &&
           ledger.concluded() == std::optional<std::size_t>(4) &&
           verify_ledger(ledger, m, ctx.solver()).empty();
}

bool k_distance_fixtures(Context& ctx) {
    struct Case {
        const char* fixture;
        std::size_t k;
        std::size_t expected;
    };
    const Case cases[] = {{"line(5)", 2, 3},       {"square", 2, 4},
                          {"hypercube(3)", 3, 8},  {"johnson(3,2)", 2, 6},
                          {"icosahedron_matrix", 3, 12}, {"regular_polygon_matrix(5)", 2, 5}};
    bool ok = true;
    Json rows = Json::array();
    for (const Case& c : cases) {
        const Fixture f = fixture(c.fixture);
        const KDistanceSetResult r = max_k_distance_set(f.matrix, c.k, ctx.options.node_budget);
        if (!r.optimal) ctx.exhausted = true;
        // Forbidding the set's own classes turns it into a clique.
        const DistanceGraph g = build_graph(f.matrix, std::span<const ClassId>(r.classes));
        const bool row_ok = r.optimal && r.subset.size() == c.expected && r.class_count() <= c.k &&
                            is_clique(g, r.subset);
        ok = ok && row_ok;
        rows.push_back({{"fixture", c.fixture},
                        {"k", c.k},
                        {"size", r.subset.size()},
                        {"expected", c.expected},
                        {"ok", row_ok}});
    }
    ctx.details["instances"] = std::move(rows);
    return ok;
}

DistanceGraph random_graph(std::mt19937_64& rng, std::size_t n, bool geometric) {
    if (!geometric) {
        const double density = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        std::bernoulli_distribution coin(density);
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (coin(rng)) edges.emplace_back(u, v);
            }
        }
        return DistanceGraph::from_edges(n, edges);
    }
    std::uniform_int_distribution<std::int64_t> coord(0, 4);
    std::set<Point> chosen;
    while (chosen.size() < n) chosen.insert({Rational(coord(rng)), Rational(coord(rng))});
    const DistanceClassMatrix m = classify(PointSet(2, {chosen.begin(), chosen.end()}));
    std::vector<ClassId> ids = m.class_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t take =
        ids.empty() ? 0 : std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(4, ids.size()))(rng);
    ids.resize(take);
    return build_graph(m, std::span<const ClassId>(ids));
}

PointSet random_point_set(std::mt19937_64& rng, std::size_t n, std::size_t dim) {
    // Wide enough that n distinct points always exist.
    std::uniform_int_distribution<std::int64_t> coord(0, dim == 1 ? static_cast<std::int64_t>(n) + 5 : 5);
    std::set<Point> chosen;
    while (chosen.size() < n) {
        Point p;
        for (std::size_t i = 0; i < dim; ++i) p.emplace_back(coord(rng));
        chosen.insert(std::move(p));
    }
    return PointSet(dim, {chosen.begin(), chosen.end()});
}

bool oracle_equivalence(Context& ctx) {
    std::mt19937_64 rng(ctx.options.seed ^ 0x5eed0009u);
    std::size_t chi_mismatches = 0;
    for (int i = 0; i < 200; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 9)(rng);
        const DistanceGraph g = random_graph(rng, n, i % 2 == 1);
        const ChromaticResult r = chromatic_exact(g, ctx.solver());
        if (r.chi != chromatic_bruteforce(g) || !r.witness.is_valid(g)) ++chi_mismatches;
    }
    std::size_t kd_mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
        const std::size_t dim = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
        const DistanceClassMatrix m = classify(random_point_set(rng, n, dim));
        const KDistanceSetResult r = max_k_distance_set(m, k, ctx.options.node_budget);
        if (!r.optimal) ctx.exhausted = true;
        if (r.subset.size() != max_k_distance_set_bruteforce(m, k)) ++kd_mismatches;
    }
    ctx.details["chromatic_instances"] = 200;
    ctx.details["chromatic_mismatches"] = chi_mismatches;
    ctx.details["k_distance_instances"] = 100;
    ctx.details["k_distance_mismatches"] = kd_mismatches;
    return chi_mismatches == 0 && kd_mismatches == 0;
}

bool product_colorings(Context& ctx) {
    std::mt19937_64 rng(ctx.options.seed ^ 0x5eed0010u);
    std::size_t violations = 0;
    for (int i = 0; i < 50; ++i) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 24)(rng);
        const DistanceClassMatrix m = classify(random_point_set(rng, n, 2));
        std::vector<ClassId> ids = m.class_ids();
        std::shuffle(ids.begin(), ids.end(), rng);
        const std::size_t half = std::max<std::size_t>(1, ids.size() / 2);
        const std::size_t t1 = std::min<std::size_t>(half, std::uniform_int_distribution<std::size_t>(1, 2)(rng));
        const std::vector<ClassId> s1(ids.begin(), ids.begin() + static_cast<long>(t1));
        const std::vector<ClassId> s2(ids.begin() + static_cast<long>(t1),
                                      ids.begin() + static_cast<long>(std::min(ids.size(), t1 + 2)));
        const DistanceGraph g1 = build_graph(m, std::span<const ClassId>(s1));
        const DistanceGraph g2 = build_graph(m, std::span<const ClassId>(s2));
        const Coloring c1 = chromatic_exact(g1, ctx.solver()).witness;
        const Coloring c2 = chromatic_exact(g2, ctx.solver()).witness;
        const Coloring prod = product_coloring(c1, c2);
        const DistanceGraph both = edge_union(g1, g2);
        if (!c1.is_valid(g1) || !c2.is_valid(g2) || !prod.is_valid(both) ||
            prod.color_count() != c1.color_count() * c2.color_count()) {
            ++violations;
        }
    }
    ctx.details["instances"] = 50;
    ctx.details["violations"] = violations;
    return violations == 0;
}

struct ClaimEntry {
    const char* id;
    const char* title;
    ClaimFn run;
};

const std::vector<ClaimEntry>& registry() {
    static const std::vector<ClaimEntry> entries = {
        {"prop3-lower", "{0..k} forbidding 1..k needs k+1 colors (k = 1..6)", line_clique_lower_bound},
        {"prop3-upper", "k distances on a window of Z: chi <= 2k, increasing greedy <= k+1", line_upper_bound},
        {"prop5a", "interval three-coloring of the line forbids s1 and s2", line_three_coloring},
        {"prop5b-bipartite", "single squared distance 2p/q (p, q odd) on Z^2 is bipartite", single_distance_bipartite},
        {"prop5b-parity", "primitive solutions of q(a^2+b^2) = 2pc^2 are all odd", parity_lemma},
        {"prop5b-triangle", "equilateral triangle forces 3 colors in Z^3 at squared distance 2", lattice_triangle},
        {"prop5c", "two distances {1, sqrt 2} on [0..5]^2: bounds meet at 4", plane_two_distances},
        {"prop4-fixtures", "maximum k-distance sets of the standard fixtures", k_distance_fixtures},
        {"oracle-equivalence", "exact solvers agree with brute-force oracles", oracle_equivalence},
        {"product-coloring", "product of valid colorings is valid on the union graph", product_colorings},
    };
    return entries;
}

}  // namespace

std::vector<ClaimInfo> list_claims() {
    std::vector<ClaimInfo> out;
    for (const auto& e : registry()) out.push_back({e.id, e.title});
    return out;
}

ClaimOutcome run_claim(std::string_view id, const ClaimOptions& options) {
    const auto& entries = registry();
    const auto it = std::find_if(entries.begin(), entries.end(),
                                 [&](const ClaimEntry& e) { return id == e.id; });
    if (it == entries.end()) throw std::invalid_argument("unknown claim '" + std::string(id) + "'");

    ClaimOutcome out;
    out.id = it->id;
    out.title = it->title;
    out.details = Json::object();
    const auto start = std::chrono::steady_clock::now();
    Context ctx{options, out.details};
    try {
        const bool ok = it->run(ctx);
        out.status = ok ? ClaimStatus::pass : (ctx.exhausted ? ClaimStatus::exhausted : ClaimStatus::fail);
    } catch (const BudgetExhausted& e) {
        out.status = ClaimStatus::exhausted;
        out.details["budget"] = e.what();
    }
    out.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::vector<ClaimOutcome> run_claims(const ClaimOptions& options,
                                     const std::vector<std::string>& only) {
    for (const auto& id : only) {
        const auto& entries = registry();
        if (std::none_of(entries.begin(), entries.end(),
                         [&](const ClaimEntry& e) { return id == e.id; })) {
            throw std::invalid_argument("unknown claim '" + id + "'");
        }
    }
    std::vector<ClaimOutcome> out;
    for (const auto& e : registry()) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
        out.push_back(run_claim(e.id, options));
    }
    return out;
}

}  // namespace fdist
