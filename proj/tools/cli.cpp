#include "cli.hpp"

#include "run_report.hpp"

#include "fdist/bound_ledger.hpp"
#include "fdist/chromatic.hpp"
#include "fdist/claims.hpp"
#include "fdist/constructions.hpp"
#include "fdist/extremal.hpp"
#include "fdist/fixtures.hpp"
#include "fdist/line_scheme.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>

namespace fdist::cli {
namespace {

struct Globals {
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    Limits limits;
};

struct Outcome {
    Json result;
    int code = exit_ok;
    std::string status = "ok";
    Json extra;  // merged into the report next to the timing, outside `result`
};

using Command = std::function<Outcome(RunReport&)>;

std::vector<Rational> parse_rationals(const std::vector<std::string>& texts) {
    std::vector<Rational> out;
    for (const auto& t : texts) out.push_back(Rational::parse(t));
    return out;
}

BigInt parse_integer(const std::string& text, const char* what) {
    const Rational r = Rational::parse(text);
    if (!r.is_integer()) throw InputError(std::string(what) + " must be an integer: " + text);
    return r.numerator();
}

Json strings(const std::vector<Rational>& values) {
    Json out = Json::array();
    for (const auto& v : values) out.push_back(v.to_string());
    return out;
}

Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(what + ": " + e.what());
    }
}

// A configuration to work on: a PointSet or class-matrix file, a named
// fixture, or a grid given by flags.
struct SpaceArgs {
    std::string input;
    std::string fixture;
    std::size_t dim = 0;
    std::size_t side = 0;
    std::size_t den = 1;

    void add_to(CLI::App& sub) {
        auto* in = sub.add_option("-i,--input", input, "PointSet or class matrix JSON file");
        auto* fx = sub.add_option("--fixture", fixture, "named fixture, e.g. square or hypercube(3)");
        auto* d = sub.add_option("--dim", dim, "grid dimension");
        sub.add_option("--side", side, "grid side: coordinates 0..side over --den");
        sub.add_option("--den", den, "grid denominator")->capture_default_str();
        in->excludes(fx)->excludes(d);
        fx->excludes(d);
    }
};

struct Space {
    std::string name;
    std::optional<PointSet> points;
    DistanceClassMatrix matrix;
};

void check_point_cap(const PointSet& ps, const Limits& limits) {
    if (ps.size() > limits.max_points) {
        throw InputError(std::to_string(ps.size()) + " points exceeds cap of " +
                         std::to_string(limits.max_points) + " (FDIST_MAX_POINTS)");
    }
}

Space load_space(const SpaceArgs& args, RunReport& report, const Limits& limits) {
    Space space;
    if (!args.input.empty()) {
        const std::string text = report.read_input(args.input);
        const Json j = parse_json(text, args.input);
        space.name = args.input;
        if (j.is_object() && j.contains("dimension")) {
            space.points = pointset_from_json(text);
            check_point_cap(*space.points, limits);
            space.matrix = classify(*space.points, limits);
        } else if (j.is_object() && j.contains("size")) {
            space.matrix = class_matrix_from_json(text);
            if (space.matrix.size() > limits.max_points) throw InputError("matrix exceeds point cap");
        } else {
            throw InputError(args.input + ": neither a PointSet nor a class matrix");
        }
    } else if (!args.fixture.empty()) {
        Fixture f = fixture(args.fixture);
        space.name = f.name;
        space.points = std::move(f.points);
        space.matrix = std::move(f.matrix);
        report.note_input("fixture:" + f.name, class_matrix_to_json(space.matrix));
    } else if (args.dim > 0) {
        space.points = generate_grid(args.dim, args.side, args.den, limits);
        space.matrix = classify(*space.points, limits);
        space.name = "grid(dim=" + std::to_string(args.dim) + ",side=" + std::to_string(args.side) +
                     ",den=" + std::to_string(args.den) + ")";
    } else {
        throw InputError("give --input, --fixture or --dim/--side");
    }
    return space;
}

DistanceGraph load_graph(const std::string& path, RunReport& report) {
    return from_dimacs(report.read_input(path));
}

// Accepts a bare assignment array, or any object with a "coloring" array
// (a chroma result, a product output) and optional "color_count".
Coloring load_coloring(const std::string& path, RunReport& report) {
    const Json j = parse_json(report.read_input(path), path);
    const Json* arr = &j;
    if (j.is_object()) {
        if (j.contains("result") && j["result"].is_object()) arr = &j["result"];
        if (!arr->contains("coloring")) throw InputError(path + ": no \"coloring\" array");
        const Json& holder = *arr;
        arr = &holder["coloring"];
        std::vector<Color> assignment;
        try {
            assignment = arr->get<std::vector<Color>>();
        } catch (const Json::exception& e) {
            throw InputError(path + ": " + e.what());
        }
        if (holder.contains("color_count")) {
            return Coloring(std::move(assignment), holder["color_count"].get<std::size_t>());
        }
        return Coloring::from_assignment(std::move(assignment));
    }
    try {
        return Coloring::from_assignment(arr->get<std::vector<Color>>());
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

SolverOptions solver_options(std::uint64_t budget, const Limits& limits) {
    SolverOptions s;
    s.node_budget = budget;
    s.max_vertices = limits.max_solver_vertices;
    return s;
}

Json exhausted_json(const BudgetExhausted& e) {
    return {{"lower", e.lower_bound()},
            {"upper", e.upper_bound()},
            {"nodes_explored", e.nodes_explored()},
            {"cancelled", e.cancelled()}};
}

// ---- subcommands ----------------------------------------------------------

void add_gen(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("gen", "write a grid PointSet or a fixture");
    struct Args {
        std::size_t dim = 0, side = 0, den = 1;
        std::string fixture, out;
        bool list = false;
    };
    auto a = std::make_shared<Args>();
    auto* dim = sub->add_option("--dim", a->dim, "dimension");
    auto* side = sub->add_option("--side", a->side, "coordinates run 0..side (over --den)");
    sub->add_option("--den", a->den, "denominator")->capture_default_str();
    auto* fx = sub->add_option("--fixture", a->fixture, "fixture name");
    auto* list = sub->add_flag("--list", a->list, "list fixture names");
    sub->add_option("-o,--out", a->out, "output file");
    fx->excludes(dim)->excludes(side);
    list->excludes(fx)->excludes(dim);
    dim->needs(side);
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport& report) {
            Outcome o;
            if (a->list) {
                o.result = {{"fixtures", fixture_names()}};
                return o;
            }
            if (a->out.empty()) throw InputError("gen: --out is required");
            if (!a->fixture.empty()) {
                Fixture f = fixture(a->fixture);
                if (f.points) {
                    report.write_output(a->out, pointset_to_json(*f.points));
                    o.result = {{"fixture", f.name},
                                {"kind", "points"},
                                {"points", f.points->size()},
                                {"dimension", f.points->dimension()}};
                } else {
                    report.write_output(a->out, class_matrix_to_json(f.matrix));
                    o.result = {{"fixture", f.name},
                                {"kind", "class_matrix"},
                                {"points", f.matrix.size()},
                                {"classes", f.matrix.class_count()}};
                }
                o.result["provenance"] = f.provenance;
                return o;
            }
            if (a->dim == 0) throw InputError("gen: give --dim/--side or --fixture");
            const PointSet ps = generate_grid(a->dim, a->side, a->den, g.limits);
            report.write_output(a->out, pointset_to_json(ps));
            o.result = {{"kind", "points"}, {"points", ps.size()}, {"dimension", ps.dimension()}};
            return o;
        };
    });
}

void add_classify(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("classify", "partition point pairs by squared distance");
    struct Args {
        std::string points, out;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("-i,--input,--points", a->points, "PointSet JSON")->required();
    sub->add_option("-o,--out", a->out, "class matrix JSON output")->required();
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport& report) {
            const PointSet ps = pointset_from_json(report.read_input(a->points));
            check_point_cap(ps, g.limits);
            const DistanceClassMatrix m = classify(ps, g.limits);
            report.write_output(a->out, class_matrix_to_json(m));
            Json classes = Json::array();
            for (ClassId id : m.class_ids()) {
                classes.push_back({{"id", id},
                                   {"squared", m.squared_distance_of(id)->to_string()},
                                   {"pairs", m.pair_count(id)}});
            }
            Outcome o;
            o.result = {{"points", m.size()}, {"class_count", m.class_count()}, {"classes", classes}};
            return o;
        };
    });
}

void add_graph(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("graph", "build a distance graph and write DIMACS");
    struct Args {
        SpaceArgs space;
        std::vector<std::string> forbid;
        std::vector<ClassId> classes;
        std::string out;
    };
    auto a = std::make_shared<Args>();
    a->space.add_to(*sub);
    auto* f = sub->add_option("--forbid", a->forbid, "forbidden squared distances, e.g. 1,2")
                  ->delimiter(',');
    auto* c = sub->add_option("--classes", a->classes, "forbidden class IDs")->delimiter(',');
    f->excludes(c);
    sub->add_option("-o,--out", a->out, "DIMACS output")->required();
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport& report) {
            if (a->forbid.empty() && a->classes.empty()) {
                throw InputError("graph: give --forbid or --classes");
            }
            const Space space = load_space(a->space, report, g.limits);
            Json summary;
            DistanceGraph graph;
            if (!a->forbid.empty()) {
                const auto requested = parse_rationals(a->forbid);
                if (!space.matrix.has_class_table()) {
                    throw InputError("--forbid needs squared distances; this matrix has no class table");
                }
                const ResolvedDistances r = resolve_distances(space.matrix, requested);
                graph = build_graph(space.matrix, std::span<const ClassId>(r.class_ids));
                summary = {{"requested", strings(requested)},
                           {"realized", strings(r.realized)},
                           {"unrealized", strings(r.unrealized)}};
            } else {
                graph = build_graph(space.matrix, std::span<const ClassId>(a->classes));
                Json realized = Json::array(), unrealized = Json::array();
                for (ClassId id : a->classes) {
                    (space.matrix.is_realized(id) ? realized : unrealized).push_back(id);
                }
                summary = {{"requested", a->classes}, {"realized", realized}, {"unrealized", unrealized}};
                if (space.matrix.has_class_table()) {
                    Json squared = Json::array();
                    for (ClassId id : a->classes) {
                        squared.push_back(space.matrix.squared_distance_of(id)->to_string());
                    }
                    summary["squared"] = squared;
                }
            }
            report.write_output(a->out, to_dimacs(graph));
            summary["space"] = space.name;
            summary["vertices"] = graph.vertex_count();
            summary["edges"] = graph.edge_count();
            summary["forbidden_classes"] = graph.forbidden_classes();
            summary["max_degree"] = max_degree(graph);
            Outcome o;
            o.result = std::move(summary);
            return o;
        };
    });
}

void add_chroma(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("chroma", "color a DIMACS graph");
    struct Args {
        std::string graph;
        bool exact = false, greedy = false, bipartite = false, brute = false;
        std::string order = "dsatur";
        std::uint64_t budget = 50'000'000;
        std::string points, svg;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("-g,--graph", a->graph, "DIMACS graph")->required();
    auto* mode = sub->add_option_group("mode");
    mode->add_flag("--exact", a->exact, "exact chromatic number (default)");
    mode->add_flag("--greedy", a->greedy, "heuristic coloring");
    mode->add_flag("--bipartite", a->bipartite, "two-coloring or odd cycle");
    mode->add_flag("--brute", a->brute, "exhaustive oracle (at most 12 vertices)");
    mode->require_option(0, 1);
    sub->add_option("--order", a->order, "greedy order: dsatur, degeneracy or increasing")
        ->check(CLI::IsMember({"dsatur", "degeneracy", "increasing"}))
        ->capture_default_str();
    sub->add_option("--budget", a->budget, "search node budget")->capture_default_str();
    auto* pts = sub->add_option("--points", a->points, "2-D PointSet for --svg");
    sub->add_option("--svg", a->svg, "write an SVG picture of the coloring")->needs(pts);
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport& report) {
            const DistanceGraph graph = load_graph(a->graph, report);
            if (graph.vertex_count() > g.limits.max_solver_vertices) {
                throw InputError(std::to_string(graph.vertex_count()) +
                                 " vertices exceeds cap of " +
                                 std::to_string(g.limits.max_solver_vertices) +
                                 " (FDIST_MAX_SOLVER_VERTICES)");
            }
            Outcome o;
            std::optional<Coloring> picture;
            if (a->bipartite) {
                const BipartitionResult r = bipartition(graph);
                o.result = to_json(r);
                if (const auto* two = std::get_if<TwoSides>(&r)) picture = two->as_coloring();
            } else if (a->greedy) {
                Coloring c;
                if (a->order == "dsatur") {
                    c = dsatur_coloring(graph);
                } else {
                    std::vector<std::size_t> order(graph.vertex_count());
                    std::iota(order.begin(), order.end(), std::size_t{0});
                    if (a->order == "degeneracy") order = degeneracy_order(graph);
                    c = greedy_coloring(graph, order);
                }
                o.result = {{"order", a->order}, {"colors", c.colors_used()}, {"coloring", to_json(c)}};
                picture = c;
            } else if (a->brute) {
                o.result = {{"chi", chromatic_bruteforce(graph)}};
            } else {
                try {
                    const ChromaticResult r = chromatic_exact(graph, solver_options(a->budget, g.limits));
                    o.result = to_json(r);
                    picture = r.witness;
                } catch (const BudgetExhausted& e) {
                    o.result = exhausted_json(e);
                    o.code = exit_budget;
                    o.status = "budget_exhausted";
                }
            }
            if (!a->svg.empty() && picture) {
                const PointSet ps = pointset_from_json(report.read_input(a->points));
                write_file(a->svg, coloring_svg(ps, *picture, graph.edges()));
                o.extra["svg"] = a->svg;
            }
            return o;
        };
    });
}

void add_linecolor(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("linecolor", "three-coloring of the line for two distances");
    struct Args {
        std::string s1, s2;
        std::vector<std::string> query;
        bool verify = false;
        std::size_t samples = 1000;
        std::string range = "100";
        std::int64_t max_den = 1000;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--s1", a->s1, "smaller distance (rational)")->required();
    sub->add_option("--s2", a->s2, "larger distance (rational)")->required();
    auto* q = sub->add_option("--query", a->query, "points to color")->delimiter(',');
    auto* v = sub->add_flag("--verify", a->verify, "check the scheme for violations");
    q->excludes(v);
    sub->add_option("--samples", a->samples, "random samples")->capture_default_str();
    sub->add_option("--range", a->range, "check within [-range, range]")->capture_default_str();
    sub->add_option("--max-denominator", a->max_den, "denominator bound for samples")
        ->capture_default_str();
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport&) {
            const LineColoringScheme scheme(Rational::parse(a->s1), Rational::parse(a->s2));
            Outcome o;
            o.result = {{"s1", scheme.s1().to_string()},
                        {"s2", scheme.s2().to_string()},
                        {"pieces", scheme.pieces().get_str()},
                        {"remainder", scheme.remainder().to_string()},
                        {"degenerate", scheme.degenerate()}};
            if (a->verify) {
                LineVerificationOptions opts;
                opts.samples = a->samples;
                opts.range = Rational::parse(a->range);
                opts.seed = g.seed;
                opts.max_denominator = a->max_den;
                o.result["report"] = to_json(verify_line_scheme(scheme, opts));
            } else if (!a->query.empty()) {
                Json colors = Json::array();
                for (const Rational& x : parse_rationals(a->query)) {
                    colors.push_back({{"x", x.to_string()}, {"color", to_string(scheme.color(x))}});
                }
                if (colors.size() == 1) o.result["color"] = colors[0]["color"];
                o.result["colors"] = std::move(colors);
            } else {
                throw InputError("linecolor: give --query or --verify");
            }
            return o;
        };
    });
}

void add_product(CLI::App& app, Command& selected) {
    auto* sub = app.add_subcommand("product", "pair two colorings of the same vertices");
    struct Args {
        std::string c1, c2, g1, g2, out;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--coloring1", a->c1, "first coloring JSON")->required();
    sub->add_option("--coloring2", a->c2, "second coloring JSON")->required();
    auto* g1 = sub->add_option("--graph1", a->g1, "DIMACS graph the first coloring is for");
    auto* g2 = sub->add_option("--graph2", a->g2, "DIMACS graph the second coloring is for");
    g1->needs(g2);
    g2->needs(g1);
    sub->add_option("-o,--out", a->out, "write the product coloring");
    sub->callback([a, &selected] {
        selected = [a](RunReport& report) {
            const Coloring c1 = load_coloring(a->c1, report);
            const Coloring c2 = load_coloring(a->c2, report);
            const Coloring p = product_coloring(c1, c2);
            Outcome o;
            o.result = {{"factors", {c1.color_count(), c2.color_count()}},
                        {"color_count", p.color_count()},
                        {"colors_used", p.colors_used()},
                        {"coloring", to_json(p)}};
            if (!a->g1.empty()) {
                const DistanceGraph g1 = load_graph(a->g1, report);
                const DistanceGraph g2 = load_graph(a->g2, report);
                if (g1.vertex_count() != p.size() || g2.vertex_count() != p.size()) {
                    throw InputError("product: graphs and colorings differ in vertex count");
                }
                if (!c1.is_valid(g1)) throw InputError("product: coloring1 is not valid on graph1");
                if (!c2.is_valid(g2)) throw InputError("product: coloring2 is not valid on graph2");
                o.result["valid_on_union"] = p.is_valid(edge_union(g1, g2));
            }
            if (!a->out.empty()) {
                const Json file = {{"coloring", to_json(p)}, {"color_count", p.color_count()}};
                report.write_output(a->out, file.dump() + "\n");
            }
            return o;
        };
    });
}

void add_kdist(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("kdist", "largest subset realizing at most k distances");
    struct Args {
        SpaceArgs space;
        std::size_t k = 0;
        std::uint64_t budget = 50'000'000;
    };
    auto a = std::make_shared<Args>();
    a->space.add_to(*sub);
    sub->add_option("-k", a->k, "number of distances")->required()->check(CLI::PositiveNumber);
    sub->add_option("--budget", a->budget, "search node budget")->capture_default_str();
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport& report) {
            const Space space = load_space(a->space, report, g.limits);
            const KDistanceSetResult r = max_k_distance_set(space.matrix, a->k, a->budget);
            Outcome o;
            o.result = to_json(r);
            o.result["space"] = space.name;
            if (space.matrix.has_class_table()) {
                Json squared = Json::array();
                for (ClassId id : r.classes) squared.push_back(space.matrix.squared_distance_of(id)->to_string());
                o.result["squared"] = squared;
            }
            if (!r.optimal) {
                o.code = exit_budget;
                o.status = "budget_exhausted";
            }
            return o;
        };
    });
}

void add_parity(CLI::App& app, Command& selected) {
    auto* sub = app.add_subcommand("parity", "primitive solutions of q(a^2+b^2) = 2pc^2");
    struct Args {
        std::string p, q, c_max;
        std::vector<std::string> check;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("-p", a->p, "odd positive integer")->required();
    sub->add_option("-q", a->q, "odd positive integer")->required();
    auto* cm = sub->add_option("--c-max", a->c_max, "enumerate all solutions with c <= c-max");
    auto* ck = sub->add_option("--check", a->check, "check one solution a,b,c")
                   ->delimiter(',')
                   ->expected(3);
    cm->excludes(ck);
    sub->callback([a, &selected] {
        selected = [a](RunReport&) {
            const BigInt p = parse_integer(a->p, "p");
            const BigInt q = parse_integer(a->q, "q");
            Outcome o;
            o.result = {{"p", p.get_str()}, {"q", q.get_str()}};
            if (!a->check.empty()) {
                const BigInt x = parse_integer(a->check[0], "a");
                const BigInt y = parse_integer(a->check[1], "b");
                const BigInt z = parse_integer(a->check[2], "c");
                o.result["solution"] = to_json(ParitySolution{x, y, z});
                o.result["verdict"] = to_json(check_odd_parity_solution(x, y, z, p, q));
                return o;
            }
            if (a->c_max.empty()) throw InputError("parity: give --c-max or --check");
            if (p <= 0 || q <= 0 || p % 2 == 0 || q % 2 == 0) {
                throw InputError("parity: p and q must be odd and positive");
            }
            const auto solutions = enumerate_odd_parity_solutions(p, q, parse_integer(a->c_max, "c-max"));
            Json list = Json::array();
            bool all_odd = true;
            for (const auto& s : solutions) {
                const ParityVerdict v = check_odd_parity_solution(s.a, s.b, s.c, p, q);
                all_odd = all_odd && v.all_odd();
                Json row = to_json(s);
                row["all_odd"] = v.all_odd();
                list.push_back(std::move(row));
            }
            o.result["c_max"] = a->c_max;
            o.result["count"] = solutions.size();
            o.result["solutions"] = std::move(list);
            o.result["all_odd"] = all_odd;
            return o;
        };
    });
}

void add_report(CLI::App& app, const Globals& g, Command& selected) {
    auto* sub = app.add_subcommand("report", "lower and upper bound ledger for k distances");
    struct Args {
        SpaceArgs space;
        std::size_t k = 0;
        std::vector<std::string> forbid;
        std::vector<ClassId> classes;
        std::uint64_t budget = 50'000'000;
        std::size_t random_sets = 100;
    };
    auto a = std::make_shared<Args>();
    a->space.add_to(*sub);
    sub->add_option("-k", a->k, "number of forbidden distances")->required()->check(CLI::PositiveNumber);
    auto* f = sub->add_option("--forbid", a->forbid, "try only these squared distances")->delimiter(',');
    auto* c = sub->add_option("--classes", a->classes, "try only these class IDs")->delimiter(',');
    f->excludes(c);
    sub->add_option("--budget", a->budget, "node budget per search")->capture_default_str();
    sub->add_option("--random-sets", a->random_sets, "random forbidden sets when not exhaustive")
        ->capture_default_str();
    sub->callback([a, &g, &selected] {
        selected = [a, &g](RunReport& report) {
            const Space space = load_space(a->space, report, g.limits);
            ReportOptions opts;
            opts.solver = solver_options(a->budget, g.limits);
            opts.search_budget = a->budget;
            opts.threads = g.threads;
            if (!a->forbid.empty()) {
                if (!space.matrix.has_class_table()) {
                    throw InputError("--forbid needs squared distances; this matrix has no class table");
                }
                const ResolvedDistances r = resolve_distances(space.matrix, parse_rationals(a->forbid));
                if (!r.unrealized.empty()) {
                    throw InputError("report: not realized in this space: " + strings(r.unrealized).dump());
                }
                opts.strategy = ExplicitForbidden{r.class_ids};
            } else if (!a->classes.empty()) {
                for (ClassId id : a->classes) {
                    if (!space.matrix.is_realized(id)) {
                        throw InputError("report: class " + std::to_string(id) + " is not realized");
                    }
                }
                opts.strategy = ExplicitForbidden{a->classes};
            } else {
                AutoForbidden automatic;
                automatic.seed = g.seed;
                automatic.random_sets = a->random_sets;
                opts.strategy = automatic;
            }
            const BoundLedger ledger = bound_report(space.matrix, space.name, a->k, opts);
            Outcome o;
            o.result = to_json(ledger, &space.matrix);
            if (ledger.exhausted) {
                o.code = exit_budget;
                o.status = "budget_exhausted";
            }
            return o;
        };
    });
}

void add_verify_paper(CLI::App& app, const Globals& g, Command& selected, std::ostream& err) {
    auto* sub = app.add_subcommand("verify-paper", "run the reproduction suite");
    struct Args {
        std::vector<std::string> only;
        std::uint64_t budget = 50'000'000;
        bool list = false;
    };
    auto a = std::make_shared<Args>();
    sub->add_option("--only", a->only, "claim ids to run")->delimiter(',');
    sub->add_option("--budget", a->budget, "node budget per search")->capture_default_str();
    sub->add_flag("--list", a->list, "list claim ids");
    sub->callback([a, &g, &selected, &err] {
        selected = [a, &g, &err](RunReport&) {
            Outcome o;
            if (a->list) {
                Json claims = Json::array();
                for (const auto& c : list_claims()) claims.push_back({{"id", c.id}, {"title", c.title}});
                o.result = {{"claims", claims}};
                return o;
            }
            ClaimOptions opts;
            opts.node_budget = a->budget;
            opts.seed = g.seed;
            opts.threads = g.threads;
            const auto outcomes = run_claims(opts, a->only);
            Json claims = Json::array();
            Json seconds = Json::object();
            std::size_t failed = 0, exhausted = 0;
            for (const auto& c : outcomes) {
                claims.push_back({{"id", c.id},
                                  {"title", c.title},
                                  {"status", to_string(c.status)},
                                  {"details", c.details}});
                seconds[c.id] = c.seconds;
                if (c.status == ClaimStatus::fail) ++failed;
                if (c.status == ClaimStatus::exhausted) ++exhausted;
                err << (c.status == ClaimStatus::pass ? "PASS " : c.status == ClaimStatus::fail ? "FAIL " : "BUDGET ")
                    << c.id << "  " << c.title << "\n";
            }
            o.result = {{"claims", claims},
                        {"passed", outcomes.size() - failed - exhausted},
                        {"failed", failed},
                        {"exhausted", exhausted}};
            o.extra["claim_seconds"] = seconds;
            if (failed > 0) {
                o.code = exit_claim;
                o.status = "claim_failed";
            } else if (exhausted > 0) {
                o.code = exit_budget;
                o.status = "budget_exhausted";
            }
            return o;
        };
    });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    Command selected;
    CLI::App app("Forbidden-distance colorings of finite point sets", "fdist");
    app.set_version_flag("--version", "fdist 0.1.0");
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--seed", g.seed, "seed for every random choice")->capture_default_str();
    app.add_option("--threads", g.threads, "worker threads for independent solves")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    add_gen(app, g, selected);
    add_classify(app, g, selected);
    add_graph(app, g, selected);
    add_chroma(app, g, selected);
    add_linecolor(app, g, selected);
    add_product(app, selected);
    add_kdist(app, g, selected);
    add_parity(app, selected);
    add_report(app, g, selected);
    add_verify_paper(app, g, selected, err);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        app.exit(e, err, err);
        return exit_input;
    }

    std::vector<std::string> command{"fdist"};
    command.insert(command.end(), args.begin(), args.end());
    try {
        g.limits = Limits::from_environment();
        RunReport report(command, g.seed);
        const auto start = std::chrono::steady_clock::now();
        Outcome o = selected(report);
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        Json doc = report.finish(std::move(o.result), o.status, seconds);
        if (!o.extra.is_null()) doc.update(o.extra);
        out << doc.dump(2) << "\n";
        return o.code;
    } catch (const BudgetExhausted& e) {
        err << "fdist: budget exhausted: " << e.what() << "\n";
        return exit_budget;
    } catch (const Json::exception& e) {
        err << "fdist: malformed JSON: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "fdist: " << e.what() << "\n";
        return exit_input;
    }
}

}  // namespace fdist::cli
