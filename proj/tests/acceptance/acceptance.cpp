// Acceptance gate: one PASS/FAIL line per criterion, each with its time limit.

#include "fdist/bound_ledger.hpp"
#include "fdist/chromatic.hpp"
#include "fdist/claims.hpp"
#include "fdist/constructions.hpp"
#include "fdist/extremal.hpp"
#include "fdist/fixtures.hpp"
#include "fdist/line_scheme.hpp"

#include "generators.hpp"
#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

using namespace fdist;

namespace {

struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<bool(std::ostringstream&)> check;
};

DistanceGraph forbid(const DistanceClassMatrix& m, const std::vector<Rational>& ds) {
    return build_graph(m, std::span<const Rational>(ds));
}

std::vector<Point> points_of(const PointSet& ps, const std::vector<std::size_t>& idx) {
    std::vector<Point> out;
    for (std::size_t v : idx) out.push_back(ps[v]);
    return out;
}

bool line_cliques(std::ostringstream& note) {
    for (std::int64_t k = 1; k <= 6; ++k) {
        std::vector<Rational> ds;
        for (std::int64_t d = 1; d <= k; ++d) ds.emplace_back(d * d);
        const DistanceGraph g = forbid(classify(line_fixture(static_cast<std::size_t>(k))), ds);
        const ChromaticResult r = chromatic_exact(g);
        if (r.chi != static_cast<std::size_t>(k + 1) || !r.witness.is_valid(g)) {
            note << "k=" << k << " chi=" << r.chi;
            return false;
        }
    }
    note << "k=1..6 all chi=k+1";
    return true;
}

bool line_upper(std::ostringstream& note) {
    testgen::Gen gen(2001);
    const DistanceClassMatrix m = classify(generate_grid(1, 40, 1));
    std::size_t violations = 0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t k = gen.index(1, 4);
        std::set<std::int64_t> dset;
        while (dset.size() < k) dset.insert(gen.integer(1, 40));
        std::vector<Rational> ds;
        for (auto d : dset) ds.emplace_back(d * d);
        const DistanceGraph g = forbid(m, ds);
        std::vector<std::size_t> order(g.vertex_count());
        std::iota(order.begin(), order.end(), std::size_t{0});
        const ChromaticResult r = chromatic_exact(g);
        if (r.chi > 2 * k || greedy_coloring(g, order).colors_used() > k + 1 || !r.witness.is_valid(g)) {
            ++violations;
        }
    }
    note << "50 instances, " << violations << " violations";
    return violations == 0;
}

bool line_scheme(std::ostringstream& note) {
    testgen::Gen gen(2002);
    std::size_t violations = 0, undetected = 0, pairs = 0;
    while (pairs < 100) {
        const Rational a = gen.positive_rational(50, 20);
        const Rational b = gen.positive_rational(50, 20);
        if (a == b) continue;
        const Rational& s1 = a < b ? a : b;
        const Rational& s2 = a < b ? b : a;
        ++pairs;
        LineVerificationOptions opts;
        opts.samples = 1000;
        opts.range = Rational(100);
        opts.seed = pairs;
        const auto report = verify_line_scheme(LineColoringScheme(s1, s2), opts);
        if (!report.ok() || report.samples != 1000 || report.boundary_points == 0) ++violations;

        auto corrupted = LineColoringScheme::standard_pairs;
        corrupted[1] = {LineColor::red, LineColor::blue};
        const auto mutated = verify_line_scheme(LineColoringScheme(s1, s2, corrupted), opts);
        if (mutated.sample_violation_count + mutated.sweep_violation_count < 1) ++undetected;
    }
    note << "100 pairs, " << violations << " with violations; mutation missed " << undetected;
    return violations == 0 && undetected == 0;
}

bool odd_ratio_bipartite(std::ostringstream& note) {
    const DistanceClassMatrix m = classify(generate_grid(2, 10, 1));
    for (std::int64_t d : {2, 10, 50}) {
        const Rational sq(d);
        const BigInt half = sq.numerator() / 2;
        if (sq.numerator() % 2 != 0 || half % 2 == 0 || !m.find_class(sq)) {
            note << d << " is not a realized 2 * odd";
            return false;
        }
        const DistanceGraph g = forbid(m, {sq});
        const BipartitionResult r = bipartition(g);
        const auto* two = std::get_if<TwoSides>(&r);
        if (two == nullptr || !two->as_coloring().is_valid(g) || g.edge_count() == 0) {
            note << "squared " << d << " not two-colored";
            return false;
        }
    }
    note << "2, 10, 50 two-colored";
    return true;
}

bool parity_lemma(std::ostringstream& note) {
    std::size_t total = 0, exceptions = 0, oracle_mismatch = 0;
    for (std::int64_t p : {1, 3, 5, 7, 9}) {
        for (std::int64_t q : {1, 3, 5, 7, 9}) {
            const auto sols = enumerate_odd_parity_solutions(BigInt(p), BigInt(q), BigInt(50));
            if (sols.size() != oracle::parity_solutions(p, q, 50).size()) ++oracle_mismatch;
            for (const auto& s : sols) {
                ++total;
                if (!check_odd_parity_solution(s.a, s.b, s.c, BigInt(p), BigInt(q)).all_odd()) ++exceptions;
            }
        }
    }
    note << total << " solutions, " << exceptions << " exceptions, " << oracle_mismatch << " oracle mismatches";
    return total > 0 && exceptions == 0 && oracle_mismatch == 0;
}

bool lattice_triangle(std::ostringstream& note) {
    const PointSet grid = generate_grid(3, 2, 1);
    const DistanceGraph g = forbid(classify(grid), {Rational(2)});
    const ChromaticResult r = chromatic_exact(g);
    const auto& clique = r.certificate.clique;
    const PointSet tri = triangle_z3_fixture();
    const std::vector<Point> shape(tri.points().begin(), tri.points().end());
    bool contains = false;
    for (std::size_t i = 0; i < clique.size(); ++i)
        for (std::size_t j = i + 1; j < clique.size(); ++j)
            for (std::size_t l = j + 1; l < clique.size(); ++l)
                contains = contains || is_translate(points_of(grid, {clique[i], clique[j], clique[l]}), shape);
    note << "chi=" << r.chi << ", certificate clique of " << clique.size()
         << (contains ? " contains" : " lacks") << " a translate of the triangle";
    return r.chi >= 3 && clique.size() >= 3 && is_clique(g, clique) && contains && r.witness.is_valid(g);
}

bool plane_two_distances(std::ostringstream& note) {
    const PointSet grid = generate_grid(2, 5, 1);
    const DistanceClassMatrix m = classify(grid);
    ReportOptions opts;
    opts.strategy = ExplicitForbidden{resolve_distances(m, std::vector<Rational>{Rational(1), Rational(2)}).class_ids};
    const BoundLedger ledger = bound_report(m, "grid [0..5]^2", 2, opts);
    if (!ledger.lower || !ledger.upper) return false;
    const PointSet sq = square_fixture();
    const bool unit_square = is_translate(points_of(grid, ledger.lower->certificate.vertices),
                                          {sq.points().begin(), sq.points().end()});
    note << "lower " << ledger.lower->value << (unit_square ? " (unit square)" : "") << ", upper "
         << ledger.upper->value << " from " << ledger.upper->certificate.factors.size() << " factors";
    return ledger.lower->value == 4 && ledger.lower->certificate.kind == LedgerCertificate::Kind::clique &&
           unit_square && ledger.upper->value == 4 &&
           ledger.upper->certificate.factors == std::vector<std::size_t>{2, 2} &&
           ledger.concluded() == std::optional<std::size_t>(4) && !ledger.exhausted &&
           verify_ledger(ledger, m).empty();
}

bool k_distance_fixtures(std::ostringstream& note) {
    struct Case {
        DistanceClassMatrix m;
        std::size_t k, expected;
        const char* name;
    };
    const Case cases[] = {{classify(line_fixture(5)), 2, 3, "line(5)"},
                          {classify(square_fixture()), 2, 4, "square"},
                          {classify(hypercube_fixture(3)), 3, 8, "hypercube(3)"},
                          {classify(johnson_fixture(3, 2)), 2, 6, "johnson(3,2)"},
                          {icosahedron_matrix(), 3, 12, "icosahedron"},
                          {regular_polygon_matrix(5), 2, 5, "pentagon"}};
    bool ok = true;
    for (const auto& c : cases) {
        const KDistanceSetResult r = max_k_distance_set(c.m, c.k);
        note << c.name << "=" << r.subset.size() << " ";
        ok = ok && r.optimal && r.subset.size() == c.expected && r.class_count() <= c.k;
    }
    return ok;
}

bool oracle_equivalence(std::ostringstream& note) {
    testgen::Gen gen(2009);
    std::size_t chi_mismatch = 0, kd_mismatch = 0;
    for (int t = 0; t < 200; ++t) {
        const DistanceGraph g = gen.graph(gen.index(1, 9), 0.1 + 0.8 * (t % 17) / 16.0);
        const ChromaticResult r = chromatic_exact(g);
        if (r.chi != chromatic_bruteforce(g) || !r.witness.is_valid(g)) ++chi_mismatch;
    }
    for (int t = 0; t < 100; ++t) {
        const std::size_t dim = gen.index(1, 3);
        const PointSet ps = gen.point_set(gen.index(1, 10), dim, dim == 1 ? 12 : 3, gen.integer(1, 2));
        const DistanceClassMatrix m = classify(ps);
        const std::size_t k = gen.index(1, 3);
        const KDistanceSetResult r = max_k_distance_set(m, k);
        if (!r.optimal || r.subset.size() != max_k_distance_set_bruteforce(m, k)) ++kd_mismatch;
    }
    note << chi_mismatch << "/200 chromatic and " << kd_mismatch << "/100 k-distance mismatches";
    return chi_mismatch == 0 && kd_mismatch == 0;
}

bool product_property(std::ostringstream& note) {
    testgen::Gen gen(2010);
    std::size_t violations = 0;
    for (int t = 0; t < 50; ++t) {
        const PointSet ps = gen.point_set(gen.index(4, 20), 2, 4);
        const DistanceClassMatrix m = classify(ps);
        std::vector<ClassId> ids = m.class_ids();
        std::shuffle(ids.begin(), ids.end(), gen.engine());
        const std::size_t cut = gen.index(1, std::min<std::size_t>(2, ids.size() - 1));
        const std::vector<ClassId> a(ids.begin(), ids.begin() + static_cast<long>(cut));
        const std::vector<ClassId> b(ids.begin() + static_cast<long>(cut),
                                     ids.begin() + static_cast<long>(std::min(ids.size(), cut + 2)));
        const DistanceGraph g1 = build_graph(m, std::span<const ClassId>(a));
        const DistanceGraph g2 = build_graph(m, std::span<const ClassId>(b));
        const Coloring c1 = chromatic_exact(g1).witness;
        const Coloring c2 = dsatur_coloring(g2);
        const Coloring p = product_coloring(c1, c2);
        if (!c1.is_valid(g1) || !c2.is_valid(g2) || !p.is_valid(edge_union(g1, g2)) ||
            p.color_count() != c1.color_count() * c2.color_count()) {
            ++violations;
        }
    }
    note << "50 instances, " << violations << " violations";
    return violations == 0;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "line clique lower bound", 1.0, line_cliques},
        {2, "line upper bound shadow", 30.0, line_upper},
        {3, "three-coloring of the line", 30.0, line_scheme},
        {4, "single odd-ratio distance is bipartite", 5.0, odd_ratio_bipartite},
        {5, "parity lemma", 10.0, parity_lemma},
        {6, "lattice triangle in Z^3", 10.0, lattice_triangle},
        {7, "two distances on the integer plane", 60.0, plane_two_distances},
        {8, "k-distance fixtures", 10.0, k_distance_fixtures},
        {9, "oracle equivalence", 120.0, oracle_equivalence},
        {10, "product coloring", 10.0, product_property},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        std::ostringstream note;
        bool ok = false;
        const auto start = std::chrono::steady_clock::now();
        try {
            ok = c.check(note);
        } catch (const std::exception& e) {
            note << "exception: " << e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.limit_seconds;
        if (!in_time) note << " [over time limit]";
        const bool pass = ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s %2d %-40s %8.3fs (limit %.0fs)  %s\n", pass ? "PASS" : "FAIL", c.number, c.name,
                    seconds, c.limit_seconds, note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
