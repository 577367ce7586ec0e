#include "fdist/bound_ledger.hpp"

#include "fdist/constructions.hpp"
#include "fdist/extremal.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace fdist {

std::optional<std::size_t> BoundLedger::concluded() const {
    if (lower && upper && lower->value == upper->value) return lower->value;
    return std::nullopt;
}

namespace {

// C(n, r), saturating at `cap + 1`.
std::size_t binomial_capped(std::size_t n, std::size_t r, std::size_t cap) {
    r = std::min(r, n - r);
    std::size_t value = 1;  // stays <= cap before each multiply
    for (std::size_t i = 1; i <= r; ++i) {
        value = value * (n - r + i) / i;
        if (value > cap) return cap + 1;
    }
    return static_cast<std::size_t>(value);
}

std::string join(const std::vector<ClassId>& ids) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
    out << ']';
    return out.str();
}

// Runs f(i) for i in [0, count) on up to `threads` workers; rethrows the
// first failure after all workers finish.
template <typename F>
void parallel_for(std::size_t count, std::size_t threads, F&& f) {
    threads = std::max<std::size_t>(1, std::min(threads, count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        workers.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    f(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& w : workers) w.join();
    if (failure) std::rethrow_exception(failure);
}

struct SetEvaluation {
    std::optional<ChromaticResult> exact;
    std::optional<CliqueResult> clique;
};

}  // namespace

std::vector<std::vector<ClassId>> select_forbidden_sets(const DistanceClassMatrix& m,
                                                        std::size_t k,
                                                        const ForbiddenStrategy& strategy,
                                                        std::string* description) {
    if (k == 0) throw std::invalid_argument("k must be >= 1");
    std::vector<std::vector<ClassId>> sets;
    std::ostringstream desc;
    if (const auto* explicit_set = std::get_if<ExplicitForbidden>(&strategy)) {
        std::set<ClassId> unique(explicit_set->classes.begin(), explicit_set->classes.end());
        if (unique.size() > k) {
            throw std::invalid_argument("explicit forbidden set has more than k classes");
        }
        sets.emplace_back(unique.begin(), unique.end());
        desc << "explicit classes " << join(sets.front());
        if (description) *description = desc.str();
        return sets;
    }

    const auto& options = std::get<AutoForbidden>(strategy);
    const std::vector<ClassId>& ids = m.class_ids();
    const std::size_t t = ids.size();
    const std::size_t r = std::min(k, t);
    const std::size_t combos = binomial_capped(t, r, options.exhaustive_limit);
    if (combos <= options.exhaustive_limit) {
        std::vector<std::size_t> pick(r);
        for (std::size_t i = 0; i < r; ++i) pick[i] = i;
        while (true) {
            std::vector<ClassId> set;
            for (std::size_t i : pick) set.push_back(ids[i]);
            sets.push_back(std::move(set));
            std::size_t i = r;
            while (i > 0 && pick[i - 1] == t - r + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < r; ++j) pick[j] = pick[j - 1] + 1;
        }
        desc << "all " << sets.size() << " " << r << "-subsets of " << t << " realized classes";
    } else {
        std::vector<ClassId> by_frequency = ids;
        std::stable_sort(by_frequency.begin(), by_frequency.end(), [&](ClassId a, ClassId b) {
            return m.pair_count(a) > m.pair_count(b);
        });
        std::vector<ClassId> top(by_frequency.begin(), by_frequency.begin() + static_cast<long>(r));
        std::sort(top.begin(), top.end());
        std::set<std::vector<ClassId>> seen{top};
        sets.push_back(std::move(top));
        std::mt19937_64 rng(options.seed);
        for (std::size_t i = 0; i < options.random_sets; ++i) {
            std::vector<ClassId> sample;
            std::sample(ids.begin(), ids.end(), std::back_inserter(sample), r, rng);
            if (seen.insert(sample).second) sets.push_back(std::move(sample));
        }
        desc << r << " most frequent classes plus " << options.random_sets
             << " random " << r << "-subsets of " << t << " realized classes (seed "
             << options.seed << ")";
    }
    if (description) *description = desc.str();
    return sets;
}

BoundLedger bound_report(const DistanceClassMatrix& m, std::string space, std::size_t k,
                         const ReportOptions& options) {
    BoundLedger ledger;
    ledger.space = std::move(space);
    ledger.k = k;
    const auto sets = select_forbidden_sets(m, k, options.strategy, &ledger.strategy);

    std::vector<SetEvaluation> evaluations(sets.size());
    parallel_for(sets.size(), options.threads, [&](std::size_t i) {
        const DistanceGraph g = build_graph(m, std::span<const ClassId>(sets[i]));
        try {
            evaluations[i].exact = chromatic_exact(g, options.solver);
        } catch (const BudgetExhausted&) {
            evaluations[i].clique = max_clique(g, options.search_budget);
        }
    });

    auto offer_lower = [&](Bound candidate) {
        if (!ledger.lower || candidate.value > ledger.lower->value) ledger.lower = std::move(candidate);
    };
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const SetEvaluation& ev = evaluations[i];
        Bound b;
        b.certificate.forbidden = sets[i];
        if (ev.exact) {
            b.value = ev.exact->chi;
            b.certificate.vertices = ev.exact->certificate.clique;
            if (ev.exact->certificate.kind == ChromaticCertificate::Kind::clique) {
                b.certificate.kind = LedgerCertificate::Kind::clique;
            } else {
                b.certificate.kind = LedgerCertificate::Kind::search;
                b.certificate.coloring = ev.exact->witness;
            }
        } else {
            ledger.exhausted = true;
            ledger.notes.push_back("exact solve out of budget for classes " + join(sets[i]) +
                                   "; used maximum clique instead");
            b.value = ev.clique->vertices.size();
            b.certificate.kind = LedgerCertificate::Kind::clique;
            b.certificate.vertices = ev.clique->vertices;
            if (!ev.clique->optimal) ledger.notes.push_back("clique search also out of budget");
        }
        offer_lower(std::move(b));
    }

    const KDistanceSetResult kd = max_k_distance_set(m, k, options.search_budget);
    {
        Bound b;
        b.value = kd.subset.size();
        b.certificate.kind = LedgerCertificate::Kind::k_distance_set;
        b.certificate.forbidden = kd.classes;
        b.certificate.vertices = kd.subset;
        if (!kd.optimal) ledger.notes.push_back("k-distance set search out of budget");
        offer_lower(std::move(b));
    }

    // Single-class colorings; their product covers any <= k forbidden classes.
    const std::vector<ClassId>& ids = m.class_ids();
    std::vector<Coloring> per_class(ids.size());
    std::vector<char> per_class_exhausted(ids.size(), 0);
    parallel_for(ids.size(), options.threads, [&](std::size_t i) {
        const ClassId id = ids[i];
        const DistanceGraph g = build_graph(m, std::span<const ClassId>(&id, 1));
        const BipartitionResult split = bipartition(g);
        if (const auto* sides = std::get_if<TwoSides>(&split)) {
            per_class[i] = sides->as_coloring().compacted();
            return;
        }
        try {
            per_class[i] = chromatic_exact(g, options.solver).witness;
        } catch (const BudgetExhausted&) {
            per_class[i] = dsatur_coloring(g);
            per_class_exhausted[i] = 1;
        }
    });
    if (std::find(per_class_exhausted.begin(), per_class_exhausted.end(), 1) !=
        per_class_exhausted.end()) {
        ledger.exhausted = true;
        ledger.notes.push_back("some single-class colorings are heuristic (budget)");
    }

    std::vector<std::size_t> counts;
    for (const Coloring& c : per_class) counts.push_back(c.colors_used());
    std::sort(counts.rbegin(), counts.rend());
    std::size_t upper_value = m.size() == 0 ? 0 : 1;
    for (std::size_t i = 0; i < std::min(k, counts.size()); ++i) upper_value *= counts[i];
    {
        std::ostringstream note;
        note << "largest single-class color counts:";
        for (std::size_t i = 0; i < std::min<std::size_t>(counts.size(), 8); ++i) note << ' ' << counts[i];
        ledger.notes.push_back(note.str());
    }

    Bound up;
    up.value = upper_value;
    up.certificate.kind = LedgerCertificate::Kind::coloring;
    up.certificate.forbidden = ledger.lower ? ledger.lower->certificate.forbidden
                                            : std::vector<ClassId>{};
    Coloring product(std::vector<Color>(m.size(), 0), m.size() == 0 ? 0 : 1);
    for (ClassId id : up.certificate.forbidden) {
        const auto it = std::lower_bound(ids.begin(), ids.end(), id);
        const Coloring& factor = per_class[static_cast<std::size_t>(it - ids.begin())];
        product = product_coloring(product, factor);
        up.certificate.factors.push_back(factor.colors_used());
    }
    if (upper_value > m.size()) {
        // Distinct colors everywhere beat the product.
        up.value = m.size();
        up.certificate.factors.clear();
        std::vector<Color> distinct(m.size());
        for (std::size_t v = 0; v < m.size(); ++v) distinct[v] = static_cast<Color>(v);
        product = Coloring(std::move(distinct), m.size());
        ledger.notes.push_back("upper bound capped at the point count");
    }
    up.certificate.coloring = product;
    ledger.upper = std::move(up);

    const auto problems = verify_ledger(ledger, m, options.solver);
    if (!problems.empty()) {
        throw std::logic_error("bound_report produced an unverifiable certificate: " + problems.front());
    }
    return ledger;
}

std::vector<std::string> verify_ledger(const BoundLedger& ledger, const DistanceClassMatrix& m,
                                       const SolverOptions& solver) {
    std::vector<std::string> problems;
    auto graph_for = [&](const LedgerCertificate& cert) {
        return build_graph(m, std::span<const ClassId>(cert.forbidden));
    };
    if (ledger.lower) {
        const Bound& b = *ledger.lower;
        const LedgerCertificate& cert = b.certificate;
        if (cert.forbidden.size() > ledger.k) problems.push_back("lower: more than k classes");
        const DistanceGraph g = graph_for(cert);
        switch (cert.kind) {
            case LedgerCertificate::Kind::clique:
                if (!is_clique(g, cert.vertices)) problems.push_back("lower: clique is not a clique");
                if (cert.vertices.size() != b.value) problems.push_back("lower: clique size mismatch");
                break;
            case LedgerCertificate::Kind::k_distance_set: {
                const auto realized = classes_within(m, cert.vertices);
                if (!std::includes(cert.forbidden.begin(), cert.forbidden.end(), realized.begin(),
                                   realized.end())) {
                    problems.push_back("lower: k-distance set realizes unlisted classes");
                }
                if (cert.vertices.size() != b.value) problems.push_back("lower: set size mismatch");
                if (!is_clique(g, cert.vertices)) problems.push_back("lower: set is not a clique");
                break;
            }
            case LedgerCertificate::Kind::search: {
                try {
                    const ChromaticResult again = chromatic_exact(g, solver);
                    if (again.chi != b.value) problems.push_back("lower: re-solve disagrees");
                } catch (const BudgetExhausted&) {
                    problems.push_back("lower: re-solve out of budget");
                }
                if (!cert.coloring || !cert.coloring->is_valid(g) ||
                    cert.coloring->colors_used() != b.value) {
                    problems.push_back("lower: witness coloring invalid");
                }
                break;
            }
            case LedgerCertificate::Kind::coloring:
                problems.push_back("lower: a coloring cannot certify a lower bound");
                break;
        }
    }
    if (ledger.upper) {
        const Bound& b = *ledger.upper;
        const LedgerCertificate& cert = b.certificate;
        if (cert.kind != LedgerCertificate::Kind::coloring || !cert.coloring) {
            problems.push_back("upper: missing coloring");
        } else {
            const DistanceGraph g = graph_for(cert);
            if (!cert.coloring->is_valid(g)) problems.push_back("upper: coloring invalid");
            if (cert.coloring->colors_used() > b.value) problems.push_back("upper: too many colors");
        }
    }
    if (ledger.lower && ledger.upper && ledger.lower->value > ledger.upper->value) {
        problems.push_back("lower bound exceeds upper bound");
    }
    return problems;
}

}  // namespace fdist
