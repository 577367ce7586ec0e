#include "fdist/line_scheme.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace fdist {

std::string_view to_string(LineColor c) {
    switch (c) {
        case LineColor::red: return "red";
        case LineColor::blue: return "blue";
        case LineColor::green: return "green";
    }
    return "?";
}

LineColoringScheme::LineColoringScheme(Rational s1, Rational s2, Pairs pairs)
    : s1_(std::move(s1)), s2_(std::move(s2)), pairs_(pairs) {
    if (s1_.sign() <= 0) throw std::invalid_argument("line scheme: s1 must be positive");
    if (s2_ < s1_) throw std::invalid_argument("line scheme: s2 must be >= s1");
    degenerate_ = s1_ == s2_;
    m_ = (s2_ / s1_).floor();
    a_ = s2_ - Rational(m_, 1) * s1_;
}

LineColor LineColoringScheme::color(const Rational& x) const {
    if (degenerate_) {
        return mod_floor((x / s1_).floor(), 2) == 0 ? LineColor::red : LineColor::blue;
    }
    const BigInt block = (x / s2_).floor();
    const Rational offset = x - Rational(block, 1) * s2_;
    BigInt piece = m_;
    if (offset < Rational(m_, 1) * s1_) piece = (offset / s1_).floor();
    const long parity = mod_floor(piece, 2);
    return pairs_[static_cast<std::size_t>(mod_floor(block, 3))][static_cast<std::size_t>(parity)];
}

namespace {

std::size_t check_point(const LineColoringScheme& scheme, const Rational& x,
                        LineVerificationReport& report, std::size_t cap) {
    const LineColor here = scheme.color(x);
    std::size_t found = 0;
    for (const Rational* d : {&scheme.s1(), &scheme.s2()}) {
        if (scheme.color(x + *d) != here) continue;
        ++found;
        if (report.violations.size() < cap) report.violations.push_back({x, *d, here});
    }
    return found;
}

// Piece endpoints n*s2 + q*s1 (q = 0..m) plus, shifted back by s1 and s2,
// every point where color(x), color(x+s1) or color(x+s2) can change.
std::vector<Rational> critical_points(const LineColoringScheme& scheme, const Rational& range) {
    const Rational& s1 = scheme.s1();
    const Rational& s2 = scheme.s2();
    std::vector<Rational> endpoints;
    if (scheme.degenerate()) {
        const BigInt lo = (-(range + s2) / s1).floor();
        const BigInt hi = ((range + s2) / s1).floor() + 1;
        for (BigInt k = lo; k <= hi; ++k) endpoints.emplace_back(k, 1);
        for (auto& e : endpoints) e *= s1;
    } else {
        const BigInt lo = (-(range + s2) / s2).floor() - 1;
        const BigInt hi = ((range + s2) / s2).floor() + 1;
        for (BigInt n = lo; n <= hi; ++n) {
            const Rational start = Rational(n, 1) * s2;
            for (BigInt q = 0; q <= scheme.pieces(); ++q) {
                if (q == scheme.pieces() && scheme.remainder().is_zero()) break;
                endpoints.push_back(start + Rational(q, 1) * s1);
            }
        }
    }
    std::vector<Rational> points;
    points.reserve(endpoints.size() * 3);
    for (const Rational& b : endpoints) {
        points.push_back(b);
        points.push_back(b - s1);
        points.push_back(b - s2);
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace

LineVerificationReport verify_line_scheme(const LineColoringScheme& scheme,
                                          const LineVerificationOptions& options) {
    if (options.samples == 0) throw std::invalid_argument("verify_line_scheme: samples must be >= 1");
    if (options.range.sign() <= 0) throw std::invalid_argument("verify_line_scheme: range must be positive");
    if (options.max_denominator < 1) {
        throw std::invalid_argument("verify_line_scheme: max_denominator must be >= 1");
    }
    LineVerificationReport report;

    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::int64_t> pick_den(1, options.max_denominator);
    for (std::size_t i = 0; i < options.samples; ++i) {
        const std::int64_t den = pick_den(rng);
        const BigInt bound = (options.range * Rational(den)).floor();
        if (bound > BigInt(std::numeric_limits<std::int64_t>::max() / 2)) {
            throw std::invalid_argument("verify_line_scheme: range too large for sampling");
        }
        const std::int64_t b = bound.get_si();
        std::uniform_int_distribution<std::int64_t> pick_num(-b, b);
        report.sample_violation_count +=
            check_point(scheme, Rational(pick_num(rng), den), report, options.max_violations);
        ++report.samples;
    }

    // Colors of x, x+s1, x+s2 are constant strictly between consecutive
    // critical points, so the points themselves plus one midpoint per gap
    // cover every configuration in range.
    const std::vector<Rational> critical = critical_points(scheme, options.range);
    const Rational lo = -options.range;
    const Rational& hi = options.range;
    for (std::size_t i = 0; i < critical.size(); ++i) {
        const Rational& c = critical[i];
        if (lo <= c && c <= hi) {
            report.sweep_violation_count += check_point(scheme, c, report, options.max_violations);
            ++report.boundary_points;
        }
        if (i + 1 < critical.size()) {
            const Rational mid = (c + critical[i + 1]) / Rational(2);
            if (lo <= mid && mid <= hi) {
                report.sweep_violation_count +=
                    check_point(scheme, mid, report, options.max_violations);
                ++report.boundary_points;
            }
        }
    }
    return report;
}

}  // namespace fdist
