#pragma once

// Three-coloring of the line that forbids two distances s1 <= s2 at once.
//
// The line is cut into half-open blocks [n*s2, (n+1)*s2). Each block is cut
// into m pieces of length s1 followed by a remainder of length a, where
// s2 = m*s1 + a and 0 <= a < s1. Pieces inside a block alternate between the
// two colors of the block's pair, starting with the first; the pair cycles
// with n mod 3 through (red, blue), (green, red), (blue, green).

#include "fdist/rational.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fdist {

enum class LineColor : std::uint8_t { red = 0, blue = 1, green = 2 };

std::string_view to_string(LineColor c);

class LineColoringScheme {
public:
    using Pair = std::array<LineColor, 2>;
    using Pairs = std::array<Pair, 3>;

    static constexpr Pairs standard_pairs{{{LineColor::red, LineColor::blue},
                                           {LineColor::green, LineColor::red},
                                           {LineColor::blue, LineColor::green}}};

    /// Requires 0 < s1 <= s2; throws std::invalid_argument otherwise.
    LineColoringScheme(Rational s1, Rational s2, Pairs pairs = standard_pairs);

    const Rational& s1() const { return s1_; }
    const Rational& s2() const { return s2_; }
    const BigInt& pieces() const { return m_; }         // m
    const Rational& remainder() const { return a_; }    // a
    bool degenerate() const { return degenerate_; }     // s1 == s2
    const Pairs& pairs() const { return pairs_; }

    /// Color of x. In the degenerate case only red/blue occur, by the parity
    /// of floor(x / s1).
    LineColor color(const Rational& x) const;

private:
    Rational s1_;
    Rational s2_;
    BigInt m_;
    Rational a_;
    bool degenerate_;
    Pairs pairs_;
};

struct LineViolation {
    Rational x;
    Rational distance;
    LineColor color;
};

struct LineVerificationReport {
    std::vector<LineViolation> violations;  // first max_violations found
    std::size_t samples = 0;
    std::size_t boundary_points = 0;
    std::size_t sample_violation_count = 0;
    std::size_t sweep_violation_count = 0;

    bool ok() const { return sample_violation_count + sweep_violation_count == 0; }
};

struct LineVerificationOptions {
    std::size_t samples = 1000;
    Rational range{100};
    std::uint64_t seed = 0;
    /// Random sample x = k / d with 1 <= d <= max_denominator.
    std::int64_t max_denominator = 1000;
    /// Violations beyond this many are counted but not recorded.
    std::size_t max_violations = 64;
};

/// Checks color(x) != color(x + s1) and color(x) != color(x + s2) on seeded
/// random rationals in [-range, range], then sweeps the range: every piece
/// endpoint b, the shifted points b - s1 and b - s2, and the midpoint of each
/// gap between consecutive such points. The sweep alone visits every distinct
/// configuration of the three colors inside the range.
LineVerificationReport verify_line_scheme(const LineColoringScheme& scheme,
                                          const LineVerificationOptions& options);

}  // namespace fdist
