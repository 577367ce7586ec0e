#pragma once

#include "fdist/coloring.hpp"
#include "fdist/rational.hpp"

#include <vector>

namespace fdist {

/// Pairs two colorings of the same vertex set: vertex v gets
/// c1[v] * c2.color_count() + c2[v], out of c1.color_count() * c2.color_count()
/// colors. Valid on the union of two graphs whenever each factor is valid on
/// its own graph.
Coloring product_coloring(const Coloring& c1, const Coloring& c2);

struct ParityVerdict {
    bool a_odd = false;
    bool b_odd = false;
    bool c_odd = false;

    bool all_odd() const { return a_odd && b_odd && c_odd; }
};

/// Reports the parities of a primitive solution of q(a^2 + b^2) = 2 p c^2
/// with p, q odd and positive and c > 0. Throws std::invalid_argument when
/// any of those preconditions or gcd(a, b, c) = 1 fails.
ParityVerdict check_odd_parity_solution(const BigInt& a, const BigInt& b, const BigInt& c,
                                        const BigInt& p, const BigInt& q);

struct ParitySolution {
    BigInt a;
    BigInt b;
    BigInt c;

    friend bool operator==(const ParitySolution&, const ParitySolution&) = default;
};

/// Every (a, b, c) with a >= b >= 0, 0 < c <= c_max, gcd(a, b, c) = 1 and
/// q(a^2 + b^2) = 2 p c^2, ordered by c then a. May be empty.
std::vector<ParitySolution> enumerate_odd_parity_solutions(const BigInt& p, const BigInt& q,
                                                           const BigInt& c_max);

}  // namespace fdist
