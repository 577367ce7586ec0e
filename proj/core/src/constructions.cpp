#include "fdist/constructions.hpp"

#include <stdexcept>

namespace fdist {

Coloring product_coloring(const Coloring& c1, const Coloring& c2) {
    if (c1.size() != c2.size()) {
        throw std::invalid_argument("product_coloring: colorings cover different vertex sets");
    }
    const std::size_t r = c2.color_count();
    std::vector<Color> out(c1.size());
    for (std::size_t v = 0; v < c1.size(); ++v) {
        out[v] = static_cast<Color>(c1[v] * r + c2[v]);
    }
    return Coloring(std::move(out), c1.color_count() * r);
}

namespace {

bool odd(const BigInt& x) { return mpz_odd_p(x.get_mpz_t()) != 0; }

BigInt gcd3(const BigInt& a, const BigInt& b, const BigInt& c) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void require_odd_positive(const BigInt& x, const char* name) {
    if (x <= 0 || !odd(x)) {
        throw std::invalid_argument(std::string(name) + " must be an odd positive integer");
    }
}

}  // namespace

ParityVerdict check_odd_parity_solution(const BigInt& a, const BigInt& b, const BigInt& c,
                                        const BigInt& p, const BigInt& q) {
    require_odd_positive(p, "p");
    require_odd_positive(q, "q");
    if (c <= 0) throw std::invalid_argument("c must be positive");
    if (gcd3(a, b, c) != 1) throw std::invalid_argument("gcd(a, b, c) must be 1");
    if (q * (a * a + b * b) != 2 * p * c * c) {
        throw std::invalid_argument("(a, b, c) does not satisfy q(a^2 + b^2) = 2 p c^2");
    }
    return ParityVerdict{odd(a), odd(b), odd(c)};
}

std::vector<ParitySolution> enumerate_odd_parity_solutions(const BigInt& p, const BigInt& q,
                                                           const BigInt& c_max) {
    require_odd_positive(p, "p");
    require_odd_positive(q, "q");
    if (c_max < 1) throw std::invalid_argument("c_max must be >= 1");
    std::vector<ParitySolution> out;
    for (BigInt c = 1; c <= c_max; ++c) {
        const BigInt rhs = 2 * p * c * c;
        if (mpz_divisible_p(rhs.get_mpz_t(), q.get_mpz_t()) == 0) continue;
        const BigInt total = rhs / q;  // a^2 + b^2
        // a >= b forces a^2 >= total / 2.
        BigInt a = sqrt(total / 2);
        while (2 * a * a < total) ++a;
        const BigInt a_max = sqrt(total);
        for (; a <= a_max; ++a) {
            const BigInt rest = total - a * a;
            if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) continue;
            const BigInt b = sqrt(rest);
            if (b > a) continue;
            if (gcd3(a, b, c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

}  // namespace fdist
