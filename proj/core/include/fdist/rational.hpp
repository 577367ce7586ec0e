#pragma once

// Exact rational scalars backed by GMP.
//
// Every Rational is kept in canonical form: positive denominator and
// gcd(|num|, den) = 1. Zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fdist {

using BigInt = mpz_class;

class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& num, const BigInt& den);
    Rational(std::int64_t num, std::int64_t den);

    /// Parses "a" or "a/b". Rejects decimals, signs on the denominator,
    /// zero denominators and anything not already in lowest terms.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return value_.get_num(); }
    BigInt denominator() const { return value_.get_den(); }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// Largest integer <= value (floor semantics for negatives).
    BigInt floor() const;

    /// Canonical rendering: "a" when the denominator is 1, else "a/b".
    std::string to_string() const;

    /// Nearest double; only for reporting and plotting, never for decisions.
    double to_double() const { return value_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.value_ == rhs.value_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

    std::size_t hash() const;

private:
    explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

    mpq_class value_{0};
};

/// Non-negative residue of an integer modulo a positive modulus.
long mod_floor(const BigInt& value, long modulus);

}  // namespace fdist

template <>
struct std::hash<fdist::Rational> {
    std::size_t operator()(const fdist::Rational& r) const noexcept { return r.hash(); }
};
