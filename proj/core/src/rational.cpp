#include "fdist/rational.hpp"

#include <cctype>

namespace fdist {

namespace {

bool is_digit_run(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

// Canonical unsigned integer text: digits only, no leading zeros except "0".
bool is_canonical_unsigned(std::string_view s) {
    return is_digit_run(s) && (s.size() == 1 || s.front() != '0');
}

}  // namespace

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume 64-bit long");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::parse(std::string_view text) {
    auto fail = [&](const char* why) {
        return std::invalid_argument("invalid rational '" + std::string(text) + "': " + why);
    };
    if (text.find('.') != std::string_view::npos) throw fail("decimals are not accepted, write p/q");
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    std::string_view num_text = body.substr(0, slash);
    std::string_view den_text = slash == std::string_view::npos ? std::string_view{}
                                                                : body.substr(slash + 1);
    if (!is_canonical_unsigned(num_text)) throw fail("expected integer numerator");
    if (slash != std::string_view::npos && !is_canonical_unsigned(den_text)) {
        throw fail("expected positive integer denominator");
    }
    BigInt num{std::string(num_text)};
    BigInt den = slash == std::string_view::npos ? BigInt(1) : BigInt(std::string(den_text));
    if (den == 0) throw fail("zero denominator");
    if (slash != std::string_view::npos && den == 1) throw fail("denominator 1 must be omitted");
    if (negative && num == 0) throw fail("negative zero");
    BigInt g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) throw fail("not in lowest terms");
    if (negative) num = -num;
    return Rational(mpq_class(num, den));
}

BigInt Rational::floor() const {
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return q;
}

std::string Rational::to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= rhs.value_;
    return *this;
}

std::size_t Rational::hash() const {
    // Low limbs of numerator and denominator are enough for bucketing.
    const auto limb = [](const mpz_class& z) -> std::size_t {
        if (z.get_mpz_t()->_mp_size == 0) return 0;
        return static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0)) ^
               static_cast<std::size_t>(z.get_mpz_t()->_mp_size);
    };
    return limb(value_.get_num()) * 1000003u ^ limb(value_.get_den());
}

long mod_floor(const BigInt& value, long modulus) {
    if (modulus <= 0) throw std::invalid_argument("modulus must be positive");
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(modulus));
    return r.get_si();
}

}  // namespace fdist
