#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ternary/errors.hpp"

namespace ternary {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number with arbitrary-precision numerator/denominator.
///
/// Canonical form is maintained at all times: denominator > 0,
/// gcd(numerator, denominator) = 1, and zero is stored as 0/1.
/// All operations are pure; values are safe to share across threads.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(std::int64_t n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw PreconditionError("Rational: zero denominator");
        v_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den)
                     : boost::multiprecision::cpp_rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PreconditionError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational inverse() const {
        if (is_zero()) throw PreconditionError("Rational: inverse of zero");
        return Rational(denominator(), numerator());
    }

    /// Emits "n" for integers and "n/d" otherwise, e.g. "-3/2".
    std::string str() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Parses "n" or "n/d" with an optional leading sign. Throws ParseError.
    static Rational parse(std::string_view text);

private:
    explicit Rational(boost::multiprecision::cpp_rational v) : v_(std::move(v)) {}
    boost::multiprecision::cpp_rational v_;
};

inline Rational factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

namespace detail {

inline bool parse_unsigned_integer(std::string_view& text, BigInt& out) {
    std::size_t i = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == 0) return false;
    out = BigInt(std::string(text.substr(0, i)));
    text.remove_prefix(i);
    return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    BigInt num;
    if (!detail::parse_unsigned_integer(rest, num))
        throw ParseError("Rational: expected digits in '" + std::string(text) + "'");
    BigInt den = 1;
    if (!rest.empty() && rest.front() == '/') {
        rest.remove_prefix(1);
        if (!detail::parse_unsigned_integer(rest, den) || den == 0)
            throw ParseError("Rational: bad denominator in '" + std::string(text) + "'");
    }
    if (!rest.empty())
        throw ParseError("Rational: trailing characters in '" + std::string(text) + "'");
    if (negative) num = -num;
    return Rational(num, den);
}

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ternary
