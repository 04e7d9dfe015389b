#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ternary/rational.hpp"

namespace ternary {

/// Element of the cyclotomic field Q(q) with q = e^{2*pi*i/3}, stored in the
/// basis {1, q}. Multiplication reduces with q^2 = -1 - q, so every value has
/// a unique normal form. Exact arithmetic throughout; values are immutable
/// in the sense that all operations return fresh values.
class Cyclotomic3 {
public:
    Cyclotomic3() = default;
    Cyclotomic3(std::int64_t n) : re_(n) {}  // NOLINT: implicit by design
    Cyclotomic3(Rational re) : re_(std::move(re)) {}
    Cyclotomic3(Rational re, Rational q) : re_(std::move(re)), q_(std::move(q)) {}

    const Rational& re_part() const { return re_; }
    const Rational& q_part() const { return q_; }

    bool is_zero() const { return re_.is_zero() && q_.is_zero(); }
    bool is_rational() const { return q_.is_zero(); }

    Cyclotomic3 operator-() const { return {-re_, -q_}; }

    Cyclotomic3& operator+=(const Cyclotomic3& o) {
        re_ += o.re_;
        q_ += o.q_;
        return *this;
    }
    Cyclotomic3& operator-=(const Cyclotomic3& o) {
        re_ -= o.re_;
        q_ -= o.q_;
        return *this;
    }
    // (a1 + b1 q)(a2 + b2 q) = a1 a2 - b1 b2 + (a1 b2 + b1 a2 - b1 b2) q
    Cyclotomic3& operator*=(const Cyclotomic3& o) {
        Rational a = re_ * o.re_ - q_ * o.q_;
        Rational b = re_ * o.q_ + q_ * o.re_ - q_ * o.q_;
        re_ = std::move(a);
        q_ = std::move(b);
        return *this;
    }

    friend Cyclotomic3 operator+(Cyclotomic3 a, const Cyclotomic3& b) { return a += b; }
    friend Cyclotomic3 operator-(Cyclotomic3 a, const Cyclotomic3& b) { return a -= b; }
    friend Cyclotomic3 operator*(Cyclotomic3 a, const Cyclotomic3& b) { return a *= b; }

    friend bool operator==(const Cyclotomic3& a, const Cyclotomic3& b) {
        return a.re_ == b.re_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Cyclotomic3& a, const Cyclotomic3& b) { return !(a == b); }

    /// Exact inverse. The norm (a + bq)(a + b q^2) = a^2 - ab + b^2 is a
    /// positive rational for any nonzero element.
    Cyclotomic3 inverse() const {
        if (is_zero()) throw PreconditionError("Cyclotomic3: inverse of zero");
        Rational norm = re_ * re_ - re_ * q_ + q_ * q_;
        Rational inv = norm.inverse();
        return {(re_ - q_) * inv, -q_ * inv};
    }

    Cyclotomic3& operator/=(const Cyclotomic3& o) { return *this *= o.inverse(); }
    friend Cyclotomic3 operator/(Cyclotomic3 a, const Cyclotomic3& b) { return a /= b; }

    std::string str() const;

    /// Parses the textual form "a/b+c/d*q" (zero parts omitted, unit
    /// denominators omitted, "q" and "-q" for unit coefficients).
    static Cyclotomic3 parse(std::string_view text);

private:
    Rational re_;
    Rational q_;
};

/// q^(k mod 3): qpow(0) = 1, qpow(1) = q, qpow(2) = -1 - q. Negative k wraps.
inline Cyclotomic3 qpow(std::int64_t k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return Cyclotomic3(1);
        case 1: return Cyclotomic3(Rational(0), Rational(1));
        default: return Cyclotomic3(Rational(-1), Rational(-1));
    }
}

inline std::string Cyclotomic3::str() const {
    if (is_zero()) return "0";
    std::string out;
    if (!re_.is_zero()) out = re_.str();
    if (!q_.is_zero()) {
        Rational mag = q_.sign() < 0 ? -q_ : q_;
        if (!out.empty()) out += q_.sign() < 0 ? "-" : "+";
        else if (q_.sign() < 0) out += "-";
        if (mag == Rational(1)) out += "q";
        else out += mag.str() + "*q";
    }
    return out;
}

inline Cyclotomic3 Cyclotomic3::parse(std::string_view text) {
    std::string_view rest = text;
    Rational re, qc;
    bool first = true;
    bool saw_re = false, saw_q = false;
    while (!rest.empty() || first) {
        bool negative = false;
        if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
            negative = rest.front() == '-';
            rest.remove_prefix(1);
        } else if (!first) {
            throw ParseError("Cyclotomic3: expected '+' or '-' in '" + std::string(text) + "'");
        }
        if (rest.empty()) throw ParseError("Cyclotomic3: empty term in '" + std::string(text) + "'");

        Rational coeff;
        bool is_q_term = false;
        if (rest.front() == 'q') {
            rest.remove_prefix(1);
            coeff = Rational(1);
            is_q_term = true;
        } else {
            BigInt num;
            if (!detail::parse_unsigned_integer(rest, num))
                throw ParseError("Cyclotomic3: expected digits in '" + std::string(text) + "'");
            BigInt den = 1;
            if (!rest.empty() && rest.front() == '/') {
                rest.remove_prefix(1);
                if (!detail::parse_unsigned_integer(rest, den) || den == 0)
                    throw ParseError("Cyclotomic3: bad denominator in '" + std::string(text) + "'");
            }
            coeff = Rational(num, den);
            if (!rest.empty() && (rest.front() == '*' || rest.front() == 'q')) {
                if (rest.front() == '*') {
                    rest.remove_prefix(1);
                    if (rest.empty() || rest.front() != 'q')
                        throw ParseError("Cyclotomic3: expected 'q' after '*' in '" + std::string(text) + "'");
                }
                rest.remove_prefix(1);
                is_q_term = true;
            }
        }
        if (negative) coeff = -coeff;
        if (is_q_term) {
            if (saw_q) throw ParseError("Cyclotomic3: duplicate q term in '" + std::string(text) + "'");
            qc = coeff;
            saw_q = true;
        } else {
            if (saw_re) throw ParseError("Cyclotomic3: duplicate rational term in '" + std::string(text) + "'");
            re = coeff;
            saw_re = true;
        }
        first = false;
    }
    return {re, qc};
}

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic3& c) { return os << c.str(); }

}  // namespace ternary
