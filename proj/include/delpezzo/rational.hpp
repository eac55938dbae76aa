// rational.hpp -- exact rational arithmetic over 64-bit integers
//
// All lattice computations in this library stay far below the int64 range
// (coefficients are bounded by a few hundred), so a fixed-width rational is
// enough.  No rounding ever occurs; division by zero and non-canonical
// denominators are asserted away.
#ifndef DELPEZZO_RATIONAL_HPP
#define DELPEZZO_RATIONAL_HPP

#include <cassert>
#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <string>

namespace delpezzo {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // always > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(std::int64_t n) : num(n), den(1) {}
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        assert(den != 0);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }

    // valid only when is_integer()
    std::int64_t as_integer() const {
        assert(den == 1);
        return num;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num * b.num, a.den * b.den);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        assert(b.num != 0);
        return Rational(a.num * b.den, a.den * b.num);
    }
    Rational operator-() const { return Rational(-num, den); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;
    }

    // serialized as "p" or "p/q", never as a float
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }
};

inline Rational rat(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

}  // namespace delpezzo

#endif
