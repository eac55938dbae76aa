// surface.hpp -- Picard lattices of P^2 and the Hirzebruch surfaces F_n
//
// Basis conventions:
//   P^2 : Pic = Z<l>,          l.l = 1
//   F_n : Pic = Z<sigma, l>,   sigma.sigma = -n, sigma.l = 1, l.l = 0
// The section at infinity satisfies sigma_inf ~ sigma + n*l.
#ifndef DELPEZZO_SURFACE_HPP
#define DELPEZZO_SURFACE_HPP

#include <cassert>
#include <stdexcept>
#include <string>

#include "delpezzo/rational.hpp"

namespace delpezzo {

struct SurfaceModel {
    enum class Kind { ProjectivePlane, Hirzebruch };

    Kind kind = Kind::ProjectivePlane;
    int n = 0;  // degree of F_n, unused for P^2

    static SurfaceModel p2() { return {Kind::ProjectivePlane, 0}; }
    static SurfaceModel fn(int n) {
        if (n < 0) throw std::invalid_argument("Hirzebruch degree must be >= 0");
        return {Kind::Hirzebruch, n};
    }

    bool is_p2() const { return kind == Kind::ProjectivePlane; }
    int rank() const { return is_p2() ? 1 : 2; }

    friend bool operator==(const SurfaceModel& a, const SurfaceModel& b) {
        return a.kind == b.kind && (a.is_p2() || a.n == b.n);
    }

    std::string str() const { return is_p2() ? "P2" : "F" + std::to_string(n); }
};

// Divisor class with exact rational coefficients in the basis above.
// For P^2 only c0 (the degree) is meaningful; for F_n the pair is
// (c0, c1) = (sigma-coefficient, fiber-coefficient).
struct DivisorClass {
    SurfaceModel surface;
    Rational c0;
    Rational c1;

    DivisorClass() = default;
    DivisorClass(SurfaceModel s, Rational a, Rational b = Rational(0)) : surface(s), c0(a), c1(b) {
        assert(s.rank() == 2 || b.is_zero());
    }

    static DivisorClass line(const SurfaceModel& s, Rational d = Rational(1)) {
        assert(s.is_p2());
        return DivisorClass(s, d);
    }
    static DivisorClass on_fn(const SurfaceModel& s, Rational cs, Rational cl) {
        assert(!s.is_p2());
        return DivisorClass(s, cs, cl);
    }
    static DivisorClass sigma(const SurfaceModel& s) { return on_fn(s, 1, 0); }
    static DivisorClass fiber(const SurfaceModel& s) { return on_fn(s, 0, 1); }
    static DivisorClass sigma_inf(const SurfaceModel& s) { return on_fn(s, 1, s.n); }
    static DivisorClass zero(const SurfaceModel& s) {
        return s.is_p2() ? DivisorClass(s, 0) : DivisorClass(s, 0, 0);
    }

    bool is_integral() const { return c0.is_integer() && c1.is_integer(); }
    bool is_zero() const { return c0.is_zero() && c1.is_zero(); }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        assert(a.surface == b.surface);
        return DivisorClass(a.surface, a.c0 + b.c0, a.c1 + b.c1);
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        assert(a.surface == b.surface);
        return DivisorClass(a.surface, a.c0 - b.c0, a.c1 - b.c1);
    }
    friend DivisorClass operator*(const Rational& t, const DivisorClass& d) {
        return DivisorClass(d.surface, t * d.c0, t * d.c1);
    }
    DivisorClass operator-() const { return DivisorClass(surface, -c0, -c1); }

    friend bool operator==(const DivisorClass& a, const DivisorClass& b) {
        return a.surface == b.surface && a.c0 == b.c0 && a.c1 == b.c1;
    }

    std::string str() const {
        if (surface.is_p2()) return c0.str() + "*l";
        return c0.str() + "*sigma + " + c1.str() + "*l";
    }
};

// Symmetric bilinear intersection form.
inline Rational intersect(const DivisorClass& a, const DivisorClass& b) {
    if (!(a.surface == b.surface))
        throw std::invalid_argument("intersect: classes live on different surfaces");
    if (a.surface.is_p2()) return a.c0 * b.c0;
    const Rational n(a.surface.n);
    return -n * a.c0 * b.c0 + a.c0 * b.c1 + a.c1 * b.c0;
}

inline DivisorClass canonical_class(const SurfaceModel& s) {
    if (s.is_p2()) return DivisorClass(s, -3);
    return DivisorClass(s, -2, -(s.n + 2));
}

// Adjunction: 2*p_a - 2 = C.(C + K).
inline Rational arithmetic_genus(const DivisorClass& c) {
    const Rational twice = intersect(c, c + canonical_class(c.surface));
    return twice / Rational(2) + Rational(1);
}

}  // namespace delpezzo

#endif
