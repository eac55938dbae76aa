// geometry.hpp -- coordinate-free models of the curve configuration, the
// zero-dimensional subscheme and multiplicity sequences
//
// A configuration is a list of weighted components drawn from a fixed role
// vocabulary.  Every pair of roles has a structurally known intersection
// pattern; components meeting in two or more points may never coexist, so a
// named intersection point is determined by its two roles.  Subscheme points
// are pure incidence data: a location, a degree and per-component contact
// orders.  No coordinates appear anywhere.
#ifndef DELPEZZO_GEOMETRY_HPP
#define DELPEZZO_GEOMETRY_HPP

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "delpezzo/surface.hpp"

namespace delpezzo {

struct CurveRole {
    enum class Kind { Line, MinimalSection, Fiber, SectionAtInfinity, IrreducibleMember };

    Kind kind = Kind::Line;
    int id = 0;                  // distinguishes fibers l_1, l_2, ... (and lines on P^2)
    DivisorClass member_class;   // set only for IrreducibleMember

    static CurveRole line(int id) { return {Kind::Line, id, {}}; }
    static CurveRole minimal_section() { return {Kind::MinimalSection, 0, {}}; }
    static CurveRole fiber(int id) { return {Kind::Fiber, id, {}}; }
    static CurveRole section_at_infinity() { return {Kind::SectionAtInfinity, 0, {}}; }
    static CurveRole member(const DivisorClass& cls) {
        return {Kind::IrreducibleMember, 0, cls};
    }

    friend bool operator==(const CurveRole& a, const CurveRole& b) {
        if (a.kind != b.kind || a.id != b.id) return false;
        if (a.kind != Kind::IrreducibleMember) return true;
        return a.member_class == b.member_class;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Line: return "l" + std::to_string(id + 1);
            case Kind::MinimalSection: return "sigma";
            case Kind::Fiber: return "l" + std::to_string(id + 1);
            case Kind::SectionAtInfinity: return "sigma_inf";
            case Kind::IrreducibleMember: return "C";
        }
        return "?";
    }
};

inline bool role_fits_surface(const CurveRole& r, const SurfaceModel& s) {
    switch (r.kind) {
        case CurveRole::Kind::Line: return s.is_p2();
        case CurveRole::Kind::IrreducibleMember: return r.member_class.surface == s;
        default: return !s.is_p2();
    }
}

inline DivisorClass role_class(const CurveRole& r, const SurfaceModel& s) {
    switch (r.kind) {
        case CurveRole::Kind::Line: return DivisorClass::line(s);
        case CurveRole::Kind::MinimalSection: return DivisorClass::sigma(s);
        case CurveRole::Kind::Fiber: return DivisorClass::fiber(s);
        case CurveRole::Kind::SectionAtInfinity: return DivisorClass::sigma_inf(s);
        case CurveRole::Kind::IrreducibleMember: return r.member_class;
    }
    throw std::logic_error("unreachable");
}

// Nonsingular rational members only; the model tracks no other curves.
inline bool member_class_allowed(const DivisorClass& cls) {
    if (!cls.is_integral()) return false;
    return arithmetic_genus(cls) == Rational(0) && intersect(cls, cls) >= Rational(0);
}

struct WeightedComponent {
    CurveRole role;
    Rational coeff;  // > 0
};

// All pairwise intersection numbers in the model.  Two components may only
// coexist when they meet in at most one point, transversally; configurations
// violating that are rejected at construction.
inline Rational structural_intersection(const CurveRole& a, const CurveRole& b,
                                        const SurfaceModel& s) {
    using K = CurveRole::Kind;
    if (a.kind == b.kind && a.id == b.id && a.kind != K::IrreducibleMember)
        throw std::invalid_argument("duplicate component role");
    if ((a.kind == K::Fiber && b.kind == K::Fiber) ||
        (a.kind == K::MinimalSection && b.kind == K::SectionAtInfinity) ||
        (a.kind == K::SectionAtInfinity && b.kind == K::MinimalSection))
        return Rational(0);
    return intersect(role_class(a, s), role_class(b, s));
}

struct WeightedConfig {
    SurfaceModel surface;
    std::vector<WeightedComponent> components;

    WeightedConfig() = default;
    WeightedConfig(SurfaceModel s, std::vector<WeightedComponent> comps)
        : surface(s), components(std::move(comps)) {
        int sections = 0, sections_inf = 0;
        for (const auto& c : components) {
            if (!role_fits_surface(c.role, surface))
                throw std::invalid_argument("component role does not fit the surface");
            if (!(c.coeff > Rational(0)))
                throw std::invalid_argument("component coefficients must be positive");
            if (c.role.kind == CurveRole::Kind::MinimalSection) sections++;
            if (c.role.kind == CurveRole::Kind::SectionAtInfinity) sections_inf++;
            if (c.role.kind == CurveRole::Kind::IrreducibleMember &&
                !member_class_allowed(c.role.member_class))
                throw std::invalid_argument("irreducible member must be a nonsingular rational class");
        }
        if (sections > 1 || sections_inf > 1)
            throw std::invalid_argument("at most one minimal section / section at infinity");
        for (size_t i = 0; i < components.size(); ++i)
            for (size_t j = i + 1; j < components.size(); ++j) {
                Rational m = structural_intersection(components[i].role, components[j].role, surface);
                if (m > Rational(1))
                    throw std::invalid_argument("components meeting in more than one point");
            }
    }

    int find(const CurveRole& r) const {
        for (size_t i = 0; i < components.size(); ++i)
            if (components[i].role == r) return static_cast<int>(i);
        return -1;
    }

    bool incident(int i, int j) const {
        return structural_intersection(components[i].role, components[j].role, surface) ==
               Rational(1);
    }

    // class of the full divisor E
    DivisorClass total_class() const {
        DivisorClass d = DivisorClass::zero(surface);
        for (const auto& c : components) d = d + c.coeff * role_class(c.role, surface);
        return d;
    }

    DivisorClass component_class(int i) const { return role_class(components[i].role, surface); }
};

// One point of the subscheme.  `contacts` maps component index -> contact
// order mult_P(Delta . E_i); only incident components may appear.
struct SubschemePoint {
    enum class Location { OnCurve, AtIntersection, GenericOnSurface };

    Location location = Location::GenericOnSurface;
    int comp_a = -1;  // OnCurve: the component; AtIntersection: first component
    int comp_b = -1;  // AtIntersection: second component
    int degree = 1;   // mult_P(Delta) = k_P >= 1
    std::map<int, int> contacts;

    static SubschemePoint on_curve(int comp, int degree, int contact) {
        SubschemePoint p;
        p.location = Location::OnCurve;
        p.comp_a = comp;
        p.degree = degree;
        p.contacts[comp] = contact;
        return p;
    }
    static SubschemePoint at_intersection(int a, int b, int degree, int contact_a, int contact_b) {
        SubschemePoint p;
        p.location = Location::AtIntersection;
        p.comp_a = std::min(a, b);
        p.comp_b = std::max(a, b);
        p.degree = degree;
        p.contacts[a] = contact_a;
        p.contacts[b] = contact_b;
        return p;
    }
    static SubschemePoint generic(int degree) {
        SubschemePoint p;
        p.degree = degree;
        return p;
    }

    int contact(int comp) const {
        auto it = contacts.find(comp);
        return it == contacts.end() ? 0 : it->second;
    }
};

// Structural checks for a point list against a configuration.  Enforces the
// chain model: contact <= degree, a point meets at most two components, and
// at a node one of the two contacts equals one.  Throws on violation.
inline void check_points(const WeightedConfig& cfg, const std::vector<SubschemePoint>& delta) {
    std::vector<std::pair<int, int>> used_nodes;
    for (const auto& p : delta) {
        if (p.degree < 1) throw std::invalid_argument("point degree must be >= 1");
        switch (p.location) {
            case SubschemePoint::Location::OnCurve: {
                if (p.contacts.size() != 1 || p.comp_a < 0 ||
                    p.comp_a >= static_cast<int>(cfg.components.size()))
                    throw std::invalid_argument("on-curve point must contact exactly its component");
                int l = p.contact(p.comp_a);
                if (l < 1) throw std::invalid_argument("contact with the carrying component must be >= 1");
                if (l > p.degree) throw std::invalid_argument("contact exceeds point degree");
                break;
            }
            case SubschemePoint::Location::AtIntersection: {
                if (p.contacts.size() != 2)
                    throw std::invalid_argument("node point must contact exactly two components");
                if (!cfg.incident(p.comp_a, p.comp_b))
                    throw std::invalid_argument("node point placed on non-incident components");
                int la = p.contact(p.comp_a), lb = p.contact(p.comp_b);
                if (la < 1 || lb < 1)
                    throw std::invalid_argument("node contacts must both be >= 1");
                if (la > p.degree || lb > p.degree)
                    throw std::invalid_argument("contact exceeds point degree");
                if (la != 1 && lb != 1)
                    throw std::invalid_argument("at a node one contact must equal one");
                auto key = std::make_pair(p.comp_a, p.comp_b);
                if (std::find(used_nodes.begin(), used_nodes.end(), key) != used_nodes.end())
                    throw std::invalid_argument("two subscheme points at the same node");
                used_nodes.push_back(key);
                break;
            }
            case SubschemePoint::Location::GenericOnSurface:
                if (!p.contacts.empty())
                    throw std::invalid_argument("generic point cannot contact components");
                break;
        }
    }
}

// ---------------------------------------------------------------------------
// Degree bookkeeping

inline std::int64_t total_degree(const std::vector<SubschemePoint>& delta) {
    if (delta.empty()) throw std::invalid_argument("total_degree: empty subscheme");
    std::int64_t k = 0;
    for (const auto& p : delta) k += p.degree;
    return k;
}

inline std::int64_t degree_on_curve(const WeightedConfig& cfg,
                                    const std::vector<SubschemePoint>& delta,
                                    const CurveRole& role) {
    int idx = cfg.find(role);
    if (idx < 0) throw std::invalid_argument("degree_on_curve: unknown role");
    std::int64_t d = 0;
    for (const auto& p : delta) d += p.contact(idx);
    return d;
}

// ---------------------------------------------------------------------------
// Multiplicity sequences

struct MultiplicitySequence {
    std::vector<std::int64_t> values;

    MultiplicitySequence() = default;
    MultiplicitySequence(std::initializer_list<std::int64_t> v) : values(v) { check(); }
    explicit MultiplicitySequence(std::vector<std::int64_t> v) : values(std::move(v)) { check(); }

    void check() const {
        for (auto m : values)
            if (m < 0) throw std::invalid_argument("multiplicities must be >= 0");
    }
    size_t size() const { return values.size(); }
};

// genus of the strict transform; a negative result flags an impossible
// configuration and is returned, not thrown
inline std::int64_t genus_drop(std::int64_t pa_before, const MultiplicitySequence& seq) {
    std::int64_t twice = 2 * pa_before;
    for (auto m : seq.values) twice -= m * (m - 1);
    assert(twice % 2 == 0);
    return twice / 2;
}

inline std::int64_t relative_canonical_degree(const MultiplicitySequence& seq) {
    std::int64_t s = 0;
    for (auto m : seq.values) s += m;
    return s;
}

inline std::int64_t intersection_after(std::int64_t product_before,
                                       const MultiplicitySequence& a,
                                       const MultiplicitySequence& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("intersection_after: sequence length mismatch");
    std::int64_t s = product_before;
    for (size_t i = 0; i < a.size(); ++i) s -= a.values[i] * b.values[i];
    return s;
}

// Upper bound on mult_P(D) for an effective D = s*sigma + t*l on F_n.
// Applicable bounds: t when n >= 1 and P is off the minimal section, and
// always s + coeff of the fiber through P.
inline Rational toric_mult_bounds(const DivisorClass& d, bool p_on_sigma,
                                  const Rational& coeff_fiber_through_p) {
    assert(!d.surface.is_p2());
    const Rational via_fiber = d.c0 + coeff_fiber_through_p;
    if (!p_on_sigma && d.surface.n >= 1) return std::min(d.c1, via_fiber);
    return via_fiber;
}

}  // namespace delpezzo

#endif
