// catalog.hpp -- the classified types: templates, instantiation and matching
//
// Every classified type is encoded as a template: a weight pair and
// configuration shape depending on an optional family parameter, a list of
// forced subscheme points, and "free groups" -- contact totals on a
// component whose distribution into points is not pinned down by the type.
// Free groups only occur on components whose coefficient equals a-b, so the
// chains over their points carry coefficient zero and the dual graph does
// not depend on the chosen distribution.
//
// Family labels stay symbolic ("[(2n-1,n+1),n;2(n-2),n-2]_1"); the concrete
// parameter travels alongside as n or m.  Sporadic labels are literal.
#ifndef DELPEZZO_CATALOG_HPP
#define DELPEZZO_CATALOG_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "delpezzo/triplet.hpp"

namespace delpezzo {

// ---------------------------------------------------------------------------
// Canonical form of a candidate: components ordered by role rank, then
// coefficient (descending), then a numbering-independent point signature;
// fibers and lines renumbered accordingly; points sorted.

namespace canonical {

inline int role_rank(const CurveRole& r) {
    switch (r.kind) {
        case CurveRole::Kind::MinimalSection: return 0;
        case CurveRole::Kind::SectionAtInfinity: return 1;
        case CurveRole::Kind::IrreducibleMember: return 2;
        case CurveRole::Kind::Fiber: return 3;
        case CurveRole::Kind::Line: return 3;
    }
    return 9;
}

// signature of one component's subscheme incidences, independent of the
// component numbering: (node?, contact here, degree, other rank, other coeff,
// other contact)
inline std::string comp_signature(const WeightedConfig& cfg,
                                  const std::vector<SubschemePoint>& delta, int ci) {
    std::vector<std::string> items;
    for (const auto& p : delta) {
        if (p.contact(ci) == 0) continue;
        std::ostringstream os;
        if (p.location == SubschemePoint::Location::AtIntersection) {
            const int other = p.comp_a == ci ? p.comp_b : p.comp_a;
            os << "n:" << p.contact(ci) << ":" << p.degree << ":"
               << role_rank(cfg.components[other].role) << ":"
               << cfg.components[other].coeff.str() << ":" << p.contact(other);
        } else {
            os << "c:" << p.contact(ci) << ":" << p.degree;
        }
        items.push_back(os.str());
    }
    std::sort(items.rbegin(), items.rend());
    std::string sig;
    for (auto& s : items) sig += s + "|";
    return sig;
}

}  // namespace canonical

struct CanonicalTriplet {
    TripletConfig triplet;
    std::string key;
};

inline CanonicalTriplet canonicalize(const TripletConfig& t) {
    const auto& cfg = t.config;
    const int nc = static_cast<int>(cfg.components.size());
    std::vector<std::string> sigs(nc);
    for (int i = 0; i < nc; ++i) sigs[i] = canonical::comp_signature(cfg, t.delta, i);

    std::vector<int> order(nc);
    for (int i = 0; i < nc; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const int rx = canonical::role_rank(cfg.components[x].role);
        const int ry = canonical::role_rank(cfg.components[y].role);
        if (rx != ry) return rx < ry;
        if (!(cfg.components[x].coeff == cfg.components[y].coeff))
            return cfg.components[y].coeff < cfg.components[x].coeff;
        return sigs[x] > sigs[y];
    });
    std::vector<int> pos(nc);
    for (int i = 0; i < nc; ++i) pos[order[i]] = i;

    std::vector<WeightedComponent> comps;
    int next_id = 0;
    for (int i = 0; i < nc; ++i) {
        WeightedComponent c = cfg.components[order[i]];
        if (c.role.kind == CurveRole::Kind::Fiber || c.role.kind == CurveRole::Kind::Line)
            c.role.id = next_id++;
        comps.push_back(c);
    }
    WeightedConfig ccfg(cfg.surface, comps);

    std::vector<SubschemePoint> pts;
    for (const auto& p : t.delta) {
        SubschemePoint q;
        switch (p.location) {
            case SubschemePoint::Location::OnCurve:
                q = SubschemePoint::on_curve(pos[p.comp_a], p.degree, p.contact(p.comp_a));
                break;
            case SubschemePoint::Location::AtIntersection:
                q = SubschemePoint::at_intersection(pos[p.comp_a], pos[p.comp_b], p.degree,
                                                    p.contact(p.comp_a), p.contact(p.comp_b));
                break;
            case SubschemePoint::Location::GenericOnSurface:
                q = SubschemePoint::generic(p.degree);
                break;
        }
        pts.push_back(q);
    }
    auto point_key = [](const SubschemePoint& p) {
        std::ostringstream os;
        os << static_cast<int>(p.location) << ":" << p.comp_a << ":" << p.comp_b << ":"
           << -p.degree;
        for (auto [c, l] : p.contacts) os << ":" << c << "=" << l;
        return os.str();
    };
    std::sort(pts.begin(), pts.end(),
              [&](const SubschemePoint& x, const SubschemePoint& y) {
                  return point_key(x) < point_key(y);
              });

    CanonicalTriplet out{TripletConfig(t.index, ccfg, pts), ""};
    std::ostringstream os;
    os << t.index.a << "/" << t.index.b << "@" << ccfg.surface.str() << "{";
    for (const auto& c : ccfg.components) {
        os << canonical::role_rank(c.role) << "." << c.role.str() << "*" << c.coeff.str();
        if (c.role.kind == CurveRole::Kind::IrreducibleMember)
            os << "[" << c.role.member_class.str() << "]";
        os << ",";
    }
    os << "}{";
    for (const auto& p : pts) os << point_key(p) << ";";
    os << "}";
    out.key = os.str();
    return out;
}

// ---------------------------------------------------------------------------
// Type templates

struct PointShape {
    int comp = -1;         // on-curve component, or first node component
    int other = -1;        // second node component (-1 for on-curve points)
    int degree = 0;
    int contact = 0;       // contact with `comp`
    int contact_other = 0; // contact with `other`
};

struct FreeGroup {
    int comp = -1;
    int total = 0;  // total contact order to distribute (coefficient = a-b there)
};

struct TypeShape {
    MultiIndex index;
    SurfaceModel surface;
    std::vector<WeightedComponent> comps;
    std::vector<PointShape> forced;
    std::vector<FreeGroup> free_groups;
};

struct TypeTemplate {
    std::string label;
    char param = 0;  // 0 sporadic, 'n' or 'm'
    std::function<bool(std::int64_t)> admissible;
    std::function<TypeShape(std::int64_t)> shape;
    // solves the family parameter from the weight pair; surface checked later
    std::function<std::optional<std::int64_t>(const MultiIndex&)> solve;
};

namespace shapes {

inline WeightedComponent sigma(std::int64_t c) {
    return {CurveRole::minimal_section(), Rational(c)};
}
inline WeightedComponent sinf(std::int64_t c) {
    return {CurveRole::section_at_infinity(), Rational(c)};
}
inline WeightedComponent fib(int id, std::int64_t c) {
    return {CurveRole::fiber(id), Rational(c)};
}
inline WeightedComponent lin(int id, std::int64_t c) {
    return {CurveRole::line(id), Rational(c)};
}
inline PointShape on(int comp, int k, int l) { return {comp, -1, k, l, 0}; }
inline PointShape node(int a, int b, int k, int la, int lb) { return {a, b, k, la, lb}; }

}  // namespace shapes

// Fixed-parameter types: admissible/solve wired for a single weight pair.
inline TypeTemplate sporadic(std::string label, TypeShape shape) {
    TypeTemplate t;
    t.label = std::move(label);
    t.param = 0;
    t.admissible = [](std::int64_t) { return true; };
    const MultiIndex idx = shape.index;
    t.shape = [shape](std::int64_t) { return shape; };
    t.solve = [idx](const MultiIndex& q) -> std::optional<std::int64_t> {
        if (q == idx) return 0;
        return std::nullopt;
    };
    return t;
}

inline const std::vector<TypeTemplate>& catalog() {
    using namespace shapes;
    static const std::vector<TypeTemplate> table = [] {
        std::vector<TypeTemplate> v;
        const auto P2 = SurfaceModel::p2();
        auto F = [](std::int64_t n) { return SurfaceModel::fn(static_cast<int>(n)); };

        // ----- X = P^2 -----
        v.push_back(sporadic("[(3,2),1]_0",
                             {MultiIndex(3, 2), P2, {lin(0, 1)}, {}, {{0, 4}}}));
        v.push_back(sporadic("[(11,7),5]_0",
                             {MultiIndex(11, 7), P2, {lin(0, 5)}, {on(0, 5, 4)}, {}}));
        v.push_back(sporadic("[(5,3),3]_0(1)",
                             {MultiIndex(5, 3), P2, {lin(0, 3)}, {on(0, 6, 4)}, {}}));
        v.push_back(sporadic("[(5,3),3]_0(2)",
                             {MultiIndex(5, 3), P2, {lin(0, 3)}, {on(0, 3, 2), on(0, 3, 2)}, {}}));
        v.push_back(sporadic("[(9,5),7]_{x43}",
                             {MultiIndex(9, 5), P2, {lin(0, 4), lin(1, 3)},
                              {node(0, 1, 4, 1, 4)}, {{0, 3}}}));
        v.push_back(sporadic("[(6,3),6]_{x21}",
                             {MultiIndex(6, 3), P2, {lin(0, 4), lin(1, 2)},
                              {node(0, 1, 4, 1, 4), on(0, 4, 3)}, {}}));

        // ----- X = F_2, K+L big -----
        v.push_back(sporadic("[(5,3),2;1,2]_1",
                             {MultiIndex(5, 3), F(2), {sigma(1), fib(0, 2)}, {}, {{1, 3}}}));
        v.push_back(sporadic("[(7,4),2;2,4]_1",
                             {MultiIndex(7, 4), F(2), {sigma(2), fib(0, 4)}, {on(1, 4, 3)}, {}}));
        v.push_back(sporadic("[(13,7),2;5,10]_1",
                             {MultiIndex(13, 7), F(2), {sigma(5), fib(0, 10)}, {on(1, 5, 3)}, {}}));
        v.push_back(sporadic("[(21,11),2;9,7]_1",
                             {MultiIndex(21, 11), F(2), {sigma(9), fib(0, 7)},
                              {node(0, 1, 3, 1, 3)}, {}}));

        // ----- X = F_3 sporadics -----
        v.push_back(sporadic("[(7,5),3;4,5]_1",
                             {MultiIndex(7, 5), F(3), {sigma(4), fib(0, 5)}, {on(1, 5, 2)}, {}}));
        v.push_back(sporadic("[(3,2),3;2,3]_{1inf}",
                             {MultiIndex(3, 2), F(3), {sigma(1), sinf(1)}, {}, {{1, 6}}}));
        v.push_back(sporadic("[(15,9),3;12,21]_{5inf1}",
                             {MultiIndex(15, 9), F(3), {sigma(7), sinf(5), fib(0, 6)},
                              {node(1, 2, 6, 6, 1)}, {{2, 1}}}));
        v.push_back(sporadic("[(5,3),3;4,7]_{2inf1}",
                             {MultiIndex(5, 3), F(3), {sigma(2), sinf(2), fib(0, 1)},
                              {node(1, 2, 2, 1, 2)}, {{1, 5}}}));
        v.push_back(sporadic("[(6,3),3;6,12]_{2inf11}",
                             {MultiIndex(6, 3), F(3), {sigma(4), sinf(2), fib(0, 3), fib(1, 3)},
                              {node(1, 2, 3, 3, 1), node(1, 3, 3, 3, 1)}, {{2, 1}, {3, 1}}}));
        v.push_back(sporadic("[(10,5),3;10,20]_{4inf53}",
                             {MultiIndex(10, 5), F(3), {sigma(6), sinf(4), fib(0, 5), fib(1, 3)},
                              {node(1, 2, 5, 5, 1), node(1, 3, 2, 1, 2)}, {{2, 1}}}));
        v.push_back(sporadic("[(4,2),3;4,8]_{2inf11}",
                             {MultiIndex(4, 2), F(3), {sigma(2), sinf(2), fib(0, 1), fib(1, 1)},
                              {node(1, 2, 2, 1, 2), node(1, 3, 2, 1, 2)}, {{1, 4}}}));

        // ----- families on F_n, K+L not big -----
        auto family = [&](std::string label, char param,
                          std::function<bool(std::int64_t)> adm,
                          std::function<TypeShape(std::int64_t)> shape,
                          std::function<std::optional<std::int64_t>(const MultiIndex&)> solve) {
            TypeTemplate t;
            t.label = std::move(label);
            t.param = param;
            t.admissible = std::move(adm);
            t.shape = std::move(shape);
            t.solve = std::move(solve);
            v.push_back(std::move(t));
        };
        auto solve_ab = [](std::int64_t ca, std::int64_t c0, std::int64_t cb, std::int64_t d0) {
            // a = ca*p + c0, b = cb*p + d0
            return [=](const MultiIndex& q) -> std::optional<std::int64_t> {
                if ((q.a - c0) % ca != 0) return std::nullopt;
                const std::int64_t p = (q.a - c0) / ca;
                if (q.b != cb * p + d0) return std::nullopt;
                return p;
            };
        };

        family("[(2n-1,n+1),n;2(n-2),n-2]_1", 'n',
               [](std::int64_t n) { return n >= 3 && (n - 2) % 3 != 0; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 1, n + 1), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, n - 2)}, {}, {{1, 2}}};
               },
               solve_ab(2, -1, 1, 1));
        family("[(2m+1,m+1),3m+2;2m,m]_1", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(2 * m + 1, m + 1), SurfaceModel::fn(static_cast<int>(3 * m + 2)),
                           {sigma(2 * m), fib(0, m)}, {}, {{1, 2}}};
               },
               solve_ab(2, 1, 1, 1));
        family("[(4n-3,2n+1),n;4(n-2),3(n-2)]_1", 'n',
               [](std::int64_t n) { return n >= 3 && (n - 2) % 5 != 0; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(4 * n - 3, 2 * n + 1), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(4 * (n - 2)), fib(0, 3 * (n - 2))}, {on(1, 3, 2)}, {}};
               },
               solve_ab(4, -3, 2, 1));
        family("[(4m+1,2m+1),5m+2;4m,3m]_1", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(4 * m + 1, 2 * m + 1), SurfaceModel::fn(static_cast<int>(5 * m + 2)),
                           {sigma(4 * m), fib(0, 3 * m)}, {on(1, 3, 2)}, {}};
               },
               solve_ab(4, 1, 2, 1));
        family("[(2n-2,n),n;2(n-2),2(n-2)]_{11}", 'n',
               [](std::int64_t n) { return n >= 3 && n % 2 == 1; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 2, n), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, n - 2), fib(1, n - 2)},
                           {}, {{1, 2}, {2, 2}}};
               },
               solve_ab(2, -2, 1, 0));
        family("[(2m+1,m+1),2m+2;2m,2m]_{11}", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(2 * m + 1, m + 1), SurfaceModel::fn(static_cast<int>(2 * m + 2)),
                           {sigma(2 * m), fib(0, m), fib(1, m)}, {}, {{1, 2}, {2, 2}}};
               },
               solve_ab(2, 1, 1, 1));
        family("[(2n-2,n),n;2(n-2),2(n-2)]_1(1)", 'n',
               [](std::int64_t n) { return n >= 3 && n % 2 == 1; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 2, n), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, 2 * (n - 2))}, {on(1, 4, 2)}, {}};
               },
               solve_ab(2, -2, 1, 0));
        family("[(2m+1,m+1),2m+2;2m,2m]_1(1)", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(2 * m + 1, m + 1), SurfaceModel::fn(static_cast<int>(2 * m + 2)),
                           {sigma(2 * m), fib(0, 2 * m)}, {on(1, 4, 2)}, {}};
               },
               solve_ab(2, 1, 1, 1));
        family("[(2n-2,n),n;2(n-2),2(n-2)]_1(2)", 'n',
               [](std::int64_t n) { return n >= 3 && n % 2 == 1; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 2, n), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, 2 * (n - 2))},
                           {on(1, 2, 1), on(1, 2, 1)}, {}};
               },
               solve_ab(2, -2, 1, 0));
        family("[(2m+1,m+1),2m+2;2m,2m]_1(2)", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(2 * m + 1, m + 1), SurfaceModel::fn(static_cast<int>(2 * m + 2)),
                           {sigma(2 * m), fib(0, 2 * m)}, {on(1, 2, 1), on(1, 2, 1)}, {}};
               },
               solve_ab(2, 1, 1, 1));
        family("[(4n-5,2n-1),n;4(n-2),5(n-2)]_{32}", 'n',
               [](std::int64_t n) { return n >= 3 && (n - 2) % 3 != 0; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(4 * n - 5, 2 * n - 1), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(4 * (n - 2)), fib(0, 3 * (n - 2)), fib(1, 2 * (n - 2))},
                           {on(1, 3, 2)}, {{2, 2}}};
               },
               solve_ab(4, -5, 2, -1));
        family("[(4m+1,2m+1),3m+2;4m,5m]_{32}", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(4 * m + 1, 2 * m + 1), SurfaceModel::fn(static_cast<int>(3 * m + 2)),
                           {sigma(4 * m), fib(0, 3 * m), fib(1, 2 * m)},
                           {on(1, 3, 2)}, {{2, 2}}};
               },
               solve_ab(4, 1, 2, 1));
        family("[(2n-3,n-1),n;2(n-2),3(n-2)]_{111}", 'n',
               [](std::int64_t n) { return n >= 3; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 3, n - 1), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, n - 2), fib(1, n - 2), fib(2, n - 2)},
                           {}, {{1, 2}, {2, 2}, {3, 2}}};
               },
               solve_ab(2, -3, 1, -1));
        family("[(2n-3,n-1),n;2(n-2),3(n-2)]_{21}(1)", 'n',
               [](std::int64_t n) { return n >= 3; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 3, n - 1), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, 2 * (n - 2)), fib(1, n - 2)},
                           {on(1, 4, 2)}, {{2, 2}}};
               },
               solve_ab(2, -3, 1, -1));
        family("[(2n-3,n-1),n;2(n-2),3(n-2)]_{21}(2)", 'n',
               [](std::int64_t n) { return n >= 3; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(2 * n - 3, n - 1), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(2 * (n - 2)), fib(0, 2 * (n - 2)), fib(1, n - 2)},
                           {on(1, 2, 1), on(1, 2, 1)}, {{2, 2}}};
               },
               solve_ab(2, -3, 1, -1));
        family("[(4n-6,2n-2),n;4(n-2),6(n-2)]_{11}", 'n',
               [](std::int64_t n) { return n >= 3 && n % 2 == 1; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(4 * n - 6, 2 * n - 2), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(4 * (n - 2)), fib(0, 3 * (n - 2)), fib(1, 3 * (n - 2))},
                           {on(1, 3, 2), on(2, 3, 2)}, {}};
               },
               solve_ab(4, -6, 2, -2));
        family("[(4m+1,2m+1),2m+2;4m,6m]_{11}", 'm',
               [](std::int64_t m) { return m >= 1; },
               [](std::int64_t m) -> TypeShape {
                   return {MultiIndex(4 * m + 1, 2 * m + 1), SurfaceModel::fn(static_cast<int>(2 * m + 2)),
                           {sigma(4 * m), fib(0, 3 * m), fib(1, 3 * m)},
                           {on(1, 3, 2), on(2, 3, 2)}, {}};
               },
               solve_ab(4, 1, 2, 1));
        family("[(4n-7,2n-3),n;4(n-2),7(n-2)]_{322}", 'n',
               [](std::int64_t n) { return n >= 3; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(4 * n - 7, 2 * n - 3), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(4 * (n - 2)), fib(0, 3 * (n - 2)), fib(1, 2 * (n - 2)),
                            fib(2, 2 * (n - 2))},
                           {on(1, 3, 2)}, {{2, 2}, {3, 2}}};
               },
               solve_ab(4, -7, 2, -3));
        family("[(4n-7,2n-3),n;4(n-2),7(n-2)]_{43}(1)", 'n',
               [](std::int64_t n) { return n >= 3; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(4 * n - 7, 2 * n - 3), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(4 * (n - 2)), fib(0, 4 * (n - 2)), fib(1, 3 * (n - 2))},
                           {on(1, 4, 2), on(2, 3, 2)}, {}};
               },
               solve_ab(4, -7, 2, -3));
        family("[(4n-7,2n-3),n;4(n-2),7(n-2)]_{43}(2)", 'n',
               [](std::int64_t n) { return n >= 3; },
               [](std::int64_t n) -> TypeShape {
                   return {MultiIndex(4 * n - 7, 2 * n - 3), SurfaceModel::fn(static_cast<int>(n)),
                           {sigma(4 * (n - 2)), fib(0, 4 * (n - 2)), fib(1, 3 * (n - 2))},
                           {on(1, 2, 1), on(1, 2, 1), on(2, 3, 2)}, {}};
               },
               solve_ab(4, -7, 2, -3));

        return v;
    }();
    return table;
}

// ---------------------------------------------------------------------------
// Instantiation

inline std::vector<std::vector<int>> partitions_desc(int total) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxpart) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(total, total);
    return out;
}

// canonical representative: one point per free group
inline TripletConfig realize(const TypeShape& shape) {
    WeightedConfig cfg(shape.surface, shape.comps);
    std::vector<SubschemePoint> pts;
    for (const auto& f : shape.forced) {
        if (f.other < 0)
            pts.push_back(SubschemePoint::on_curve(f.comp, f.degree, f.contact));
        else
            pts.push_back(SubschemePoint::at_intersection(f.comp, f.other, f.degree, f.contact,
                                                          f.contact_other));
    }
    for (const auto& g : shape.free_groups)
        pts.push_back(SubschemePoint::on_curve(g.comp, g.total, g.total));
    return TripletConfig(shape.index, cfg, pts);
}

// every distribution of the free groups into points (partitions of the totals)
inline std::vector<TripletConfig> realize_all(const TypeShape& shape) {
    WeightedConfig cfg(shape.surface, shape.comps);
    std::vector<SubschemePoint> base;
    for (const auto& f : shape.forced) {
        if (f.other < 0)
            base.push_back(SubschemePoint::on_curve(f.comp, f.degree, f.contact));
        else
            base.push_back(SubschemePoint::at_intersection(f.comp, f.other, f.degree, f.contact,
                                                           f.contact_other));
    }
    std::vector<TripletConfig> out;
    std::function<void(size_t, std::vector<SubschemePoint>&)> rec =
        [&](size_t gi, std::vector<SubschemePoint>& pts) {
            if (gi == shape.free_groups.size()) {
                out.emplace_back(shape.index, cfg, pts);
                return;
            }
            const auto& g = shape.free_groups[gi];
            for (const auto& parts : partitions_desc(g.total)) {
                const size_t mark = pts.size();
                for (int p : parts) pts.push_back(SubschemePoint::on_curve(g.comp, p, p));
                rec(gi + 1, pts);
                pts.resize(mark);
            }
        };
    std::vector<SubschemePoint> pts = base;
    rec(0, pts);
    return out;
}

// ---------------------------------------------------------------------------
// Matching

struct Classified {
    int template_id = -1;
    std::string label;
    char param_kind = 0;
    std::int64_t param = 0;
};

namespace detail {

inline bool points_equal(const SubschemePoint& p, const PointShape& f) {
    if (f.other < 0)
        return p.location == SubschemePoint::Location::OnCurve && p.comp_a == f.comp &&
               p.degree == f.degree && p.contact(f.comp) == f.contact;
    const int a = std::min(f.comp, f.other), b = std::max(f.comp, f.other);
    return p.location == SubschemePoint::Location::AtIntersection && p.comp_a == a &&
           p.comp_b == b && p.degree == f.degree && p.contact(f.comp) == f.contact &&
           p.contact(f.other) == f.contact_other;
}

inline bool matches_shape(const TripletConfig& cand, const TypeShape& shape) {
    if (!(cand.index == shape.index)) return false;
    if (!(cand.config.surface == shape.surface)) return false;
    // the shape's components, canonicalized against its forced/free points,
    // must agree position by position with the canonical candidate
    TripletConfig model = realize(shape);
    CanonicalTriplet cm = canonicalize(model);
    if (cm.triplet.config.components.size() != cand.config.components.size()) return false;
    for (size_t i = 0; i < cand.config.components.size(); ++i) {
        const auto& x = cand.config.components[i];
        const auto& y = cm.triplet.config.components[i];
        if (!(x.role == y.role) || !(x.coeff == y.coeff)) return false;
    }
    // map shape component positions to canonical positions via the realize()
    // canonicalization (stable because equal-coefficient groups carry
    // symmetric point specs in every template)
    // forced points must appear verbatim; the rest must fill the free groups
    std::vector<int> shape_to_canon(shape.comps.size(), -1);
    {
        // recompute the permutation used by canonicalize(model)
        const auto& cfg = model.config;
        const int nc = static_cast<int>(cfg.components.size());
        std::vector<std::string> sigs(nc);
        for (int i = 0; i < nc; ++i)
            sigs[i] = canonical::comp_signature(cfg, model.delta, i);
        std::vector<int> order(nc);
        for (int i = 0; i < nc; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            const int rx = canonical::role_rank(cfg.components[x].role);
            const int ry = canonical::role_rank(cfg.components[y].role);
            if (rx != ry) return rx < ry;
            if (!(cfg.components[x].coeff == cfg.components[y].coeff))
                return cfg.components[y].coeff < cfg.components[x].coeff;
            return sigs[x] > sigs[y];
        });
        for (int i = 0; i < nc; ++i) shape_to_canon[order[i]] = i;
    }

    std::vector<bool> used(cand.delta.size(), false);
    for (const auto& f0 : shape.forced) {
        PointShape f = f0;
        f.comp = shape_to_canon[f.comp];
        if (f.other >= 0) f.other = shape_to_canon[f.other];
        bool found = false;
        for (size_t i = 0; i < cand.delta.size(); ++i) {
            if (used[i]) continue;
            if (points_equal(cand.delta[i], f)) {
                used[i] = true;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    std::vector<int> remaining(cand.config.components.size(), 0);
    for (size_t i = 0; i < cand.delta.size(); ++i) {
        if (used[i]) continue;
        const auto& p = cand.delta[i];
        if (p.location != SubschemePoint::Location::OnCurve) return false;
        if (p.contact(p.comp_a) != p.degree) return false;  // free points have l = k
        remaining[p.comp_a] += p.degree;
    }
    std::vector<int> expected(cand.config.components.size(), 0);
    for (const auto& g : shape.free_groups) expected[shape_to_canon[g.comp]] += g.total;
    return remaining == expected;
}

}  // namespace detail

// Matches a validated triplet against the catalog; the input need not be in
// canonical form.
inline std::optional<Classified> classify_triplet(const TripletConfig& t) {
    const CanonicalTriplet c = canonicalize(t);
    const auto& table = catalog();
    for (size_t i = 0; i < table.size(); ++i) {
        const auto& tpl = table[i];
        auto p = tpl.solve(t.index);
        if (!p || !tpl.admissible(*p)) continue;
        TypeShape shape = tpl.shape(*p);
        if (!(shape.surface == t.config.surface)) continue;
        if (detail::matches_shape(c.triplet, shape))
            return Classified{static_cast<int>(i), tpl.label, tpl.param, *p};
    }
    return std::nullopt;
}

struct UnclassifiedTriplet : std::runtime_error {
    explicit UnclassifiedTriplet(const std::string& key)
        : std::runtime_error("validated triplet matches no classified type: " + key) {}
};

// throwing form: a validated normalized triplet outside the catalog would
// contradict the classification and must surface loudly
inline Classified label_type(const TripletConfig& t) {
    auto c = classify_triplet(t);
    if (!c) throw UnclassifiedTriplet(canonicalize(t).key);
    return *c;
}

inline const TypeTemplate* template_by_label(const std::string& label) {
    for (const auto& t : catalog())
        if (t.label == label) return &t;
    return nullptr;
}

// ---------------------------------------------------------------------------
// The tabulated dual graphs.  Gcd-reduced sibling families share a row with
// their parent; the row's graph is rendered from the parent at the smallest
// admissible parameter.

struct AtlasRow {
    int table = 1;
    std::vector<std::string> labels;  // parent first, sibling second when present
    std::int64_t rep_param = 0;
};

inline const std::vector<AtlasRow>& atlas_rows() {
    static const std::vector<AtlasRow> rows = {
        {1, {"[(3,2),1]_0"}, 0},
        {1, {"[(11,7),5]_0"}, 0},
        {1, {"[(5,3),3]_0(1)"}, 0},
        {1, {"[(5,3),3]_0(2)"}, 0},
        {1, {"[(9,5),7]_{x43}"}, 0},
        {1, {"[(5,3),2;1,2]_1"}, 0},
        {1, {"[(7,4),2;2,4]_1"}, 0},
        {1, {"[(13,7),2;5,10]_1"}, 0},
        {1, {"[(21,11),2;9,7]_1"}, 0},
        {1, {"[(2n-1,n+1),n;2(n-2),n-2]_1", "[(2m+1,m+1),3m+2;2m,m]_1"}, 3},
        {1, {"[(4n-3,2n+1),n;4(n-2),3(n-2)]_1", "[(4m+1,2m+1),5m+2;4m,3m]_1"}, 3},
        {1, {"[(2n-2,n),n;2(n-2),2(n-2)]_{11}", "[(2m+1,m+1),2m+2;2m,2m]_{11}"}, 3},
        {1, {"[(2n-2,n),n;2(n-2),2(n-2)]_1(1)", "[(2m+1,m+1),2m+2;2m,2m]_1(1)"}, 3},
        {1, {"[(2n-2,n),n;2(n-2),2(n-2)]_1(2)", "[(2m+1,m+1),2m+2;2m,2m]_1(2)"}, 3},
        {1, {"[(4n-5,2n-1),n;4(n-2),5(n-2)]_{32}", "[(4m+1,2m+1),3m+2;4m,5m]_{32}"}, 3},
        {1, {"[(7,5),3;4,5]_1"}, 0},
        {1, {"[(2n-3,n-1),n;2(n-2),3(n-2)]_{111}"}, 3},
        {1, {"[(2n-3,n-1),n;2(n-2),3(n-2)]_{21}(1)"}, 3},
        {1, {"[(2n-3,n-1),n;2(n-2),3(n-2)]_{21}(2)"}, 3},
        {1, {"[(4n-6,2n-2),n;4(n-2),6(n-2)]_{11}", "[(4m+1,2m+1),2m+2;4m,6m]_{11}"}, 3},
        {1, {"[(3,2),3;2,3]_{1inf}"}, 0},
        {1, {"[(4n-7,2n-3),n;4(n-2),7(n-2)]_{322}"}, 3},
        {1, {"[(4n-7,2n-3),n;4(n-2),7(n-2)]_{43}(1)"}, 3},
        {1, {"[(4n-7,2n-3),n;4(n-2),7(n-2)]_{43}(2)"}, 3},
        {1, {"[(15,9),3;12,21]_{5inf1}"}, 0},
        {1, {"[(5,3),3;4,7]_{2inf1}"}, 0},
        {2, {"[(6,3),6]_{x21}"}, 0},
        {2, {"[(6,3),3;6,12]_{2inf11}"}, 0},
        {2, {"[(10,5),3;10,20]_{4inf53}"}, 0},
        {2, {"[(4,2),3;4,8]_{2inf11}"}, 0},
    };
    return rows;
}

}  // namespace delpezzo

#endif
