// triplet.hpp -- candidate triplets (X, E, Delta) and their validation
//
// A candidate consists of a weight pair (a, b), a weighted configuration E
// and a subscheme Delta.  The validator runs the full list of checkable
// conditions; it reports every failure, not just the first, because the
// enumerator uses the reports as diagnostics.
#ifndef DELPEZZO_TRIPLET_HPP
#define DELPEZZO_TRIPLET_HPP

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "delpezzo/elimination.hpp"
#include "delpezzo/geometry.hpp"

namespace delpezzo {

struct MultiIndex {
    std::int64_t a = 2;
    std::int64_t b = 1;

    MultiIndex() = default;
    MultiIndex(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
        if (a <= 0 || b <= 0) throw std::invalid_argument("weights must be positive");
        if (2 * b < a || b >= a)
            throw std::invalid_argument("weight ratio must lie in [1/2, 1)");
    }

    Rational ratio() const { return Rational(b, a); }
    std::int64_t s() const { return a - b; }  // the relative multiplier a - b

    friend bool operator==(const MultiIndex& x, const MultiIndex& y) {
        return x.a == y.a && x.b == y.b;
    }
};

struct TripletConfig {
    MultiIndex index;
    WeightedConfig config;
    std::vector<SubschemePoint> delta;

    TripletConfig() = default;
    TripletConfig(MultiIndex idx, WeightedConfig cfg, std::vector<SubschemePoint> pts)
        : index(idx), config(std::move(cfg)), delta(std::move(pts)) {
        check_points(config, delta);
    }
};

// L = (-a*K_X - E) / b when that class is integral.
inline std::optional<DivisorClass> fundamental_divisor(const MultiIndex& index,
                                                       const WeightedConfig& config) {
    const DivisorClass target =
        Rational(-index.a) * canonical_class(config.surface) - config.total_class();
    const DivisorClass L = Rational(1, index.b) * target;
    if (!L.is_integral()) return std::nullopt;
    return L;
}

inline bool nef(const DivisorClass& d) {
    if (d.surface.is_p2()) return d.c0 >= Rational(0);
    return intersect(d, DivisorClass::fiber(d.surface)) >= Rational(0) &&
           intersect(d, DivisorClass::sigma(d.surface)) >= Rational(0);
}

// convention: a nef class with square zero counts as non-big
inline bool nef_and_big(const DivisorClass& d) {
    return nef(d) && intersect(d, d) > Rational(0);
}

struct ConditionResult {
    std::string id;
    bool ok = true;
    std::string rule;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConditionResult> conditions;
    std::optional<DivisorClass> fundamental;
    bool valid = true;

    void add(std::string id, bool ok, std::string rule, std::string detail = "") {
        valid = valid && ok;
        conditions.push_back({std::move(id), ok, std::move(rule), std::move(detail)});
    }
    const ConditionResult* find(const std::string& id) const {
        for (const auto& c : conditions)
            if (c.id == id) return &c;
        return nullptr;
    }
};

namespace detail {

// sections other than the minimal one: the section at infinity and any
// irreducible member whose class meets a fiber once
inline bool is_section_apart_from_sigma(const CurveRole& r, const SurfaceModel& s) {
    if (r.kind == CurveRole::Kind::SectionAtInfinity) return true;
    if (r.kind == CurveRole::Kind::IrreducibleMember)
        return intersect(r.member_class, DivisorClass::fiber(s)) == Rational(1);
    return false;
}

}  // namespace detail

inline ValidationReport validate(const TripletConfig& t) {
    ValidationReport rep;
    const auto& cfg = t.config;
    const auto& delta = t.delta;
    const std::int64_t a = t.index.a;
    const Rational s(t.index.s());

    // C1: the subscheme is nonempty of degree at least two
    std::int64_t k = 0;
    for (const auto& p : delta) k += p.degree;
    rep.add("C1", k >= 2, "deg(Delta) >= 2", "deg = " + std::to_string(k));

    // C2: E is nonzero with integer coefficients in 1..a-1
    bool coeffs_ok = !cfg.components.empty();
    std::string c2detail;
    for (const auto& c : cfg.components) {
        if (!c.coeff.is_integer() || c.coeff < Rational(1) || c.coeff > Rational(a - 1)) {
            coeffs_ok = false;
            c2detail = "coefficient " + c.coeff.str() + " outside 1.." + std::to_string(a - 1);
        }
    }
    rep.add("C2", coeffs_ok, "coeff(E) is a subset of {1,...,a-1}", c2detail);

    // C3: the fundamental divisor exists
    rep.fundamental = fundamental_divisor(t.index, cfg);
    rep.add("C3", rep.fundamental.has_value(),
            "(-a*K - E)/b must be an integral class",
            rep.fundamental ? rep.fundamental->str() : "no integral solution");
    if (!rep.fundamental) {
        rep.add("C4", false, "K+L nef and (K+L.L) > 0", "not evaluated: no fundamental divisor");
        rep.add("C5", false, "(L.E_i) = deg(Delta . E_i) per component",
                "not evaluated: no fundamental divisor");
        rep.add("C6", false, "per-point chain balance and coefficient bound",
                "not evaluated: no fundamental divisor");
        rep.add("C7", false, "fibration-adapted section conditions",
                "not evaluated: no fundamental divisor");
        rep.add("C8", false, "E_M effective with coefficients in {1,...,a-1}",
                "not evaluated: no fundamental divisor");
    } else {
        const DivisorClass L = *rep.fundamental;
        const DivisorClass KL = canonical_class(cfg.surface) + L;

        // C4: K+L nef with positive degree against L
        const bool c4 = nef(KL) && intersect(KL, L) > Rational(0);
        rep.add("C4", c4, "K+L nef and (K+L.L) > 0",
                "K+L = " + KL.str() + ", (K+L.L) = " + intersect(KL, L).str());

        // C5: contact totals match intersection numbers
        bool c5 = true;
        std::string c5detail;
        for (size_t i = 0; i < cfg.components.size(); ++i) {
            std::int64_t d = 0;
            for (const auto& p : delta) d += p.contact(static_cast<int>(i));
            const Rational want = intersect(L, cfg.component_class(static_cast<int>(i)));
            if (want != Rational(d)) {
                c5 = false;
                c5detail = cfg.components[i].role.str() + ": (L.E_i) = " + want.str() +
                           " but deg(Delta . E_i) = " + std::to_string(d);
            }
        }
        rep.add("C5", c5, "(L.E_i) = deg(Delta . E_i) per component", c5detail);

        // C6: per-point balance and the strict bound on residual length
        bool c6 = true;
        std::string c6detail;
        for (const auto& p : delta) {
            Rational lhs(0);
            int deepest = 0;
            switch (p.location) {
                case SubschemePoint::Location::OnCurve: {
                    int l = p.contact(p.comp_a);
                    lhs = cfg.components[p.comp_a].coeff * Rational(l);
                    deepest = l;
                    break;
                }
                case SubschemePoint::Location::AtIntersection: {
                    int la = p.contact(p.comp_a), lb = p.contact(p.comp_b);
                    lhs = cfg.components[p.comp_a].coeff * Rational(la) +
                          cfg.components[p.comp_b].coeff * Rational(lb);
                    deepest = (la == 1) ? lb : la;
                    break;
                }
                case SubschemePoint::Location::GenericOnSurface:
                    deepest = 0;
                    break;
            }
            const Rational rhs = s * Rational(p.degree);
            if (lhs != rhs) {
                c6 = false;
                c6detail = "balance " + lhs.str() + " != (a-b)*k = " + rhs.str();
            }
            if (s * Rational(p.degree - deepest) >= Rational(a)) {
                c6 = false;
                c6detail = "(a-b)(k-l) = " + (s * Rational(p.degree - deepest)).str() +
                           " >= a = " + std::to_string(a);
            }
        }
        rep.add("C6", c6, "m*l = (a-b)*k at every point, with (a-b)(k-l) < a", c6detail);

        // C7: when K+L is not big on a Hirzebruch surface, the subscheme
        // avoids the minimal section and other sections in E are constrained
        bool c7 = true;
        std::string c7detail;
        if (!cfg.surface.is_p2() && nef(KL) && intersect(KL, KL) == Rational(0)) {
            if (cfg.surface.n < 1) {
                c7 = false;
                c7detail = "degenerate fibration: degree zero surface";
            }
            int sigma_idx = cfg.find(CurveRole::minimal_section());
            for (const auto& p : delta)
                if ((sigma_idx >= 0 && p.contact(sigma_idx) > 0)) {
                    c7 = false;
                    c7detail = "subscheme meets the minimal section";
                }
            const Rational coeff_sigma =
                sigma_idx >= 0 ? cfg.components[sigma_idx].coeff : Rational(0);
            for (size_t i = 0; i < cfg.components.size(); ++i) {
                if (!detail::is_section_apart_from_sigma(cfg.components[i].role, cfg.surface))
                    continue;
                std::int64_t d = 0;
                for (const auto& p : delta) d += p.contact(static_cast<int>(i));
                const Rational bound =
                    Rational(cfg.surface.n) +
                    intersect(cfg.component_class(static_cast<int>(i)),
                              cfg.component_class(static_cast<int>(i)));
                if (Rational(d) > bound) {
                    c7 = false;
                    c7detail = cfg.components[i].role.str() + ": deg(Delta . D) = " +
                               std::to_string(d) + " > n + (D^2) = " + bound.str();
                } else if (Rational(d) == bound && coeff_sigma < cfg.components[i].coeff) {
                    c7 = false;
                    c7detail = cfg.components[i].role.str() +
                               ": tie case needs coeff(sigma) >= coeff(D)";
                }
            }
        }
        rep.add("C7", c7, "non-big case: Delta avoids sigma; n+(D^2) >= deg(Delta . D) for sections D",
                c7detail);

        // C8: the elimination produces an effective E_M within coefficient range
        auto elim = eliminate(cfg, delta, s, L);
        bool c8 = elim.ok();
        std::string c8detail = elim.ok() ? "" : elim.error.detail;
        if (elim.ok()) {
            for (const auto& c : elim.model->curves) {
                if (!c.em_coeff.is_integer() ||
                    (c.em_coeff > Rational(0) && c.em_coeff > Rational(a - 1))) {
                    c8 = false;
                    c8detail = c.label + " carries coefficient " + c.em_coeff.str();
                }
            }
        }
        rep.add("C8", c8, "E_M effective with coefficients in {1,...,a-1}", c8detail);
    }

    // C9: E meets every (-1)-curve of X nonpositively; the only case with a
    // (-1)-curve is F_1, where it is the minimal section
    bool c9 = true;
    std::string c9detail;
    if (!cfg.surface.is_p2() && cfg.surface.n == 1) {
        const Rational v = intersect(cfg.total_class(), DivisorClass::sigma(cfg.surface));
        if (v > Rational(0)) {
            c9 = false;
            c9detail = "(E.sigma) = " + v.str();
        }
    }
    rep.add("C9", c9, "(E.gamma) <= 0 for every (-1)-curve gamma", c9detail);

    return rep;
}

// True when no common divisor d >= 2 of a and b divides every coefficient.
inline bool is_normalized(const TripletConfig& t) {
    const std::int64_t g = std::gcd(t.index.a, t.index.b);
    for (std::int64_t d = 2; d <= g; ++d) {
        if (g % d != 0) continue;
        bool all_divisible = true;
        for (const auto& c : t.config.components) {
            if (!c.coeff.is_integer()) throw std::invalid_argument("coefficients must be integers");
            if (c.coeff.as_integer() % d != 0) all_divisible = false;
        }
        if (all_divisible) return false;
    }
    return true;
}

// Scale factor between the weight pair and its reduced form: a = m * a0 with
// a0 = a / gcd(a, b).  For the classified types it always lies in {1,2,3,5}.
inline std::int64_t cartier_multiplier(const TripletConfig& t) {
    return std::gcd(t.index.a, t.index.b);
}

}  // namespace delpezzo

#endif
