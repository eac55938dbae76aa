// elimination.hpp -- the blow-up engine
//
// Eliminating a subscheme point of degree k produces a straight chain
// Gamma_1 .. Gamma_k of rational curves: (-2)-curves except for the terminal
// (-1)-curve, with relative canonical coefficients 1..k.  The coefficients of
// E_M = phi^*E - s*K_{M/X} along the chain admit closed forms depending on
// how many components of E pass through the point:
//
//   one component, coefficient m, contact l:
//     coeff(Gamma_i) = i*(m - s)        for i <= l
//                    = m*l - s*i        for l < i <= k
//     the strict transform attaches to Gamma_l
//
//   two components m_1, m_2 meeting transversally, contacts 1 and l_2:
//     coeff(Gamma_i) = i*(m_2 - s) + m_1        for i <= l_2
//                    = m_1 + l_2*m_2 - i*s      for l_2 < i <= k
//     the first component attaches to Gamma_1, the second to Gamma_{l_2}
//
//   no component through the point:
//     coeff(Gamma_i) = -s*i, dead on arrival whenever s > 0
//
// Self-intersections of strict transforms drop by the total contact order,
// and L_M = phi^*L - K_{M/X} meets exactly the terminal chain curves.
#ifndef DELPEZZO_ELIMINATION_HPP
#define DELPEZZO_ELIMINATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "delpezzo/geometry.hpp"
#include "delpezzo/graph.hpp"

namespace delpezzo {

struct ExceptionalChain {
    int point_index = -1;
    int length = 0;                    // = k_P
    std::vector<Rational> em_coeffs;   // coefficient of E_M on Gamma_1..Gamma_k
    std::vector<int> kmx_coeffs;       // coefficient of K_{M/X}: 1..k
    // self-intersections are -2,...,-2,-1 by construction
    std::int64_t self_int(int pos1) const { return pos1 == length ? -1 : -2; }
};

struct CurveOnM {
    enum class Type { StrictTransform, ChainCurve };

    Type type = Type::ChainCurve;
    int comp_index = -1;   // strict transforms
    int point_index = -1;  // chain curves
    int chain_pos = 0;     // 1-based position in the chain
    std::string label;
    std::int64_t self_int = 0;
    Rational em_coeff;
    Rational lm_intersection;  // (L_M . C)
    Rational km_intersection;  // (-K_M . C), kept for the nefness checks
};

struct ResolutionModel {
    SurfaceModel surface;
    WeightedConfig config;
    std::vector<SubschemePoint> delta;
    Rational s;
    DivisorClass fundamental;  // L on X

    std::vector<ExceptionalChain> chains;
    std::vector<CurveOnM> curves;
    std::vector<std::pair<int, int>> edges;  // adjacency between curves on M

    int strict_index(int comp) const {
        for (size_t i = 0; i < curves.size(); ++i)
            if (curves[i].type == CurveOnM::Type::StrictTransform && curves[i].comp_index == comp)
                return static_cast<int>(i);
        return -1;
    }
    int chain_index(int point, int pos1) const {
        for (size_t i = 0; i < curves.size(); ++i)
            if (curves[i].type == CurveOnM::Type::ChainCurve && curves[i].point_index == point &&
                curves[i].chain_pos == pos1)
                return static_cast<int>(i);
        return -1;
    }
};

struct EliminationError {
    enum class Kind { None, NegativeCoefficient, PointOffAllComponents, ContactExceedsDegree, EmptySubscheme, BadStructure };
    Kind kind = Kind::None;
    int point_index = -1;
    std::string detail;
};

struct EliminationResult {
    std::optional<ResolutionModel> model;
    EliminationError error;
    bool ok() const { return model.has_value(); }
};

namespace detail {

inline EliminationResult fail(EliminationError::Kind k, int point, std::string msg) {
    EliminationResult r;
    r.error = {k, point, std::move(msg)};
    return r;
}

}  // namespace detail

// Computes the full resolution data of the elimination of `delta` for
// E = `config` weighted by its coefficients, relative multiplier `s` and
// fundamental class L.  Infeasible configurations (negative E_M
// coefficients) are reported as errors, not represented.
inline EliminationResult eliminate(const WeightedConfig& config,
                                   const std::vector<SubschemePoint>& delta, const Rational& s,
                                   const DivisorClass& L) {
    if (delta.empty())
        return detail::fail(EliminationError::Kind::EmptySubscheme, -1, "subscheme must be nonempty");
    try {
        check_points(config, delta);
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        auto kind = what.find("exceeds") != std::string::npos
                        ? EliminationError::Kind::ContactExceedsDegree
                        : EliminationError::Kind::BadStructure;
        return detail::fail(kind, -1, what);
    }

    ResolutionModel m;
    m.surface = config.surface;
    m.config = config;
    m.delta = delta;
    m.s = s;
    m.fundamental = L;

    const int ncomp = static_cast<int>(config.components.size());

    // strict transforms: self-intersection drops by the total contact order
    std::vector<std::int64_t> contact_total(ncomp, 0);
    for (const auto& p : delta)
        for (auto [c, l] : p.contacts) contact_total[c] += l;

    for (int c = 0; c < ncomp; ++c) {
        CurveOnM cur;
        cur.type = CurveOnM::Type::StrictTransform;
        cur.comp_index = c;
        cur.label = config.components[c].role.str() + "_M";
        Rational self = intersect(config.component_class(c), config.component_class(c));
        cur.self_int = self.as_integer() - contact_total[c];
        cur.em_coeff = config.components[c].coeff;
        // (L_M . C_M) = (L . C) - deg(Delta . C)
        cur.lm_intersection =
            intersect(L, config.component_class(c)) - Rational(contact_total[c]);
        // (-K_M . C_M) = (-K_X . C) - deg(Delta . C) for nonsingular components
        cur.km_intersection =
            intersect(-canonical_class(config.surface), config.component_class(c)) -
            Rational(contact_total[c]);
        m.curves.push_back(cur);
    }

    // chains, one per point
    for (size_t pi = 0; pi < delta.size(); ++pi) {
        const auto& p = delta[pi];
        const int k = p.degree;
        ExceptionalChain chain;
        chain.point_index = static_cast<int>(pi);
        chain.length = k;
        chain.em_coeffs.resize(k);
        chain.kmx_coeffs.resize(k);
        for (int i = 1; i <= k; ++i) chain.kmx_coeffs[i - 1] = i;

        int attach_first = -1, attach_first_pos = 0;   // component attached near Gamma_1
        int attach_deep = -1, attach_deep_pos = 0;     // component attached at Gamma_l

        switch (p.location) {
            case SubschemePoint::Location::GenericOnSurface: {
                if (s > Rational(0))
                    return detail::fail(EliminationError::Kind::PointOffAllComponents,
                                        static_cast<int>(pi),
                                        "point off all components forces negative coefficients");
                for (int i = 1; i <= k; ++i) chain.em_coeffs[i - 1] = -s * Rational(i);
                break;
            }
            case SubschemePoint::Location::OnCurve: {
                const Rational mcoef = config.components[p.comp_a].coeff;
                const int l = p.contact(p.comp_a);
                for (int i = 1; i <= l; ++i) chain.em_coeffs[i - 1] = Rational(i) * (mcoef - s);
                for (int i = l + 1; i <= k; ++i)
                    chain.em_coeffs[i - 1] = mcoef * Rational(l) - s * Rational(i);
                attach_deep = p.comp_a;
                attach_deep_pos = l;
                break;
            }
            case SubschemePoint::Location::AtIntersection: {
                // the transversal component has contact one; ties broken toward
                // the first component (the coefficients are symmetric then)
                int ca = p.comp_a, cb = p.comp_b;
                int la = p.contact(ca), lb = p.contact(cb);
                if (la != 1 && lb == 1) {
                    std::swap(ca, cb);
                    std::swap(la, lb);
                }
                const Rational m1 = config.components[ca].coeff;
                const Rational m2 = config.components[cb].coeff;
                const int l2 = lb;
                for (int i = 1; i <= l2; ++i)
                    chain.em_coeffs[i - 1] = Rational(i) * (m2 - s) + m1;
                for (int i = l2 + 1; i <= k; ++i)
                    chain.em_coeffs[i - 1] = m1 + Rational(l2) * m2 - Rational(i) * s;
                attach_first = ca;
                attach_first_pos = 1;
                attach_deep = cb;
                attach_deep_pos = l2;
                break;
            }
        }

        for (int i = 0; i < k; ++i)
            if (chain.em_coeffs[i] < Rational(0))
                return detail::fail(EliminationError::Kind::NegativeCoefficient,
                                    static_cast<int>(pi),
                                    "coefficient of Gamma_" + std::to_string(i + 1) +
                                        " is " + chain.em_coeffs[i].str());

        const int base = static_cast<int>(m.curves.size());
        for (int i = 1; i <= k; ++i) {
            CurveOnM cur;
            cur.type = CurveOnM::Type::ChainCurve;
            cur.point_index = static_cast<int>(pi);
            cur.chain_pos = i;
            cur.label = "Gamma_" + std::to_string(pi + 1) + "." + std::to_string(i);
            cur.self_int = chain.self_int(i);
            cur.em_coeff = chain.em_coeffs[i - 1];
            // (L_M . Gamma_i) = -(K_{M/X} . Gamma_i): 0 except 1 on the terminal curve
            cur.lm_intersection = Rational(i == k ? 1 : 0);
            cur.km_intersection = Rational(i == k ? 1 : 0);
            m.curves.push_back(cur);
            if (i > 1) m.edges.emplace_back(base + i - 2, base + i - 1);
        }
        if (attach_first >= 0)
            m.edges.emplace_back(m.strict_index(attach_first), base + attach_first_pos - 1);
        if (attach_deep >= 0)
            m.edges.emplace_back(m.strict_index(attach_deep), base + attach_deep_pos - 1);

        m.chains.push_back(std::move(chain));
    }

    // surviving intersections between strict transforms: components meeting at
    // a point that was not blown up stay adjacent on M
    for (int i = 0; i < ncomp; ++i)
        for (int j = i + 1; j < ncomp; ++j) {
            if (!config.incident(i, j)) continue;
            bool separated = false;
            for (const auto& p : delta)
                if (p.location == SubschemePoint::Location::AtIntersection && p.comp_a == i &&
                    p.comp_b == j)
                    separated = true;
            if (!separated) m.edges.emplace_back(m.strict_index(i), m.strict_index(j));
        }

    return EliminationResult{std::move(m), {}};
}

enum class GraphSelection { SupportOfE_M, FullExceptional };

inline DualGraph dual_graph_of(const ResolutionModel& model,
                               GraphSelection which = GraphSelection::SupportOfE_M) {
    DualGraph g;
    std::vector<int> vid(model.curves.size(), -1);
    for (size_t i = 0; i < model.curves.size(); ++i) {
        const auto& c = model.curves[i];
        const bool take = which == GraphSelection::FullExceptional || c.em_coeff > Rational(0);
        if (take) vid[i] = g.add_vertex(c.label, c.self_int);
    }
    for (auto [a, b] : model.edges)
        if (vid[a] >= 0 && vid[b] >= 0) g.add_edge(vid[a], vid[b]);
    return g;
}

// Curves contracted by the morphism onto the log del Pezzo surface: the
// non-terminal chain curves together with all strict transforms of E.  This
// coincides with { C : (L_M . C) = 0 }.
inline std::vector<int> exceptional_curves(const ResolutionModel& model) {
    std::vector<int> out;
    for (size_t i = 0; i < model.curves.size(); ++i) {
        const auto& c = model.curves[i];
        if (c.type == CurveOnM::Type::StrictTransform)
            out.push_back(static_cast<int>(i));
        else if (c.chain_pos < model.chains[c.point_index].length)
            out.push_back(static_cast<int>(i));
    }
    return out;
}

}  // namespace delpezzo

#endif
