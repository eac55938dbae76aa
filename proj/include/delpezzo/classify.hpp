// classify.hpp -- exhaustive enumeration of normalized triplets
//
// The search walks, for each weight pair (a, b), every admissible fundamental
// class L on P^2 and on the Hirzebruch surfaces up to the bound, every
// component support with every coefficient split, and every subscheme
// assignment compatible with the per-point chain balance.  Candidates are
// validated, filtered for normalization, canonicalized, labeled against the
// catalog and deduplicated by (label, parameter).
//
// Two modes share the walker.  The pruned mode additionally filters cells
// and supports through the case tables established alongside the
// classification (admissible (h, k) tetrads, support restrictions,
// coefficient floors); the raw mode relies on nothing beyond the definition-
// level constraints, so agreement of the two modes re-verifies those tables.
#ifndef DELPEZZO_CLASSIFY_HPP
#define DELPEZZO_CLASSIFY_HPP

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "delpezzo/catalog.hpp"

namespace delpezzo {

struct SearchBounds {
    std::int64_t a_max = 30;
    int n_max = 12;

    SearchBounds() = default;
    SearchBounds(std::int64_t a, int n) : a_max(a), n_max(n) {
        if (n_max < 3) throw std::invalid_argument("n_max must be at least 3");
        if (a_max < 3) throw std::invalid_argument("a_max must be at least 3");
    }
};

struct TypeRecord {
    bool classified = false;
    std::string label;
    char param_kind = 0;
    std::int64_t param = 0;
    MultiIndex index;
    TripletConfig rep;  // canonical representative
    std::string rep_key;
    DualGraph graph;
    std::int64_t multiplier = 1;
    std::string sort_key;
};

namespace search {

// ---------------------------------------------------------------------------
// Subscheme assignment.  Totals T_i = (L.E_i) are prescribed per component;
// every point must satisfy the chain balance, so node points solve
// m_t + lambda*m_o = s*kappa and points interior to one component come in
// multiples of the minimal solution of m*l = s*kappa.

struct AssignContext {
    const WeightedConfig* cfg = nullptr;
    std::int64_t a = 0;
    std::int64_t s = 0;
    std::int64_t k = 0;
    std::vector<std::int64_t> totals;
    std::vector<bool> forbidden;  // components the subscheme may not touch
    std::vector<std::pair<int, int>> pairs;  // incident component pairs
};

inline void assign_free_points(const AssignContext& ctx, std::vector<std::int64_t> rest,
                               std::int64_t k_used, std::vector<SubschemePoint>& pts,
                               const std::function<void(const std::vector<SubschemePoint>&)>& emit) {
    // fixed chain mass of the interior points, independent of the partitions
    std::int64_t k_free = 0;
    const int nc = static_cast<int>(ctx.cfg->components.size());
    std::vector<std::int64_t> l0(nc, 0), q0(nc, 0), qmax(nc, 0);
    for (int i = 0; i < nc; ++i) {
        if (rest[i] == 0) continue;
        if (ctx.forbidden[i]) return;
        const std::int64_t m = ctx.cfg->components[i].coeff.as_integer();
        if (m < ctx.s) return;  // interior points need l <= kappa
        const std::int64_t g = std::gcd(m, ctx.s);
        l0[i] = ctx.s / g;
        q0[i] = m / g;  // kappa per unit q
        if (rest[i] % l0[i] != 0) return;
        qmax[i] = rest[i] / l0[i];
        // strict residual bound (a-b)(kappa - l) < a caps the largest part
        k_free += qmax[i] * q0[i];
    }
    if (k_used + k_free != ctx.k) return;

    std::function<void(int)> percomp = [&](int ci) {
        if (ci == nc) {
            emit(pts);
            return;
        }
        if (rest[ci] == 0) {
            percomp(ci + 1);
            return;
        }
        // partitions of qmax[ci] into parts, descending
        std::function<void(std::int64_t, std::int64_t)> parts = [&](std::int64_t rem,
                                                                    std::int64_t maxp) {
            if (rem == 0) {
                percomp(ci + 1);
                return;
            }
            for (std::int64_t p = std::min(rem, maxp); p >= 1; --p) {
                const std::int64_t kappa = p * q0[ci], l = p * l0[ci];
                if (ctx.s * (kappa - l) >= ctx.a) continue;
                pts.push_back(SubschemePoint::on_curve(ci, static_cast<int>(kappa),
                                                       static_cast<int>(l)));
                parts(rem - p, p);
                pts.pop_back();
            }
        };
        parts(qmax[ci], qmax[ci]);
    };
    percomp(0);
}

inline void assign_points(const AssignContext& ctx,
                          const std::function<void(const std::vector<SubschemePoint>&)>& emit) {
    std::vector<SubschemePoint> pts;
    std::vector<std::int64_t> rest = ctx.totals;

    std::function<void(size_t, std::int64_t)> nodes = [&](size_t pi, std::int64_t k_used) {
        if (k_used > ctx.k) return;
        if (pi == ctx.pairs.size()) {
            assign_free_points(ctx, rest, k_used, pts, emit);
            return;
        }
        // option: nothing at this node
        nodes(pi + 1, k_used);
        auto [i, j] = ctx.pairs[pi];
        if (ctx.forbidden[i] || ctx.forbidden[j]) return;
        const std::int64_t mi = ctx.cfg->components[i].coeff.as_integer();
        const std::int64_t mj = ctx.cfg->components[j].coeff.as_integer();
        // transversal on side i (contact 1), deeper contact lambda on side j --
        // and symmetrically; lambda = 1 is symmetric, enumerate once
        for (int side = 0; side < 2; ++side) {
            const int ti = side == 0 ? i : j;
            const int tj = side == 0 ? j : i;
            const std::int64_t mt = side == 0 ? mi : mj;
            const std::int64_t mo = side == 0 ? mj : mi;
            for (std::int64_t lambda = (side == 0 ? 1 : 2);; ++lambda) {
                if (1 > rest[ti] || lambda > rest[tj]) break;
                const std::int64_t mass = mt + lambda * mo;
                if (mass > ctx.s * (ctx.k - k_used)) break;
                if (mass % ctx.s == 0) {
                    const std::int64_t kappa = mass / ctx.s;
                    if (kappa >= lambda && kappa >= 1 &&
                        ctx.s * (kappa - lambda) < ctx.a) {
                        rest[ti] -= 1;
                        rest[tj] -= lambda;
                        pts.push_back(SubschemePoint::at_intersection(
                            ti, tj, static_cast<int>(kappa), 1, static_cast<int>(lambda)));
                        nodes(pi + 1, k_used + kappa);
                        pts.pop_back();
                        rest[ti] += 1;
                        rest[tj] += lambda;
                    }
                }
            }
        }
    };
    nodes(0, 0);
}

// ---------------------------------------------------------------------------
// Support enumeration for one fundamental class on one surface.

struct PruneTables {
    // admissible (h, k, b/a) on P^2
    static bool p2_cell(std::int64_t h, std::int64_t k, const Rational& r) {
        static const std::vector<std::tuple<int, int, Rational>> tbl = {
            {5, 5, Rational(1, 2)}, {4, 4, Rational(2, 3)}, {4, 5, Rational(7, 11)},
            {4, 6, Rational(3, 5)}, {4, 7, Rational(5, 9)}, {4, 8, Rational(1, 2)}};
        for (const auto& [th, tk, tr] : tbl)
            if (h == th && k == tk && r == tr) return true;
        return false;
    }
    // admissible (n, h, k, b/a) on F_n when K+L is big
    static bool big_cell(int n, std::int64_t h, std::int64_t k, const Rational& r) {
        static const std::vector<std::tuple<int, int, int, Rational>> tbl = {
            {2, 6, 3, Rational(3, 5)},  {2, 6, 4, Rational(4, 7)},
            {2, 6, 5, Rational(7, 13)}, {2, 7, 3, Rational(11, 21)},
            {0, 3, 6, Rational(1, 2)},  {0, 4, 4, Rational(1, 2)},
            {1, 5, 5, Rational(1, 2)},  {1, 6, 3, Rational(1, 2)},
            {2, 6, 6, Rational(1, 2)},  {2, 7, 4, Rational(1, 2)},
            {2, 8, 2, Rational(1, 2)},  {3, 9, 3, Rational(1, 2)},
            {3, 10, 1, Rational(1, 2)}};
        for (const auto& [tn, th, tk, tr] : tbl)
            if (n == tn && h == th && k == tk && r == tr) return true;
        return false;
    }
    // non-big: sections apart from sigma / special members restricted to
    static bool small_section_ok(int n, std::int64_t k) {
        return (n == 3 && k >= 6 && k <= 8) || (n == 4 && k == 8);
    }
    static bool big_section_ok(int n, std::int64_t h, std::int64_t k) {
        return (n == 1 && h == 5 && k == 5) || (n == 2 && h == 6 && k == 6);
    }
};

struct Cell {
    MultiIndex index;
    SurfaceModel surface;
    DivisorClass L;
    std::int64_t k = 0;
    bool non_big = false;
};

// runs the support/coefficient/subscheme walk for one cell
inline void search_cell(const Cell& cell, bool prune,
                        const std::function<void(const TripletConfig&)>& sink) {
    const auto& X = cell.surface;
    const std::int64_t a = cell.index.a, b = cell.index.b, s = cell.index.s();
    const DivisorClass E_class =
        Rational(-a) * canonical_class(X) - Rational(b) * cell.L;

    auto try_support = [&](const std::vector<WeightedComponent>& comps) {
        WeightedConfig cfg;
        try {
            cfg = WeightedConfig(X, comps);
        } catch (const std::invalid_argument&) {
            return;
        }
        AssignContext ctx;
        ctx.cfg = &cfg;
        ctx.a = a;
        ctx.s = s;
        ctx.k = cell.k;
        const int nc = static_cast<int>(comps.size());
        ctx.totals.resize(nc);
        ctx.forbidden.assign(nc, false);
        for (int i = 0; i < nc; ++i) {
            const Rational t = intersect(cell.L, cfg.component_class(i));
            if (!t.is_integer() || t < Rational(0)) return;
            ctx.totals[i] = t.as_integer();
            if (cell.non_big && comps[i].role.kind == CurveRole::Kind::MinimalSection) {
                ctx.forbidden[i] = true;
                if (ctx.totals[i] != 0) return;
            }
        }
        for (int i = 0; i < nc; ++i)
            for (int j = i + 1; j < nc; ++j)
                if (cfg.incident(i, j)) ctx.pairs.emplace_back(i, j);

        assign_points(ctx, [&](const std::vector<SubschemePoint>& pts) {
            if (pts.empty()) return;
            TripletConfig t(cell.index, cfg, pts);
            if (!validate(t).valid) return;
            if (!is_normalized(t)) return;
            sink(t);
        });
    };

    // coefficient splits: multiset {c_1 >= c_2 >= ...} of `total` into `j`
    // parts within [1, a-1]
    auto fiber_splits = [&](std::int64_t total, int jmax) {
        std::vector<std::vector<std::int64_t>> out;
        std::vector<std::int64_t> cur;
        std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t rem,
                                                                  std::int64_t maxc) {
            if (rem == 0) {
                if (!cur.empty()) out.push_back(cur);
                return;
            }
            if (static_cast<int>(cur.size()) >= jmax) return;
            for (std::int64_t c = std::min(rem, maxc); c >= 1; --c) {
                cur.push_back(c);
                rec(rem - c, c);
                cur.pop_back();
            }
        };
        rec(total, std::min<std::int64_t>(total, a - 1));
        return out;
    };

    if (X.is_p2()) {
        const std::int64_t e = E_class.c0.as_integer();
        const std::int64_t hL = cell.L.c0.as_integer();
        // line supports
        const int jmax = static_cast<int>(
            std::min<std::int64_t>(prune ? 2 : 4, 2 * cell.k / hL));
        for (const auto& split : fiber_splits(e, jmax)) {
            if (prune && split.size() == 2 && !(hL == 4 && (cell.k == 7 || cell.k == 8)))
                continue;
            std::vector<WeightedComponent> comps;
            for (size_t i = 0; i < split.size(); ++i)
                comps.push_back({CurveRole::line(static_cast<int>(i)), Rational(split[i])});
            try_support(comps);
        }
        // a single nonsingular conic
        if (e % 2 == 0 && e / 2 >= 1 && e / 2 <= a - 1) {
            if (!prune || (hL == 4 && cell.k == 8)) {
                std::vector<WeightedComponent> comps = {
                    {CurveRole::member(DivisorClass::line(X, Rational(2))), Rational(e / 2)}};
                try_support(comps);
            }
        }
        return;
    }

    const int n = X.n;
    const std::int64_t e0 = E_class.c0.as_integer();
    const std::int64_t e = E_class.c1.as_integer();
    const std::int64_t h = intersect(cell.L, DivisorClass::sigma(X)).as_integer() +
                           n * cell.L.c0.as_integer();  // fiber degree of L
    const std::int64_t h0 = cell.L.c0.as_integer();

    // member classes in the model's vocabulary
    std::vector<DivisorClass> member_classes;
    if (n == 0) member_classes.push_back(DivisorClass::on_fn(X, 1, 1));
    if (n == 1) member_classes.push_back(DivisorClass::on_fn(X, 2, 2));
    if (n == 3) member_classes.push_back(DivisorClass::on_fn(X, 1, 4));

    for (int use_sinf = 0; use_sinf <= 1; ++use_sinf) {
        for (int mem = 0; mem <= static_cast<int>(member_classes.size()); ++mem) {
            const bool use_member = mem > 0;
            const DivisorClass mc = use_member ? member_classes[mem - 1]
                                               : DivisorClass::zero(X);
            if (prune && use_sinf) {
                const bool ok = cell.non_big ? PruneTables::small_section_ok(n, cell.k)
                                             : PruneTables::big_section_ok(n, h, cell.k);
                if (!ok) continue;
            }
            if (prune && use_member) {
                const bool ok = cell.non_big
                                    ? ((n == 3 && cell.k == 8) || (n == 1 && h == 4))
                                    : (n == 0 && h == 3 && cell.k == 6);
                if (!ok) continue;
            }
            const std::int64_t cmax_inf = use_sinf ? std::min<std::int64_t>(a - 1, e0) : 0;
            for (std::int64_t ci = use_sinf ? 1 : 0; ci <= cmax_inf; ++ci) {
                const std::int64_t msig = use_member ? mc.c0.as_integer() : 1;
                const std::int64_t mfib = use_member ? mc.c1.as_integer() : 0;
                const std::int64_t cm_max =
                    use_member ? std::min<std::int64_t>(a - 1, (e0 - ci) / msig) : 0;
                for (std::int64_t cc = use_member ? 1 : 0; cc <= cm_max; ++cc) {
                    const std::int64_t csig = e0 - ci - msig * cc;
                    if (csig < 0 || csig > a - 1) continue;
                    const std::int64_t efib = e - static_cast<std::int64_t>(n) * ci - mfib * cc;
                    if (efib < 0) continue;
                    if (prune && cell.non_big && h == 2 * n && n >= 3) {
                        // coefficient floor on the minimal section
                        if (2 * n * csig < s * (4 * n - cell.k)) continue;
                    }
                    const int jmax = static_cast<int>(std::min<std::int64_t>(
                        8, h0 > 0 ? 2 * cell.k / h0 : 8));
                    std::vector<std::vector<std::int64_t>> splits;
                    if (efib == 0)
                        splits.push_back({});
                    else
                        splits = fiber_splits(efib, jmax);
                    for (const auto& split : splits) {
                        if (prune && !cell.non_big) {
                            bool floors = true;  // every fiber needs coeff >= a/3
                            for (auto c : split)
                                if (3 * c < a) floors = false;
                            if (!floors) continue;
                        }
                        std::vector<WeightedComponent> comps;
                        if (csig > 0)
                            comps.push_back({CurveRole::minimal_section(), Rational(csig)});
                        if (use_sinf)
                            comps.push_back({CurveRole::section_at_infinity(), Rational(ci)});
                        if (use_member) comps.push_back({CurveRole::member(mc), Rational(cc)});
                        for (size_t i = 0; i < split.size(); ++i)
                            comps.push_back(
                                {CurveRole::fiber(static_cast<int>(i)), Rational(split[i])});
                        if (comps.empty()) continue;
                        try_support(comps);
                    }
                }
            }
        }
    }
}

// enumerates the cells for one weight pair on one surface kind
inline void cells_p2(const MultiIndex& idx, bool prune,
                     const std::function<void(const Cell&)>& sink) {
    const auto X = SurfaceModel::p2();
    const std::int64_t a = idx.a, b = idx.b, s = idx.s();
    for (std::int64_t h = 4; h * b <= 3 * a - 1; ++h) {
        const std::int64_t e = 3 * a - h * b;
        if (e < 1) continue;
        if ((h * e) % s != 0) continue;
        const std::int64_t k = h * e / s;
        if (k < 2 || k > 8) continue;
        if (prune && !PruneTables::p2_cell(h, k, idx.ratio())) continue;
        Cell c{idx, X, DivisorClass::line(X, Rational(h)), k, false};
        sink(c);
    }
}

inline void cells_fn(const MultiIndex& idx, int n, bool big, bool prune,
                     const std::function<void(const Cell&)>& sink) {
    const auto X = SurfaceModel::fn(n);
    const std::int64_t a = idx.a, b = idx.b, s = idx.s();
    if (big) {
        const std::int64_t e0 = 2 * a - 3 * b;
        if (e0 < 1) return;
        const std::int64_t hmin = n == 0 ? 3 : std::max<std::int64_t>(3 * n, 2 * n + 2);
        for (std::int64_t h = hmin; h * b <= (n + 2) * a - 1; ++h) {
            const std::int64_t e = (n + 2) * a - h * b;
            const std::int64_t le = e0 * (h - 3 * n) + 3 * e;
            if (le % s != 0) continue;
            const std::int64_t k = le / s;
            if (k < 2 || k > 8) continue;
            if (prune && !PruneTables::big_cell(n, h, k, idx.ratio())) continue;
            Cell c{idx, X, DivisorClass::on_fn(X, 3, Rational(h)), k, false};
            sink(c);
        }
    } else {
        const std::int64_t hmin = std::max<std::int64_t>(2 * n, n + 3);
        for (std::int64_t h = hmin; h * b <= (n + 2) * a - 1; ++h) {
            const std::int64_t e0 = 2 * s;
            const std::int64_t e = (n + 2) * a - h * b;
            const std::int64_t le = e0 * (h - 2 * n) + 2 * e;
            if (le % s != 0) continue;
            const std::int64_t k = le / s;
            if (k < 2 || k > 8) continue;
            if (prune) {
                const bool main_branch = h == 2 * n && n >= 3 &&
                                         Rational(b, a) <= Rational(n + 1, 2 * n - 1);
                const bool f1_branch = n == 1 && h == 4 && a == 2 * b;
                if (!main_branch && !f1_branch) continue;
            }
            Cell c{idx, X, DivisorClass::on_fn(X, 2, Rational(h)), k, true};
            sink(c);
        }
    }
}

}  // namespace search

// ---------------------------------------------------------------------------
// Branch enumerators and the driver

namespace detail {

struct RecordBuilder {
    std::map<std::string, TripletConfig> by_key;  // canonical key -> triplet

    void add(const TripletConfig& t) {
        CanonicalTriplet c = canonicalize(t);
        by_key.emplace(c.key, c.triplet);
    }

    // groups by (label, param); unclassified triplets stay keyed by canonical form
    std::vector<TypeRecord> finish() const {
        std::map<std::string, std::pair<std::optional<Classified>, const TripletConfig*>> groups;
        for (const auto& [key, t] : by_key) {
            auto cls = classify_triplet(t);
            std::string gk = cls ? cls->label + "#" + std::to_string(cls->param)
                                 : "UNCLASSIFIED#" + key;
            auto it = groups.find(gk);
            if (it == groups.end()) groups.emplace(gk, std::make_pair(cls, &t));
        }
        std::vector<TypeRecord> out;
        for (const auto& [gk, entry] : groups) {
            const auto& [cls, tp] = entry;
            TypeRecord r;
            r.classified = cls.has_value();
            r.label = cls ? cls->label : "UNCLASSIFIED";
            r.param_kind = cls ? cls->param_kind : 0;
            r.param = cls ? cls->param : 0;
            r.index = tp->index;
            r.rep = *tp;
            r.rep_key = canonicalize(*tp).key;
            auto L = fundamental_divisor(tp->index, tp->config);
            auto elim = eliminate(tp->config, tp->delta, Rational(tp->index.s()), *L);
            r.graph = dual_graph_of(*elim.model, GraphSelection::SupportOfE_M);
            r.multiplier = cartier_multiplier(*tp);
            std::ostringstream sk;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%06lld/%06lld", static_cast<long long>(r.index.a),
                          static_cast<long long>(r.index.b));
            sk << buf << "|" << (tp->config.surface.is_p2() ? 0 : 1) << "|";
            std::snprintf(buf, sizeof buf, "%04d", tp->config.surface.is_p2()
                                                       ? 0
                                                       : tp->config.surface.n);
            sk << buf << "|" << r.rep_key;
            r.sort_key = sk.str();
            out.push_back(std::move(r));
        }
        std::sort(out.begin(), out.end(),
                  [](const TypeRecord& x, const TypeRecord& y) { return x.sort_key < y.sort_key; });
        return out;
    }
};

}  // namespace detail

inline std::vector<TypeRecord> enumerate_p2(const MultiIndex& idx, bool prune = true) {
    detail::RecordBuilder rb;
    search::cells_p2(idx, prune, [&](const search::Cell& c) {
        search::search_cell(c, prune, [&](const TripletConfig& t) { rb.add(t); });
    });
    return rb.finish();
}

inline std::vector<TypeRecord> enumerate_fn_big(const MultiIndex& idx, int n_max,
                                                bool prune = true) {
    detail::RecordBuilder rb;
    for (int n = 0; n <= n_max; ++n)
        search::cells_fn(idx, n, true, prune, [&](const search::Cell& c) {
            search::search_cell(c, prune, [&](const TripletConfig& t) { rb.add(t); });
        });
    return rb.finish();
}

inline std::vector<TypeRecord> enumerate_fn_small(const MultiIndex& idx, int n_max,
                                                  bool prune = true) {
    detail::RecordBuilder rb;
    for (int n = 0; n <= n_max; ++n)
        search::cells_fn(idx, n, false, prune, [&](const search::Cell& c) {
            search::search_cell(c, prune, [&](const TripletConfig& t) { rb.add(t); });
        });
    return rb.finish();
}

struct EnumOptions {
    bool prune = true;
    int threads = 0;  // 0: hardware/DELPEZZO_THREADS decides
};

inline int worker_count(int requested) {
    int n = requested;
    if (n <= 0) {
        n = static_cast<int>(std::thread::hardware_concurrency());
        if (n <= 0) n = 1;
    }
    if (const char* env = std::getenv("DELPEZZO_THREADS")) {
        const int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

inline std::vector<TypeRecord> enumerate_all(const SearchBounds& bounds, EnumOptions opt = {}) {
    std::vector<MultiIndex> pairs;
    for (std::int64_t a = 3; a <= bounds.a_max; ++a)
        for (std::int64_t b = (a + 1) / 2; b < a; ++b)
            if (b >= 2) pairs.emplace_back(a, b);

    std::vector<std::vector<TypeRecord>> per_pair(pairs.size());
    const int nw = worker_count(opt.threads);
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= pairs.size()) break;
            detail::RecordBuilder rb;
            auto grab = [&](const TripletConfig& t) { rb.add(t); };
            search::cells_p2(pairs[i], opt.prune, [&](const search::Cell& c) {
                search::search_cell(c, opt.prune, grab);
            });
            for (int n = 0; n <= bounds.n_max; ++n) {
                search::cells_fn(pairs[i], n, true, opt.prune, [&](const search::Cell& c) {
                    search::search_cell(c, opt.prune, grab);
                });
                search::cells_fn(pairs[i], n, false, opt.prune, [&](const search::Cell& c) {
                    search::search_cell(c, opt.prune, grab);
                });
            }
            per_pair[i] = rb.finish();
        }
    };
    if (nw <= 1) {
        work();
    } else {
        std::vector<std::thread> ws;
        for (int i = 0; i < nw; ++i) ws.emplace_back(work);
        for (auto& w : ws) w.join();
    }

    // deterministic merge in pair order, then canonical sort
    std::vector<TypeRecord> all;
    std::set<std::string> seen;
    for (auto& v : per_pair)
        for (auto& r : v) {
            const std::string gk = r.classified
                                       ? r.label + "#" + std::to_string(r.param)
                                       : "UNCLASSIFIED#" + r.rep_key;
            if (seen.insert(gk).second) all.push_back(std::move(r));
        }
    std::sort(all.begin(), all.end(),
              [](const TypeRecord& x, const TypeRecord& y) { return x.sort_key < y.sort_key; });
    return all;
}

// ---------------------------------------------------------------------------
// The fractional-index value set: reduced values of (2s+t)/(4s+t) with
// t in {4, 5, 6}, filtered by reduced denominator.

inline std::set<Rational> fractional_index_set(std::int64_t denominator_cap) {
    std::set<Rational> out;
    for (std::int64_t sp = 1; sp <= 3 * denominator_cap + 6; ++sp)
        for (std::int64_t tp = 4; tp <= 6; ++tp) {
            const Rational v(2 * sp + tp, 4 * sp + tp);
            if (v.den <= denominator_cap) out.insert(v);
        }
    return out;
}

// membership test for a single reduced ratio
inline bool in_fractional_index_set(const Rational& r) {
    const std::int64_t d = 2 * r.num - r.den;  // u*d must land in {4,5,6}
    if (d <= 0) return false;
    for (std::int64_t u = 1; u * d <= 6; ++u) {
        if (u * d < 4) continue;
        if ((u * (r.den - r.num)) % 2 != 0) continue;
        if (u * (r.den - r.num) / 2 >= 1) return true;
    }
    return false;
}

// The cases excluded during the classification; each yields an empty
// enumeration for every weight pair (2t, t).
struct ExcludedCase {
    bool p2 = false;
    int n = 0;
    std::int64_t h = 0;
    std::int64_t expected_k = 0;
    bool big = true;
};

inline std::vector<ExcludedCase> excluded_cases() {
    return {
        {true, 0, 5, 5, false},  // P^2, L of degree five
        {false, 0, 3, 6, true},  {false, 0, 4, 4, true},  {false, 1, 5, 5, true},
        {false, 1, 6, 3, true},  {false, 2, 6, 6, true},  {false, 2, 7, 4, true},
        {false, 2, 8, 2, true},  {false, 3, 9, 3, true},  {false, 3, 10, 1, true},
        {false, 1, 4, 8, false},  // F_1 with fiber degree four, K+L not big
    };
}

// raw search restricted to one excluded case; returns every validated
// normalized triplet found (expected: none)
inline std::vector<TripletConfig> search_excluded_case(const ExcludedCase& c,
                                                       std::int64_t a_max) {
    std::vector<TripletConfig> hits;
    for (std::int64_t t = 2; 2 * t <= a_max; ++t) {
        const MultiIndex idx(2 * t, t);
        auto on_cell = [&](const search::Cell& cell) {
            if (cell.k != c.expected_k) return;
            search::search_cell(cell, false, [&](const TripletConfig& tc) { hits.push_back(tc); });
        };
        if (c.p2) {
            search::cells_p2(idx, false, [&](const search::Cell& cell) {
                if (cell.L.c0 == Rational(c.h)) on_cell(cell);
            });
        } else {
            search::cells_fn(idx, c.n, c.big, false, [&](const search::Cell& cell) {
                const std::int64_t h =
                    intersect(cell.L, DivisorClass::sigma(cell.surface)).as_integer() +
                    c.n * cell.L.c0.as_integer();
                if (h == c.h) on_cell(cell);
            });
        }
    }
    return hits;
}

}  // namespace delpezzo

#endif
