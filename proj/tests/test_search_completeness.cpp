// Brute-force cross-check of the subscheme assignment.
//
// The search walks point assignments guided by the per-point chain balance.
// Here the same cells are enumerated with no balance guidance: every
// assignment of interior points (k, l) with l <= k and node points
// (k, 1, lambda) is generated subject only to the definition-level contact
// totals (L.E_i) = deg(Delta . E_i) and the degree budget, then filtered
// through validate() alone.  The canonical-key sets must coincide with the
// guided walker's output on every cell of the chosen weight pairs.

#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/classify.hpp"

using namespace delpezzo;

namespace {

// all validated, normalized triplets of one cell found by exhaustive search
std::set<std::string> brute_force_cell(const search::Cell& cell) {
    std::set<std::string> keys;
    const auto& X = cell.surface;
    const std::int64_t a = cell.index.a;
    const DivisorClass E_class =
        Rational(-a) * canonical_class(X) - Rational(cell.index.b) * cell.L;

    auto with_support = [&](const std::vector<WeightedComponent>& comps) {
        WeightedConfig cfg;
        try {
            cfg = WeightedConfig(X, comps);
        } catch (const std::invalid_argument&) {
            return;
        }
        if (!(cfg.total_class() == E_class)) return;
        const int nc = static_cast<int>(comps.size());

        // contact totals are forced by (L.E_i) = deg(Delta . E_i)
        std::vector<int> totals(nc);
        std::int64_t total_sum = 0;
        for (int i = 0; i < nc; ++i) {
            const Rational t = intersect(cell.L, cfg.component_class(i));
            if (!t.is_integer() || t < Rational(0)) return;
            totals[i] = static_cast<int>(t.as_integer());
            total_sum += totals[i];
        }
        // every point feeds at most k_P + 1 contact units in all
        if (total_sum > 2 * cell.k) return;

        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < nc; ++i)
            for (int j = i + 1; j < nc; ++j)
                if (cfg.incident(i, j)) pairs.emplace_back(i, j);

        std::vector<SubschemePoint> pts;
        std::vector<int> rest = totals;

        std::function<void(int, int, int, int)> interior = [&](int ci, int budget, int lastk,
                                                               int lastl) {
            if (budget < 0) return;
            if (ci == static_cast<int>(rest.size())) {
                if (budget != 0) return;
                TripletConfig t;
                try {
                    t = TripletConfig(cell.index, cfg, pts);
                } catch (const std::invalid_argument&) {
                    return;
                }
                if (!validate(t).valid) return;
                if (!is_normalized(t)) return;
                keys.insert(canonicalize(t).key);
                return;
            }
            if (rest[ci] == 0) {
                interior(ci + 1, budget, 9, 9);
                return;
            }
            // one more interior point on component ci; multisets enumerated
            // in nonincreasing (k, l) order
            for (int k = std::min(budget, lastk); k >= 1; --k)
                for (int l = std::min({k, rest[ci], k == lastk ? lastl : k}); l >= 1; --l) {
                    pts.push_back(SubschemePoint::on_curve(ci, k, l));
                    rest[ci] -= l;
                    interior(ci, budget - k, k, l);
                    rest[ci] += l;
                    pts.pop_back();
                }
        };
        std::function<void(size_t, int)> nodes = [&](size_t pi, int budget) {
            if (budget < 0) return;
            if (pi == pairs.size()) {
                interior(0, budget, 9, 9);
                return;
            }
            nodes(pi + 1, budget);
            auto [i, j] = pairs[pi];
            if (rest[i] < 1 || rest[j] < 1) return;
            for (int k = 1; k <= budget; ++k)
                for (int la = 1; la <= std::min(k, rest[i]); ++la)
                    for (int lb = 1; lb <= std::min(k, rest[j]); ++lb) {
                        if (la != 1 && lb != 1) continue;
                        pts.push_back(SubschemePoint::at_intersection(i, j, k, la, lb));
                        rest[i] -= la;
                        rest[j] -= lb;
                        nodes(pi + 1, budget - k);
                        rest[i] += la;
                        rest[j] += lb;
                        pts.pop_back();
                    }
        };
        nodes(0, static_cast<int>(cell.k));
    };

    const std::int64_t e0 = X.is_p2() ? 0 : E_class.c0.as_integer();
    const std::int64_t efull = X.is_p2() ? E_class.c0.as_integer() : E_class.c1.as_integer();

    std::vector<DivisorClass> members;
    if (X.is_p2())
        members.push_back(DivisorClass::line(X, Rational(2)));
    else if (X.n == 0)
        members.push_back(DivisorClass::on_fn(X, 1, 1));
    else if (X.n == 1)
        members.push_back(DivisorClass::on_fn(X, 2, 2));
    else if (X.n == 3)
        members.push_back(DivisorClass::on_fn(X, 1, 4));

    std::vector<std::vector<std::int64_t>> splits;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::int64_t)> split_rec = [&](std::int64_t rem,
                                                                    std::int64_t maxc) {
        if (cur.size() > 8) return;
        if (rem == 0) {
            splits.push_back(cur);
            return;
        }
        for (std::int64_t c = std::min(rem, maxc); c >= 1; --c) {
            cur.push_back(c);
            split_rec(rem - c, c);
            cur.pop_back();
        }
    };

    if (X.is_p2()) {
        splits.clear();
        split_rec(efull, a - 1);
        for (const auto& sp : splits) {
            std::vector<WeightedComponent> comps;
            for (size_t i = 0; i < sp.size(); ++i)
                comps.push_back({CurveRole::line(static_cast<int>(i)), Rational(sp[i])});
            with_support(comps);
        }
        if (efull % 2 == 0 && efull / 2 >= 1)
            with_support({{CurveRole::member(members[0]), Rational(efull / 2)}});
        return keys;
    }

    for (std::int64_t ci = 0; ci <= std::min<std::int64_t>(e0, a - 1); ++ci)
        for (int mem = 0; mem <= static_cast<int>(members.size()); ++mem) {
            const bool use_member = mem > 0;
            const std::int64_t msig = use_member ? members[mem - 1].c0.as_integer() : 1;
            const std::int64_t mfib = use_member ? members[mem - 1].c1.as_integer() : 0;
            const std::int64_t ccmax = use_member ? (e0 - ci) / std::max<std::int64_t>(msig, 1) : 0;
            for (std::int64_t cc = use_member ? 1 : 0; cc <= ccmax; ++cc) {
                const std::int64_t csig = e0 - ci - msig * cc;
                if (csig < 0) continue;
                const std::int64_t efib = efull - X.n * ci - mfib * cc;
                if (efib < 0) continue;
                splits.clear();
                cur.clear();
                if (efib == 0)
                    splits.push_back({});
                else
                    split_rec(efib, a - 1);
                for (const auto& sp : splits) {
                    std::vector<WeightedComponent> comps;
                    if (csig > 0) comps.push_back({CurveRole::minimal_section(), Rational(csig)});
                    if (ci > 0) comps.push_back({CurveRole::section_at_infinity(), Rational(ci)});
                    if (use_member)
                        comps.push_back({CurveRole::member(members[mem - 1]), Rational(cc)});
                    for (size_t i = 0; i < sp.size(); ++i)
                        comps.push_back({CurveRole::fiber(static_cast<int>(i)), Rational(sp[i])});
                    if (comps.empty()) continue;
                    with_support(comps);
                }
            }
        }
    return keys;
}

std::set<std::string> guided_cell(const search::Cell& cell) {
    std::set<std::string> keys;
    search::search_cell(cell, false,
                        [&](const TripletConfig& t) { keys.insert(canonicalize(t).key); });
    return keys;
}

void cross_check(const MultiIndex& idx, int n_max) {
    std::vector<search::Cell> cells;
    search::cells_p2(idx, false, [&](const search::Cell& c) { cells.push_back(c); });
    for (int n = 0; n <= n_max; ++n) {
        search::cells_fn(idx, n, true, false, [&](const search::Cell& c) { cells.push_back(c); });
        search::cells_fn(idx, n, false, false, [&](const search::Cell& c) { cells.push_back(c); });
    }
    for (const auto& cell : cells) {
        INFO("weights (" << idx.a << "," << idx.b << ") on " << cell.surface.str()
                         << " with L = " << cell.L.str());
        const auto brute = brute_force_cell(cell);
        const auto guided = guided_cell(cell);
        CHECK(brute == guided);
    }
}

}  // namespace

TEST_CASE("guided assignment equals exhaustive search, cell by cell") {
    cross_check(MultiIndex(3, 2), 5);    // line, three-fiber and section rows
    cross_check(MultiIndex(9, 5), 4);    // two lines with a node
    cross_check(MultiIndex(6, 3), 4);    // conic branch and the x21 node shape
    cross_check(MultiIndex(21, 11), 3);  // node on the minimal section
    cross_check(MultiIndex(5, 3), 4);    // sections at infinity, k = 7 shapes
    cross_check(MultiIndex(4, 2), 4);    // ratio one half: members, k = 8
    cross_check(MultiIndex(7, 5), 4);    // weight pair carrying three types
    cross_check(MultiIndex(10, 5), 4);   // the 4inf53 shape
}
