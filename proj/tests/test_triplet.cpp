#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/catalog.hpp"
#include "delpezzo/triplet.hpp"

using namespace delpezzo;

namespace {

TripletConfig weight32_line() {
    const auto p2 = SurfaceModel::p2();
    WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(1)}});
    std::vector<SubschemePoint> delta;
    for (int i = 0; i < 4; ++i) delta.push_back(SubschemePoint::on_curve(0, 1, 1));
    return TripletConfig(MultiIndex(3, 2), cfg, delta);
}

}  // namespace

TEST_CASE("weight pairs") {
    CHECK_NOTHROW(MultiIndex(3, 2));
    CHECK_NOTHROW(MultiIndex(4, 2));
    CHECK_THROWS_AS(MultiIndex(3, 3), std::invalid_argument);  // ratio must stay below one
    CHECK_THROWS_AS(MultiIndex(5, 2), std::invalid_argument);  // and at least one half
    CHECK(MultiIndex(21, 11).s() == 10);
}

TEST_CASE("fundamental divisor solutions") {
    const auto p2 = SurfaceModel::p2();
    {
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(1)}});
        auto L = fundamental_divisor(MultiIndex(3, 2), cfg);
        REQUIRE(L.has_value());
        CHECK(*L == DivisorClass::line(p2, Rational(4)));
    }
    {
        const auto f2 = SurfaceModel::fn(2);
        WeightedConfig cfg(f2, {{CurveRole::minimal_section(), Rational(1)},
                                {CurveRole::fiber(0), Rational(2)}});
        auto L = fundamental_divisor(MultiIndex(5, 3), cfg);
        REQUIRE(L.has_value());
        CHECK(*L == DivisorClass::on_fn(f2, 3, 6));
    }
    {
        // weight does not divide: no integral solution
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(2)}});
        CHECK(!fundamental_divisor(MultiIndex(3, 2), cfg).has_value());
    }
}

TEST_CASE("validation accepts the classified data") {
    auto t = weight32_line();
    auto rep = validate(t);
    CHECK(rep.valid);
    for (const auto& c : rep.conditions) CHECK(c.ok);
    CHECK(is_normalized(t));
}

TEST_CASE("validation pinpoints the broken condition") {
    const auto p2 = SurfaceModel::p2();
    // same shape with a fifth point: contact total exceeds (L.E_1) = 4
    {
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(1)}});
        std::vector<SubschemePoint> delta;
        for (int i = 0; i < 5; ++i) delta.push_back(SubschemePoint::on_curve(0, 1, 1));
        auto rep = validate(TripletConfig(MultiIndex(3, 2), cfg, delta));
        CHECK(!rep.valid);
        REQUIRE(rep.find("C5"));
        CHECK(!rep.find("C5")->ok);
    }
    // coefficient equal to the weight a
    {
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(3)}});
        std::vector<SubschemePoint> delta = {SubschemePoint::on_curve(0, 2, 2)};
        auto rep = validate(TripletConfig(MultiIndex(3, 2), cfg, delta));
        CHECK(!rep.valid);
        REQUIRE(rep.find("C2"));
        CHECK(!rep.find("C2")->ok);
    }
    // degree-one subscheme
    {
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(1)}});
        auto rep = validate(
            TripletConfig(MultiIndex(3, 2), cfg, {SubschemePoint::on_curve(0, 1, 1)}));
        CHECK(!rep.find("C1")->ok);
    }
    // non-big case: the subscheme may not meet the minimal section
    {
        const auto f3 = SurfaceModel::fn(3);
        WeightedConfig cfg(f3, {{CurveRole::minimal_section(), Rational(2)},
                                {CurveRole::fiber(0), Rational(1)}});
        std::vector<SubschemePoint> delta = {SubschemePoint::at_intersection(0, 1, 2, 1, 1),
                                             SubschemePoint::on_curve(1, 1, 1)};
        auto rep = validate(TripletConfig(MultiIndex(5, 4), cfg, delta));
        CHECK(!rep.valid);
    }
}

TEST_CASE("normalization criterion") {
    // gcd 3, one coefficient prime to it
    {
        const auto p2 = SurfaceModel::p2();
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(4)}, {CurveRole::line(1), Rational(2)}});
        TripletConfig t(MultiIndex(6, 3), cfg,
                        {SubschemePoint::at_intersection(0, 1, 4, 1, 4)});
        CHECK(is_normalized(t));
    }
    // every coefficient divisible by the common factor two
    {
        const auto f2 = SurfaceModel::fn(2);
        WeightedConfig cfg(f2, {{CurveRole::minimal_section(), Rational(2)},
                                {CurveRole::fiber(0), Rational(2)}});
        TripletConfig t(MultiIndex(6, 4), cfg, {SubschemePoint::on_curve(1, 2, 2)});
        CHECK(!is_normalized(t));
    }
    // coprime weights are always normalized
    {
        auto t = weight32_line();
        CHECK(is_normalized(t));
    }
    // invariant under relabeling of the fibers
    {
        const auto f3 = SurfaceModel::fn(3);
        WeightedConfig ab(f3, {{CurveRole::minimal_section(), Rational(2)},
                               {CurveRole::fiber(0), Rational(4)},
                               {CurveRole::fiber(1), Rational(2)}});
        WeightedConfig ba(f3, {{CurveRole::minimal_section(), Rational(2)},
                               {CurveRole::fiber(0), Rational(2)},
                               {CurveRole::fiber(1), Rational(4)}});
        std::vector<SubschemePoint> pa = {SubschemePoint::on_curve(1, 2, 2),
                                          SubschemePoint::on_curve(2, 1, 1)};
        std::vector<SubschemePoint> pb = {SubschemePoint::on_curve(2, 2, 2),
                                          SubschemePoint::on_curve(1, 1, 1)};
        TripletConfig ta(MultiIndex(6, 4), ab, pa), tb(MultiIndex(6, 4), ba, pb);
        CHECK(is_normalized(ta) == is_normalized(tb));
        CHECK(canonicalize(ta).key == canonicalize(tb).key);
    }
}

TEST_CASE("scale factor against the reduced weight pair") {
    CHECK(cartier_multiplier(weight32_line()) == 1);
    {
        const auto p2 = SurfaceModel::p2();
        WeightedConfig cfg(p2,
                           {{CurveRole::line(0), Rational(4)}, {CurveRole::line(1), Rational(2)}});
        TripletConfig t(MultiIndex(6, 3), cfg,
                        {SubschemePoint::at_intersection(0, 1, 4, 1, 4)});
        CHECK(cartier_multiplier(t) == 3);
    }
    {
        const auto f3 = SurfaceModel::fn(3);
        WeightedConfig cfg(f3, {{CurveRole::minimal_section(), Rational(6)},
                                {CurveRole::section_at_infinity(), Rational(4)},
                                {CurveRole::fiber(0), Rational(5)},
                                {CurveRole::fiber(1), Rational(3)}});
        TripletConfig t(MultiIndex(10, 5), cfg, {SubschemePoint::on_curve(2, 1, 1)});
        CHECK(cartier_multiplier(t) == 5);
    }
}

TEST_CASE("identities on accepted triplets") {
    // catalog instances satisfy (a-b) deg(Delta) = (L.E) and mult_P(E) >= a-b
    for (const auto& tpl : catalog()) {
        std::vector<std::int64_t> params;
        if (tpl.param == 0)
            params = {0};
        else if (tpl.param == 'n')
            params = {3, 4, 5, 7};
        else
            params = {1, 2, 3};
        for (auto p : params) {
            if (!tpl.admissible(p)) continue;
            TripletConfig t = realize(tpl.shape(p));
            auto rep = validate(t);
            INFO(tpl.label << " at " << p);
            REQUIRE(rep.valid);
            REQUIRE(rep.fundamental.has_value());
            const auto& L = *rep.fundamental;
            const std::int64_t k = total_degree(t.delta);
            CHECK(Rational(t.index.s() * k) == intersect(L, t.config.total_class()));
            for (const auto& pt : t.delta) {
                Rational mult(0);
                for (auto [c, l] : pt.contacts) mult += t.config.components[c].coeff;
                CHECK(mult >= Rational(t.index.s()));
            }
        }
    }
}
