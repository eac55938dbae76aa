#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/document.hpp"

using namespace delpezzo;

TEST_CASE("documents round-trip through parse and serialize") {
    std::vector<TripletConfig> samples;
    {
        const auto p2 = SurfaceModel::p2();
        WeightedConfig cfg(p2, {{CurveRole::line(0), Rational(4)}, {CurveRole::line(1), Rational(2)}});
        samples.emplace_back(MultiIndex(6, 3), cfg,
                             std::vector<SubschemePoint>{
                                 SubschemePoint::at_intersection(0, 1, 4, 1, 4),
                                 SubschemePoint::on_curve(0, 4, 3)});
    }
    {
        const auto f3 = SurfaceModel::fn(3);
        WeightedConfig cfg(f3, {{CurveRole::minimal_section(), Rational(6)},
                                {CurveRole::section_at_infinity(), Rational(4)},
                                {CurveRole::fiber(0), Rational(5)},
                                {CurveRole::fiber(1), Rational(3)}});
        samples.emplace_back(MultiIndex(10, 5), cfg,
                             std::vector<SubschemePoint>{
                                 SubschemePoint::at_intersection(1, 2, 5, 5, 1),
                                 SubschemePoint::at_intersection(1, 3, 2, 1, 2),
                                 SubschemePoint::on_curve(2, 1, 1)});
    }
    {
        const auto f1 = SurfaceModel::fn(1);
        WeightedConfig cfg(f1, {{CurveRole::member(DivisorClass::on_fn(f1, 2, 2)), Rational(2)}});
        samples.emplace_back(MultiIndex(4, 2), cfg,
                             std::vector<SubschemePoint>{SubschemePoint::on_curve(0, 8, 8)});
    }

    for (const auto& t : samples) {
        const json j = triplet_to_json(t);
        const TripletConfig back = triplet_from_json(j);
        CHECK(triplet_to_json(back) == j);  // serialize . parse is the identity
        CHECK(canonicalize(back).key == canonicalize(t).key);
    }
}

TEST_CASE("parser rejects malformed documents") {
    CHECK_THROWS_AS(triplet_from_json(json::parse(R"({"index":{"a":3}})")), DocumentError);
    CHECK_THROWS_AS(
        triplet_from_json(json::parse(
            R"({"index":{"a":3,"b":2},"surface":{"kind":"Q3"},"components":[],"points":[]})")),
        DocumentError);
    CHECK_THROWS_AS(
        triplet_from_json(json::parse(
            R"({"index":{"a":3,"b":2},"surface":{"kind":"P2"},
                "components":[{"role":"widget","coeff":1}],"points":[]})")),
        DocumentError);
    // structurally impossible data surfaces as invalid_argument from the model
    CHECK_THROWS_AS(
        triplet_from_json(json::parse(
            R"({"index":{"a":3,"b":2},"surface":{"kind":"P2"},
                "components":[{"role":"line","coeff":1}],
                "points":[{"location":"on","components":["l1"],"degree":1,
                           "contacts":{"l1":2}}]})")),
        std::invalid_argument);
    // an interior point's contacts must name its own component
    CHECK_THROWS_AS(
        triplet_from_json(json::parse(
            R"({"index":{"a":3,"b":2},"surface":{"kind":"P2"},
                "components":[{"role":"line","coeff":1},{"role":"line","coeff":1}],
                "points":[{"location":"on","components":["l1"],"degree":1,
                           "contacts":{"l2":1}}]})")),
        DocumentError);
}

TEST_CASE("rationals serialize as fraction strings") {
    CHECK(doc::rational_to_json(Rational(3)) == json("3"));
    CHECK(doc::rational_to_json(Rational(-7, 2)) == json("-7/2"));
    CHECK(doc::rational_from_json(json("5/10")) == Rational(1, 2));
    CHECK(doc::rational_from_json(json(4)) == Rational(4));
    CHECK_THROWS_AS(doc::rational_from_json(json("x/2")), DocumentError);
    CHECK_THROWS_AS(doc::rational_from_json(json(1.5)), DocumentError);
}

TEST_CASE("records serialize with stable fields") {
    auto recs = enumerate_all(SearchBounds(3, 3));
    REQUIRE(!recs.empty());
    const json j = record_to_json(recs.front());
    CHECK(j.contains("label"));
    CHECK(j.contains("family_params"));
    CHECK(j.contains("index"));
    CHECK(j.contains("index_value"));
    CHECK(j.contains("cartier_multiplier"));
    CHECK(j.contains("triplet"));
    CHECK(j.contains("dual_graph"));
}
