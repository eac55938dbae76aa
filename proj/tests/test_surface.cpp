#include <catch2/catch_amalgamated.hpp>

#include "delpezzo/surface.hpp"

using namespace delpezzo;

namespace {

// deterministic xorshift for the property checks
struct Rng {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    Rational rational() { return Rational(range(-12, 12), range(1, 7)); }
};

}  // namespace

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(3, -9) == Rational(-1, 3));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(7, 2) * Rational(2, 7)) == Rational(1));
    CHECK(Rational(5, 1).str() == "5");
    CHECK(Rational(-5, 3).str() == "-5/3");
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == 2);
}

TEST_CASE("intersection form on P2 and F_n") {
    const auto p2 = SurfaceModel::p2();
    const auto f3 = SurfaceModel::fn(3);
    const auto f2 = SurfaceModel::fn(2);

    CHECK(intersect(DivisorClass::line(p2), DivisorClass::line(p2)) == Rational(1));
    CHECK(intersect(DivisorClass::sigma(f3), DivisorClass::sigma(f3)) == Rational(-3));
    CHECK(intersect(DivisorClass::sigma(f3), DivisorClass::fiber(f3)) == Rational(1));
    CHECK(intersect(DivisorClass::fiber(f3), DivisorClass::fiber(f3)) == Rational(0));
    // (2 sigma + 4 l) . sigma on F_2
    CHECK(intersect(DivisorClass::on_fn(f2, 2, 4), DivisorClass::sigma(f2)) == Rational(0));
    CHECK_THROWS_AS(intersect(DivisorClass::line(p2), DivisorClass::sigma(f2)),
                    std::invalid_argument);
}

TEST_CASE("canonical classes") {
    const auto p2 = SurfaceModel::p2();
    const auto f2 = SurfaceModel::fn(2);
    CHECK(canonical_class(p2) == DivisorClass::line(p2, Rational(-3)));
    CHECK(canonical_class(f2) == DivisorClass::on_fn(f2, -2, -4));
    CHECK(intersect(canonical_class(p2), canonical_class(p2)) == Rational(9));
}

TEST_CASE("arithmetic genus via adjunction") {
    const auto p2 = SurfaceModel::p2();
    CHECK(arithmetic_genus(DivisorClass::line(p2)) == Rational(0));

    const auto f1 = SurfaceModel::fn(1);
    CHECK(arithmetic_genus(DivisorClass::on_fn(f1, 2, 2)) == Rational(0));

    for (int n = 0; n <= 10; ++n) {
        const auto fn = SurfaceModel::fn(n);
        CHECK(arithmetic_genus(DivisorClass::fiber(fn)) == Rational(0));
        CHECK(arithmetic_genus(DivisorClass::sigma(fn)) == Rational(0));
        CHECK(arithmetic_genus(DivisorClass::sigma_inf(fn)) == Rational(0));
        CHECK(intersect(DivisorClass::sigma_inf(fn), DivisorClass::sigma(fn)) == Rational(0));
    }
}

TEST_CASE("genus of |m sigma + (nm+u) l| members") {
    // 2 p_a - 2 = C.(C+K) gives 2 p_a = (m-1)(nm+2u-2)
    for (int n = 0; n <= 10; ++n) {
        const auto fn = SurfaceModel::fn(n);
        for (int m = 1; m <= 10; ++m)
            for (int u = 1; u <= 10; ++u) {
                const auto c = DivisorClass::on_fn(fn, m, static_cast<std::int64_t>(n) * m + u);
                CHECK(Rational(2) * arithmetic_genus(c) ==
                      Rational(static_cast<std::int64_t>(m - 1) * (n * m + 2 * u - 2)));
            }
    }
}

TEST_CASE("bilinearity and symmetry on random classes") {
    Rng rng;
    for (int iter = 0; iter < 200; ++iter) {
        const auto s = iter % 2 ? SurfaceModel::p2() : SurfaceModel::fn(static_cast<int>(rng.range(0, 6)));
        auto rand_class = [&] {
            return s.is_p2() ? DivisorClass(s, rng.rational())
                             : DivisorClass(s, rng.rational(), rng.rational());
        };
        const auto a = rand_class(), b = rand_class(), c = rand_class();
        const auto t = rng.rational();
        CHECK(intersect(a, b) == intersect(b, a));
        CHECK(intersect(a + b, c) == intersect(a, c) + intersect(b, c));
        CHECK(intersect(t * a, b) == t * intersect(a, b));
    }
}
