#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "cotsum/enclosure.hpp"

using cotsum::Enclosure;
using cotsum::enclosure_of;
using cotsum::to_double_ceil;
using cotsum::to_double_floor;

TEST_CASE("directed rational-to-double conversions bracket the exact value") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-1'000'000, 1'000'000), den(1, 1'000'000);
    for (int iter = 0; iter < 2000; ++iter) {
        mpq_class x(num(rng), den(rng));
        x.canonicalize();
        const double lo = to_double_floor(x);
        const double hi = to_double_ceil(x);
        CHECK(mpq_class(lo) <= x);
        CHECK(x <= mpq_class(hi));
        // never more than one representable step apart
        CHECK(std::nextafter(lo, INFINITY) >= hi);
    }
    // exactly representable values stay put in both directions
    for (double v : {0.0, 0.5, -3.25, 1024.0}) {
        const mpq_class q(v);
        CHECK(to_double_floor(q) == v);
        CHECK(to_double_ceil(q) == v);
    }
}

TEST_CASE("enclosure_of rounds outward") {
    const mpq_class third(1, 3);
    const auto e = enclosure_of(third, third);
    CHECK(mpq_class(e.lo) < third);
    CHECK(third < mpq_class(e.hi));
    CHECK(e.width() > 0.0);
    CHECK(e.width() < 1e-16);
}

TEST_CASE("interval operations") {
    const Enclosure a(1.0, 2.0), b(1.5, 3.0);
    CHECK(a.intersects(b));
    const auto c = a.intersect(b);
    CHECK(c.lo == 1.5);
    CHECK(c.hi == 2.0);
    CHECK(a.contains(1.0));
    CHECK(a.contains(2.0));
    CHECK(!a.contains(2.0000001));
    CHECK(a.contains(2.0000001, 1e-6));
    CHECK(Enclosure(0.0, 4.0).contains(a));
    CHECK(!a.contains(Enclosure(0.0, 4.0)));
    CHECK((a + b).lo == 2.5);
    CHECK((a + b).hi == 5.0);
    CHECK(a.pad(0.5).lo == 0.5);
    CHECK(a.mid() == 1.5);
    CHECK_THROWS_AS(Enclosure(2.0, 1.0), std::invalid_argument);
    CHECK(!Enclosure(0.0, 1.0).intersects(Enclosure(2.0, 3.0)));
}

TEST_CASE("scale_outward strictly widens relative to the plain product") {
    const Enclosure e(0.25, 0.75);
    const double f = 3.141592653589793;
    const auto s = e.scale_outward(f, 4);
    CHECK(s.lo < 0.25 * f);
    CHECK(s.hi > 0.75 * f);
    CHECK(s.lo > 0.25 * f * (1 - 1e-14));
    CHECK(s.hi < 0.75 * f * (1 + 1e-14));
}
