#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "syndetica/oracles.hpp"
#include "syndetica/prng.hpp"
#include "syndetica/window.hpp"

using namespace syndetica;

namespace {

Window1D random_window(SplitMix64& rng, std::int64_t lo, std::int64_t span,
                       double density) {
    return Window1D::from_predicate(
        lo, lo + span - 1, [&](std::int64_t) { return rng.chance(density); });
}

}  // namespace

TEST_CASE("from_predicate basic examples") {
    const Window1D evens = Window1D::from_predicate(
        0, 4, [](std::int64_t n) { return n % 2 == 0; });
    CHECK(evens.elements() == std::vector<std::int64_t>{0, 2, 4});

    const Window1D full =
        Window1D::from_predicate(-2, 2, [](std::int64_t) { return true; });
    CHECK(full.count() == 5);
    CHECK(full == Window1D::full(-2, 2));

    // squares up to 10, expected values enumerated independently
    std::vector<std::int64_t> squares;
    for (std::int64_t k = 0; k * k <= 10; ++k) squares.push_back(k * k);
    const Window1D sq = Window1D::from_predicate(0, 10, [](std::int64_t n) {
        for (std::int64_t k = 0; k * k <= n; ++k)
            if (k * k == n) return true;
        return false;
    });
    CHECK(sq.elements() == squares);
}

TEST_CASE("window construction and membership errors") {
    CHECK_THROWS_AS(Window1D(3, 2), std::invalid_argument);
    const Window1D w = Window1D::full(0, 7);
    CHECK(w.contains(0));
    CHECK(w.contains(7));
    CHECK_THROWS_AS(w.contains(-1), std::out_of_range);
    CHECK_THROWS_AS(w.contains(8), std::out_of_range);
    CHECK_THROWS_AS(Window1D(0, 3).set(4), std::out_of_range);
}

TEST_CASE("poly_eval examples") {
    CHECK(IntPoly({0, 1}).eval(3) == 9);     // n^2 at 3
    CHECK(IntPoly({1}).eval(-7) == -7);      // n at -7
    CHECK(IntPoly({-1, 0, 1}).eval(5) == 5 * 5 * 5 - 5);  // n^3 - n
    CHECK(IntPoly({3, -2, 7}).eval(0) == 0);
}

TEST_CASE("poly_eval overflow is an error, never wraparound") {
    const IntPoly cube({0, 0, 1});
    CHECK_THROWS_AS(cube.eval(3'000'000), std::overflow_error);
    const IntPoly big({std::int64_t{1} << 62});
    CHECK_THROWS_AS(big.eval(4), std::overflow_error);
}

TEST_CASE("poly_eval matches naive power oracle") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<std::int64_t> coeffs;
        const int deg = static_cast<int>(rng.range(1, 5));
        for (int k = 0; k < deg; ++k) coeffs.push_back(rng.range(-50, 50));
        const IntPoly p(coeffs);
        const std::int64_t n = rng.range(-1000, 1000);
        CHECK(p.eval(n) == oracle::poly_eval(p, n));
    }
}

TEST_CASE("set algebra examples") {
    const Window1D evens = Window1D::from_predicate(
        0, 4, [](std::int64_t n) { return n % 2 == 0; });
    CHECK(evens.complemented().elements() == std::vector<std::int64_t>{1, 3});

    const Window1D w = Window1D::from_elements(0, 5, {0, 3});
    const Window1D shifted = w.shifted(1);
    CHECK(shifted.lo() == 1);
    CHECK(shifted.hi() == 6);
    CHECK(shifted.elements() == std::vector<std::int64_t>{1, 4});

    // 3Z meet 2Z is 6Z; expected computed by direct scan
    const Window1D threes = Window1D::from_predicate(
        0, 30, [](std::int64_t n) { return n % 3 == 0; });
    const Window1D twos = Window1D::from_predicate(
        0, 30, [](std::int64_t n) { return n % 2 == 0; });
    std::vector<std::int64_t> expected;
    for (std::int64_t n = 0; n <= 30; ++n)
        if (n % 2 == 0 && n % 3 == 0) expected.push_back(n);
    CHECK(intersect(threes, twos).elements() == expected);
}

TEST_CASE("binary ops require identical windows") {
    const Window1D a = Window1D::full(0, 5);
    const Window1D b = Window1D::full(1, 6);
    CHECK_THROWS_AS(union_of(a, b), std::invalid_argument);
    CHECK_THROWS_AS(intersect(a, b), std::invalid_argument);
    CHECK_THROWS_AS(minus(a, b), std::invalid_argument);
}

TEST_CASE("double complement and De Morgan on random windows") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t lo = rng.range(-200, 200);
        const std::int64_t span = rng.range(1, 300);
        Window1D a = random_window(rng, lo, span, 0.4);
        Window1D b = random_window(rng, lo, span, 0.6);
        CHECK(a.complemented().complemented() == a);
        CHECK(union_of(a, b).complemented() ==
              intersect(a.complemented(), b.complemented()));
        CHECK(intersect(a, b).complemented() ==
              union_of(a.complemented(), b.complemented()));
    }
}

TEST_CASE("shift round trip is exact") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Window1D a = random_window(rng, rng.range(-100, 100), rng.range(1, 200),
                                   0.5);
        const std::int64_t k = rng.range(-50, 50);
        CHECK(a.shifted(k).shifted(-k) == a);
    }
}

TEST_CASE("slice_shifted agrees with per-element lookup") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t lo = rng.range(-300, 0);
        const std::int64_t span = rng.range(80, 400);
        const Window1D s = random_window(rng, lo, span, 0.5);
        const std::int64_t shift = rng.range(-20, 20);
        const std::int64_t sub_lo = lo + 25 + rng.range(0, 10);
        const std::int64_t sub_hi = lo + span - 26 - rng.range(0, 10);
        const Window1D sliced = slice_shifted(s, sub_lo, sub_hi, shift);
        for (std::int64_t m = sub_lo; m <= sub_hi; ++m)
            CHECK(sliced.contains(m) == s.contains(m + shift));
    }
}

TEST_CASE("or_shifted_into equals the per-element union") {
    SplitMix64 rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t lo = rng.range(-100, 100);
        const std::int64_t span = rng.range(1, 150);
        const Window1D src = random_window(rng, lo, span, 0.4);
        const std::int64_t delta = rng.range(-30, 30);
        Window1D dst(lo + delta - 10, lo + delta + span + 9);
        Window1D expected = dst;
        or_shifted_into(dst, src, delta);
        for (std::int64_t k : src.elements()) expected.set(k + delta);
        CHECK(dst == expected);
    }
    Window1D small(0, 10);
    CHECK_THROWS_AS(or_shifted_into(small, Window1D::full(0, 10), 5),
                    std::out_of_range);
}

TEST_CASE("window bounds near the integer limits are rejected") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Window1D(big - 5, big), std::invalid_argument);
    CHECK_THROWS_AS(Window1D(std::numeric_limits<std::int64_t>::min(), 0),
                    std::invalid_argument);
}

TEST_CASE("restricted sub-window") {
    const Window1D w = Window1D::from_elements(0, 9, {1, 4, 8});
    const Window1D r = w.restricted(2, 8);
    CHECK(r.lo() == 2);
    CHECK(r.hi() == 8);
    CHECK(r.elements() == std::vector<std::int64_t>{4, 8});
    CHECK_THROWS_AS(w.restricted(-1, 5), std::invalid_argument);
}

TEST_CASE("Window2D basics") {
    const Box box{-2, 2, 0, 3};
    Window2D w(box);
    CHECK(w.count() == 0);
    w.set(-2, 0);
    w.set(2, 3);
    CHECK(w.contains(-2, 0));
    CHECK(!w.contains(0, 0));
    CHECK_THROWS_AS(w.contains(3, 0), std::out_of_range);
    CHECK(w.count() == 2);
    CHECK(Window2D::full(box).count() == box.area());

    const Window1D row = w.row(-2);
    CHECK(row.elements() == std::vector<std::int64_t>{0});
}

TEST_CASE("Window2D symmetric difference") {
    const Box box{0, 4, 0, 4};
    const Window2D a = Window2D::from_predicate(
        box, [](std::int64_t m, std::int64_t n) { return (m + n) % 2 == 0; });
    const Window2D b = Window2D::from_predicate(
        box, [](std::int64_t m, std::int64_t) { return m % 2 == 0; });
    const Window2D d = symmetric_difference(a, b);
    for (std::int64_t m = 0; m <= 4; ++m)
        for (std::int64_t n = 0; n <= 4; ++n)
            CHECK(d.contains(m, n) == (a.contains(m, n) != b.contains(m, n)));
}

TEST_CASE("poly family requires d >= 1 and prints itself") {
    CHECK_THROWS_AS(PolyFamily({}), std::invalid_argument);
    const PolyFamily f = PolyFamily::linear({2, -3});
    CHECK(f.d() == 2);
    CHECK(f.to_string() == "2n,-3n");
    CHECK(IntPoly({0, 1}).to_string() == "n^2");
    CHECK(IntPoly({-1, 0, 1}).to_string() == "n^3-n");
}
