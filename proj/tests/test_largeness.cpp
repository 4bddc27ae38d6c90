#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syndetica/largeness.hpp"
#include "syndetica/oracles.hpp"
#include "syndetica/prng.hpp"
#include "syndetica/return_set.hpp"

using namespace syndetica;

namespace {

Window1D multiples(std::int64_t k, std::int64_t lo, std::int64_t hi) {
    return Window1D::from_predicate(lo, hi, [k](std::int64_t n) {
        return ((n % k) + k) % k == 0;
    });
}

Window1D squares_set(std::int64_t lo, std::int64_t hi) {
    return Window1D::from_predicate(lo, hi, [](std::int64_t n) {
        if (n < 0) return false;
        for (std::int64_t k = 0; k * k <= n; ++k)
            if (k * k == n) return true;
        return false;
    });
}

}  // namespace

TEST_CASE("syndetic gap examples") {
    CHECK(syndetic_gap(multiples(3, -30, 30), {-24, 24}) == 3);

    // squares on [0,100]: the largest hole is 82..99, computed by oracle
    const Window1D sq = squares_set(0, 100);
    const auto expected = oracle::syndetic_gap(sq, {0, 100});
    CHECK(expected == 19);
    CHECK(syndetic_gap(sq, {0, 100}) == expected);

    CHECK(syndetic_gap(Window1D(0, 50), {0, 50}) == std::nullopt);
    CHECK_THROWS_AS(syndetic_gap(Window1D(0, 10), {0, 11}),
                    std::invalid_argument);
}

TEST_CASE("run starts examples") {
    const Window1D full = Window1D::full(0, 9);
    const Window1D s5 = run_starts(full, 5);
    CHECK(s5.lo() == 0);
    CHECK(s5.hi() == 5);
    CHECK(s5.count() == 6);

    const Window1D s = Window1D::from_elements(0, 6, {0, 1, 2, 5, 6});
    CHECK(run_starts(s, 2).elements() == std::vector<std::int64_t>{0, 1, 5});

    const Window1D evens = Window1D::from_predicate(
        0, 20, [](std::int64_t n) { return n % 2 == 0; });
    CHECK(run_starts(evens, 2).empty());

    CHECK_THROWS_AS(run_starts(full, 0), std::invalid_argument);
    CHECK_THROWS_AS(run_starts(full, 11), std::invalid_argument);
}

TEST_CASE("thickly syndetic profile examples") {
    const Window1D all = Window1D::full(-100, 100);
    const TsProfile p = thickly_syndetic_profile(all, 4, {-80, 80});
    for (std::int64_t n = 1; n <= 4; ++n) CHECK(p.gap_for(n) == 1);
    CHECK(p.all_finite());
    CHECK(p.certified_at(1));

    // the 4^N generated set at N=2: run starts cover 16Z, measured gap 16
    const Window1D gen = ts_generate(TsSchedule::geometric(4, 2), -2000, 2000);
    const TsProfile q = thickly_syndetic_profile(gen, 2, {-1500, 1500});
    REQUIRE(q.gap_for(2).has_value());
    CHECK(*q.gap_for(2) <= 16);

    const Window1D evens = Window1D::from_predicate(
        -100, 100, [](std::int64_t n) { return n % 2 == 0; });
    const TsProfile e = thickly_syndetic_profile(evens, 2, {-50, 50});
    CHECK(e.gap_for(1) == 2);
    CHECK(!e.gap_for(2).has_value());
    CHECK(!e.all_finite());
}

TEST_CASE("insufficient margin is an error distinct from refutation") {
    const Window1D s = Window1D::full(0, 20);
    CHECK_THROWS_AS(thickly_syndetic_profile(s, 10, {0, 15}),
                    insufficient_window_error);
    // with a safe core the same request succeeds
    CHECK(thickly_syndetic_profile(s, 10, {0, 11}).all_finite());
}

TEST_CASE("piecewise syndetic witness examples") {
    const Window1D head = Window1D::from_predicate(
        0, 150, [](std::int64_t n) { return n <= 99; });
    CHECK(piecewise_syndetic_witness(head, 1, 100) == 0);

    const Window1D sq = squares_set(0, 10000);
    CHECK(oracle::piecewise_syndetic_witness(sq, 2, 10) == std::nullopt);
    CHECK(piecewise_syndetic_witness(sq, 2, 10) == std::nullopt);

    const Window1D threes = multiples(3, 0, 400);
    CHECK(piecewise_syndetic_witness(threes, 3, 300) == 0);
}

TEST_CASE("thick witness") {
    const Window1D s = Window1D::from_elements(0, 30, {4, 5, 6, 7, 20, 21});
    CHECK(thick_witness(s, 3, {0, 27}) == 4);
    CHECK(thick_witness(s, 5, {0, 25}) == std::nullopt);
}

TEST_CASE("2D gap examples") {
    const Box box{-30, 30, -30, 30};
    const Window2D lattice = Window2D::from_predicate(
        box, [](std::int64_t m, std::int64_t n) {
            return ((m % 3) + 3) % 3 == 0 && ((n % 3) + 3) % 3 == 0;
        });
    CHECK(syndetic_gap_2d(lattice, box) == 3);

    CHECK(syndetic_gap_2d(Window2D(box), box) == std::nullopt);

    SplitMix64 rng(202);
    const Box half{0, 200, 0, 200};
    const Window2D random = Window2D::from_predicate(
        half, [&](std::int64_t, std::int64_t) { return rng.chance(0.5); });
    CHECK(syndetic_gap_2d(random, half) ==
          oracle::syndetic_gap_2d(random, half));
}

TEST_CASE("block starts examples") {
    const Box box{0, 5, 0, 5};
    const Window2D full = Window2D::full(box);
    const Window2D s22 = block_starts(full, 2, 2);
    CHECK(s22.box() == Box{0, 4, 0, 4});
    CHECK(s22.count() == 25);

    // diagonal stripe of width 3 admits 2x2 blocks along it
    const Box wide{0, 40, 0, 40};
    const Window2D stripe = Window2D::from_predicate(
        wide, [](std::int64_t m, std::int64_t n) {
            return m - n >= 0 && m - n < 3;
        });
    const Window2D stripe22 = block_starts(stripe, 2, 2);
    CHECK(!stripe22.empty());
    CHECK(stripe22 == oracle::block_starts(stripe, 2, 2));

    Window2D holed = Window2D::full(box);
    holed.set(3, 3, false);
    const Window2D s11 = block_starts(holed, 1, 1);
    CHECK(s11.count() == box.area() - 1);
    CHECK(!s11.contains(3, 3));
}

TEST_CASE("run starts are monotone and profile gaps nondecreasing") {
    SplitMix64 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        const std::int64_t span = rng.range(40, 400);
        const Window1D s = Window1D::from_predicate(
            0, span - 1, [&](std::int64_t) { return rng.chance(0.7); });
        const std::int64_t n = rng.range(1, 8);
        if (n + 1 > span) continue;
        const Window1D a = run_starts(s, n);
        const Window1D b = run_starts(s, n + 1);
        for (std::int64_t j = b.lo(); j <= b.hi(); ++j)
            if (b.contains(j)) CHECK(a.contains(j));

        const std::int64_t n_max = std::min<std::int64_t>(6, span / 4);
        if (n_max < 2) continue;
        const TsProfile p =
            thickly_syndetic_profile(s, n_max, {0, span - n_max});
        std::int64_t prev = 0;
        for (std::int64_t i = 1; i <= n_max; ++i) {
            if (!p.gap_for(i)) break;
            CHECK(*p.gap_for(i) >= prev);
            prev = *p.gap_for(i);
        }
    }
}

TEST_CASE("intersection of generated sets keeps a finite profile") {
    SplitMix64 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int64_t> p1, p2;
        std::int64_t g1 = rng.range(2, 4), g2 = rng.range(2, 4);
        for (int n = 1; n <= 3; ++n) {
            p1.push_back(g1);
            p2.push_back(g2);
            g1 *= rng.range(2, 3);
            g2 *= rng.range(2, 3);
        }
        const Window1D a = ts_generate(TsSchedule(p1), -4000, 4000);
        const Window1D b = ts_generate(TsSchedule(p2), -4000, 4000);
        const TsProfile both =
            thickly_syndetic_profile(intersect(a, b), 3, {-3500, 3500});
        CHECK(both.all_finite());
    }
}

TEST_CASE("piecewise witness inside a certified core meets the set") {
    SplitMix64 rng(777);
    int exercised = 0;
    for (int trial = 0; trial < 60 && exercised < 25; ++trial) {
        std::vector<std::int64_t> periods;
        std::int64_t g = rng.range(2, 4);
        for (int n = 1; n <= 3; ++n) {
            periods.push_back(g);
            g *= 2;
        }
        const Window1D s = ts_generate(TsSchedule(periods), -3000, 3000);
        const Interval core{-2500, 2500};
        const std::int64_t gap = rng.range(1, 2);
        const TsProfile prof = thickly_syndetic_profile(s, gap + 1, core);
        REQUIRE(prof.all_finite());
        const std::int64_t stretch = *prof.gap_for(gap + 1) + gap + 5;

        Window1D t = Window1D::from_predicate(
            core.lo, core.hi, [&](std::int64_t) { return rng.chance(0.3); });
        const std::int64_t plant = rng.range(core.lo, core.hi - stretch);
        for (std::int64_t v = plant; v < plant + stretch; v += gap) t.set(v);

        const auto witness = piecewise_syndetic_witness(t, gap, stretch);
        if (!witness) continue;
        ++exercised;
        bool met = false;
        for (std::int64_t v = *witness; v < *witness + stretch; ++v)
            if (s.contains(v) && t.contains(v)) met = true;
        CHECK(met);
    }
    CHECK(exercised >= 25);
}
