#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syndetica/induced.hpp"
#include "syndetica/io.hpp"
#include "syndetica/prng.hpp"
#include "syndetica/return_set.hpp"
#include "syndetica/symbolic.hpp"
#include "syndetica/systems.hpp"

using namespace syndetica;

namespace {

SeqWindow random_two_sided(SplitMix64& rng, std::int64_t radius) {
    std::vector<Symbol> sym(static_cast<std::size_t>(2 * radius + 1));
    for (auto& v : sym) v = rng.chance(0.5) ? 1 : 0;
    return SeqWindow::from_symbols(std::move(sym), Sidedness::two_sided, -radius);
}

}  // namespace

TEST_CASE("orbit point coordinates observe the right powers") {
    const SeqWindow x = squares_indicator(-50, 100);
    const TruncPoint omega =
        TruncPoint::poly_orbit(x, io::parse_poly_family("n^2"), 2, 5);

    // coordinate 2 observes the base advanced by 4
    CHECK(omega.slot_window(2, 0) == x.slice(4 - 5, 4 + 5));
    CHECK(omega.slot_window(-2, 0) == x.slice(4 - 5, 4 + 5));
    CHECK(omega.slot_window(0, 0) == x.slice(-5, 5));

    // linear family: coordinate n observes the base advanced by n
    SplitMix64 rng(1);
    const SeqWindow y = random_two_sided(rng, 40);
    const TruncPoint lin =
        TruncPoint::poly_orbit(y, io::parse_poly_family("n"), 3, 4);
    for (std::int64_t n = -3; n <= 3; ++n)
        CHECK(lin.slot_window(n, 0) == y.slice(n - 4, n + 4));

    // two components: (n, 2n)
    const TruncPoint two =
        TruncPoint::poly_orbit(y, io::parse_poly_family("n,2n"), 2, 3);
    for (std::int64_t n = -2; n <= 2; ++n) {
        CHECK(two.slot_window(n, 0) == y.slice(n - 3, n + 3));
        CHECK(two.slot_window(n, 1) == y.slice(2 * n - 3, 2 * n + 3));
    }
}

TEST_CASE("identity action and stated commutation") {
    SplitMix64 rng(2);
    const SeqWindow x = random_two_sided(rng, 200);
    const TruncPoint p =
        TruncPoint::poly_orbit(x, io::parse_poly_family("n,n^2"), 2, 4);
    CHECK(p.acted({0, 0}).same_truncation(p));

    for (std::int64_t m : {-3, 1, 7}) {
        for (std::int64_t k : {-2, 0, 3}) {
            const TruncPoint ab = p.acted({m, 0}).acted({0, k});
            const TruncPoint ba = p.acted({0, k}).acted({m, 0});
            CHECK(ab.same_truncation(ba));
            CHECK(p.acted({m, k}).same_truncation(ab));
        }
    }
}

TEST_CASE("shifting the squares orbit point moves the center power") {
    const SeqWindow x = squares_indicator(-10, 12000);
    const TruncPoint omega =
        TruncPoint::poly_orbit(x, io::parse_poly_family("n^2"), 0, 6);
    for (std::int64_t k : {2, 5, 30, 100}) {
        const TruncPoint moved = omega.acted({0, k});
        CHECK(moved.slot_window(0, 0) == x.slice(k * k - 6, k * k + 6));
    }
}

TEST_CASE("coverage violations name the coordinate and component") {
    const SeqWindow x = squares_indicator(-10, 30);
    try {
        TruncPoint::poly_orbit(x, io::parse_poly_family("n^2"), 7, 2);
        FAIL("expected coverage error");
    } catch (const coverage_error& e) {
        CHECK(e.component() == 0);
        CHECK(std::abs(e.coord()) >= 6);
    }
}

TEST_CASE("group law holds on random points") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const SeqWindow x = random_two_sided(rng, 400);
        const TruncPoint p =
            TruncPoint::poly_orbit(x, io::parse_poly_family("n,2n"), 2, 5);
        const GroupElement g1{rng.range(-8, 8), rng.range(-8, 8)};
        const GroupElement g2{rng.range(-8, 8), rng.range(-8, 8)};
        CHECK(p.acted(g1 + g2).same_truncation(p.acted(g2).acted(g1)));
    }
}

TEST_CASE("diagonal points are fixed by the index shift") {
    std::vector<Symbol> sym(41, 0);
    sym[20] = 1;
    const SeqWindow z =
        SeqWindow::from_symbols(std::move(sym), Sidedness::two_sided, -20);
    const TruncPoint zd = TruncPoint::diagonal(z, 1, 3, 4);
    CHECK(zd.acted({0, 1}).same_truncation(zd));
    CHECK(zd.acted({0, -7}).same_truncation(zd));
    // but not by the coordinatewise map
    CHECK(!zd.acted({1, 0}).same_truncation(zd));
}

TEST_CASE("convergence probe on the squares example") {
    const SeqWindow x = squares_indicator(-300, 12000);
    std::vector<Symbol> zsym(201, 0);
    zsym[100] = 1;
    const SeqWindow z =
        SeqWindow::from_symbols(std::move(zsym), Sidedness::two_sided, -100);

    const PolyFamily family = io::parse_poly_family("n^2");
    const TruncPoint omega = TruncPoint::poly_orbit(x, family, 1, 80);
    const TruncPoint target = TruncPoint::diagonal(z, 1, 1, 80);

    std::vector<TruncPoint> steps;
    for (std::int64_t k = 2; k <= 40; ++k) steps.push_back(omega.acted({0, k}));
    const auto probe = convergence_probe(steps, target, 78);
    for (std::int64_t k = 2; k <= 40; ++k) {
        const auto& step = probe[static_cast<std::size_t>(k - 2)];
        CHECK(step.center_radius >= std::min<std::int64_t>(2 * k - 2, 78));
    }

    // a constant sequence converges immediately
    const auto at_target = convergence_probe({target, target}, target, 78);
    CHECK(at_target[0].min_radius == 78);

    // toward the all-zeros point the center symbol 1 never goes away
    const SeqWindow zero_seq =
        SeqWindow::constant(0, Sidedness::two_sided, -100, 100);
    const TruncPoint zeros = TruncPoint::diagonal(zero_seq, 1, 1, 80);
    const auto stalled = convergence_probe(steps, zeros, 78);
    for (const auto& step : stalled) CHECK(step.center_radius == -1);
}

TEST_CASE("bridge equals the arithmetic return set") {
    const Box box{-300, 300, -15, 15};
    const PolyFamily polys = io::parse_poly_family("n,n^2");
    const Interval need = required_base_window(polys, box);
    const Window1D s = ts_generate(TsSchedule::geometric(2, 3), need.lo, need.hi);
    const BridgeResult b = bridge(s, polys, box);
    CHECK(b.equal);
    CHECK(b.differing_cells == 0);
    CHECK(b.hitting == b.returns);
}

TEST_CASE("bridge degenerate base sets") {
    const Box box{-40, 40, -6, 6};
    const PolyFamily polys = io::parse_poly_family("n");
    const Interval need = required_base_window(polys, box);

    const BridgeResult full = bridge(Window1D::full(need.lo, need.hi), polys, box);
    CHECK(full.equal);
    CHECK(full.hitting.count() == box.area());

    const BridgeResult empty = bridge(Window1D(need.lo, need.hi), polys, box);
    CHECK(empty.equal);
    CHECK(empty.hitting.count() == 0);
}

TEST_CASE("linear case identity") {
    SplitMix64 rng(4);
    const SeqWindow x = random_two_sided(rng, 120);
    CHECK(linear_shift_check(x, {1}, 3, 8));
    CHECK(linear_shift_check(x, {2, 3}, 3, 8));
    CHECK(linear_shift_check(x, {1, -1}, 3, 8));
    const SeqWindow sq = squares_indicator(-60, 60);
    CHECK(linear_shift_check(sq, {2, 3}, 2, 6));
}

TEST_CASE("linear-family coordinates stay on the base orbit") {
    SplitMix64 rng(5);
    const SeqWindow x = random_two_sided(rng, 100);
    const std::int64_t a = 3;
    const TruncPoint omega =
        TruncPoint::poly_orbit(x, PolyFamily::linear({a}), 4, 6);
    for (std::int64_t n = -4; n <= 4; ++n) {
        const Word w = omega.slot_window(n, 0);
        const Window1D occ = occurrences(w, x);
        CHECK(occ.contains(a * n - 6));
    }
}

TEST_CASE("recurrence probe verdicts") {
    // the all-zeros diagonal point returns at every group element
    const SeqWindow zeros = SeqWindow::constant(0, Sidedness::two_sided, -80, 80);
    const TruncPoint fixed = TruncPoint::diagonal(zeros, 1, 2, 6);
    for (std::int64_t m = -3; m <= 3; ++m)
        for (std::int64_t k = -3; k <= 3; ++k)
            CHECK(fixed.returns_at({m, k}, 6));
    const RecurrenceResult rec = joint_recurrence_probe(fixed, 6, 10);
    CHECK(rec.verdict == RecurrenceVerdict::recurrent);

    // A shifted squares orbit point with the center 1 is not recurrent.
    // The coordinate radius must be generous: at small radii the index
    // reflection k -> -k - 2j looks like a return, because far-out squares
    // have indistinguishable radius-10 neighborhoods. Coordinates near the
    // vertex pin the alignment.
    const SeqWindow x = squares_indicator(-1100, 1'200'000);
    const TruncPoint p =
        TruncPoint::poly_orbit(x, io::parse_poly_family("n^2"), 25, 10)
            .acted({0, 30});
    const RecurrenceResult res = joint_recurrence_probe(p, 10, 1000);
    CHECK(res.verdict == RecurrenceVerdict::not_recurrent);

    // At coordinate radius 1 pure shifts are honest radius-10 returns: every
    // coordinate center sits on a square and far-out squares all carry the
    // same isolated-1 neighborhood. The witness must re-check by scan.
    const TruncPoint narrow =
        TruncPoint::poly_orbit(x, io::parse_poly_family("n^2"), 1, 10)
            .acted({0, 30});
    const RecurrenceResult mirror = joint_recurrence_probe(narrow, 10, 1000);
    CHECK(mirror.verdict == RecurrenceVerdict::recurrent);
    REQUIRE(mirror.witness.has_value());
    CHECK(mirror.witness->t_power == 0);
    CHECK(narrow.returns_at(*mirror.witness, 10));

    // insufficient base coverage is inconclusive, never a verdict
    const SeqWindow tiny = squares_indicator(-20, 5000);
    const TruncPoint q =
        TruncPoint::poly_orbit(tiny, io::parse_poly_family("n^2"), 1, 10)
            .acted({0, 30});
    const RecurrenceResult inc = joint_recurrence_probe(q, 10, 1000);
    CHECK(inc.verdict == RecurrenceVerdict::inconclusive);
}
