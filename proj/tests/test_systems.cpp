#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "syndetica/largeness.hpp"
#include "syndetica/return_set.hpp"
#include "syndetica/symbolic.hpp"
#include "syndetica/systems.hpp"

using namespace syndetica;

TEST_CASE("complement indicator basics") {
    CHECK(bebutov_indicator(Window1D::full(-5, 5)).to_string() ==
          "00000000000");
    CHECK(bebutov_indicator(Window1D(-5, 5)).to_string() == "11111111111");

    const Window1D evens = Window1D::from_predicate(
        -4, 4, [](std::int64_t n) { return ((n % 2) + 2) % 2 == 0; });
    const SeqWindow x = bebutov_indicator(evens);
    for (std::int64_t n = -4; n <= 4; ++n)
        CHECK(x.at(n) == (((n % 2) + 2) % 2 == 0 ? 0 : 1));
}

TEST_CASE("zero occurrences of the indicator recover the set") {
    const Window1D s = ts_generate(TsSchedule::geometric(2, 4), -300, 300);
    const SeqWindow x = bebutov_indicator(s);
    const Window1D zeros = occurrences(Word::from_string("0"), x);
    CHECK(zeros == s);
}

TEST_CASE("squares indicator examples") {
    const SeqWindow s = squares_indicator(0, 10);
    std::string expected(11, '0');
    for (std::int64_t k = 0; k * k <= 10; ++k)
        expected[static_cast<std::size_t>(k * k)] = '1';
    CHECK(s.to_string() == expected);

    const SeqWindow neg = squares_indicator(-20, -1);
    CHECK(neg.to_string() == std::string(20, '0'));
}

TEST_CASE("squares indicator local pattern around each square") {
    const SeqWindow x = squares_indicator(-10, 91000);
    for (std::int64_t k = 2; k <= 300; ++k) {
        const Word expected = Word::zeros(2 * k - 2)
                                  .concat(Word::from_string("1"))
                                  .concat(Word::zeros(2 * k));
        CHECK(x.slice(k * k - (2 * k - 2), k * k + 2 * k) == expected);
    }
}

TEST_CASE("hierarchy base cases") {
    const BlockHierarchy h1 = BlockHierarchy::build(1);
    CHECK(h1.level(1).to_string() == "1");
    CHECK(h1.prefix(1).to_string() == "1");

    const BlockHierarchy h2 = BlockHierarchy::build(2);
    CHECK(h2.gap_exponent(1) == 16);
    CHECK(h2.level(2).to_string() == "1" + std::string(16, '0') + "101");
    CHECK(h2.length(2) == 20);
}

TEST_CASE("hierarchy length recurrence recomputed independently") {
    const BlockHierarchy h = BlockHierarchy::build(7);
    std::int64_t a = 1;
    for (std::int64_t n = 1; n < 7; ++n) {
        const std::int64_t next = 3 * a + h.gap_exponent(n) + n;
        CHECK(h.length(n + 1) == next);
        a = next;
    }
    CHECK(h.length(7) == 91171);
}

TEST_CASE("each level is a prefix of the next") {
    const BlockHierarchy h = BlockHierarchy::build(7);
    for (std::int64_t n = 1; n < 7; ++n) {
        const Word& small = h.level(n);
        const Word& big = h.level(n + 1);
        for (std::int64_t i = 0; i < small.size(); ++i)
            CHECK(small[i] == big[i]);
    }
    CHECK(h.prefix(h.length(2)) .to_string() == h.level(2).to_string());
}

TEST_CASE("level 3 starts with level 2, gap, level 2") {
    const BlockHierarchy h = BlockHierarchy::build(3);
    const Word expected_head = h.level(2)
                                   .concat(Word::zeros(h.gap_exponent(2)))
                                   .concat(h.level(2));
    const SeqWindow prefix = h.prefix(expected_head.size());
    CHECK(prefix.to_string() == expected_head.to_string());
}

TEST_CASE("gap exponent rule is enforced by name") {
    try {
        BlockHierarchy::build(3, [](std::int64_t, std::int64_t a_prev) {
            return 15 * a_prev;  // violates the strict bound
        });
        FAIL("expected rejection");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("b_1") != std::string::npos);
    }
}

TEST_CASE("realized gap words at depth 7 and the first unrealized one") {
    const BlockHierarchy h = BlockHierarchy::build(7);
    const SeqWindow prefix = h.prefix(h.length(7));
    const Word a2 = h.level(2);
    auto occurs_with_gap = [&](const SeqWindow& s, std::int64_t m) {
        return !occurrences(a2.concat(Word::zeros(m)).concat(a2), s).empty();
    };
    // the middle gaps 2..6 and the level-2 spacer are realized at depth 7
    for (std::int64_t m : {2, 3, 4, 5, 6}) CHECK(occurs_with_gap(prefix, m));
    CHECK(occurs_with_gap(prefix, h.gap_exponent(2)));
    // gap 7 needs one level more: absent at depth 7, present at depth 8
    CHECK(!occurs_with_gap(prefix, 7));
    const BlockHierarchy h8 = BlockHierarchy::build(8);
    CHECK(occurs_with_gap(h8.prefix(h8.length(8)), 7));
}

TEST_CASE("generated-set indicators carry syndetic zero blocks") {
    const Window1D s = ts_generate(TsSchedule::geometric(2, 8), -2000, 2000);
    const SeqWindow x = bebutov_indicator(s);
    for (std::int64_t k = 1; k <= 8; ++k)
        CHECK(language(x, k).count(Word::zeros(k)) == 1);
    const Window1D occ = occurrences(Word::zeros(8), x);
    const auto gap = syndetic_gap(occ, {occ.lo() + 50, occ.hi() - 50});
    REQUIRE(gap.has_value());
    CHECK(*gap <= 256 + 8);
}
