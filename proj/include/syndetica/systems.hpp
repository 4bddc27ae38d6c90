#pragma once

#include <functional>
#include <vector>

#include "syndetica/symbolic.hpp"
#include "syndetica/window.hpp"

namespace syndetica {

/// Indicator of the complement: x_n = 0 iff n is in s. The shift-orbit
/// closure of this sequence is the Bebutov system of s.
SeqWindow bebutov_indicator(const Window1D& s);

/// Two-sided x with x(n) = 1 iff n is a perfect square.
SeqWindow squares_indicator(std::int64_t lo, std::int64_t hi);

/// Recursive block hierarchy
///   A_1 = 1,  A_{n+1} = A_n 0^{b_n} A_n 0^n A_n,  b_n > 15 a_{n-1}
/// (a_n = |A_n|, with a_0 taken as 1 so b_1 >= 16). Each A_n is a prefix of
/// A_{n+1}, so the levels converge to a one-sided sequence; prefix() exposes
/// its truncations.
class BlockHierarchy {
public:
    using BRule = std::function<std::int64_t(std::int64_t n, std::int64_t a_prev)>;

    /// Default rule: b_n = 15 a_{n-1} + 1, the smallest admissible value.
    static BlockHierarchy build(std::int64_t depth);
    static BlockHierarchy build(std::int64_t depth, const BRule& b_rule);

    std::int64_t depth() const;
    /// A_n, 1-indexed.
    const Word& level(std::int64_t n) const;
    /// a_n = |A_n|, 1-indexed.
    std::int64_t length(std::int64_t n) const;
    /// b_n, 1-indexed, defined for n in [1, depth-1].
    std::int64_t gap_exponent(std::int64_t n) const;

    /// One-sided prefix of the limit sequence; len <= |A_depth|.
    SeqWindow prefix(std::int64_t len) const;

private:
    std::vector<Word> levels_;
    std::vector<std::int64_t> b_;
};

}  // namespace syndetica
