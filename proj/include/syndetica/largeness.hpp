#pragma once

#include <map>
#include <optional>
#include <vector>

#include "syndetica/window.hpp"

namespace syndetica {

/// Every verdict in this module is a claim about a named core, never about
/// the whole of Z. The core must sit inside the analysis window with enough
/// margin that each claim is decidable from window data alone; when it is
/// not, functions throw insufficient_window_error ("inconclusive"), which is
/// deliberately distinct from a negative verdict.

/// Smallest g >= 1 such that every interval of g consecutive integers inside
/// the core meets s. Equivalently 1 + (longest run of non-members within the
/// core). nullopt iff s and the core are disjoint.
std::optional<std::int64_t> syndetic_gap(const Window1D& s, Interval core);

/// Positions n with [n, n + run_len - 1] contained in s. Result window is
/// [lo, hi - run_len + 1]: only positions where the whole run is observable.
Window1D run_starts(const Window1D& s, std::int64_t run_len);

/// Thickly-syndetic profile: per run length N in [1, n_max], the core
/// covering gap of run_starts(s, N). gap[N-1] == nullopt means no length-N
/// run begins in the core, i.e. not thickly syndetic at this scale.
struct TsProfile {
    std::int64_t n_max = 0;
    Interval core{0, 0};
    std::vector<std::optional<std::int64_t>> gaps;

    const std::optional<std::int64_t>& gap_for(std::int64_t n) const {
        return gaps.at(static_cast<std::size_t>(n - 1));
    }
    bool all_finite() const;
    /// Certified at scale (n_max, bound): every gap finite and <= bound.
    bool certified_at(std::int64_t bound) const;
};

TsProfile thickly_syndetic_profile(const Window1D& s, std::int64_t n_max,
                                   Interval core);

/// Leftmost position a such that every length-gap subinterval of
/// [a, a + stretch - 1] meets s, or nullopt. Witnesses are sound: they can
/// be re-checked by direct scan.
std::optional<std::int64_t> piecewise_syndetic_witness(const Window1D& s,
                                                       std::int64_t gap,
                                                       std::int64_t stretch);

/// Leftmost position of a length-run_len interval fully inside s meeting the
/// core, or nullopt (thickness witness).
std::optional<std::int64_t> thick_witness(const Window1D& s,
                                          std::int64_t run_len, Interval core);

/// Smallest g such that every g x g box inside the core meets s, i.e.
/// 1 + side of the largest empty square. nullopt if s does not meet the core
/// OR an empty square spans the core's smaller side (no non-vacuous bound
/// exists at this scale).
std::optional<std::int64_t> syndetic_gap_2d(const Window2D& s, Box core);

/// Positions (m, n) where a solid m_len x n_len block of s begins. Result
/// box is shrunk so the whole block is observable.
Window2D block_starts(const Window2D& s, std::int64_t m_len,
                      std::int64_t n_len);

/// Per-(M, N) covering gaps of block_starts over M <= m_max, N <= n_max,
/// each measured on the full block-start box (the declared core).
struct TsProfile2D {
    std::int64_t m_max = 0;
    std::int64_t n_max = 0;
    std::vector<Box> cores;                             // per (M, N), row-major
    std::vector<std::optional<std::int64_t>> gaps;      // per (M, N), row-major
    std::vector<std::int64_t> start_counts;             // per (M, N), row-major

    std::size_t idx(std::int64_t m_len, std::int64_t n_len) const {
        return static_cast<std::size_t>((m_len - 1) * n_max + (n_len - 1));
    }
    const std::optional<std::int64_t>& gap_for(std::int64_t m_len,
                                               std::int64_t n_len) const {
        return gaps.at(idx(m_len, n_len));
    }
    bool all_finite() const;
};

TsProfile2D thickly_syndetic_profile_2d(const Window2D& s, std::int64_t m_max,
                                        std::int64_t n_max);

}  // namespace syndetica
