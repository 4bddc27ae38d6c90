#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syndetica/largeness.hpp"
#include "syndetica/window.hpp"

namespace syndetica {

/// Run-length schedule N -> period g(N) for generating thickly syndetic
/// sets by construction: S = union over N <= n_max of (g(N) Z + [0, N)).
/// Periods must be strictly increasing with g(N) >= N, so every g(N) Z is a
/// syndetic set of length-N run starts.
class TsSchedule {
public:
    explicit TsSchedule(std::vector<std::int64_t> periods);

    /// g(N) = base^N.
    static TsSchedule geometric(std::int64_t base, std::int64_t n_max);

    /// Default: base-2 geometric with n_max = 6. Chosen so that return sets
    /// of low-degree families carry solid blocks at lattice density inside
    /// desk-scale boxes; see the unit tests for the measured profiles.
    static TsSchedule default_schedule();

    const std::vector<std::int64_t>& periods() const { return periods_; }
    std::int64_t n_max() const {
        return static_cast<std::int64_t>(periods_.size());
    }
    std::int64_t period(std::int64_t n) const {
        return periods_.at(static_cast<std::size_t>(n - 1));
    }

    bool member(std::int64_t v) const;
    std::string to_string() const;
    bool operator==(const TsSchedule&) const = default;

private:
    std::vector<std::int64_t> periods_;
};

/// Exact window of the generated set. run_starts(result, N) contains every
/// multiple of g(N) that fits, for each N <= n_max.
Window1D ts_generate(const TsSchedule& schedule, std::int64_t lo,
                     std::int64_t hi);

/// Minimal 1D window that s must cover so that every m + p_i(n) with
/// (m, n) in the box is decidable.
Interval required_base_window(const PolyFamily& polys, Box box);

/// {(m, n) in box : m + p_i(n) in s for every i}. The base window must cover
/// required_base_window(polys, box); violations are reported up front,
/// naming the offending (n, p_i) pair; cells are never silently clipped.
Window2D return_set(const Window1D& s, const PolyFamily& polys, Box box);

/// Full measurement pipeline: generate S over the required window, form the
/// return set, and measure the 2D covering gap of its block starts for all
/// block shapes up to (block_m_max, block_n_max).
struct HarnessReport {
    std::string polys;
    std::string schedule;
    Box box{0, 0, 0, 0};
    Interval base_window{0, 0};
    std::int64_t return_cells = 0;
    TsProfile2D profile;
    /// "pass" if every measured gap is finite, else "inconclusive": an
    /// absent gap at window scale cannot distinguish "not thickly syndetic"
    /// from "window too small".
    std::string verdict;
};

HarnessReport return_set_harness(const TsSchedule& schedule,
                                 const PolyFamily& polys, Box box,
                                 std::int64_t block_m_max,
                                 std::int64_t block_n_max);

}  // namespace syndetica
