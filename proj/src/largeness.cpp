#include "syndetica/largeness.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace syndetica {

namespace {

void require_core_inside(Interval core, Interval window) {
    if (!window.contains(core)) {
        std::ostringstream os;
        os << "core [" << core.lo << ", " << core.hi << "] not inside window ["
           << window.lo << ", " << window.hi << "]";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

std::optional<std::int64_t> syndetic_gap(const Window1D& s, Interval core) {
    require_core_inside(core, s.interval());
    std::int64_t longest_hole = 0;
    std::int64_t hole = 0;
    bool seen = false;
    for (std::int64_t n = core.lo; n <= core.hi; ++n) {
        if (s.test_unchecked(n)) {
            seen = true;
            hole = 0;
        } else {
            ++hole;
            longest_hole = std::max(longest_hole, hole);
        }
    }
    if (!seen) return std::nullopt;
    return longest_hole + 1;
}

Window1D run_starts(const Window1D& s, std::int64_t run_len) {
    if (run_len < 1) throw std::invalid_argument("run length must be >= 1");
    if (run_len > s.span())
        throw std::invalid_argument("run length exceeds window span");
    Window1D starts(s.lo(), s.hi() - run_len + 1);
    std::int64_t run = 0;
    for (std::int64_t n = s.hi(); n >= s.lo(); --n) {
        run = s.test_unchecked(n) ? run + 1 : 0;
        if (n <= starts.hi() && run >= run_len) starts.set(n);
    }
    return starts;
}

bool TsProfile::all_finite() const {
    return std::all_of(gaps.begin(), gaps.end(),
                       [](const auto& g) { return g.has_value(); });
}

bool TsProfile::certified_at(std::int64_t bound) const {
    return std::all_of(gaps.begin(), gaps.end(), [bound](const auto& g) {
        return g.has_value() && *g <= bound;
    });
}

TsProfile thickly_syndetic_profile(const Window1D& s, std::int64_t n_max,
                                   Interval core) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    require_core_inside(core, s.interval());
    // Run-start membership must be decidable on the whole core for every N.
    if (core.hi > s.hi() - n_max + 1) {
        std::ostringstream os;
        os << "window ends at " << s.hi() << " but deciding length-" << n_max
           << " runs on core up to " << core.hi << " needs data through "
           << core.hi + n_max - 1;
        throw insufficient_window_error(os.str());
    }
    TsProfile profile;
    profile.n_max = n_max;
    profile.core = core;
    profile.gaps.reserve(static_cast<std::size_t>(n_max));
    for (std::int64_t n = 1; n <= n_max; ++n) {
        profile.gaps.push_back(syndetic_gap(run_starts(s, n), core));
    }
    return profile;
}

std::optional<std::int64_t> piecewise_syndetic_witness(const Window1D& s,
                                                       std::int64_t gap,
                                                       std::int64_t stretch) {
    if (gap < 1) throw std::invalid_argument("gap must be >= 1");
    if (stretch < gap) throw std::invalid_argument("stretch must be >= gap");
    if (stretch > s.span())
        throw std::invalid_argument("stretch exceeds window span");
    // covered[n] <=> [n, n+gap-1] meets s; a witness is a run of
    // (stretch - gap + 1) covered positions.
    const Window1D covered =
        run_starts(s.complemented(), gap).complemented();
    const Window1D witnesses = run_starts(covered, stretch - gap + 1);
    return witnesses.min_element();
}

std::optional<std::int64_t> thick_witness(const Window1D& s,
                                          std::int64_t run_len, Interval core) {
    require_core_inside(core, s.interval());
    if (run_len < 1) throw std::invalid_argument("run length must be >= 1");
    // a sound "no run begins in the core" needs every core position decidable
    if (run_len > s.span() || core.hi > s.hi() - run_len + 1) {
        std::ostringstream os;
        os << "deciding length-" << run_len << " runs on core up to " << core.hi
           << " needs data through " << core.hi + run_len - 1
           << ", window ends at " << s.hi();
        throw insufficient_window_error(os.str());
    }
    return run_starts(s, run_len).restricted(core.lo, core.hi).min_element();
}

std::optional<std::int64_t> syndetic_gap_2d(const Window2D& s, Box core) {
    if (!s.box().contains(core)) {
        std::ostringstream os;
        os << "core box not inside window box";
        throw std::invalid_argument(os.str());
    }
    const std::int64_t cm = core.m_span();
    const std::int64_t cn = core.n_span();
    // Largest all-empty square with bottom-right corner at each cell.
    std::vector<std::int64_t> prev(static_cast<std::size_t>(cn), 0);
    std::vector<std::int64_t> cur(static_cast<std::size_t>(cn), 0);
    std::int64_t largest_empty = 0;
    bool seen = false;
    for (std::int64_t i = 0; i < cm; ++i) {
        for (std::int64_t j = 0; j < cn; ++j) {
            if (s.test_unchecked(core.mlo + i, core.nlo + j)) {
                cur[static_cast<std::size_t>(j)] = 0;
                seen = true;
            } else if (i == 0 || j == 0) {
                cur[static_cast<std::size_t>(j)] = 1;
            } else {
                cur[static_cast<std::size_t>(j)] =
                    1 + std::min({prev[static_cast<std::size_t>(j)],
                                  cur[static_cast<std::size_t>(j - 1)],
                                  prev[static_cast<std::size_t>(j - 1)]});
            }
            largest_empty =
                std::max(largest_empty, cur[static_cast<std::size_t>(j)]);
        }
        std::swap(prev, cur);
    }
    if (!seen) return std::nullopt;
    if (largest_empty >= std::min(cm, cn)) return std::nullopt;
    return largest_empty + 1;
}

Window2D block_starts(const Window2D& s, std::int64_t m_len,
                      std::int64_t n_len) {
    if (m_len < 1 || n_len < 1)
        throw std::invalid_argument("block dimensions must be >= 1");
    const Box& b = s.box();
    if (m_len > b.m_span() || n_len > b.n_span())
        throw std::invalid_argument("block does not fit in box");
    const Box out_box{b.mlo, b.mhi - m_len + 1, b.nlo, b.nhi - n_len + 1};

    // horiz[m][j] <=> n_len consecutive cells in row m starting at column j.
    // Then count runs of m_len in the m direction.
    std::vector<std::int64_t> vertical_run(
        static_cast<std::size_t>(out_box.n_span()), 0);
    Window2D starts(out_box);
    std::vector<char> horiz(static_cast<std::size_t>(out_box.n_span()), 0);
    // Scan m from high to low so vertical runs can extend downward.
    for (std::int64_t m = b.mhi; m >= b.mlo; --m) {
        std::int64_t hrun = 0;
        for (std::int64_t n = b.nhi; n >= b.nlo; --n) {
            hrun = s.test_unchecked(m, n) ? hrun + 1 : 0;
            if (n <= out_box.nhi)
                horiz[static_cast<std::size_t>(n - b.nlo)] =
                    hrun >= n_len ? 1 : 0;
        }
        for (std::int64_t n = b.nlo; n <= out_box.nhi; ++n) {
            auto& vr = vertical_run[static_cast<std::size_t>(n - b.nlo)];
            vr = horiz[static_cast<std::size_t>(n - b.nlo)] ? vr + 1 : 0;
            if (m <= out_box.mhi && vr >= m_len) starts.set(m, n);
        }
    }
    return starts;
}

bool TsProfile2D::all_finite() const {
    return std::all_of(gaps.begin(), gaps.end(),
                       [](const auto& g) { return g.has_value(); });
}

TsProfile2D thickly_syndetic_profile_2d(const Window2D& s, std::int64_t m_max,
                                        std::int64_t n_max) {
    if (m_max < 1 || n_max < 1)
        throw std::invalid_argument("block bounds must be >= 1");
    if (m_max > s.box().m_span() || n_max > s.box().n_span())
        throw insufficient_window_error(
            "box too small for requested block bounds");
    TsProfile2D profile;
    profile.m_max = m_max;
    profile.n_max = n_max;
    for (std::int64_t m_len = 1; m_len <= m_max; ++m_len) {
        for (std::int64_t n_len = 1; n_len <= n_max; ++n_len) {
            const Window2D starts = block_starts(s, m_len, n_len);
            profile.cores.push_back(starts.box());
            profile.gaps.push_back(syndetic_gap_2d(starts, starts.box()));
            profile.start_counts.push_back(starts.count());
        }
    }
    return profile;
}

}  // namespace syndetica
