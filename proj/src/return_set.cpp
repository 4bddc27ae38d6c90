#include "syndetica/return_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace syndetica {

TsSchedule::TsSchedule(std::vector<std::int64_t> periods)
    : periods_(std::move(periods)) {
    if (periods_.empty()) throw std::invalid_argument("empty schedule");
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        const std::int64_t n = static_cast<std::int64_t>(i) + 1;
        if (periods_[i] < n) {
            std::ostringstream os;
            os << "schedule period g(" << n << ") = " << periods_[i]
               << " is below the run length";
            throw std::invalid_argument(os.str());
        }
        if (i > 0 && periods_[i] <= periods_[i - 1])
            throw std::invalid_argument("schedule must be strictly increasing");
    }
}

TsSchedule TsSchedule::geometric(std::int64_t base, std::int64_t n_max) {
    if (base < 2) throw std::invalid_argument("geometric base must be >= 2");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    std::vector<std::int64_t> ps;
    std::int64_t g = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        g = checked::mul(g, base);
        ps.push_back(g);
    }
    return TsSchedule(std::move(ps));
}

TsSchedule TsSchedule::default_schedule() { return geometric(2, 6); }

bool TsSchedule::member(std::int64_t v) const {
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        const std::int64_t g = periods_[i];
        std::int64_t r = v % g;
        if (r < 0) r += g;
        if (r < static_cast<std::int64_t>(i) + 1) return true;
    }
    return false;
}

std::string TsSchedule::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < periods_.size(); ++i) {
        if (i) os << ",";
        os << periods_[i];
    }
    return os.str();
}

Window1D ts_generate(const TsSchedule& schedule, std::int64_t lo,
                     std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("invalid generation window");
    Window1D s(lo, hi);
    // Walk each residue layer directly rather than testing every point.
    for (std::int64_t n = 1; n <= schedule.n_max(); ++n) {
        const std::int64_t g = schedule.period(n);
        std::int64_t r = lo % g;
        if (r < 0) r += g;
        std::int64_t start = lo - r;  // lattice anchor at or below lo
        for (std::int64_t base = start; base <= hi;
             base = checked::add(base, g)) {
            const std::int64_t run_lo = std::max(base, lo);
            const std::int64_t run_hi =
                base + std::min<std::int64_t>(n - 1, hi - base);
            for (std::int64_t v = run_lo; v <= run_hi; ++v) s.set(v);
        }
    }
    return s;
}

Interval required_base_window(const PolyFamily& polys, Box box) {
    std::int64_t min_p = 0, max_p = 0;
    bool first = true;
    for (const IntPoly& p : polys.polys()) {
        for (std::int64_t n = box.nlo; n <= box.nhi; ++n) {
            const std::int64_t v = p.eval(n);
            if (first) {
                min_p = max_p = v;
                first = false;
            } else {
                min_p = std::min(min_p, v);
                max_p = std::max(max_p, v);
            }
        }
    }
    return {checked::add(box.mlo, min_p), checked::add(box.mhi, max_p)};
}

Window2D return_set(const Window1D& s, const PolyFamily& polys, Box box) {
    // Up-front domain validation: report the first offending (n, p_i) pair.
    for (std::int64_t n = box.nlo; n <= box.nhi; ++n) {
        for (int i = 0; i < polys.d(); ++i) {
            const std::int64_t v = polys.poly(i).eval(n);
            const std::int64_t need_lo = checked::add(box.mlo, v);
            const std::int64_t need_hi = checked::add(box.mhi, v);
            if (need_lo < s.lo() || need_hi > s.hi()) {
                std::ostringstream os;
                os << "base window [" << s.lo() << ", " << s.hi()
                   << "] does not cover m + p(n) for n = " << n << ", p = "
                   << polys.poly(i).to_string() << " (need [" << need_lo
                   << ", " << need_hi << "])";
                throw std::out_of_range(os.str());
            }
        }
    }
    Window2D result(box);
    // Each row n is an intersection of shifted slices of s, word-parallel.
    for (std::int64_t n = box.nlo; n <= box.nhi; ++n) {
        Window1D row = slice_shifted(s, box.mlo, box.mhi, polys.poly(0).eval(n));
        for (int i = 1; i < polys.d(); ++i) {
            row = intersect(
                row, slice_shifted(s, box.mlo, box.mhi, polys.poly(i).eval(n)));
        }
        for (std::int64_t m = box.mlo; m <= box.mhi; ++m)
            if (row.test_unchecked(m)) result.set(m, n);
    }
    return result;
}

HarnessReport return_set_harness(const TsSchedule& schedule,
                                 const PolyFamily& polys, Box box,
                                 std::int64_t block_m_max,
                                 std::int64_t block_n_max) {
    HarnessReport report;
    report.polys = polys.to_string();
    report.schedule = schedule.to_string();
    report.box = box;
    report.base_window = required_base_window(polys, box);
    const Window1D s =
        ts_generate(schedule, report.base_window.lo, report.base_window.hi);
    const Window2D r = return_set(s, polys, box);
    report.return_cells = r.count();
    report.profile = thickly_syndetic_profile_2d(r, block_m_max, block_n_max);
    report.verdict = report.profile.all_finite() ? "pass" : "inconclusive";
    return report;
}

}  // namespace syndetica
