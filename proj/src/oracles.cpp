#include "syndetica/oracles.hpp"

#include <algorithm>

namespace syndetica::oracle {

std::optional<std::int64_t> syndetic_gap(const Window1D& s, Interval core) {
    bool any = false;
    for (std::int64_t n = core.lo; n <= core.hi; ++n)
        if (s.contains(n)) any = true;
    if (!any) return std::nullopt;
    for (std::int64_t g = 1;; ++g) {
        bool all_hit = true;
        for (std::int64_t a = core.lo; a + g - 1 <= core.hi && all_hit; ++a) {
            bool hit = false;
            for (std::int64_t v = a; v < a + g; ++v)
                if (s.contains(v)) {
                    hit = true;
                    break;
                }
            all_hit = hit;
        }
        if (all_hit) return g;
    }
}

Window1D run_starts(const Window1D& s, std::int64_t run_len) {
    Window1D starts(s.lo(), s.hi() - run_len + 1);
    for (std::int64_t n = starts.lo(); n <= starts.hi(); ++n) {
        bool all = true;
        for (std::int64_t v = n; v < n + run_len; ++v)
            if (!s.contains(v)) {
                all = false;
                break;
            }
        if (all) starts.set(n);
    }
    return starts;
}

std::optional<std::int64_t> piecewise_syndetic_witness(const Window1D& s,
                                                       std::int64_t gap,
                                                       std::int64_t stretch) {
    for (std::int64_t a = s.lo(); a + stretch - 1 <= s.hi(); ++a) {
        bool good = true;
        for (std::int64_t n = a; n + gap - 1 <= a + stretch - 1 && good; ++n) {
            bool hit = false;
            for (std::int64_t v = n; v < n + gap; ++v)
                if (s.contains(v)) {
                    hit = true;
                    break;
                }
            good = hit;
        }
        if (good) return a;
    }
    return std::nullopt;
}

std::optional<std::int64_t> syndetic_gap_2d(const Window2D& s, Box core) {
    bool any = false;
    for (std::int64_t m = core.mlo; m <= core.mhi && !any; ++m)
        for (std::int64_t n = core.nlo; n <= core.nhi && !any; ++n)
            if (s.contains(m, n)) any = true;
    if (!any) return std::nullopt;
    const std::int64_t max_g = std::min(core.m_span(), core.n_span());
    for (std::int64_t g = 1; g <= max_g; ++g) {
        bool all_hit = true;
        for (std::int64_t m = core.mlo; m + g - 1 <= core.mhi && all_hit; ++m) {
            for (std::int64_t n = core.nlo; n + g - 1 <= core.nhi && all_hit;
                 ++n) {
                bool hit = false;
                for (std::int64_t i = 0; i < g && !hit; ++i)
                    for (std::int64_t j = 0; j < g && !hit; ++j)
                        if (s.contains(m + i, n + j)) hit = true;
                all_hit = hit;
            }
        }
        if (all_hit) return g;
    }
    return std::nullopt;
}

Window2D block_starts(const Window2D& s, std::int64_t m_len,
                      std::int64_t n_len) {
    const Box& b = s.box();
    Window2D starts({b.mlo, b.mhi - m_len + 1, b.nlo, b.nhi - n_len + 1});
    for (std::int64_t m = starts.box().mlo; m <= starts.box().mhi; ++m) {
        for (std::int64_t n = starts.box().nlo; n <= starts.box().nhi; ++n) {
            bool solid = true;
            for (std::int64_t i = 0; i < m_len && solid; ++i)
                for (std::int64_t j = 0; j < n_len && solid; ++j)
                    if (!s.contains(m + i, n + j)) solid = false;
            if (solid) starts.set(m, n);
        }
    }
    return starts;
}

Window2D return_set(const Window1D& s, const PolyFamily& polys, Box box) {
    Window2D result(box);
    for (std::int64_t m = box.mlo; m <= box.mhi; ++m) {
        for (std::int64_t n = box.nlo; n <= box.nhi; ++n) {
            bool all = true;
            for (int i = 0; i < polys.d() && all; ++i)
                all = s.contains(m + poly_eval(polys.poly(i), n));
            if (all) result.set(m, n);
        }
    }
    return result;
}

std::int64_t poly_eval(const IntPoly& p, std::int64_t n) {
    std::int64_t sum = 0;
    for (int k = 1; k <= p.degree(); ++k) {
        std::int64_t power = 1;
        for (int j = 0; j < k; ++j) power = checked::mul(power, n);
        sum = checked::add(sum,
                           checked::mul(p.coeffs()[static_cast<std::size_t>(k - 1)],
                                        power));
    }
    return sum;
}

}  // namespace syndetica::oracle
