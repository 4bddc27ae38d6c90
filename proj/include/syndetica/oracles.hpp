#pragma once

#include <optional>

#include "syndetica/window.hpp"

namespace syndetica::oracle {

/// Naive reference scans. Each mirrors the definition of a detector as
/// directly as possible and shares no code with the production path; the
/// unit tests and the acceptance suite hold the two routes equal.

std::optional<std::int64_t> syndetic_gap(const Window1D& s, Interval core);

Window1D run_starts(const Window1D& s, std::int64_t run_len);

std::optional<std::int64_t> piecewise_syndetic_witness(const Window1D& s,
                                                       std::int64_t gap,
                                                       std::int64_t stretch);

std::optional<std::int64_t> syndetic_gap_2d(const Window2D& s, Box core);

Window2D block_starts(const Window2D& s, std::int64_t m_len,
                      std::int64_t n_len);

/// Per-cell double loop with per-cell polynomial evaluation.
Window2D return_set(const Window1D& s, const PolyFamily& polys, Box box);

/// Naive power evaluation, term by term.
std::int64_t poly_eval(const IntPoly& p, std::int64_t n);

}  // namespace syndetica::oracle
