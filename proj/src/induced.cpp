#include "syndetica/induced.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "syndetica/return_set.hpp"
#include "syndetica/systems.hpp"

namespace syndetica {

TruncPoint::TruncPoint(Kind kind, SeqWindow base,
                       std::optional<PolyFamily> polys, int arity,
                       std::int64_t coord_radius, std::int64_t window_radius)
    : kind_(kind),
      base_(std::move(base)),
      polys_(std::move(polys)),
      arity_(arity),
      coord_radius_(coord_radius),
      window_radius_(window_radius) {
    if (coord_radius_ < 0 || window_radius_ < 0)
        throw std::invalid_argument("truncation radii must be >= 0");
    if (arity_ < 1) throw std::invalid_argument("arity must be >= 1");
}

TruncPoint TruncPoint::poly_orbit(SeqWindow base, PolyFamily polys,
                                  std::int64_t coord_radius,
                                  std::int64_t window_radius) {
    return poly_orbit_at(std::move(base), std::move(polys), coord_radius,
                         window_radius, GroupElement{0, 0});
}

TruncPoint TruncPoint::poly_orbit_at(SeqWindow base, PolyFamily polys,
                                     std::int64_t coord_radius,
                                     std::int64_t window_radius,
                                     GroupElement position) {
    const int d = polys.d();
    TruncPoint p(Kind::poly_orbit, std::move(base), std::move(polys), d,
                 coord_radius, window_radius);
    p.pos_ = position;
    p.validate_coverage();
    return p;
}

TruncPoint TruncPoint::diagonal(SeqWindow base, int arity,
                                std::int64_t coord_radius,
                                std::int64_t window_radius) {
    TruncPoint p(Kind::diagonal, std::move(base), std::nullopt, arity,
                 coord_radius, window_radius);
    p.validate_coverage();
    return p;
}

std::int64_t TruncPoint::base_index(std::int64_t coord, int component,
                                    std::int64_t offset) const {
    return base_index_at(pos_, coord, component, offset);
}

std::int64_t TruncPoint::base_index_at(GroupElement pos, std::int64_t coord,
                                       int component,
                                       std::int64_t offset) const {
    if (coord < -coord_radius_ || coord > coord_radius_)
        throw std::out_of_range("coordinate outside truncation");
    if (component < 0 || component >= arity_)
        throw std::out_of_range("component outside tuple");
    if (offset < -window_radius_ || offset > window_radius_)
        throw std::out_of_range("offset outside observation window");
    if (kind_ == Kind::diagonal) {
        // Constant in the coordinate; the index shift acts trivially.
        return checked::add(pos.t_power, offset);
    }
    const std::int64_t poly_arg = checked::add(coord, pos.shift_power);
    const std::int64_t power =
        checked::add(pos.t_power, polys_->poly(component).eval(poly_arg));
    return checked::add(power, offset);
}

void TruncPoint::validate_coverage() const {
    for (std::int64_t n = -coord_radius_; n <= coord_radius_; ++n) {
        for (int i = 0; i < arity_; ++i) {
            for (std::int64_t w : {-window_radius_, window_radius_}) {
                std::int64_t idx;
                try {
                    idx = base_index(n, i, w);
                } catch (const std::overflow_error&) {
                    throw coverage_error("index overflow while materializing", n, i);
                }
                if (base_.sidedness() == Sidedness::one_sided && idx < 0)
                    continue;  // clipped, not missing
                if (idx < base_.lo() || idx > base_.hi()) {
                    std::ostringstream os;
                    os << "base window [" << base_.lo() << ", " << base_.hi()
                       << "] does not cover index " << idx << " needed by coordinate "
                       << n << ", component " << i;
                    throw coverage_error(os.str(), n, i);
                }
            }
        }
    }
}

TruncPoint TruncPoint::acted(GroupElement g) const {
    TruncPoint p = *this;
    p.pos_.t_power = checked::add(pos_.t_power, g.t_power);
    p.pos_.shift_power = checked::add(pos_.shift_power, g.shift_power);
    p.validate_coverage();
    return p;
}

Symbol TruncPoint::sym(std::int64_t coord, int component,
                       std::int64_t w) const {
    return base_.at(base_index(coord, component, w));
}

Symbol TruncPoint::sym_acted(GroupElement extra, std::int64_t coord,
                             int component, std::int64_t w) const {
    const GroupElement pos{checked::add(pos_.t_power, extra.t_power),
                           checked::add(pos_.shift_power, extra.shift_power)};
    return base_.at(base_index_at(pos, coord, component, w));
}

Word TruncPoint::slot_window(std::int64_t coord, int component) const {
    std::vector<Symbol> sym;
    sym.reserve(static_cast<std::size_t>(2 * window_radius_ + 1));
    for (std::int64_t w = -window_radius_; w <= window_radius_; ++w) {
        const std::int64_t idx = base_index(coord, component, w);
        if (base_.sidedness() == Sidedness::one_sided && idx < 0) continue;
        sym.push_back(base_.at(idx));
    }
    return Word(std::move(sym));
}

namespace {

/// Largest radius <= max_radius on which one slot pair agrees; -1 if the
/// centers differ. One-sided base indices below 0 are skipped when both
/// sides clip them symmetrically (they do not exist rather than disagree).
std::int64_t slot_agreement(const TruncPoint& a, const TruncPoint& b,
                            std::int64_t coord, int comp,
                            std::int64_t max_radius) {
    std::int64_t radius = -1;
    for (std::int64_t r = 0; r <= max_radius; ++r) {
        for (std::int64_t w : {r, -r}) {
            if (r == 0 && w != 0) continue;
            const std::int64_t ia = a.base_index(coord, comp, w);
            const std::int64_t ib = b.base_index(coord, comp, w);
            const bool a_gone =
                a.base().sidedness() == Sidedness::one_sided && ia < 0;
            const bool b_gone =
                b.base().sidedness() == Sidedness::one_sided && ib < 0;
            if (a_gone != b_gone) return radius;
            if (a_gone && b_gone) continue;
            if (a.base().at(ia) != b.base().at(ib)) return radius;
        }
        radius = r;
    }
    return radius;
}

void require_same_arity(const TruncPoint& a, const TruncPoint& b) {
    if (a.arity() != b.arity())
        throw std::invalid_argument("points have different arity");
}

}  // namespace

std::vector<std::int64_t> TruncPoint::agreement_radii(
    const TruncPoint& other, std::int64_t max_radius) const {
    require_same_arity(*this, other);
    const std::int64_t k = std::min(coord_radius_, other.coord_radius_);
    const std::int64_t cap =
        std::min({max_radius, window_radius_, other.window_radius_});
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(2 * k + 1));
    for (std::int64_t n = -k; n <= k; ++n) {
        std::int64_t r = cap;
        for (int i = 0; i < arity_; ++i)
            r = std::min(r, slot_agreement(*this, other, n, i, cap));
        out.push_back(r);
    }
    return out;
}

bool TruncPoint::agrees_with(const TruncPoint& other,
                             std::int64_t radius) const {
    require_same_arity(*this, other);
    const std::int64_t k = std::min(coord_radius_, other.coord_radius_);
    for (std::int64_t n = -k; n <= k; ++n)
        for (int i = 0; i < arity_; ++i)
            if (slot_agreement(*this, other, n, i, radius) < radius)
                return false;
    return true;
}

bool TruncPoint::same_truncation(const TruncPoint& other) const {
    if (arity_ != other.arity_ || coord_radius_ != other.coord_radius_ ||
        window_radius_ != other.window_radius_)
        return false;
    return agrees_with(other, window_radius_);
}

bool TruncPoint::returns_at(GroupElement g, std::int64_t radius) const {
    const GroupElement moved{checked::add(pos_.t_power, g.t_power),
                             checked::add(pos_.shift_power, g.shift_power)};
    const bool one_sided = base_.sidedness() == Sidedness::one_sided;
    auto observable = [&](std::int64_t idx) {
        return idx >= base_.lo() && idx <= base_.hi();
    };
    for (std::int64_t n = -coord_radius_; n <= coord_radius_; ++n) {
        for (int i = 0; i < arity_; ++i) {
            for (std::int64_t w = -radius; w <= radius; ++w) {
                const std::int64_t ia = base_index_at(pos_, n, i, w);
                const std::int64_t ib = base_index_at(moved, n, i, w);
                const bool a_gone = one_sided && ia < 0;
                const bool b_gone = one_sided && ib < 0;
                if (a_gone && b_gone) continue;
                if (a_gone != b_gone) return false;
                if (!observable(ia) || !observable(ib)) {
                    std::ostringstream os;
                    os << "probe at (" << g.t_power << ", " << g.shift_power
                       << ") needs unobservable base index";
                    throw coverage_error(os.str(), n, i);
                }
                if (base_.at_unchecked(ia) != base_.at_unchecked(ib))
                    return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Bridge

Window2D induced_hitting_set(const Window1D& s, const PolyFamily& polys,
                             Box box) {
    const SeqWindow x = bebutov_indicator(s);
    // Anchor the truncated orbit point at the box corner; every other cell
    // is reached by group elements relative to it.
    const TruncPoint corner = TruncPoint::poly_orbit_at(
        x, polys, 0, 0, GroupElement{box.mlo, box.nlo});
    Window2D hits(box);
    for (std::int64_t k = box.nlo; k <= box.nhi; ++k) {
        for (std::int64_t m = box.mlo; m <= box.mhi; ++m) {
            const GroupElement rel{m - box.mlo, k - box.nlo};
            bool inside = true;
            for (int i = 0; i < polys.d() && inside; ++i)
                inside = corner.sym_acted(rel, 0, i, 0) == 0;
            if (inside) hits.set(m, k);
        }
    }
    return hits;
}

BridgeResult bridge(const Window1D& s, const PolyFamily& polys, Box box) {
    BridgeResult out{induced_hitting_set(s, polys, box),
                     return_set(s, polys, box)};
    out.differing_cells = symmetric_difference(out.hitting, out.returns).count();
    out.equal = out.differing_cells == 0;
    return out;
}

// ---------------------------------------------------------------------------
// Linear case

bool linear_shift_check(const SeqWindow& x,
                        const std::vector<std::int64_t>& multipliers,
                        std::int64_t coord_radius, std::int64_t window_radius) {
    const PolyFamily family = PolyFamily::linear(multipliers);
    std::int64_t max_mult = 0;
    for (std::int64_t a : multipliers)
        max_mult = std::max(max_mult, a < 0 ? -a : a);

    const TruncPoint omega =
        TruncPoint::poly_orbit(x, family, coord_radius, window_radius);
    const TruncPoint shifted = omega.acted({0, 1});

    // Right-hand side applies the per-component power map at every
    // coordinate of the already-materialized truncation, so the comparable
    // radius shrinks by the largest multiplier.
    const std::int64_t cmp_radius = window_radius - max_mult;
    if (cmp_radius < 0)
        throw std::invalid_argument("window radius smaller than max multiplier");
    for (std::int64_t n = -coord_radius; n <= coord_radius; ++n) {
        for (std::size_t i = 0; i < multipliers.size(); ++i) {
            const Word slot = omega.slot_window(n, static_cast<int>(i));
            if (slot.size() != 2 * window_radius + 1)
                throw std::invalid_argument(
                    "slot clipped at index 0; positional comparison needs the "
                    "full observation window");
            // slot[j] observes offset j - window_radius of the slot.
            for (std::int64_t w = -cmp_radius; w <= cmp_radius; ++w) {
                const Symbol lhs = shifted.sym(n, static_cast<int>(i), w);
                const Symbol rhs = slot[w + multipliers[i] + window_radius];
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Probes

std::vector<ConvergenceStep> convergence_probe(
    const std::vector<TruncPoint>& steps, const TruncPoint& target,
    std::int64_t radius) {
    std::vector<ConvergenceStep> out;
    out.reserve(steps.size());
    for (const TruncPoint& p : steps) {
        ConvergenceStep step;
        step.radii = p.agreement_radii(target, radius);
        step.min_radius = *std::min_element(step.radii.begin(), step.radii.end());
        step.center_radius = step.radii[step.radii.size() / 2];
        out.push_back(std::move(step));
    }
    return out;
}

RecurrenceResult joint_recurrence_probe(const TruncPoint& point,
                                        std::int64_t radius,
                                        std::int64_t horizon) {
    RecurrenceResult result;
    try {
        for (std::int64_t m = -horizon; m <= horizon; ++m) {
            for (std::int64_t k = -horizon; k <= horizon; ++k) {
                if (m == 0 && k == 0) continue;
                const GroupElement g{m, k};
                if (point.returns_at(g, radius)) {
                    result.verdict = RecurrenceVerdict::recurrent;
                    result.witness = g;
                    return result;
                }
            }
        }
    } catch (const coverage_error& e) {
        result.verdict = RecurrenceVerdict::inconclusive;
        result.note = e.what();
        return result;
    }
    result.verdict = RecurrenceVerdict::not_recurrent;
    return result;
}

}  // namespace syndetica
