#pragma once

#include <optional>
#include <vector>

#include "syndetica/symbolic.hpp"
#include "syndetica/window.hpp"

namespace syndetica {

/// Element (m, k) of the acting group: m steps of the coordinatewise map,
/// k steps of the index shift. The two generators commute, so composition
/// order never matters and elements add componentwise.
struct GroupElement {
    std::int64_t t_power = 0;
    std::int64_t shift_power = 0;

    GroupElement operator+(GroupElement other) const {
        return {t_power + other.t_power, shift_power + other.shift_power};
    }
    bool operator==(const GroupElement&) const = default;
    bool is_identity() const { return t_power == 0 && shift_power == 0; }
};

/// Finite truncation of a point of (X^d)^Z: coordinates n in [-K, K], each a
/// d-tuple of observation windows of radius W into the base sequence.
///
/// Points are stored by provenance (base sequence plus accumulated group
/// element) and re-materialized on demand, so acting by large powers loses
/// no information as long as the base covers the required indices. A
/// naively window-shrinking truncation would make deep orbits vacuous.
///
/// Two provenance kinds exist: the polynomial-orbit point (coordinate n is
/// the base advanced by p_i(n) in component i) and the diagonal point
/// (every coordinate is the same d-tuple, constant in n; the index shift
/// fixes it).
class TruncPoint {
public:
    /// Truncation of the polynomial-orbit point of `base`. Validates that
    /// the base covers p_i(n) +- W for all |n| <= coord_radius.
    static TruncPoint poly_orbit(SeqWindow base, PolyFamily polys,
                                 std::int64_t coord_radius,
                                 std::int64_t window_radius);

    /// Same, but already moved to `position` (validated there, not at the
    /// identity). Used to anchor scans whose box excludes the identity.
    static TruncPoint poly_orbit_at(SeqWindow base, PolyFamily polys,
                                    std::int64_t coord_radius,
                                    std::int64_t window_radius,
                                    GroupElement position);

    /// Truncation of the constant point with value `base` in every slot.
    static TruncPoint diagonal(SeqWindow base, int arity,
                               std::int64_t coord_radius,
                               std::int64_t window_radius);

    int arity() const { return arity_; }
    std::int64_t coord_radius() const { return coord_radius_; }
    std::int64_t window_radius() const { return window_radius_; }
    GroupElement position() const { return pos_; }
    const SeqWindow& base() const { return base_; }

    /// Apply a group element. Coverage is re-validated at the new powers;
    /// the truncation parameters are unchanged.
    TruncPoint acted(GroupElement g) const;

    /// Base-sequence index observed at (coordinate, component, offset).
    std::int64_t base_index(std::int64_t coord, int component,
                            std::int64_t offset) const;

    /// Symbol at relative offset w in component `component` of coordinate
    /// `coord`. Bounds-checked against the truncation and the base window.
    Symbol sym(std::int64_t coord, int component, std::int64_t w) const;

    /// Symbol of the point moved by `extra`, without building the moved
    /// point. Equivalent to acted(extra).sym(...).
    Symbol sym_acted(GroupElement extra, std::int64_t coord, int component,
                     std::int64_t w) const;

    /// Observation window of one slot, materialized. For one-sided bases the
    /// window is clipped at index 0.
    Word slot_window(std::int64_t coord, int component) const;

    /// Per-coordinate agreement radii against another point with identical
    /// shape, capped at max_radius; -1 means the center symbols differ.
    std::vector<std::int64_t> agreement_radii(const TruncPoint& other,
                                              std::int64_t max_radius) const;

    /// All coordinates, components and offsets up to `radius` agree.
    bool agrees_with(const TruncPoint& other, std::int64_t radius) const;

    /// Cell-exact equality of the full truncations.
    bool same_truncation(const TruncPoint& other) const;

    /// Does acting by g return this point to itself at the given agreement
    /// radius? Allocation-free equivalent of acted(g).agrees_with(*this, r);
    /// throws coverage_error when the moved point is not observable.
    bool returns_at(GroupElement g, std::int64_t radius) const;

private:
    enum class Kind { poly_orbit, diagonal };

    TruncPoint(Kind kind, SeqWindow base, std::optional<PolyFamily> polys,
               int arity, std::int64_t coord_radius, std::int64_t window_radius);

    std::int64_t base_index_at(GroupElement pos, std::int64_t coord,
                               int component, std::int64_t offset) const;
    void validate_coverage() const;

    Kind kind_;
    SeqWindow base_;
    std::optional<PolyFamily> polys_;
    int arity_;
    std::int64_t coord_radius_;
    std::int64_t window_radius_;
    GroupElement pos_{0, 0};
};

/// Hitting set of the polynomial-orbit point against the center cylinder:
/// cells (m, k) in the box such that coordinate 0 of the acted point has
/// symbol 0 at its center in every component. Computed through the induced
/// machinery; return_set() computes the same set arithmetically.
Window2D induced_hitting_set(const Window1D& s, const PolyFamily& polys,
                             Box box);

struct BridgeResult {
    Window2D hitting;
    Window2D returns;
    std::int64_t differing_cells = 0;
    bool equal = false;
};

/// Both sides of the hitting-set / return-set identity, computed by
/// independent code paths (dynamical scan vs word-sliced arithmetic scan).
BridgeResult bridge(const Window1D& s, const PolyFamily& polys, Box box);

/// For a linear family {a_1 n, ..., a_d n}: the index shift of the orbit
/// point equals the per-component power map applied at every coordinate.
/// Checks the identity cell-exactly on the truncation; the right-hand side
/// is computed on materialized windows, so the comparable radius shrinks by
/// max |a_i|.
bool linear_shift_check(const SeqWindow& x,
                        const std::vector<std::int64_t>& multipliers,
                        std::int64_t coord_radius, std::int64_t window_radius);

struct ConvergenceStep {
    std::vector<std::int64_t> radii;  // per coordinate, -K..K
    std::int64_t min_radius = -1;
    std::int64_t center_radius = -1;  // coordinate 0
};

/// Per-step agreement radii of a sequence of points against a target.
std::vector<ConvergenceStep> convergence_probe(
    const std::vector<TruncPoint>& steps, const TruncPoint& target,
    std::int64_t radius);

enum class RecurrenceVerdict { recurrent, not_recurrent, inconclusive };

struct RecurrenceResult {
    RecurrenceVerdict verdict = RecurrenceVerdict::inconclusive;
    std::optional<GroupElement> witness;
    std::string note;
};

/// Exhaustive scan for a nonidentity g with |m|, |k| <= horizon whose action
/// returns the point to itself at the given agreement radius. Coverage
/// failures yield "inconclusive", never a pass or fail.
RecurrenceResult joint_recurrence_probe(const TruncPoint& point,
                                        std::int64_t radius,
                                        std::int64_t horizon);

}  // namespace syndetica
