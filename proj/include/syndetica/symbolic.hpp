#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "syndetica/window.hpp"

namespace syndetica {

using Symbol = std::uint8_t;

/// Finite block of symbols. Entries are indexed 0 .. size()-1.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Symbol> symbols) : sym_(std::move(symbols)) {}

    static Word from_string(const std::string& text);
    static Word zeros(std::int64_t count);

    std::int64_t size() const { return static_cast<std::int64_t>(sym_.size()); }
    bool empty() const { return sym_.empty(); }
    Symbol operator[](std::int64_t i) const {
        return sym_[static_cast<std::size_t>(i)];
    }
    const std::vector<Symbol>& symbols() const { return sym_; }

    Word concat(const Word& other) const;
    Word repeated(std::int64_t k) const;

    std::string to_string() const;
    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

private:
    std::vector<Symbol> sym_;
};

enum class Sidedness { one_sided, two_sided };

/// A sequence known exactly on an index interval. One-sided sequences live
/// on the non-negative integers; two-sided on all of Z. Queries outside the
/// known interval are errors, never default symbols.
///
/// Shifting relabels indices by the convention (sigma^k x)_i = x_{i+k}.
/// Storage is shared, so shifted and restricted views are O(1).
class SeqWindow {
public:
    static SeqWindow from_string(const std::string& text, Sidedness side,
                                 std::int64_t lo);
    static SeqWindow from_symbols(std::vector<Symbol> symbols, Sidedness side,
                                  std::int64_t lo);
    static SeqWindow constant(Symbol value, Sidedness side, std::int64_t lo,
                              std::int64_t hi);

    Sidedness sidedness() const { return side_; }
    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    std::int64_t span() const { return hi_ - lo_ + 1; }
    Interval interval() const { return {lo_, hi_}; }
    bool covers(std::int64_t lo, std::int64_t hi) const {
        return lo >= lo_ && hi <= hi_;
    }

    /// Throws std::out_of_range outside the known interval.
    Symbol at(std::int64_t i) const;

    Symbol at_unchecked(std::int64_t i) const {
        return (*data_)[static_cast<std::size_t>(i - data_lo_)];
    }

    /// View of sigma^k of this sequence. For one-sided sequences, indices
    /// that fall below 0 cease to exist.
    SeqWindow shifted(std::int64_t k) const;

    SeqWindow restricted(std::int64_t lo, std::int64_t hi) const;

    /// Materialize [lo, hi] as a word.
    Word slice(std::int64_t lo, std::int64_t hi) const;

    std::string to_string() const;

private:
    SeqWindow(Sidedness side, std::shared_ptr<const std::vector<Symbol>> data,
              std::int64_t data_lo, std::int64_t lo, std::int64_t hi);

    Sidedness side_;
    std::shared_ptr<const std::vector<Symbol>> data_;
    std::int64_t data_lo_;  // index of data_[0] in the current labeling
    std::int64_t lo_;
    std::int64_t hi_;
};

/// Cylinder C_j[b]: sequences exhibiting word b starting at place j.
struct Cylinder {
    Word base;
    std::int64_t place = 0;

    /// Decidable only when s covers [place, place + |base| - 1].
    bool contains(const SeqWindow& s) const;
};

/// Places j where b occurs in s. Result window is [lo, hi - |b| + 1].
Window1D occurrences(const Word& b, const SeqWindow& s);

/// Value of the sequence metric, or a sound bound on it, computed from
/// finite windows. With m the first disagreement index (one-sided: n,
/// two-sided: |n|), the metric is 1/(1+m). Exactness beyond the verified
/// agreement radius would be unsound, so the two cases are kept distinct:
///   exact:   first_diff holds m, value() == 1/(1+m)
///   bound:   agreement verified through agreement_radius R; the true value
///            is strictly below value() == 1/(1+R)
struct MetricValue {
    std::optional<std::int64_t> first_diff;
    std::int64_t agreement_radius = -1;

    bool exact() const { return first_diff.has_value(); }
    double value() const;
};

MetricValue metric(const SeqWindow& x, const SeqWindow& y);

/// Occurrence-offset set {k : u occurs at some j and v occurs at j + k},
/// the window-scale sample of the hitting time set of the two cylinders.
/// Larger known intervals only ever add offsets.
Window1D hitting_offsets(const Word& u, const Word& v, const SeqWindow& s);

/// Distinct k-blocks occurring in s.
std::set<Word> language(const SeqWindow& s, std::int64_t k);

/// All n in [1, n_max] such that sigma^n y and sigma^{2n} y both agree with
/// y on [0, radius], for y the shift of s by `place`. Needs the window to
/// cover [place, place + 2 n_max + radius].
std::vector<std::int64_t> multiple_recurrence_scan(const SeqWindow& s,
                                                   std::int64_t place,
                                                   std::int64_t radius,
                                                   std::int64_t n_max);

}  // namespace syndetica
