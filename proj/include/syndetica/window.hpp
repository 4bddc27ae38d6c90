#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syndetica/errors.hpp"

namespace syndetica {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

}  // namespace checked

/// Closed integer interval [lo, hi].
struct Interval {
    std::int64_t lo;
    std::int64_t hi;

    std::int64_t span() const { return hi - lo + 1; }
    bool contains(std::int64_t n) const { return n >= lo && n <= hi; }
    bool contains(Interval other) const {
        return other.lo >= lo && other.hi <= hi;
    }
    bool operator==(const Interval&) const = default;
};

/// Closed 2D box [mlo, mhi] x [nlo, nhi]. Axis names follow the (m, n)
/// convention used throughout: m is the translation variable, n the
/// polynomial argument.
struct Box {
    std::int64_t mlo;
    std::int64_t mhi;
    std::int64_t nlo;
    std::int64_t nhi;

    std::int64_t m_span() const { return mhi - mlo + 1; }
    std::int64_t n_span() const { return nhi - nlo + 1; }
    std::int64_t area() const { return m_span() * n_span(); }
    Interval m_range() const { return {mlo, mhi}; }
    Interval n_range() const { return {nlo, nhi}; }
    bool contains(std::int64_t m, std::int64_t n) const {
        return m >= mlo && m <= mhi && n >= nlo && n <= nhi;
    }
    bool contains(const Box& other) const {
        return other.mlo >= mlo && other.mhi <= mhi && other.nlo >= nlo &&
               other.nhi <= nhi;
    }
    bool operator==(const Box&) const = default;
};

/// Exact membership mask of an integer set restricted to [lo, hi].
///
/// Membership queries outside the window are hard errors, never silently
/// false: silent falsity would corrupt gap measurements at boundaries.
class Window1D {
public:
    Window1D(std::int64_t lo, std::int64_t hi);

    static Window1D full(std::int64_t lo, std::int64_t hi);

    template <typename Pred>
    static Window1D from_predicate(std::int64_t lo, std::int64_t hi,
                                   Pred&& pred) {
        Window1D w(lo, hi);
        for (std::int64_t n = lo; n <= hi; ++n) {
            if (pred(n)) w.set(n);
        }
        return w;
    }

    static Window1D from_elements(std::int64_t lo, std::int64_t hi,
                                  const std::vector<std::int64_t>& elems);

    std::int64_t lo() const { return lo_; }
    std::int64_t hi() const { return hi_; }
    std::int64_t span() const { return hi_ - lo_ + 1; }
    Interval interval() const { return {lo_, hi_}; }

    /// Throws std::out_of_range for n outside [lo, hi].
    bool contains(std::int64_t n) const;

    void set(std::int64_t n, bool value = true);

    std::int64_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<std::int64_t> elements() const;
    std::optional<std::int64_t> min_element() const;
    std::optional<std::int64_t> max_element() const;

    /// Index relabeling n -> n + k; membership is unchanged.
    Window1D shifted(std::int64_t k) const;

    /// Sub-window on [lo, hi], which must lie inside this window.
    Window1D restricted(std::int64_t lo, std::int64_t hi) const;

    Window1D complemented() const;

    bool operator==(const Window1D& other) const;

    /// Raw mask access for serialization; bit i corresponds to lo + i.
    const std::vector<std::uint64_t>& words() const { return bits_; }
    void assign_words(std::vector<std::uint64_t> words);

    friend Window1D union_of(const Window1D& a, const Window1D& b);
    friend Window1D intersect(const Window1D& a, const Window1D& b);
    friend Window1D minus(const Window1D& a, const Window1D& b);

    /// {m in [lo, hi] : m + shift in s}. The source window must cover the
    /// whole shifted range.
    friend Window1D slice_shifted(const Window1D& s, std::int64_t lo,
                                  std::int64_t hi, std::int64_t shift);

    /// dst |= {k + delta : k in src}, word-parallel. The relabeled source
    /// must fit inside dst.
    friend void or_shifted_into(Window1D& dst, const Window1D& src,
                                std::int64_t delta);

    bool test_unchecked(std::int64_t n) const {
        const std::uint64_t i = static_cast<std::uint64_t>(n - lo_);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

private:
    std::int64_t lo_;
    std::int64_t hi_;
    std::vector<std::uint64_t> bits_;

    void clear_tail();
    static void require_same_window(const Window1D& a, const Window1D& b);
};

Window1D union_of(const Window1D& a, const Window1D& b);
Window1D intersect(const Window1D& a, const Window1D& b);
Window1D minus(const Window1D& a, const Window1D& b);
Window1D slice_shifted(const Window1D& s, std::int64_t lo, std::int64_t hi,
                       std::int64_t shift);
void or_shifted_into(Window1D& dst, const Window1D& src, std::int64_t delta);

/// Exact membership mask of a subset of Z^2 restricted to a box.
/// Row-major: rows are indexed by m, columns by n.
class Window2D {
public:
    explicit Window2D(Box box);

    static Window2D full(Box box);

    template <typename Pred>
    static Window2D from_predicate(Box box, Pred&& pred) {
        Window2D w(box);
        for (std::int64_t m = box.mlo; m <= box.mhi; ++m) {
            for (std::int64_t n = box.nlo; n <= box.nhi; ++n) {
                if (pred(m, n)) w.set(m, n);
            }
        }
        return w;
    }

    const Box& box() const { return box_; }
    std::int64_t m_span() const { return box_.m_span(); }
    std::int64_t n_span() const { return box_.n_span(); }

    /// Throws std::out_of_range outside the box.
    bool contains(std::int64_t m, std::int64_t n) const;

    void set(std::int64_t m, std::int64_t n, bool value = true);

    std::int64_t count() const;
    bool empty() const { return count() == 0; }
    std::vector<std::pair<std::int64_t, std::int64_t>> elements() const;

    /// Row m as a 1D window over [nlo, nhi].
    Window1D row(std::int64_t m) const;

    bool operator==(const Window2D& other) const;

    const std::vector<std::uint64_t>& words() const { return bits_; }
    void assign_words(std::vector<std::uint64_t> words);

    /// Cells present in exactly one of the two windows (same box required).
    friend Window2D symmetric_difference(const Window2D& a, const Window2D& b);

    bool test_unchecked(std::int64_t m, std::int64_t n) const {
        const std::uint64_t i = index(m, n);
        return (bits_[i >> 6] >> (i & 63)) & 1u;
    }

private:
    Box box_;
    std::vector<std::uint64_t> bits_;

    std::uint64_t index(std::int64_t m, std::int64_t n) const {
        return static_cast<std::uint64_t>((m - box_.mlo) * box_.n_span() +
                                          (n - box_.nlo));
    }
    void clear_tail();
};

Window2D symmetric_difference(const Window2D& a, const Window2D& b);

/// Integral polynomial with zero constant term: p(n) = sum c_k n^k, k >= 1.
/// Evaluation is checked 64-bit; overflow raises, never wraps.
class IntPoly {
public:
    IntPoly() = default;  // zero polynomial
    explicit IntPoly(std::vector<std::int64_t> coeffs);

    /// coeffs[k-1] = c_k.
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()); }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t eval(std::int64_t n) const;
    std::int64_t operator()(std::int64_t n) const { return eval(n); }

    std::string to_string() const;
    bool operator==(const IntPoly&) const = default;

private:
    std::vector<std::int64_t> coeffs_;
};

/// Ordered family {p_1, ..., p_d}, d >= 1.
class PolyFamily {
public:
    explicit PolyFamily(std::vector<IntPoly> polys);

    /// Linear family {a_1 n, ..., a_d n}.
    static PolyFamily linear(const std::vector<std::int64_t>& multipliers);

    const std::vector<IntPoly>& polys() const { return polys_; }
    int d() const { return static_cast<int>(polys_.size()); }
    const IntPoly& poly(int i) const { return polys_.at(static_cast<size_t>(i)); }

    std::string to_string() const;
    bool operator==(const PolyFamily&) const = default;

private:
    std::vector<IntPoly> polys_;
};

}  // namespace syndetica
