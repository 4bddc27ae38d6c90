#include "syndetica/window.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace syndetica {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in multiplication");
    return r;
}

}  // namespace checked

namespace {

std::size_t word_count(std::int64_t span) {
    return static_cast<std::size_t>((span + 63) / 64);
}

[[noreturn]] void bad_window(std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    os << "invalid window [" << lo << ", " << hi << "]: lo > hi";
    throw std::invalid_argument(os.str());
}

// Index arithmetic throughout assumes a little headroom below the integer
// limits (loop increments, run offsets, +-64 word slack).
void check_bounds(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) bad_window(lo, hi);
    constexpr std::int64_t kSlack = 1 << 20;
    if (hi > std::numeric_limits<std::int64_t>::max() - kSlack ||
        lo < std::numeric_limits<std::int64_t>::min() + kSlack)
        throw std::invalid_argument(
            "window bounds too close to the 64-bit integer limits");
}

}  // namespace

// ---------------------------------------------------------------------------
// Window1D

Window1D::Window1D(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
    check_bounds(lo, hi);
    bits_.assign(word_count(span()), 0);
}

Window1D Window1D::full(std::int64_t lo, std::int64_t hi) {
    Window1D w(lo, hi);
    std::fill(w.bits_.begin(), w.bits_.end(), ~0ULL);
    w.clear_tail();
    return w;
}

Window1D Window1D::from_elements(std::int64_t lo, std::int64_t hi,
                                 const std::vector<std::int64_t>& elems) {
    Window1D w(lo, hi);
    for (std::int64_t n : elems) w.set(n);
    return w;
}

bool Window1D::contains(std::int64_t n) const {
    if (n < lo_ || n > hi_) {
        std::ostringstream os;
        os << "membership query at " << n << " outside window [" << lo_ << ", "
           << hi_ << "]";
        throw std::out_of_range(os.str());
    }
    return test_unchecked(n);
}

void Window1D::set(std::int64_t n, bool value) {
    if (n < lo_ || n > hi_) {
        std::ostringstream os;
        os << "set at " << n << " outside window [" << lo_ << ", " << hi_ << "]";
        throw std::out_of_range(os.str());
    }
    const std::uint64_t i = static_cast<std::uint64_t>(n - lo_);
    if (value)
        bits_[i >> 6] |= (1ULL << (i & 63));
    else
        bits_[i >> 6] &= ~(1ULL << (i & 63));
}

std::int64_t Window1D::count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
}

std::vector<std::int64_t> Window1D::elements() const {
    std::vector<std::int64_t> out;
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
        std::uint64_t w = bits_[wi];
        while (w) {
            const int b = std::countr_zero(w);
            out.push_back(lo_ + static_cast<std::int64_t>(wi * 64 + b));
            w &= w - 1;
        }
    }
    return out;
}

std::optional<std::int64_t> Window1D::min_element() const {
    for (std::size_t wi = 0; wi < bits_.size(); ++wi) {
        if (bits_[wi])
            return lo_ + static_cast<std::int64_t>(wi * 64 +
                                                   std::countr_zero(bits_[wi]));
    }
    return std::nullopt;
}

std::optional<std::int64_t> Window1D::max_element() const {
    for (std::size_t wi = bits_.size(); wi-- > 0;) {
        if (bits_[wi])
            return lo_ + static_cast<std::int64_t>(
                             wi * 64 + 63 - std::countl_zero(bits_[wi]));
    }
    return std::nullopt;
}

Window1D Window1D::shifted(std::int64_t k) const {
    Window1D w(checked::add(lo_, k), checked::add(hi_, k));
    w.bits_ = bits_;
    return w;
}

Window1D Window1D::restricted(std::int64_t lo, std::int64_t hi) const {
    if (lo < lo_ || hi > hi_ || lo > hi) {
        std::ostringstream os;
        os << "restriction [" << lo << ", " << hi << "] not inside [" << lo_
           << ", " << hi_ << "]";
        throw std::invalid_argument(os.str());
    }
    return slice_shifted(*this, lo, hi, 0);
}

Window1D Window1D::complemented() const {
    Window1D w(lo_, hi_);
    for (std::size_t i = 0; i < bits_.size(); ++i) w.bits_[i] = ~bits_[i];
    w.clear_tail();
    return w;
}

bool Window1D::operator==(const Window1D& other) const {
    return lo_ == other.lo_ && hi_ == other.hi_ && bits_ == other.bits_;
}

void Window1D::assign_words(std::vector<std::uint64_t> words) {
    if (words.size() != bits_.size())
        throw std::invalid_argument("word vector size does not match window span");
    bits_ = std::move(words);
    clear_tail();
}

void Window1D::clear_tail() {
    const std::uint64_t used = static_cast<std::uint64_t>(span()) & 63u;
    if (used) bits_.back() &= (~0ULL) >> (64 - used);
}

void Window1D::require_same_window(const Window1D& a, const Window1D& b) {
    if (a.lo_ != b.lo_ || a.hi_ != b.hi_) {
        std::ostringstream os;
        os << "window mismatch: [" << a.lo_ << ", " << a.hi_ << "] vs ["
           << b.lo_ << ", " << b.hi_ << "]";
        throw std::invalid_argument(os.str());
    }
}

Window1D union_of(const Window1D& a, const Window1D& b) {
    Window1D::require_same_window(a, b);
    Window1D w(a.lo_, a.hi_);
    for (std::size_t i = 0; i < w.bits_.size(); ++i)
        w.bits_[i] = a.bits_[i] | b.bits_[i];
    return w;
}

Window1D intersect(const Window1D& a, const Window1D& b) {
    Window1D::require_same_window(a, b);
    Window1D w(a.lo_, a.hi_);
    for (std::size_t i = 0; i < w.bits_.size(); ++i)
        w.bits_[i] = a.bits_[i] & b.bits_[i];
    return w;
}

Window1D minus(const Window1D& a, const Window1D& b) {
    Window1D::require_same_window(a, b);
    Window1D w(a.lo_, a.hi_);
    for (std::size_t i = 0; i < w.bits_.size(); ++i)
        w.bits_[i] = a.bits_[i] & ~b.bits_[i];
    return w;
}

void or_shifted_into(Window1D& dst, const Window1D& src, std::int64_t delta) {
    const std::int64_t lo = checked::add(src.lo_, delta);
    const std::int64_t hi = checked::add(src.hi_, delta);
    if (lo < dst.lo_ || hi > dst.hi_) {
        std::ostringstream os;
        os << "shifted source [" << lo << ", " << hi << "] not inside target ["
           << dst.lo_ << ", " << dst.hi_ << "]";
        throw std::out_of_range(os.str());
    }
    const std::uint64_t off = static_cast<std::uint64_t>(lo - dst.lo_);
    const std::uint64_t word0 = off >> 6;
    const unsigned r = static_cast<unsigned>(off & 63);
    for (std::size_t i = 0; i < src.bits_.size(); ++i) {
        const std::uint64_t w = src.bits_[i];
        if (!w) continue;
        dst.bits_[word0 + i] |= w << r;
        if (r && word0 + i + 1 < dst.bits_.size())
            dst.bits_[word0 + i + 1] |= w >> (64 - r);
    }
    dst.clear_tail();
}

Window1D slice_shifted(const Window1D& s, std::int64_t lo, std::int64_t hi,
                       std::int64_t shift) {
    if (lo > hi) bad_window(lo, hi);
    const std::int64_t src_lo = checked::add(lo, shift);
    const std::int64_t src_hi = checked::add(hi, shift);
    if (src_lo < s.lo_ || src_hi > s.hi_) {
        std::ostringstream os;
        os << "shifted slice needs source [" << src_lo << ", " << src_hi
           << "], have [" << s.lo_ << ", " << s.hi_ << "]";
        throw std::out_of_range(os.str());
    }
    Window1D w(lo, hi);
    const std::uint64_t off = static_cast<std::uint64_t>(src_lo - s.lo_);
    const std::uint64_t word0 = off >> 6;
    const unsigned r = static_cast<unsigned>(off & 63);
    for (std::size_t i = 0; i < w.bits_.size(); ++i) {
        std::uint64_t v = s.bits_[word0 + i] >> r;
        if (r && word0 + i + 1 < s.bits_.size())
            v |= s.bits_[word0 + i + 1] << (64 - r);
        w.bits_[i] = v;
    }
    w.clear_tail();
    return w;
}

// ---------------------------------------------------------------------------
// Window2D

Window2D::Window2D(Box box) : box_(box) {
    check_bounds(box.mlo, box.mhi);
    check_bounds(box.nlo, box.nhi);
    bits_.assign(word_count(box.area()), 0);
}

Window2D Window2D::full(Box box) {
    Window2D w(box);
    std::fill(w.bits_.begin(), w.bits_.end(), ~0ULL);
    w.clear_tail();
    return w;
}

bool Window2D::contains(std::int64_t m, std::int64_t n) const {
    if (!box_.contains(m, n)) {
        std::ostringstream os;
        os << "membership query at (" << m << ", " << n << ") outside box ["
           << box_.mlo << ", " << box_.mhi << "] x [" << box_.nlo << ", "
           << box_.nhi << "]";
        throw std::out_of_range(os.str());
    }
    return test_unchecked(m, n);
}

void Window2D::set(std::int64_t m, std::int64_t n, bool value) {
    if (!box_.contains(m, n)) {
        std::ostringstream os;
        os << "set at (" << m << ", " << n << ") outside box";
        throw std::out_of_range(os.str());
    }
    const std::uint64_t i = index(m, n);
    if (value)
        bits_[i >> 6] |= (1ULL << (i & 63));
    else
        bits_[i >> 6] &= ~(1ULL << (i & 63));
}

std::int64_t Window2D::count() const {
    std::int64_t c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
}

std::vector<std::pair<std::int64_t, std::int64_t>> Window2D::elements() const {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t m = box_.mlo; m <= box_.mhi; ++m)
        for (std::int64_t n = box_.nlo; n <= box_.nhi; ++n)
            if (test_unchecked(m, n)) out.emplace_back(m, n);
    return out;
}

Window1D Window2D::row(std::int64_t m) const {
    if (m < box_.mlo || m > box_.mhi)
        throw std::out_of_range("row outside box");
    Window1D r(box_.nlo, box_.nhi);
    for (std::int64_t n = box_.nlo; n <= box_.nhi; ++n)
        if (test_unchecked(m, n)) r.set(n);
    return r;
}

bool Window2D::operator==(const Window2D& other) const {
    return box_ == other.box_ && bits_ == other.bits_;
}

void Window2D::assign_words(std::vector<std::uint64_t> words) {
    if (words.size() != bits_.size())
        throw std::invalid_argument("word vector size does not match box area");
    bits_ = std::move(words);
    clear_tail();
}

void Window2D::clear_tail() {
    const std::uint64_t used = static_cast<std::uint64_t>(box_.area()) & 63u;
    if (used) bits_.back() &= (~0ULL) >> (64 - used);
}

Window2D symmetric_difference(const Window2D& a, const Window2D& b) {
    if (!(a.box_ == b.box_))
        throw std::invalid_argument("box mismatch in symmetric difference");
    Window2D w(a.box_);
    for (std::size_t i = 0; i < w.bits_.size(); ++i)
        w.bits_[i] = a.bits_[i] ^ b.bits_[i];
    return w;
}

// ---------------------------------------------------------------------------
// IntPoly / PolyFamily

IntPoly::IntPoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPoly::eval(std::int64_t n) const {
    // Horner on n * (c_1 + n * (c_2 + ...)); p(0) = 0 by construction.
    std::int64_t acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = checked::add(checked::mul(acc, n), coeffs_[k]);
    }
    return checked::mul(acc, n);
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const std::int64_t c = coeffs_[k];
        if (c == 0) continue;
        if (!first)
            os << (c > 0 ? "+" : "-");
        else if (c < 0)
            os << "-";
        const std::int64_t a = c < 0 ? -c : c;
        if (a != 1) os << a;
        os << "n";
        if (k + 1 > 1) os << "^" << (k + 1);
        first = false;
    }
    return os.str();
}

PolyFamily::PolyFamily(std::vector<IntPoly> polys) : polys_(std::move(polys)) {
    if (polys_.empty())
        throw std::invalid_argument("polynomial family must have d >= 1");
}

PolyFamily PolyFamily::linear(const std::vector<std::int64_t>& multipliers) {
    std::vector<IntPoly> ps;
    ps.reserve(multipliers.size());
    for (std::int64_t a : multipliers) ps.emplace_back(std::vector<std::int64_t>{a});
    return PolyFamily(std::move(ps));
}

std::string PolyFamily::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (i) os << ",";
        os << polys_[i].to_string();
    }
    return os.str();
}

}  // namespace syndetica
