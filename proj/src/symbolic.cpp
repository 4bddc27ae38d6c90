#include "syndetica/symbolic.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace syndetica {

// ---------------------------------------------------------------------------
// Word

Word Word::from_string(const std::string& text) {
    std::vector<Symbol> sym;
    sym.reserve(text.size());
    for (char c : text) {
        if (c < '0' || c > '9')
            throw std::invalid_argument("word symbols must be digits");
        sym.push_back(static_cast<Symbol>(c - '0'));
    }
    return Word(std::move(sym));
}

Word Word::zeros(std::int64_t count) {
    if (count < 0) throw std::invalid_argument("negative word length");
    return Word(std::vector<Symbol>(static_cast<std::size_t>(count), 0));
}

Word Word::concat(const Word& other) const {
    std::vector<Symbol> sym = sym_;
    sym.insert(sym.end(), other.sym_.begin(), other.sym_.end());
    return Word(std::move(sym));
}

Word Word::repeated(std::int64_t k) const {
    if (k < 0) throw std::invalid_argument("negative repetition count");
    std::vector<Symbol> sym;
    sym.reserve(sym_.size() * static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i)
        sym.insert(sym.end(), sym_.begin(), sym_.end());
    return Word(std::move(sym));
}

std::string Word::to_string() const {
    std::string out;
    out.reserve(sym_.size());
    for (Symbol s : sym_) out.push_back(static_cast<char>('0' + s));
    return out;
}

// ---------------------------------------------------------------------------
// SeqWindow

SeqWindow::SeqWindow(Sidedness side,
                     std::shared_ptr<const std::vector<Symbol>> data,
                     std::int64_t data_lo, std::int64_t lo, std::int64_t hi)
    : side_(side), data_(std::move(data)), data_lo_(data_lo), lo_(lo), hi_(hi) {}

SeqWindow SeqWindow::from_string(const std::string& text, Sidedness side,
                                 std::int64_t lo) {
    return from_symbols(Word::from_string(text).symbols(), side, lo);
}

SeqWindow SeqWindow::from_symbols(std::vector<Symbol> symbols, Sidedness side,
                                  std::int64_t lo) {
    if (symbols.empty()) throw std::invalid_argument("empty sequence window");
    if (side == Sidedness::one_sided && lo < 0)
        throw std::invalid_argument("one-sided sequence cannot start below 0");
    constexpr std::int64_t kSlack = 1 << 20;
    if (lo < std::numeric_limits<std::int64_t>::min() + kSlack)
        throw std::invalid_argument("sequence window starts too low");
    const std::int64_t hi = checked::add(
        lo, static_cast<std::int64_t>(symbols.size()) - 1);
    if (hi > std::numeric_limits<std::int64_t>::max() - kSlack)
        throw std::invalid_argument("sequence window ends too high");
    return SeqWindow(side,
                     std::make_shared<const std::vector<Symbol>>(std::move(symbols)),
                     lo, lo, hi);
}

SeqWindow SeqWindow::constant(Symbol value, Sidedness side, std::int64_t lo,
                              std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("invalid sequence window");
    return from_symbols(
        std::vector<Symbol>(static_cast<std::size_t>(hi - lo + 1), value), side,
        lo);
}

Symbol SeqWindow::at(std::int64_t i) const {
    if (i < lo_ || i > hi_) {
        std::ostringstream os;
        os << "sequence query at " << i << " outside known interval [" << lo_
           << ", " << hi_ << "]";
        throw std::out_of_range(os.str());
    }
    return at_unchecked(i);
}

SeqWindow SeqWindow::shifted(std::int64_t k) const {
    std::int64_t lo = checked::sub(lo_, k);
    const std::int64_t hi = checked::sub(hi_, k);
    if (side_ == Sidedness::one_sided) lo = std::max<std::int64_t>(lo, 0);
    if (lo > hi)
        throw std::invalid_argument("shift leaves no known indices");
    return SeqWindow(side_, data_, checked::sub(data_lo_, k), lo, hi);
}

SeqWindow SeqWindow::restricted(std::int64_t lo, std::int64_t hi) const {
    if (lo < lo_ || hi > hi_ || lo > hi)
        throw std::invalid_argument("restriction outside known interval");
    return SeqWindow(side_, data_, data_lo_, lo, hi);
}

Word SeqWindow::slice(std::int64_t lo, std::int64_t hi) const {
    if (lo < lo_ || hi > hi_ || lo > hi)
        throw std::out_of_range("slice outside known interval");
    std::vector<Symbol> sym;
    sym.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t i = lo; i <= hi; ++i) sym.push_back(at_unchecked(i));
    return Word(std::move(sym));
}

std::string SeqWindow::to_string() const { return slice(lo_, hi_).to_string(); }

// ---------------------------------------------------------------------------
// Cylinder / occurrences

bool Cylinder::contains(const SeqWindow& s) const {
    const std::int64_t end = place + base.size() - 1;
    if (!s.covers(place, end)) {
        std::ostringstream os;
        os << "cylinder at place " << place << " with word length "
           << base.size() << " not decidable on [" << s.lo() << ", " << s.hi()
           << "]";
        throw std::out_of_range(os.str());
    }
    for (std::int64_t i = 0; i < base.size(); ++i)
        if (s.at_unchecked(place + i) != base[i]) return false;
    return true;
}

Window1D occurrences(const Word& b, const SeqWindow& s) {
    if (b.empty()) throw std::invalid_argument("empty search word");
    if (b.size() > s.span())
        throw std::invalid_argument("search word longer than known interval");
    Window1D places(s.lo(), s.hi() - b.size() + 1);
    for (std::int64_t j = places.lo(); j <= places.hi(); ++j) {
        bool hit = true;
        for (std::int64_t i = 0; i < b.size(); ++i) {
            if (s.at_unchecked(j + i) != b[i]) {
                hit = false;
                break;
            }
        }
        if (hit) places.set(j);
    }
    return places;
}

// ---------------------------------------------------------------------------
// Metric

double MetricValue::value() const {
    if (first_diff) return 1.0 / static_cast<double>(1 + *first_diff);
    if (agreement_radius < 0) return 1.0;  // nothing verified: trivial bound
    return 1.0 / static_cast<double>(1 + agreement_radius);
}

MetricValue metric(const SeqWindow& x, const SeqWindow& y) {
    if (x.sidedness() != y.sidedness())
        throw std::invalid_argument("metric requires matching sidedness");
    const std::int64_t lo = std::max(x.lo(), y.lo());
    const std::int64_t hi = std::min(x.hi(), y.hi());
    if (lo > hi)
        throw std::invalid_argument("metric requires overlapping known intervals");

    MetricValue out;
    if (x.sidedness() == Sidedness::one_sided) {
        // Verified prefix must start at 0 to pin min{n : x_n != y_n}.
        if (lo != 0) {
            out.agreement_radius = -1;
            return out;
        }
        for (std::int64_t n = 0; n <= hi; ++n) {
            if (x.at_unchecked(n) != y.at_unchecked(n)) {
                out.first_diff = n;
                return out;
            }
            out.agreement_radius = n;
        }
        return out;
    }
    // Two-sided: radius r is verified only when both +r and -r are known.
    if (lo > 0 || hi < 0) {
        out.agreement_radius = -1;
        return out;
    }
    const std::int64_t max_r = std::min(-lo, hi);
    for (std::int64_t r = 0; r <= max_r; ++r) {
        if (x.at_unchecked(r) != y.at_unchecked(r) ||
            (r > 0 && x.at_unchecked(-r) != y.at_unchecked(-r))) {
            out.first_diff = r;
            return out;
        }
        out.agreement_radius = r;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hitting offsets / language / recurrence scan

Window1D hitting_offsets(const Word& u, const Word& v, const SeqWindow& s) {
    const Window1D occ_u = occurrences(u, s);
    const Window1D occ_v = occurrences(v, s);
    const std::int64_t lo = occ_v.lo() - occ_u.hi();
    const std::int64_t hi = occ_v.hi() - occ_u.lo();
    Window1D offsets(lo, hi);
    // offsets = union over u-occurrences j of (occ_v relabeled by -j),
    // word-parallel; dense occurrence sets stay tractable this way
    for (std::int64_t j : occ_u.elements())
        or_shifted_into(offsets, occ_v, -j);
    return offsets;
}

std::set<Word> language(const SeqWindow& s, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("factor length must be >= 1");
    if (k > s.span())
        throw std::invalid_argument("factor length exceeds known interval");
    std::set<Word> words;
    for (std::int64_t j = s.lo(); j + k - 1 <= s.hi(); ++j)
        words.insert(s.slice(j, j + k - 1));
    return words;
}

std::vector<std::int64_t> multiple_recurrence_scan(const SeqWindow& s,
                                                   std::int64_t place,
                                                   std::int64_t radius,
                                                   std::int64_t n_max) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const std::int64_t need_hi = place + 2 * n_max + radius;
    if (!s.covers(place, need_hi)) {
        std::ostringstream os;
        os << "recurrence scan at place " << place << " with n_max " << n_max
           << " and radius " << radius << " needs indices through " << need_hi
           << ", window ends at " << s.hi();
        throw insufficient_window_error(os.str());
    }
    std::vector<std::int64_t> hits;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        bool ok = true;
        for (std::int64_t i = 0; i <= radius; ++i) {
            const Symbol c = s.at_unchecked(place + i);
            if (s.at_unchecked(place + n + i) != c ||
                s.at_unchecked(place + 2 * n + i) != c) {
                ok = false;
                break;
            }
        }
        if (ok) hits.push_back(n);
    }
    return hits;
}

}  // namespace syndetica
