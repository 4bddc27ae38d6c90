#include "syndetica/systems.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace syndetica {

SeqWindow bebutov_indicator(const Window1D& s) {
    std::vector<Symbol> sym;
    sym.reserve(static_cast<std::size_t>(s.span()));
    for (std::int64_t n = s.lo(); n <= s.hi(); ++n)
        sym.push_back(s.test_unchecked(n) ? 0 : 1);
    return SeqWindow::from_symbols(std::move(sym), Sidedness::two_sided, s.lo());
}

namespace {

bool is_square(std::int64_t n) {
    if (n < 0) return false;
    const std::int64_t r = static_cast<std::int64_t>(
        std::llround(std::sqrt(static_cast<double>(n))));
    for (std::int64_t k = std::max<std::int64_t>(0, r - 1); k <= r + 1; ++k)
        if (k * k == n) return true;
    return false;
}

}  // namespace

SeqWindow squares_indicator(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("invalid window");
    std::vector<Symbol> sym;
    sym.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t n = lo; n <= hi; ++n)
        sym.push_back(is_square(n) ? 1 : 0);
    return SeqWindow::from_symbols(std::move(sym), Sidedness::two_sided, lo);
}

BlockHierarchy BlockHierarchy::build(std::int64_t depth) {
    return build(depth, [](std::int64_t, std::int64_t a_prev) {
        return 15 * a_prev + 1;
    });
}

BlockHierarchy BlockHierarchy::build(std::int64_t depth, const BRule& b_rule) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    BlockHierarchy h;
    h.levels_.push_back(Word::from_string("1"));
    for (std::int64_t n = 1; n < depth; ++n) {
        const std::int64_t a_prev = n >= 2 ? h.levels_[static_cast<std::size_t>(n - 2)].size() : 1;
        const std::int64_t b = b_rule(n, a_prev);
        if (b <= 15 * a_prev) {
            std::ostringstream os;
            os << "b_" << n << " = " << b << " violates b_n > 15 a_{n-1} = "
               << 15 * a_prev;
            throw std::invalid_argument(os.str());
        }
        const Word& a = h.levels_.back();
        if (a.size() > (std::int64_t{1} << 27))
            throw std::overflow_error("hierarchy level too large to materialize");
        h.b_.push_back(b);
        h.levels_.push_back(a.concat(Word::zeros(b))
                                .concat(a)
                                .concat(Word::zeros(n))
                                .concat(a));
    }
    return h;
}

std::int64_t BlockHierarchy::depth() const {
    return static_cast<std::int64_t>(levels_.size());
}

const Word& BlockHierarchy::level(std::int64_t n) const {
    if (n < 1 || n > depth()) throw std::out_of_range("hierarchy level");
    return levels_[static_cast<std::size_t>(n - 1)];
}

std::int64_t BlockHierarchy::length(std::int64_t n) const {
    return level(n).size();
}

std::int64_t BlockHierarchy::gap_exponent(std::int64_t n) const {
    if (n < 1 || n > depth() - 1) throw std::out_of_range("gap exponent index");
    return b_[static_cast<std::size_t>(n - 1)];
}

SeqWindow BlockHierarchy::prefix(std::int64_t len) const {
    const Word& top = levels_.back();
    if (len < 1 || len > top.size()) {
        std::ostringstream os;
        os << "prefix length " << len << " not available at depth " << depth()
           << " (top level has " << top.size() << " symbols)";
        throw std::out_of_range(os.str());
    }
    std::vector<Symbol> sym(top.symbols().begin(),
                            top.symbols().begin() + static_cast<std::ptrdiff_t>(len));
    return SeqWindow::from_symbols(std::move(sym), Sidedness::one_sided, 0);
}

}  // namespace syndetica
