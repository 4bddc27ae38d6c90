#include "syndetica/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace syndetica::io {

namespace {

constexpr char kB64Alphabet[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

std::vector<std::uint8_t> mask_bytes(const std::vector<std::uint64_t>& words,
                                     std::int64_t bit_count) {
    std::vector<std::uint8_t> bytes(static_cast<std::size_t>((bit_count + 7) / 8), 0);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
        const std::size_t w = i / 8;
        if (w < words.size())
            bytes[i] = static_cast<std::uint8_t>(words[w] >> (8 * (i % 8)));
    }
    return bytes;
}

std::vector<std::uint64_t> bytes_to_words(const std::vector<std::uint8_t>& bytes,
                                          std::int64_t bit_count) {
    std::vector<std::uint64_t> words(
        static_cast<std::size_t>((bit_count + 63) / 64), 0);
    if (bytes.size() != static_cast<std::size_t>((bit_count + 7) / 8))
        throw std::invalid_argument("bit mask has wrong length");
    for (std::size_t i = 0; i < bytes.size(); ++i)
        words[i / 8] |= static_cast<std::uint64_t>(bytes[i]) << (8 * (i % 8));
    return words;
}

}  // namespace

std::string base64_encode(const std::vector<std::uint8_t>& bytes) {
    std::string out;
    out.reserve((bytes.size() + 2) / 3 * 4);
    std::size_t i = 0;
    while (i + 3 <= bytes.size()) {
        const std::uint32_t v = (static_cast<std::uint32_t>(bytes[i]) << 16) |
                                (static_cast<std::uint32_t>(bytes[i + 1]) << 8) |
                                bytes[i + 2];
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out.push_back(kB64Alphabet[v & 63]);
        i += 3;
    }
    const std::size_t rest = bytes.size() - i;
    if (rest == 1) {
        const std::uint32_t v = static_cast<std::uint32_t>(bytes[i]) << 16;
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back('=');
        out.push_back('=');
    } else if (rest == 2) {
        const std::uint32_t v = (static_cast<std::uint32_t>(bytes[i]) << 16) |
                                (static_cast<std::uint32_t>(bytes[i + 1]) << 8);
        out.push_back(kB64Alphabet[(v >> 18) & 63]);
        out.push_back(kB64Alphabet[(v >> 12) & 63]);
        out.push_back(kB64Alphabet[(v >> 6) & 63]);
        out.push_back('=');
    }
    return out;
}

std::vector<std::uint8_t> base64_decode(const std::string& text) {
    auto value_of = [](char c) -> int {
        if (c >= 'A' && c <= 'Z') return c - 'A';
        if (c >= 'a' && c <= 'z') return c - 'a' + 26;
        if (c >= '0' && c <= '9') return c - '0' + 52;
        if (c == '+') return 62;
        if (c == '/') return 63;
        return -1;
    };
    if (text.size() % 4 != 0)
        throw std::invalid_argument("base64 length must be a multiple of 4");
    std::vector<std::uint8_t> out;
    out.reserve(text.size() / 4 * 3);
    for (std::size_t i = 0; i < text.size(); i += 4) {
        int vals[4];
        int pad = 0;
        for (int k = 0; k < 4; ++k) {
            const char c = text[i + k];
            if (c == '=') {
                vals[k] = 0;
                ++pad;
            } else {
                vals[k] = value_of(c);
                if (vals[k] < 0) throw std::invalid_argument("bad base64 input");
                if (pad) throw std::invalid_argument("bad base64 padding");
            }
        }
        const std::uint32_t v = (static_cast<std::uint32_t>(vals[0]) << 18) |
                                (static_cast<std::uint32_t>(vals[1]) << 12) |
                                (static_cast<std::uint32_t>(vals[2]) << 6) |
                                static_cast<std::uint32_t>(vals[3]);
        out.push_back(static_cast<std::uint8_t>(v >> 16));
        if (pad < 2) out.push_back(static_cast<std::uint8_t>(v >> 8));
        if (pad < 1) out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Windows

json to_json(const Window1D& w) {
    return json{{"schema", "syndetica/window1d/v1"},
                {"lo", w.lo()},
                {"hi", w.hi()},
                {"bits", base64_encode(mask_bytes(w.words(), w.span()))}};
}

json to_json(const Window2D& w) {
    const Box& b = w.box();
    return json{{"schema", "syndetica/window2d/v1"},
                {"mlo", b.mlo},
                {"mhi", b.mhi},
                {"nlo", b.nlo},
                {"nhi", b.nhi},
                {"bits", base64_encode(mask_bytes(w.words(), b.area()))}};
}

Window1D window1d_from_json(const json& j) {
    if (j.value("schema", "") != "syndetica/window1d/v1")
        throw std::invalid_argument("not a 1D window document");
    Window1D w(j.at("lo").get<std::int64_t>(), j.at("hi").get<std::int64_t>());
    w.assign_words(bytes_to_words(base64_decode(j.at("bits").get<std::string>()),
                                  w.span()));
    return w;
}

Window2D window2d_from_json(const json& j) {
    if (j.value("schema", "") != "syndetica/window2d/v1")
        throw std::invalid_argument("not a 2D window document");
    const Box b{j.at("mlo").get<std::int64_t>(), j.at("mhi").get<std::int64_t>(),
                j.at("nlo").get<std::int64_t>(), j.at("nhi").get<std::int64_t>()};
    Window2D w(b);
    w.assign_words(bytes_to_words(base64_decode(j.at("bits").get<std::string>()),
                                  b.area()));
    return w;
}

json to_json(const TsProfile& p) {
    json gaps = json::object();
    for (std::int64_t n = 1; n <= p.n_max; ++n) {
        const auto& g = p.gap_for(n);
        gaps[std::to_string(n)] = g ? json(*g) : json(nullptr);
    }
    return json{{"schema", "syndetica/profile/v1"},
                {"kind", "thickly-syndetic"},
                {"params", {{"n_max", p.n_max}}},
                {"core", {{"lo", p.core.lo}, {"hi", p.core.hi}}},
                {"gaps", gaps},
                {"witness_ref", nullptr}};
}

json to_json(const TsProfile2D& p) {
    json gaps = json::object();
    json cores = json::object();
    json counts = json::object();
    for (std::int64_t m = 1; m <= p.m_max; ++m) {
        for (std::int64_t n = 1; n <= p.n_max; ++n) {
            const std::string key = std::to_string(m) + "x" + std::to_string(n);
            const auto& g = p.gap_for(m, n);
            gaps[key] = g ? json(*g) : json(nullptr);
            const Box& c = p.cores[p.idx(m, n)];
            cores[key] = {{"mlo", c.mlo}, {"mhi", c.mhi}, {"nlo", c.nlo}, {"nhi", c.nhi}};
            counts[key] = p.start_counts[p.idx(m, n)];
        }
    }
    return json{{"schema", "syndetica/profile2d/v1"},
                {"kind", "thickly-syndetic-2d"},
                {"params", {{"m_max", p.m_max}, {"n_max", p.n_max}}},
                {"cores", cores},
                {"block_start_counts", counts},
                {"gaps", gaps}};
}

json to_json(const HarnessReport& r) {
    return json{{"schema", "syndetica/harness/v1"},
                {"polys", r.polys},
                {"schedule", r.schedule},
                {"box",
                 {{"mlo", r.box.mlo},
                  {"mhi", r.box.mhi},
                  {"nlo", r.box.nlo},
                  {"nhi", r.box.nhi}}},
                {"base_window", {{"lo", r.base_window.lo}, {"hi", r.base_window.hi}}},
                {"return_cells", r.return_cells},
                {"profile", to_json(r.profile)},
                {"verdict", r.verdict}};
}

std::string to_csv(const Window1D& w) {
    std::ostringstream os;
    os << "n\n";
    for (std::int64_t n : w.elements()) os << n << "\n";
    return os.str();
}

std::string to_csv(const Window2D& w) {
    std::ostringstream os;
    os << "m,n\n";
    for (const auto& [m, n] : w.elements()) os << m << "," << n << "\n";
    return os.str();
}

std::string to_pbm(const Window2D& w) {
    const Box& b = w.box();
    const std::int64_t width = b.m_span();
    const std::int64_t height = b.n_span();
    std::ostringstream os;
    os << "P4\n" << width << " " << height << "\n";
    const std::int64_t row_bytes = (width + 7) / 8;
    for (std::int64_t n = b.nlo; n <= b.nhi; ++n) {
        std::string row(static_cast<std::size_t>(row_bytes), '\0');
        for (std::int64_t m = b.mlo; m <= b.mhi; ++m) {
            if (w.test_unchecked(m, n)) {
                const std::int64_t i = m - b.mlo;
                row[static_cast<std::size_t>(i / 8)] |=
                    static_cast<char>(0x80u >> (i % 8));
            }
        }
        os.write(row.data(), row_bytes);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Sequences

std::string seq_to_ascii(const SeqWindow& s) { return s.to_string(); }

json seq_sidecar(const SeqWindow& s) {
    return json{{"schema", "syndetica/seq/v1"},
                {"sidedness",
                 s.sidedness() == Sidedness::one_sided ? "one" : "two"},
                {"lo", s.lo()}};
}

SeqWindow seq_from_ascii(const std::string& ascii, const json& sidecar) {
    if (sidecar.value("schema", "") != "syndetica/seq/v1")
        throw std::invalid_argument("not a sequence sidecar document");
    const std::string side = sidecar.at("sidedness").get<std::string>();
    if (side != "one" && side != "two")
        throw std::invalid_argument("sidedness must be 'one' or 'two'");
    std::string text = ascii;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.pop_back();
    return SeqWindow::from_string(
        text, side == "one" ? Sidedness::one_sided : Sidedness::two_sided,
        sidecar.at("lo").get<std::int64_t>());
}

// ---------------------------------------------------------------------------
// Parsers

namespace {

struct Term {
    std::int64_t coeff;
    std::int64_t exponent;  // 0 for constants
};

Term parse_term(const std::string& term) {
    std::size_t i = 0;
    std::int64_t sign = 1;
    while (i < term.size() && (term[i] == '+' || term[i] == '-')) {
        if (term[i] == '-') sign = -sign;
        ++i;
    }
    std::int64_t coeff = 1;
    bool have_digits = false;
    std::int64_t digits = 0;
    while (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i]))) {
        digits = checked::add(checked::mul(digits, 10), term[i] - '0');
        have_digits = true;
        ++i;
    }
    if (have_digits) coeff = digits;
    if (i < term.size() && term[i] == '*') ++i;
    if (i == term.size()) {
        if (!have_digits) throw std::invalid_argument("empty term");
        return {sign * coeff, 0};
    }
    if (term[i] != 'n')
        throw std::invalid_argument("expected 'n' in term '" + term + "'");
    ++i;
    std::int64_t exponent = 1;
    if (i < term.size()) {
        if (term[i] != '^')
            throw std::invalid_argument("unexpected character in term '" + term + "'");
        ++i;
        if (i == term.size())
            throw std::invalid_argument("missing exponent in term '" + term + "'");
        exponent = 0;
        while (i < term.size()) {
            if (!std::isdigit(static_cast<unsigned char>(term[i])))
                throw std::invalid_argument("bad exponent in term '" + term + "'");
            exponent = checked::add(checked::mul(exponent, 10), term[i] - '0');
            ++i;
        }
        if (exponent < 1)
            throw std::invalid_argument("exponent must be >= 1");
    }
    return {sign * coeff, exponent};
}

}  // namespace

IntPoly parse_poly(const std::string& text) {
    std::string clean;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
    if (clean.empty()) throw std::invalid_argument("empty polynomial");

    std::vector<std::string> terms;
    std::string cur;
    for (std::size_t i = 0; i < clean.size(); ++i) {
        const char c = clean[i];
        if ((c == '+' || c == '-') && i > 0 && clean[i - 1] != '^' &&
            clean[i - 1] != '+' && clean[i - 1] != '-') {
            terms.push_back(cur);
            cur.clear();
        }
        cur.push_back(c);
    }
    terms.push_back(cur);

    std::int64_t constant = 0;
    std::vector<std::int64_t> coeffs;
    for (const std::string& t : terms) {
        const Term term = parse_term(t);
        if (term.exponent == 0) {
            constant = checked::add(constant, term.coeff);
            continue;
        }
        if (static_cast<std::size_t>(term.exponent) > coeffs.size())
            coeffs.resize(static_cast<std::size_t>(term.exponent), 0);
        auto& c = coeffs[static_cast<std::size_t>(term.exponent - 1)];
        c = checked::add(c, term.coeff);
    }
    if (constant != 0) {
        std::ostringstream os;
        os << "polynomial '" << text << "' has constant term " << constant
           << "; admissible polynomials satisfy p(0) = 0";
        throw std::invalid_argument(os.str());
    }
    return IntPoly(std::move(coeffs));
}

PolyFamily parse_poly_family(const std::string& text) {
    std::vector<IntPoly> polys;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            polys.push_back(parse_poly(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    polys.push_back(parse_poly(cur));
    return PolyFamily(std::move(polys));
}

TsSchedule parse_schedule(const std::string& text) {
    if (text.rfind("pow", 0) == 0) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("schedule syntax: pow<base>:<n_max>");
        const std::int64_t base = std::stoll(text.substr(3, colon - 3));
        const std::int64_t n_max = std::stoll(text.substr(colon + 1));
        return TsSchedule::geometric(base, n_max);
    }
    std::vector<std::int64_t> periods;
    std::string cur;
    for (char c : text + ",") {
        if (c == ',') {
            if (cur.empty()) continue;
            periods.push_back(std::stoll(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    return TsSchedule(std::move(periods));
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace syndetica::io
