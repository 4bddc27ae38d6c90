// syndetica: exact finite-window analysis of integer-set largeness,
// polynomial return sets, and subshift constructions.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "syndetica/induced.hpp"
#include "syndetica/io.hpp"
#include "syndetica/largeness.hpp"
#include "syndetica/oracles.hpp"
#include "syndetica/return_set.hpp"
#include "syndetica/symbolic.hpp"
#include "syndetica/systems.hpp"
#include "syndetica/verify.hpp"
#include "syndetica/window.hpp"

namespace {

using json = nlohmann::json;
using namespace syndetica;

constexpr int kExitCertified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

Interval parse_interval(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("interval", "expected LO:HI, got '" + text + "'");
    try {
        return {std::stoll(text.substr(0, colon)),
                std::stoll(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("interval", "expected LO:HI, got '" + text + "'");
    }
}

Box parse_box(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos)
        throw CLI::ValidationError("box", "expected MLO:MHI,NLO:NHI");
    const Interval m = parse_interval(text.substr(0, comma));
    const Interval n = parse_interval(text.substr(comma + 1));
    return {m.lo, m.hi, n.lo, n.hi};
}

/// Config files are JSON objects keyed by long option names. Values from the
/// file fill in options not given on the command line, so explicit flags
/// always win; the assembled argument vector is what gets parsed.
std::vector<std::string> merge_config(const std::vector<std::string>& args) {
    std::string config_path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            config_path = args[i + 1];
            ++i;
        } else if (args[i].rfind("--config=", 0) == 0) {
            config_path = args[i].substr(9);
        } else {
            out.push_back(args[i]);
        }
    }
    if (config_path.empty()) return out;
    const json cfg = json::parse(io::read_file(config_path));
    if (!cfg.is_object())
        throw std::invalid_argument("config file must hold a JSON object");
    for (const auto& [key, value] : cfg.items()) {
        const std::string flag = "--" + key;
        bool present = false;
        for (const auto& a : out)
            if (a == flag || a.rfind(flag + "=", 0) == 0) present = true;
        if (present) continue;
        if (value.is_boolean()) {
            if (value.get<bool>()) out.push_back(flag);
        } else if (value.is_string()) {
            out.push_back(flag + "=" + value.get<std::string>());
        } else {
            out.push_back(flag + "=" + value.dump());
        }
    }
    return out;
}

SeqWindow load_sequence(const std::string& path) {
    return io::seq_from_ascii(io::read_file(path),
                              json::parse(io::read_file(path + ".json")));
}

void store_sequence(const std::string& path, const SeqWindow& s) {
    io::write_file(path, io::seq_to_ascii(s) + "\n");
    io::write_file(path + ".json", io::seq_sidecar(s).dump(2) + "\n");
}

Window1D preset_set(const std::string& name, Interval window) {
    if (name == "evens")
        return Window1D::from_predicate(window.lo, window.hi,
                                        [](std::int64_t n) { return n % 2 == 0; });
    if (name == "odds")
        return Window1D::from_predicate(window.lo, window.hi,
                                        [](std::int64_t n) { return n % 2 != 0; });
    if (name == "squares") {
        const SeqWindow sq = squares_indicator(window.lo, window.hi);
        return Window1D::from_predicate(
            window.lo, window.hi, [&](std::int64_t n) { return sq.at(n) == 1; });
    }
    if (name == "full") return Window1D::full(window.lo, window.hi);
    if (name == "empty") return Window1D(window.lo, window.hi);
    if (name.rfind("multiples:", 0) == 0) {
        const std::int64_t k = std::stoll(name.substr(10));
        if (k < 1) throw std::invalid_argument("multiples:k needs k >= 1");
        return Window1D::from_predicate(
            window.lo, window.hi, [k](std::int64_t n) {
                return ((n % k) + k) % k == 0;
            });
    }
    throw std::invalid_argument(
        "unknown preset '" + name +
        "' (evens|odds|squares|full|empty|multiples:k)");
}

struct SetSource {
    std::string schedule;
    std::string preset;
    std::string json_path;
    std::string window_text;

    Window1D load() const {
        int sources = !schedule.empty() + !preset.empty() + !json_path.empty();
        if (sources != 1)
            throw std::invalid_argument(
                "give exactly one of --schedule, --preset, --set-json");
        if (!json_path.empty())
            return io::window1d_from_json(json::parse(io::read_file(json_path)));
        if (window_text.empty())
            throw std::invalid_argument("--window LO:HI required");
        const Interval w = parse_interval(window_text);
        if (!schedule.empty())
            return ts_generate(io::parse_schedule(schedule), w.lo, w.hi);
        return preset_set(preset, w);
    }
};

void add_set_source(CLI::App* cmd, SetSource& src) {
    cmd->add_option("--schedule", src.schedule,
                    "generate a thickly syndetic set (pow<base>:<n_max> or "
                    "explicit periods '2,4,8')");
    cmd->add_option("--preset", src.preset,
                    "built-in set: evens|odds|squares|full|empty|multiples:k");
    cmd->add_option("--set-json", src.json_path, "load a 1D window JSON file");
    cmd->add_option("--window", src.window_text, "analysis window LO:HI");
}

// ---------------------------------------------------------------------------

int cmd_analyze_set(const SetSource& src, const std::string& kind,
                    const std::string& core_text,
                    std::optional<std::int64_t> gap_bound, std::int64_t n_max,
                    std::int64_t run_length, std::int64_t ps_gap,
                    std::int64_t ps_stretch, const std::string& report_path,
                    const std::string& witness_path) {
    const Window1D s = src.load();
    // the thickly-syndetic profile needs room to decide runs at the right edge
    const std::int64_t shave =
        kind == "thickly-syndetic" ? std::max<std::int64_t>(n_max - 1, 0) : 0;
    Interval core = core_text.empty() ? Interval{s.lo(), s.hi() - shave}
                                      : parse_interval(core_text);

    json report{{"schema", "syndetica/analysis/v1"},
                {"kind", kind},
                {"window", {{"lo", s.lo()}, {"hi", s.hi()}}},
                {"core", {{"lo", core.lo}, {"hi", core.hi}}}};
    std::string verdict;
    std::optional<Window1D> witness_positions;

    if (kind == "syndetic") {
        const auto gap = syndetic_gap(s, core);
        report["gap"] = gap ? json(*gap) : json(nullptr);
        if (!gap_bound) {
            verdict = gap ? "certified" : "refuted";
            report["note"] = "no --gap-bound given; verdict is mere nonemptiness";
        } else if (gap && *gap <= *gap_bound) {
            verdict = "certified";
        } else {
            verdict = "refuted";
        }
        witness_positions = s.restricted(core.lo, core.hi);
    } else if (kind == "thick") {
        const auto witness = thick_witness(s, run_length, core);
        report["run_length"] = run_length;
        report["witness"] = witness ? json(*witness) : json(nullptr);
        verdict = witness ? "certified" : "refuted";
        if (run_length <= s.span()) witness_positions = run_starts(s, run_length);
    } else if (kind == "piecewise-syndetic") {
        const auto witness = piecewise_syndetic_witness(s, ps_gap, ps_stretch);
        report["gap"] = ps_gap;
        report["stretch"] = ps_stretch;
        report["witness"] = witness ? json(*witness) : json(nullptr);
        verdict = witness ? "certified" : "refuted";
        if (witness)
            witness_positions =
                s.restricted(*witness, *witness + ps_stretch - 1);
    } else if (kind == "thickly-syndetic") {
        const TsProfile profile = thickly_syndetic_profile(s, n_max, core);
        report["profile"] = io::to_json(profile);
        std::cout << "N    gap\n";
        for (std::int64_t n = 1; n <= n_max; ++n) {
            const auto& g = profile.gap_for(n);
            std::cout << n << "    " << (g ? std::to_string(*g) : "none") << "\n";
        }
        if (gap_bound)
            verdict = profile.certified_at(*gap_bound) ? "certified" : "refuted";
        else
            verdict = profile.all_finite() ? "certified" : "refuted";
        witness_positions = run_starts(s, n_max);
    } else {
        throw std::invalid_argument("unknown --kind '" + kind + "'");
    }

    report["verdict"] = verdict;
    if (!witness_path.empty() && witness_positions) {
        io::write_file(witness_path,
                       io::to_json(*witness_positions).dump(2) + "\n");
        report["witness_ref"] = witness_path;
        if (report.contains("profile"))
            report["profile"]["witness_ref"] = witness_path;
    }
    if (!report_path.empty()) io::write_file(report_path, report.dump(2) + "\n");
    std::cout << "verdict: " << verdict << "\n";
    return verdict == "certified" ? kExitCertified : kExitRefuted;
}

int cmd_return_set(const std::string& polys_text, const std::string& box_text,
                   const std::string& schedule, const std::string& set_json,
                   bool suggest_only, const std::string& csv_path,
                   const std::string& pbm_path, const std::string& json_path) {
    const PolyFamily polys = io::parse_poly_family(polys_text);
    const Box box = parse_box(box_text);
    const Interval need = required_base_window(polys, box);
    std::cout << "base window required: " << need.lo << ":" << need.hi << "\n";
    if (suggest_only) return kExitCertified;

    Window1D s = set_json.empty()
                     ? ts_generate(schedule.empty()
                                       ? TsSchedule::default_schedule()
                                       : io::parse_schedule(schedule),
                                   need.lo, need.hi)
                     : io::window1d_from_json(json::parse(io::read_file(set_json)));
    const Window2D cells = return_set(s, polys, box);
    std::cout << "cells: " << cells.count() << " of " << box.area() << "\n";
    if (!csv_path.empty()) io::write_file(csv_path, io::to_csv(cells));
    if (!pbm_path.empty()) io::write_file(pbm_path, io::to_pbm(cells));
    if (!json_path.empty())
        io::write_file(json_path, io::to_json(cells).dump() + "\n");
    return kExitCertified;
}

int cmd_harness(const std::string& polys_text, const std::string& box_text,
                const std::string& schedule, const std::string& block_max,
                const std::string& report_path) {
    const auto x = block_max.find('x');
    if (x == std::string::npos)
        throw std::invalid_argument("--block-max expects MxN");
    const HarnessReport report = return_set_harness(
        schedule.empty() ? TsSchedule::default_schedule()
                         : io::parse_schedule(schedule),
        io::parse_poly_family(polys_text), parse_box(box_text),
        std::stoll(block_max.substr(0, x)), std::stoll(block_max.substr(x + 1)));
    const json j = io::to_json(report);
    std::cout << j["profile"]["gaps"].dump(2) << "\nverdict: " << report.verdict
              << "\n";
    if (!report_path.empty()) io::write_file(report_path, j.dump(2) + "\n");
    return report.verdict == "pass" ? kExitCertified : kExitInconclusive;
}

int cmd_occurs(const std::string& word_text, const std::string& seq_path,
               const std::string& json_path) {
    const Word w = Word::from_string(word_text);
    const SeqWindow s = load_sequence(seq_path);
    const Window1D occ = occurrences(w, s);
    std::cout << occ.count() << " occurrences\n";
    for (std::int64_t j : occ.elements()) std::cout << j << "\n";
    if (!json_path.empty())
        io::write_file(json_path, io::to_json(occ).dump() + "\n");
    return occ.empty() ? kExitRefuted : kExitCertified;
}

int cmd_language(std::int64_t k, const std::string& seq_path,
                 const std::string& out_path) {
    const SeqWindow s = load_sequence(seq_path);
    const auto words = language(s, k);
    std::cout << words.size() << " factors of length " << k << "\n";
    std::string listing;
    for (const Word& w : words) listing += w.to_string() + "\n";
    if (out_path.empty())
        std::cout << listing;
    else
        io::write_file(out_path, listing);
    return kExitCertified;
}

int cmd_mrec_scan(const std::string& seq_path, std::int64_t place,
                  std::int64_t radius, std::int64_t n_max) {
    const SeqWindow s = load_sequence(seq_path);
    const auto hits = multiple_recurrence_scan(s, place, radius, n_max);
    std::cout << hits.size() << " joint returns up to n_max " << n_max << "\n";
    for (std::int64_t n : hits) std::cout << n << "\n";
    return kExitCertified;
}

int cmd_build_example(const std::string& which, const std::string& window_text,
                      const std::string& schedule, const std::string& set_json,
                      std::int64_t depth, const std::string& b_values,
                      std::int64_t len, const std::string& out_path,
                      const std::string& meta_path) {
    if (out_path.empty()) throw std::invalid_argument("--out required");
    if (which == "squares") {
        const Interval w = parse_interval(window_text);
        store_sequence(out_path, squares_indicator(w.lo, w.hi));
        return kExitCertified;
    }
    if (which == "bebutov") {
        Window1D s = set_json.empty()
                         ? [&] {
                               const Interval w = parse_interval(window_text);
                               return ts_generate(
                                   schedule.empty()
                                       ? TsSchedule::default_schedule()
                                       : io::parse_schedule(schedule),
                                   w.lo, w.hi);
                           }()
                         : io::window1d_from_json(
                               json::parse(io::read_file(set_json)));
        store_sequence(out_path, bebutov_indicator(s));
        return kExitCertified;
    }
    if (which == "theoremC") {
        BlockHierarchy h = [&] {
            if (b_values.empty()) return BlockHierarchy::build(depth);
            std::vector<std::int64_t> bs;
            std::string cur;
            for (char c : b_values + ",") {
                if (c == ',') {
                    if (!cur.empty()) bs.push_back(std::stoll(cur));
                    cur.clear();
                } else {
                    cur.push_back(c);
                }
            }
            return BlockHierarchy::build(
                depth, [&bs](std::int64_t n, std::int64_t) {
                    if (n > static_cast<std::int64_t>(bs.size()))
                        throw std::invalid_argument("not enough --b-values");
                    return bs[static_cast<std::size_t>(n - 1)];
                });
        }();
        const std::int64_t want = len > 0 ? len : h.length(h.depth());
        store_sequence(out_path, h.prefix(want));
        if (!meta_path.empty()) {
            json lengths = json::array(), gaps = json::array();
            for (std::int64_t n = 1; n <= h.depth(); ++n)
                lengths.push_back(h.length(n));
            for (std::int64_t n = 1; n < h.depth(); ++n)
                gaps.push_back(h.gap_exponent(n));
            io::write_file(meta_path, json{{"schema", "syndetica/hierarchy/v1"},
                                           {"depth", h.depth()},
                                           {"lengths", lengths},
                                           {"gap_exponents", gaps}}
                                              .dump(2) +
                                          "\n");
        }
        return kExitCertified;
    }
    throw std::invalid_argument("build-example expects squares|bebutov|theoremC");
}

int cmd_induced_omega(const std::string& seq_path, const std::string& polys_text,
                      std::int64_t coord_radius, std::int64_t window_radius,
                      const std::string& act_text, const std::string& out_path) {
    const SeqWindow x = load_sequence(seq_path);
    const PolyFamily polys = io::parse_poly_family(polys_text);
    TruncPoint p = TruncPoint::poly_orbit(x, polys, coord_radius, window_radius);
    if (!act_text.empty()) {
        const auto comma = act_text.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--act expects M,K");
        p = p.acted({std::stoll(act_text.substr(0, comma)),
                     std::stoll(act_text.substr(comma + 1))});
    }
    json coords = json::array();
    for (std::int64_t n = -coord_radius; n <= coord_radius; ++n) {
        json slots = json::array();
        for (int i = 0; i < p.arity(); ++i)
            slots.push_back(p.slot_window(n, i).to_string());
        coords.push_back(json{{"coord", n}, {"slots", slots}});
    }
    const json doc{{"schema", "syndetica/truncpoint/v1"},
                   {"arity", p.arity()},
                   {"coord_radius", coord_radius},
                   {"window_radius", window_radius},
                   {"position",
                    {{"t_power", p.position().t_power},
                     {"shift_power", p.position().shift_power}}},
                   {"coordinates", coords}};
    if (out_path.empty())
        std::cout << doc.dump(2) << "\n";
    else
        io::write_file(out_path, doc.dump(2) + "\n");
    return kExitCertified;
}

int cmd_induced_bridge(const std::string& polys_text, const std::string& box_text,
                       const std::string& schedule, const std::string& report_path,
                       const std::string& lhs_pbm, const std::string& rhs_pbm,
                       const std::string& diff_pbm, const std::string& lhs_json,
                       const std::string& rhs_json, const std::string& diff_json) {
    const PolyFamily polys = io::parse_poly_family(polys_text);
    const Box box = parse_box(box_text);
    const Interval need = required_base_window(polys, box);
    const Window1D s = ts_generate(schedule.empty()
                                       ? TsSchedule::default_schedule()
                                       : io::parse_schedule(schedule),
                                   need.lo, need.hi);
    const BridgeResult b = bridge(s, polys, box);
    std::cout << "hitting cells: " << b.hitting.count()
              << "\nreturn cells:  " << b.returns.count()
              << "\ndiffering:     " << b.differing_cells << "\n";
    if (!report_path.empty()) {
        io::write_file(report_path,
                       json{{"schema", "syndetica/bridge/v1"},
                            {"polys", polys.to_string()},
                            {"box", {{"mlo", box.mlo},
                                     {"mhi", box.mhi},
                                     {"nlo", box.nlo},
                                     {"nhi", box.nhi}}},
                            {"hitting_cells", b.hitting.count()},
                            {"return_cells", b.returns.count()},
                            {"differing_cells", b.differing_cells},
                            {"equal", b.equal}}
                               .dump(2) +
                           "\n");
    }
    if (!lhs_pbm.empty()) io::write_file(lhs_pbm, io::to_pbm(b.hitting));
    if (!rhs_pbm.empty()) io::write_file(rhs_pbm, io::to_pbm(b.returns));
    if (!diff_pbm.empty())
        io::write_file(diff_pbm,
                       io::to_pbm(symmetric_difference(b.hitting, b.returns)));
    if (!lhs_json.empty())
        io::write_file(lhs_json, io::to_json(b.hitting).dump() + "\n");
    if (!rhs_json.empty())
        io::write_file(rhs_json, io::to_json(b.returns).dump() + "\n");
    if (!diff_json.empty())
        io::write_file(
            diff_json,
            io::to_json(symmetric_difference(b.hitting, b.returns)).dump() +
                "\n");
    return b.equal ? kExitCertified : kExitRefuted;
}

int cmd_induced_probe(const std::string& seq_path, const std::string& polys_text,
                      std::int64_t coord_radius, std::int64_t window_radius,
                      const std::string& act_text, std::int64_t radius,
                      std::int64_t horizon) {
    const SeqWindow x = load_sequence(seq_path);
    const PolyFamily polys = io::parse_poly_family(polys_text);
    TruncPoint p = TruncPoint::poly_orbit(x, polys, coord_radius, window_radius);
    if (!act_text.empty()) {
        const auto comma = act_text.find(',');
        p = p.acted({std::stoll(act_text.substr(0, comma)),
                     std::stoll(act_text.substr(comma + 1))});
    }
    const RecurrenceResult res = joint_recurrence_probe(p, radius, horizon);
    switch (res.verdict) {
        case RecurrenceVerdict::recurrent:
            std::cout << "recurrent via (" << res.witness->t_power << ", "
                      << res.witness->shift_power << ")\n";
            return kExitCertified;
        case RecurrenceVerdict::not_recurrent:
            std::cout << "not recurrent at radius " << radius << ", horizon "
                      << horizon << "\n";
            return kExitRefuted;
        default:
            std::cout << "inconclusive: " << res.note << "\n";
            return kExitInconclusive;
    }
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& report_path) {
    const auto results = verify::run_suite(suite, seed);
    bool any_fail = false;
    for (const auto& r : results) {
        std::cout << verify::summary_line(r) << "\n";
        if (!r.passed()) any_fail = true;
    }
    if (!report_path.empty())
        io::write_file(report_path,
                       verify::report_json(suite, seed, results).dump(2) + "\n");
    return any_fail ? kExitRefuted : kExitCertified;
}

int cmd_export(const std::string& in_path, const std::string& format,
               const std::string& out_path) {
    const std::string raw = io::read_file(in_path);
    json doc;
    try {
        doc = json::parse(raw);
    } catch (const json::parse_error&) {
        // maybe an ASCII sequence with sidecar
        doc = json{{"schema", "ascii"}};
    }
    const std::string schema = doc.value("schema", "ascii");
    if (schema == "syndetica/window1d/v1") {
        const Window1D w = io::window1d_from_json(doc);
        if (format == "json")
            io::write_file(out_path, io::to_json(w).dump() + "\n");
        else if (format == "csv")
            io::write_file(out_path, io::to_csv(w));
        else
            throw std::invalid_argument("1D windows export to json|csv");
    } else if (schema == "syndetica/window2d/v1") {
        const Window2D w = io::window2d_from_json(doc);
        if (format == "json")
            io::write_file(out_path, io::to_json(w).dump() + "\n");
        else if (format == "csv")
            io::write_file(out_path, io::to_csv(w));
        else if (format == "pbm")
            io::write_file(out_path, io::to_pbm(w));
        else
            throw std::invalid_argument("2D windows export to json|csv|pbm");
    } else if (schema == "ascii") {
        const SeqWindow s = load_sequence(in_path);
        if (format == "ascii")
            store_sequence(out_path, s);
        else
            throw std::invalid_argument("sequences export to ascii");
    } else {
        throw std::invalid_argument("unrecognized input schema '" + schema + "'");
    }
    return kExitCertified;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-window workbench for integer-set largeness, "
                 "polynomial return sets, and subshift constructions"};
    app.require_subcommand(1);

    // analyze-set
    auto* analyze = app.add_subcommand("analyze-set",
                                       "measure a largeness property over a core");
    SetSource analyze_src;
    add_set_source(analyze, analyze_src);
    std::string kind = "syndetic", core_text, a_report, a_witness;
    std::int64_t gap_bound_v = -1, nmax_v = 3, run_len_v = 2, ps_gap_v = 1,
                 ps_stretch_v = 10;
    analyze->add_option("--kind", kind,
                        "syndetic|thick|piecewise-syndetic|thickly-syndetic");
    analyze->add_option("--core", core_text, "verdict core LO:HI");
    analyze->add_option("--gap-bound", gap_bound_v, "claimed gap bound");
    analyze->add_option("--nmax", nmax_v, "profile depth for thickly-syndetic");
    analyze->add_option("--run-length", run_len_v, "run length for thick");
    analyze->add_option("--ps-gap", ps_gap_v, "gap for piecewise-syndetic");
    analyze->add_option("--ps-stretch", ps_stretch_v,
                        "stretch for piecewise-syndetic");
    analyze->add_option("--report", a_report, "write JSON report");
    analyze->add_option("--witness-out", a_witness, "write analyzed set JSON");

    // return-set
    auto* rset = app.add_subcommand("return-set",
                                    "compute a polynomial return set over a box");
    std::string rs_polys, rs_box, rs_schedule, rs_setjson, rs_csv, rs_pbm,
        rs_json;
    bool rs_suggest = false;
    rset->add_option("--polys", rs_polys, "comma-separated family, e.g. n,n^2")
        ->required();
    rset->add_option("--box", rs_box, "MLO:MHI,NLO:NHI")->required();
    rset->add_option("--schedule", rs_schedule, "generator schedule");
    rset->add_option("--set-json", rs_setjson, "use this 1D window as S");
    rset->add_flag("--suggest-window", rs_suggest,
                   "print the minimal base window and stop");
    rset->add_option("--out", rs_csv, "CSV cell list");
    rset->add_option("--bitmap", rs_pbm, "PBM bitmap");
    rset->add_option("--json-out", rs_json, "JSON window");

    // harness
    auto* harness = app.add_subcommand(
        "harness", "measure block-start gaps of a generated return set");
    std::string h_polys, h_box, h_schedule, h_blocks = "3x3", h_report;
    harness->add_option("--polys", h_polys)->required();
    harness->add_option("--box", h_box)->required();
    harness->add_option("--schedule", h_schedule);
    harness->add_option("--block-max", h_blocks, "largest block MxN");
    harness->add_option("--report", h_report, "write JSON report");

    // occurs
    auto* occurs_cmd = app.add_subcommand("occurs", "find word occurrences");
    std::string o_word, o_seq, o_json;
    occurs_cmd->add_option("--word", o_word)->required();
    occurs_cmd->add_option("--seq", o_seq, "sequence file (ASCII + .json sidecar)")
        ->required();
    occurs_cmd->add_option("--json-out", o_json);

    // language
    auto* lang_cmd = app.add_subcommand("language", "distinct k-factors");
    std::int64_t l_k = 1;
    std::string l_seq, l_out;
    lang_cmd->add_option("--k", l_k)->required();
    lang_cmd->add_option("--seq", l_seq)->required();
    lang_cmd->add_option("--out", l_out);

    // mrec-scan
    auto* mrec = app.add_subcommand("mrec-scan",
                                    "scan for joint (n, 2n) returns");
    std::string m_seq;
    std::int64_t m_place = 0, m_radius = 1, m_nmax = 100;
    mrec->add_option("--seq", m_seq)->required();
    mrec->add_option("--place", m_place)->required();
    mrec->add_option("--radius", m_radius);
    mrec->add_option("--nmax", m_nmax);

    // build-example
    auto* build = app.add_subcommand("build-example",
                                     "emit one of the concrete sequences");
    std::string b_which, b_window, b_schedule, b_setjson, b_bvalues, b_out,
        b_meta;
    std::int64_t b_depth = 7, b_len = 0;
    build->add_option("which", b_which, "squares|bebutov|theoremC")->required();
    build->add_option("--window", b_window, "LO:HI");
    build->add_option("--schedule", b_schedule);
    build->add_option("--set-json", b_setjson);
    build->add_option("--depth", b_depth, "hierarchy depth");
    build->add_option("--b-values", b_bvalues, "explicit gap exponents");
    build->add_option("--len", b_len, "prefix length (default: full top level)");
    build->add_option("--out", b_out)->required();
    build->add_option("--meta", b_meta, "hierarchy metadata JSON");

    // induced
    auto* induced = app.add_subcommand("induced", "induced-system operations");
    induced->require_subcommand(1);
    auto* iomega = induced->add_subcommand("omega", "materialize an orbit point");
    std::string io_seq, io_polys, io_act, io_out;
    std::int64_t io_k = 1, io_w = 4;
    iomega->add_option("--seq", io_seq)->required();
    iomega->add_option("--polys", io_polys)->required();
    iomega->add_option("--coord-radius", io_k);
    iomega->add_option("--window-radius", io_w);
    iomega->add_option("--act", io_act, "apply group element M,K");
    iomega->add_option("--out", io_out);

    auto* ibridge = induced->add_subcommand(
        "bridge", "hitting set vs return set, two code paths");
    std::string ib_polys, ib_box, ib_schedule, ib_report, ib_lhs, ib_rhs,
        ib_diff, ib_lhs_json, ib_rhs_json, ib_diff_json;
    ibridge->add_option("--polys", ib_polys)->required();
    ibridge->add_option("--box", ib_box)->required();
    ibridge->add_option("--schedule", ib_schedule);
    ibridge->add_option("--report", ib_report);
    ibridge->add_option("--lhs-pbm", ib_lhs);
    ibridge->add_option("--rhs-pbm", ib_rhs);
    ibridge->add_option("--diff-pbm", ib_diff);
    ibridge->add_option("--lhs-json", ib_lhs_json);
    ibridge->add_option("--rhs-json", ib_rhs_json);
    ibridge->add_option("--diff-json", ib_diff_json);

    auto* iprobe = induced->add_subcommand("probe", "joint recurrence probe");
    std::string ip_seq, ip_polys, ip_act;
    std::int64_t ip_k = 1, ip_w = 10, ip_radius = 5, ip_horizon = 100;
    iprobe->add_option("--seq", ip_seq)->required();
    iprobe->add_option("--polys", ip_polys)->required();
    iprobe->add_option("--coord-radius", ip_k);
    iprobe->add_option("--window-radius", ip_w);
    iprobe->add_option("--act", ip_act);
    iprobe->add_option("--radius", ip_radius);
    iprobe->add_option("--horizon", ip_horizon);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run acceptance suites");
    std::string v_suite = "all", v_report;
    std::uint64_t v_seed = 424243;
    verify_cmd->add_option("--suite", v_suite,
                           "theoremB|example35|theoremC|duality|all");
    verify_cmd->add_option("--seed", v_seed);
    verify_cmd->add_option("--report", v_report);

    // export
    auto* export_cmd = app.add_subcommand("export", "convert stored objects");
    std::string e_in, e_format, e_out;
    export_cmd->add_option("--in", e_in)->required();
    export_cmd->add_option("--format", e_format, "json|csv|pbm|ascii")
        ->required();
    export_cmd->add_option("--out", e_out)->required();

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        args = merge_config(args);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    }
    // CLI11 parses reversed vectors.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*analyze) {
            std::optional<std::int64_t> bound;
            if (analyze->count("--gap-bound")) bound = gap_bound_v;
            return cmd_analyze_set(analyze_src, kind, core_text, bound, nmax_v,
                                   run_len_v, ps_gap_v, ps_stretch_v, a_report,
                                   a_witness);
        }
        if (*rset)
            return cmd_return_set(rs_polys, rs_box, rs_schedule, rs_setjson,
                                  rs_suggest, rs_csv, rs_pbm, rs_json);
        if (*harness)
            return cmd_harness(h_polys, h_box, h_schedule, h_blocks, h_report);
        if (*occurs_cmd) return cmd_occurs(o_word, o_seq, o_json);
        if (*lang_cmd) return cmd_language(l_k, l_seq, l_out);
        if (*mrec) return cmd_mrec_scan(m_seq, m_place, m_radius, m_nmax);
        if (*build)
            return cmd_build_example(b_which, b_window, b_schedule, b_setjson,
                                     b_depth, b_bvalues, b_len, b_out, b_meta);
        if (*iomega)
            return cmd_induced_omega(io_seq, io_polys, io_k, io_w, io_act,
                                     io_out);
        if (*ibridge)
            return cmd_induced_bridge(ib_polys, ib_box, ib_schedule, ib_report,
                                      ib_lhs, ib_rhs, ib_diff, ib_lhs_json,
                                      ib_rhs_json, ib_diff_json);
        if (*iprobe)
            return cmd_induced_probe(ip_seq, ip_polys, ip_k, ip_w, ip_act,
                                     ip_radius, ip_horizon);
        if (*verify_cmd) return cmd_verify(v_suite, v_seed, v_report);
        if (*export_cmd) return cmd_export(e_in, e_format, e_out);
    } catch (const insufficient_window_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const coverage_error& e) {
        std::cerr << "inconclusive: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefuted;
    }
    return kExitUsage;
}
