#pragma once

#include <string>

#include <json.hpp>

#include "syndetica/largeness.hpp"
#include "syndetica/return_set.hpp"
#include "syndetica/symbolic.hpp"
#include "syndetica/window.hpp"

namespace syndetica::io {

using nlohmann::json;

std::string base64_encode(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> base64_decode(const std::string& text);

// JSON round-trips are bit-exact: import(export(x)) == x.
json to_json(const Window1D& w);
json to_json(const Window2D& w);
Window1D window1d_from_json(const json& j);
Window2D window2d_from_json(const json& j);

json to_json(const TsProfile& p);
json to_json(const TsProfile2D& p);
json to_json(const HarnessReport& r);

/// CSV element lists: one value per line for 1D, "m,n" per line for 2D.
std::string to_csv(const Window1D& w);
std::string to_csv(const Window2D& w);

/// Binary PBM (P4). Width runs along m, height along n, so wide boxes read
/// as wide images.
std::string to_pbm(const Window2D& w);

/// Raw 0/1 ASCII plus sidecar metadata {sidedness, lo}.
std::string seq_to_ascii(const SeqWindow& s);
json seq_sidecar(const SeqWindow& s);
SeqWindow seq_from_ascii(const std::string& ascii, const json& sidecar);

/// Integer-coefficient expressions in n with zero constant term, e.g.
/// "n", "n^2", "2n", "n^3-n". A nonzero constant is rejected with an error
/// citing the p(0) = 0 requirement. Families are comma-separated.
IntPoly parse_poly(const std::string& text);
PolyFamily parse_poly_family(const std::string& text);

/// Schedule syntax: "pow<base>:<n_max>" or an explicit comma list "2,4,8".
TsSchedule parse_schedule(const std::string& text);

void write_file(const std::string& path, const std::string& contents);
std::string read_file(const std::string& path);

}  // namespace syndetica::io
