#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace syndetica::verify {

using nlohmann::json;

struct CriterionResult {
    int index = 0;
    std::string name;
    std::string verdict;  // "pass" | "fail" | "inconclusive"
    json parameters;
    json measured;

    bool passed() const { return verdict == "pass"; }
};

/// Run acceptance criterion 1..9. All tolerances and thresholds are pinned
/// here; the seed drives only the randomized suites.
CriterionResult run_criterion(int index, std::uint64_t seed);

/// Suites exposed by the verify command. Unknown names throw.
std::vector<int> suite_criteria(const std::string& suite);

std::vector<CriterionResult> run_suite(const std::string& suite,
                                       std::uint64_t seed);

json report_json(const std::string& suite, std::uint64_t seed,
                 const std::vector<CriterionResult>& results);

/// "[PASS] criterion 3: ..." one-line form.
std::string summary_line(const CriterionResult& r);

}  // namespace syndetica::verify
