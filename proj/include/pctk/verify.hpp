#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pctk {

enum class SuiteStatus { pass, fail, skip };

struct SuiteResult {
    std::string id;     // stable label usable with the --theorem filter
    std::string title;  // what the suite exercises
    SuiteStatus status = SuiteStatus::pass;
    std::vector<std::string> detail;  // findings, counts, failure instances
};

// Runs the exhaustive property suites up to n_max (1..6; heavier suites clamp
// themselves lower and say so).  `only` restricts to a single suite id.
std::vector<SuiteResult> run_verification(int n_max,
                                          const std::optional<std::string>& only =
                                              std::nullopt);

}  // namespace pctk
