#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rearr::cli {

enum ExitCode : int {
    kOk = 0,
    kParseError = 2,
    kBudgetExceeded = 3,
    kMissingBudget = 4,
    kUnsupported = 5,
};

struct RunReport {
    int schema = 1;
    std::string command;
    std::map<std::string, std::string> inputs;  // name -> digest
    nlohmann::json result;
    double timing_ms = 0.0;
    std::optional<std::uint64_t> seed;

    bool operator==(const RunReport&) const = default;
};

nlohmann::json to_json(const RunReport& r);
// Validates every permutation in the payload; throws on malformed input.
RunReport report_from_json(const nlohmann::json& j);

std::string digest(const std::string& bytes);

// Entry point shared by the executable and the tests.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rearr::cli
