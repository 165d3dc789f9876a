#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace klspecht {

/// Outcome of one verification run over a single shape (or a single case).
struct CheckReport {
    std::string check;
    std::string shape;
    std::string ordering;
    bool pass = true;
    std::string witness;
    /// (class label, sign) pairs for theorems whose signs are constant per class.
    std::vector<std::pair<std::string, int>> class_signs;
    std::vector<std::string> failures;
    double seconds = 0.0;

    void fail(std::string why) {
        pass = false;
        failures.push_back(std::move(why));
    }
};

/// Timing is left out unless requested so that repeated runs are byte-identical.
nlohmann::ordered_json to_json(const CheckReport& report, bool include_timing = false);

/// One line: "PASS thm1 3,1,1 [total-index] ..." followed by failures, if any.
std::string to_text(const CheckReport& report);

}  // namespace klspecht
