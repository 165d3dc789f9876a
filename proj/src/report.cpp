#include "klspecht/report.hpp"

namespace klspecht {

nlohmann::ordered_json to_json(const CheckReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    j["theorem"] = report.check;
    j["shape"] = report.shape;
    j["ordering"] = report.ordering;
    j["pass"] = report.pass;
    j["witness"] = report.witness;
    auto signs = nlohmann::ordered_json::array();
    for (const auto& [cls, sign] : report.class_signs) signs.push_back({{"class", cls}, {"sign", sign}});
    j["signs"] = signs;
    j["failures"] = report.failures;
    if (include_timing) j["seconds"] = report.seconds;
    return j;
}

std::string to_text(const CheckReport& report) {
    std::string out = report.pass ? "PASS " : "FAIL ";
    out += report.check;
    if (!report.shape.empty()) out += " " + report.shape;
    if (!report.ordering.empty()) out += " [" + report.ordering + "]";
    if (!report.class_signs.empty()) {
        out += " signs:";
        for (const auto& [cls, sign] : report.class_signs) {
            out += " " + cls + "=" + (sign > 0 ? "+" : "-");
        }
    }
    if (!report.witness.empty()) out += " :: " + report.witness;
    for (const auto& f : report.failures) out += "\n    " + f;
    return out;
}

}  // namespace klspecht
