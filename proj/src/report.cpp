#include "pencilgit/report.hpp"

#include <algorithm>

namespace pencilgit {

Json CheckRecord::to_json() const {
    Json j;
    j["id"] = id;
    j["anchor"] = anchor;
    j["status"] = status;
    j["witness"] = witness.is_null() ? Json::object() : witness;
    return j;
}

bool Report::passed() const {
    return std::none_of(checks.begin(), checks.end(),
                        [](const CheckRecord& c) { return c.status == "fail"; });
}

std::string Report::status() const { return passed() ? "pass" : "fail"; }

Json Report::to_json() const {
    Json j;
    j["version"] = version;
    j["command"] = command;
    j["field"] = field;
    j["checks"] = Json::array();
    for (const auto& c : checks) j["checks"].push_back(c.to_json());
    j["status"] = status();
    return j;
}

std::string Report::text() const {
    std::string out;
    for (const auto& c : checks) {
        std::string line = c.status;
        for (std::size_t i = line.size(); i < 8; ++i) line += ' ';
        line += c.id + "  [" + c.anchor + "]";
        out += line + "\n";
    }
    out += "overall: " + status() + "\n";
    return out;
}

void Report::sort_by_id() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

} // namespace pencilgit
