#pragma once

#include <string>
#include <vector>

// single-header nlohmann/json from vendor/
#include <json.hpp>

namespace pencilgit {

using Json = nlohmann::ordered_json;

/// One verification record: a claim id, the mathematical statement it checks,
/// pass/fail/observed, and witness data.
struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string status; // "pass" | "fail" | "observed"
    Json witness;

    Json to_json() const;
};

struct Report {
    std::string version = "pencil-git/1";
    std::string command;
    std::string field;
    std::vector<CheckRecord> checks;

    bool passed() const; // no "fail" records
    std::string status() const;
    Json to_json() const;
    std::string text() const; // human-readable summary
    void sort_by_id();
};

} // namespace pencilgit
