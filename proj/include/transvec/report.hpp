#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace transvec {

struct Check {
    std::string name;
    bool pass = true;
    std::string detail;
};

// Result tree of one command run, renderable as aligned text or as JSON with
// the fixed key set {command, input, result, checks}. Both renderings carry
// the same data.
struct Report {
    std::string command;
    std::string input;
    nlohmann::ordered_json result = nlohmann::ordered_json::object();
    std::vector<Check> checks;

    void check(const std::string& name, bool pass, const std::string& detail = "");
    bool all_pass() const;

    nlohmann::ordered_json to_json() const;
    std::string text() const;
};

}  // namespace transvec
