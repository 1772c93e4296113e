#include "transvec/report.hpp"

#include <sstream>

namespace transvec {

namespace {

void dump(std::ostringstream& out, const nlohmann::ordered_json& node, int depth) {
    std::string pad(2 * depth, ' ');
    if (node.is_object()) {
        for (const auto& [key, value] : node.items()) {
            if (value.is_object() || value.is_array()) {
                out << pad << key << ":\n";
                dump(out, value, depth + 1);
            } else {
                out << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (node.is_array()) {
        for (const auto& value : node) {
            if (value.is_object() || value.is_array()) {
                out << pad << "-\n";
                dump(out, value, depth + 1);
            } else {
                out << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        out << pad << node.dump() << "\n";
    }
}

}  // namespace

void Report::check(const std::string& name, bool pass, const std::string& detail) {
    checks.push_back({name, pass, detail});
}

bool Report::all_pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["input"] = input;
    j["result"] = result;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks)
        j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    return j;
}

std::string Report::text() const {
    std::ostringstream out;
    out << "command: " << command << "\n";
    out << "input: " << input << "\n";
    if (!result.empty()) {
        out << "result:\n";
        dump(out, result, 1);
    }
    if (!checks.empty()) {
        out << "checks:\n";
        for (const Check& c : checks) {
            out << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name;
            if (!c.detail.empty()) out << " - " << c.detail;
            out << "\n";
        }
    }
    return out.str();
}

}  // namespace transvec
