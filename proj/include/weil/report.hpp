#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "weil/harness.hpp"
#include "weil/version.hpp"

namespace weil {

/// A machine- or human-readable run report. Field order in the JSON form is
/// frozen; checks are always sorted by id, so output does not depend on the
/// number of worker threads.
struct Report {
    std::string command;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    double total_ms = 0.0;

    int passed() const {
        int n = 0;
        for (const auto& c : checks) n += c.pass ? 1 : 0;
        return n;
    }
    int failed() const { return int(checks.size()) - passed(); }
    int exit_code() const { return failed() == 0 ? 0 : 1; }

    std::string to_json() const {
        nlohmann::ordered_json j;
        j["tool"] = "weil";
        j["version"] = version_string;
        j["schema"] = 1;
        j["command"] = command;
        j["seed"] = seed;
        j["checks"] = nlohmann::ordered_json::array();
        for (const CheckResult& c : checks) {
            nlohmann::ordered_json e;
            e["id"] = c.id;
            e["location"] = c.location;
            e["status"] = c.pass ? "pass" : "fail";
            e["diagnostic"] = c.diagnostic;
            e["ms"] = c.ms;
            j["checks"].push_back(std::move(e));
        }
        j["summary"] = {{"total", checks.size()},
                        {"passed", passed()},
                        {"failed", failed()},
                        {"ms", total_ms}};
        return j.dump(2) + "\n";
    }

    std::string to_text(bool color) const {
        const char* green = color ? "\033[32m" : "";
        const char* red = color ? "\033[31m" : "";
        const char* dim = color ? "\033[2m" : "";
        const char* reset = color ? "\033[0m" : "";
        std::string out;
        size_t width = 0;
        for (const CheckResult& c : checks) width = std::max(width, c.id.size());
        for (const CheckResult& c : checks) {
            char ms[32];
            std::snprintf(ms, sizeof ms, "%.1f", c.ms);
            out += c.pass ? green : red;
            out += c.pass ? "PASS" : "FAIL";
            out += reset;
            out += "  " + c.id + std::string(width - c.id.size() + 2, ' ');
            out += dim;
            out += c.location + "  (" + ms + " ms)";
            out += reset;
            out += "\n";
            if (!c.pass) out += "      " + c.diagnostic + "\n";
        }
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.1f", total_ms);
        out += std::to_string(passed()) + "/" + std::to_string(checks.size()) + " checks passed (" +
               ms + " ms total)\n";
        return out;
    }
};

}  // namespace weil
