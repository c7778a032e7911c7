#pragma once

/*
 * Structured pass/fail reporting.  Every verification entry point returns a
 * VerificationReport instead of a bare bool so the CLI can serialize what
 * was checked, what failed, and with which tolerances/seeds.
 */

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace gfres {

using Json = nlohmann::ordered_json; // insertion order = stable CLI output

struct CheckResult {
    std::string name;
    bool pass = false;
    Json detail; // free-form: counts, offending entries, tolerances, ...
};

struct VerificationReport {
    std::string subject;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    CheckResult& add(const std::string& name, bool ok, Json detail = Json::object()) {
        checks.push_back({name, ok, std::move(detail)});
        return checks.back();
    }

    Json to_json() const {
        Json j;
        j["subject"] = subject;
        j["pass"] = pass();
        Json arr = Json::array();
        for (const auto& c : checks) {
            Json e;
            e["name"] = c.name;
            e["pass"] = c.pass;
            if (!c.detail.empty()) e["detail"] = c.detail;
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        return j;
    }
};

} // namespace gfres
