#pragma once

#include <string>
#include <utility>
#include <vector>

namespace tauforge {

// One verification check.  A flagged check records an identity instance
// the recursion does not determine; it is reported but does not count
// as a failure.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string counterexample;  // empty when the check passes
    bool flagged = false;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<CheckResult> checks;

    void param(std::string key, std::string value) {
        params.emplace_back(std::move(key), std::move(value));
    }
    void add(std::string name, bool pass, std::string counterexample = "",
             bool flagged = false) {
        checks.push_back({std::move(name), pass, std::move(counterexample), flagged});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& c : checks) n += !c.pass;
        return n;
    }
};

}  // namespace tauforge
