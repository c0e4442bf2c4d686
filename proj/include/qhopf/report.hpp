#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace qhopf {

enum class CheckStatus { Pass, Fail, Skipped };

inline const char* status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        default: return "skipped";
    }
}

/// One verified identity: its paper tag, outcome, and on failure the first
/// offending coordinate with both sides' values.
struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    void add_pass(std::string name) { checks.push_back({std::move(name), CheckStatus::Pass, ""}); }
    void add_fail(std::string name, std::string detail) {
        checks.push_back({std::move(name), CheckStatus::Fail, std::move(detail)});
    }
    void add_skip(std::string name, std::string why) {
        checks.push_back({std::move(name), CheckStatus::Skipped, std::move(why)});
    }
    void add(std::string name, bool ok, std::string detail_on_fail = "") {
        if (ok)
            add_pass(std::move(name));
        else
            add_fail(std::move(name), std::move(detail_on_fail));
    }
    void merge(const VerificationReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.status != CheckStatus::Fail; });
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (c.status == CheckStatus::Fail) out.push_back(c.name);
        return out;
    }
    bool has_check(const std::string& name, CheckStatus st) const {
        return std::any_of(checks.begin(), checks.end(), [&](const CheckResult& c) {
            return c.name == name && c.status == st;
        });
    }
};

}  // namespace qhopf
