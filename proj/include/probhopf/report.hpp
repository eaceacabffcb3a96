// Uniform pass/fail reporting for the verification routines.  Every check
// carries its worst residual (0 for exact checks) and a witness string
// locating the first failure, so CLI output and tests share one shape.
#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace probhopf {

struct CheckResult {
    std::string name;
    bool pass = true;
    double residual = 0.0;   // worst deviation seen (0 when the check is exact)
    std::string detail;      // witness / context, empty when passing cleanly
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool ok() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }
    double worst_residual() const {
        double w = 0.0;
        for (const auto& c : checks) w = std::max(w, c.residual);
        return w;
    }
    void add(std::string name, bool pass, double residual = 0.0, std::string detail = {}) {
        checks.push_back({std::move(name), pass, residual, std::move(detail)});
    }
    void merge(const CheckReport& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) {
                std::ostringstream os;
                os << c.name;
                if (!c.detail.empty()) os << ": " << c.detail;
                return os.str();
            }
        return {};
    }
};

}  // namespace probhopf
