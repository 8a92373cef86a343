#pragma once
// Uniform pass/fail reporting for the verification suites.

#include <string>
#include <vector>

namespace spinlab {

struct CheckResult {
    std::string relation;      // e.g. "Y5", "triangularity", "thm:tildeW"
    int grade = -1;            // v (or -1 when not graded)
    std::vector<int> indices;  // generator indices / labels involved
    bool pass = true;
    std::string counterexample; // empty when pass
};

struct Report {
    std::vector<CheckResult> checks;

    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string relation, int grade, std::vector<int> indices,
             bool pass, std::string counterexample = "") {
        checks.push_back({std::move(relation), grade, std::move(indices), pass,
                          std::move(counterexample)});
    }
    void merge(const Report& o) {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
    }
};

} // namespace spinlab
