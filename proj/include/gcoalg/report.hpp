#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gcoalg {

/// One violated law, with the witnessing indices (group elements, basis
/// positions) that exhibit it.
struct Issue {
    std::string check;
    std::vector<std::size_t> where;
    std::string detail;
};

/// Verification outcome: empty means every law held.
struct Report {
    std::vector<Issue> issues;

    bool ok() const { return issues.empty(); }

    void add(std::string check, std::vector<std::size_t> where, std::string detail = {}) {
        issues.push_back({std::move(check), std::move(where), std::move(detail)});
    }

    void merge(const Report& other) {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    }

    std::string summary() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& issue : issues) {
            if (!s.empty()) s += "; ";
            s += issue.check;
            if (!issue.where.empty()) {
                s += " at (";
                for (std::size_t k = 0; k < issue.where.size(); ++k)
                    s += (k ? "," : "") + std::to_string(issue.where[k]);
                s += ")";
            }
            if (!issue.detail.empty()) s += ": " + issue.detail;
        }
        return s;
    }
};

}  // namespace gcoalg
