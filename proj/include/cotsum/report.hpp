#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cotsum {

// One row of an audit: a claim that was checked, with the grid point it was
// checked at (when meaningful) and a measured detail string.
//
//   pass     - identity/bound held exactly or within its stated tolerance
//   fail     - hard failure: a claim the artifact asserts did not hold
//   finding  - measured discrepancy with the source text; recorded, not fatal
//   measured - data emitted for inspection (no claim attached)
enum class CheckStatus { pass, fail, finding, measured };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::finding: return "finding";
        case CheckStatus::measured: return "measured";
    }
    return "?";
}

struct CheckRecord {
    std::string check;
    std::optional<long> p;
    std::optional<long> k;
    CheckStatus status = CheckStatus::pass;
    std::string detail;
};

struct AuditReport {
    std::vector<CheckRecord> records;

    void add(CheckRecord r) { records.push_back(std::move(r)); }

    void add(std::string check, std::optional<long> p, std::optional<long> k,
             CheckStatus status, std::string detail = {}) {
        records.push_back({std::move(check), p, k, status, std::move(detail)});
    }

    bool hard_failure() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::fail) return true;
        return false;
    }

    std::size_t count(CheckStatus s) const {
        std::size_t n = 0;
        for (const auto& r : records)
            if (r.status == s) ++n;
        return n;
    }

    // First failing record, if any; used by tests to print a counterexample.
    const CheckRecord* first_failure() const {
        for (const auto& r : records)
            if (r.status == CheckStatus::fail) return &r;
        return nullptr;
    }
};

// Process exit code an audit maps to: hard failures are 1, findings are not.
inline int exit_code(const AuditReport& rep) { return rep.hard_failure() ? 1 : 0; }

}  // namespace cotsum
