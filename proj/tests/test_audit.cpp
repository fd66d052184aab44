#include <doctest.h>

#include <algorithm>

#include "cotsum/audit.hpp"
#include "cotsum/report.hpp"

using cotsum::AuditReport;
using cotsum::CheckStatus;

namespace {

bool has_check(const AuditReport& rep, const std::string& name, CheckStatus status) {
    return std::any_of(rep.records.begin(), rep.records.end(), [&](const auto& r) {
        return r.check == name && r.status == status;
    });
}

}  // namespace

TEST_CASE("full audit at small scale: no hard failures, documented findings present") {
    const auto rep = cotsum::audit::run_full_audit({8, 300});
    CHECK(!rep.hard_failure());
    CHECK(rep.count(CheckStatus::finding) >= 2);

    CHECK(has_check(rep, "sn_integer_label", CheckStatus::finding));
    CHECK(has_check(rep, "double_series_index_typo", CheckStatus::finding));
    CHECK(has_check(rep, "phi_convergence_index_phrasing", CheckStatus::finding));
    CHECK(has_check(rep, "zeta_integral_display_mismatch", CheckStatus::finding));
    CHECK(has_check(rep, "limit_scan_ratio", CheckStatus::measured));

    CHECK(has_check(rep, "coeff_four_way", CheckStatus::pass));
    CHECK(has_check(rep, "series_direct_agreement", CheckStatus::pass));
    CHECK(has_check(rep, "envelope_containment", CheckStatus::pass));

    // the exact-arithmetic path surfaces the non-integer value verbatim
    const auto it = std::find_if(rep.records.begin(), rep.records.end(),
                                 [](const auto& r) { return r.check == "sn_integer_label"; });
    REQUIRE(it != rep.records.end());
    CHECK(it->detail.find("1/4") != std::string::npos);
}

TEST_CASE("vacuous ranges at p_max = 2 still pass") {
    const auto rep = cotsum::audit::run_full_audit({2, 50});
    CHECK(!rep.hard_failure());
}

TEST_CASE("exit-code mapping for audit reports") {
    AuditReport ok;
    ok.add("x", {}, {}, CheckStatus::pass);
    ok.add("y", {}, {}, CheckStatus::finding);
    CHECK(exit_code(ok) == 0);

    AuditReport bad;
    bad.add("x", 3, 7, CheckStatus::fail, "synthetic");
    CHECK(exit_code(bad) == 1);
    CHECK(bad.first_failure() != nullptr);
    CHECK(bad.first_failure()->detail == "synthetic");
}
