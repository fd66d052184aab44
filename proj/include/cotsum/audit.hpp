#pragma once

#include "cotsum/report.hpp"

namespace cotsum::audit {

struct AuditOptions {
    long p_max = 20;
    long k_max = 2000;
};

// Runs every checkable identity and bound at desk scale and returns one
// record per check. `fail` records are hard failures (exit code 1 in the
// CLI); `finding` records are measured discrepancies with the source text
// and are expected: the non-integer s_0(3), the double-series index typo,
// the convergence-index phrasing, the algebraicity tension, and the
// zeta-moment display mismatch.
AuditReport run_full_audit(const AuditOptions& opt = {});

}  // namespace cotsum::audit
