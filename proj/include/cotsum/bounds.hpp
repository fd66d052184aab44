#pragma once

#include <array>
#include <vector>

#include "cotsum/enclosure.hpp"

namespace cotsum::bounds {

inline constexpr long kMaxPhiTerms = 1'000'000'000;  // keeps ip+2p well under 2^53

// phi_m(r,p) = sum_{i>=0} i^m / ((ip+r+1)(ip+p+r+1)(ip+r+2)(ip+p+r)),
// convergent for m in {0,1,2}; the i = 0 summand uses the 0^0 = 1
// convention, so it is the plain reciprocal for m = 0 and zero otherwise.
struct PhiValue {
    int m = 0;
    long r = 0;
    long p = 0;
    Enclosure enclosure;
};

// Enclosure of phi_m: compensated partial sum through i = n_terms plus a
// tail bracket from 1/(81 i^4 p^4) < summand reciprocal < 1/(i^4 p^4)
// (i >= 1), integrated in closed form:
//   sum_{i>n} i^{m-4} in [ (n+1)^{m-3}/(3-m), n^{m-3}/(3-m) ]   (n >= 1)
// and bracketed by zeta(4-m) itself when n_terms = 0 (pure-tail case).
PhiValue phi(int m, long r, long p, long n_terms);

// All three orders in one pass over the common reciprocal; same enclosures
// as phi(m, ...). This is what the i <= 1e6 brute-force sweeps use.
std::array<PhiValue, 3> phi_all(long r, long p, long n_terms);

// The closed-form brackets:
//   m=0: ( 1/(2p^2(p+1)(2p-1)) + zeta4/(81 p^4),  1/(2p(p+1)) + zeta4/p^4 )
//   m=1: ( zeta3/(81 p^4),  zeta3/p^4 )
//   m=2: ( zeta2/(81 p^4),  zeta2/p^4 )
Enclosure phi_closed_bounds(int m, long r, long p);

// c0(1/p) = (p(p-1)(p-2)/(2 pi)) sum_{r<p} [ p phi_2 + (p+2r+2) phi_1 +
// (2r+2) phi_0 ], with interval arithmetic through the phi enclosures.
Enclosure c0_phi_decomposition(long p, long n_terms);

struct EnvelopeReport {
    long p = 0;
    double lower = 0.0;        // closed-form lower envelope
    double upper = 0.0;        // closed-form upper envelope
    double c0 = 0.0;           // direct sum
    bool contained = false;    // lower <= c0 <= upper
    double scaled_ratio = 0.0; // c0(1/p) / p^3
};

// Evaluates both closed-form envelopes:
//   upper = ((p-1)(p-2)/(2pi)) [ (z2+2z3+z4)/p + 2(z3+z4)/p^2 + 1 + p/2 ]
//   lower = ((p-1)(p-2)/(2pi)) [ z3/(81p) + (p+2)z3/(81p^2)
//             + 1/((p+1)(2p-1)) + 2 z4/(81p^2) ]
//         + ((p-1)^2(p-2)/(2pi)) [ z3/(81p^2) + 1/(2(p+1)(2p-1))
//             + z4/(81p^2) ]
// Non-containment is reported in the flag, never thrown.
EnvelopeReport envelopes(long p);

// Independent transcription of the same two formulas (regrouped by zeta
// constant, Horner in 1/p); must agree with envelopes() to ~1e-13 relative.
void envelopes_alt(long p, double& lower, double& upper);

// Per-p envelope reports for inspecting the trend of c0(1/p)/p^3. Only the
// window 0 <= ratio < 1/2 is ever asserted by callers; the limit value
// itself is reported as data.
std::vector<EnvelopeReport> limit_scan(const std::vector<long>& p_list);

}  // namespace cotsum::bounds
