#pragma once

#include <optional>

#include <gmpxx.h>

#include "cotsum/enclosure.hpp"

namespace cotsum::series {

// Machinery for the series
//
//   c0(1/p) = (p(p-1)(p-2)/pi) * sum_{k>=0} b_k / ((k+1)(k+p+1)(k+2)(k+p))
//
// with exact-rational partial sums, deterministic compensated float partial
// sums, and certified tail brackets.

inline constexpr long kDefaultExactCap = 100'000;     // rational-mode n cap
inline constexpr long kDefaultNCeiling = 100'000'000; // tolerance-mode n cap
inline constexpr long kMaxTermIndex = 200'000'000;    // term_double validity limit

struct PartialSum {
    long n = -1;  // last included index; -1 means the empty sum
    std::optional<mpq_class> exact;
    double approx = 0.0;
    bool prefactor_included = false;
};

enum class SeriesStatus { ok, tolerance_unreachable };

struct SeriesEvaluation {
    long p = 0;
    long n_terms = 0;       // number of included terms (= partial.n + 1)
    PartialSum partial;     // raw sum of term(k,p), no prefactor
    Enclosure tail;         // bracket of sum_{k > partial.n} term(k,p)
    Enclosure raw;          // partial + tail, with float slack folded in
    Enclosure value;        // raw scaled by p(p-1)(p-2)/pi
    SeriesStatus status = SeriesStatus::ok;
};

// One term b_k / ((k+1)(k+p+1)(k+2)(k+p)), exact. Strictly positive.
mpq_class term_exact(long k, long p);

// Same term in double; exact integer numerator, denominator rounded once.
// b_k stays below 2^53 for k <= kMaxTermIndex, which every float path
// enforces; past that the numerator itself would round.
double term_double(long k, long p);

// s_n(p) = p(p-1)(p-2) * sum_{k<=n} term(k,p). The float path always runs
// (ascending k, compensated); exact mode adds the rational value and is
// capped because denominator growth makes its cost superlinear.
enum class SumMode { exact, floating };
PartialSum partial_sum(long p, long n, SumMode mode, long exact_cap = kDefaultExactCap);

// Certified bracket of the raw tail sum_{k>n} term(k,p), p >= 3, n >= 1.
//
// Both sides come from the floor bracket floor(k/p) <= k/p < floor(k/p)+1.
// Writing f = floor(k/p), b_k = g(f) with g(f) = (f+1)(k+1-pf/2) concave,
// and f confined to [(k+1-p)/p, k/p], so
//
//   (k+1)(k+p+1)/(2p) <= b_k <= (2k+2+p)^2/(8p)
//
// (left: smaller endpoint value; right: vertex). Dividing by the term
// denominator and telescoping 1/((k+2)(k+p)) = (1/(p-2))(1/(k+2)-1/(k+p)):
//
//   T_lo = (1/(2p(p-2))) * sum_{j=n+3}^{n+p} 1/j
//   T_hi = C * T_lo,  C = (2n+4+p)^2 / ((2n+4)(2n+4+2p))
//
// (C bounds the vertex/endpoint ratio over k > n; decreasing in k.)
// The result is intersected with the cruder one-sided bracket below, which
// is occasionally tighter for small n. All bounds evaluate in exact
// rationals and round outward once into doubles.
Enclosure tail_enclosure(long p, long n);

// Bracket from the one-sided bounds (k/2+1)(k/p) < b_k <= (k+1)(k+p)/p
// alone; upper side telescopes to (1/(p(p-1))) sum_{j=n+3}^{n+p+1} 1/j.
// Width decays like 1/n (the sharp bracket above decays like 1/n^3).
Enclosure tail_enclosure_crude(long p, long n);

// Exact rational forms of the two brackets (outward-rounded by the double
// versions); exposed for the nested-enclosure validity tests.
void tail_bounds_exact(long p, long n, mpq_class& lo, mpq_class& hi);
void tail_bounds_crude_exact(long p, long n, mpq_class& lo, mpq_class& hi);

// Enclosure of c0(1/p) from the series. Tolerance mode picks the smallest n
// (by bisection on the exact tail widths) with final width <= tol; if that
// needs n beyond `ceiling`, evaluates at the ceiling and reports
// tolerance_unreachable with the best enclosure achieved. p = 2 returns the
// exact zero-width zero.
SeriesEvaluation c0_series(long p, double tol, long ceiling = kDefaultNCeiling);
SeriesEvaluation c0_series_fixed_n(long p, long n);

// theta(i,r,p) = (p i^2 + (p+2r+2) i + 2r+2) /
//                ((ip+r+1)(ip+p+r+1)(ip+r+2)(ip+p+r)); equals 2*term(ip+r,p).
mpq_class theta_exact(long i, long r, long p);
double theta_double(long i, long r, long p);

// Double-series rearrangement: (p(p-1)(p-2)/(2 pi)) sum_{i<=i_max} sum_{r<p}
// theta(i,r,p), plus the tail bracket at n = (i_max+1)p - 1. The inner sum
// runs r = 0..p-1 and the summand argument is (i,r).
SeriesEvaluation c0_double_series(long p, long i_max);

// Exact rational double partial sum of theta/2 over i < N, r < p; equals
// the exact single partial sum of term over k < Np.
mpq_class double_partial_exact(long p, long N);

// RHS of the q = 1 zeta-moment identity in its published series form:
// ((p-1)/(2p)) [2(log 2pi - gamma) - log p + p(p-2) Sigma], with Sigma
// enclosed by the series machinery. Throws std::runtime_error if the inner
// series tolerance is unreachable within the ceiling.
Enclosure zeta_integral_rhs(long p, double tol, long ceiling = kDefaultNCeiling);

// Independent route: the generic q = 1 specialization
// (log 2pi - gamma)/2 (1/p + 1) - ((p-1)/(2p)) log p + (pi/(2p)) c0(1/p),
// with V(p/1) = 0 (empty sum) and V(1/p) = -c0(1/p). The two routes differ
// by (log 2pi - gamma)(p-3)/(2p); the audit records that gap.
double zeta_integral_reference(long p);

}  // namespace cotsum::series
