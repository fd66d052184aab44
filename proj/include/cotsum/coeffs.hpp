#pragma once

#include <vector>

#include <gmpxx.h>

#include "cotsum/report.hpp"

namespace cotsum::coeffs {

// The coefficient sequence b_k of 1/((1-x)^2 (1-x^p)), computed four
// independent ways. All arithmetic is exact (GMP integers); b_k grows like
// k^2/(2p), so 64-bit would only overflow near k ~ 6e9, but downstream
// rational partial sums want the headroom anyway.
using Coefficient = mpz_class;

void require_modulus(long p);      // throws unless p >= 2
void require_index(long k);       // throws unless k >= 0

// Closed form (k+1 - (p/2) floor(k/p)) (floor(k/p)+1), evaluated as
// (k+1)(f+1) - p * (f(f+1)/2) so every intermediate stays an integer even
// for odd p (f(f+1) is even).
Coefficient b_closed(long k, long p);

// b_k = k+1 for k < p, b_{k-p} + k + 1 otherwise; emits b_0..b_n.
std::vector<Coefficient> b_recursive_stream(long p, long n);

// Cauchy-product route: sum of (k-j+1) over multiples j of p with j <= k.
// Kept deliberately naive; this is the oracle the other routes are tested
// against.
Coefficient b_convolution(long k, long p);

// Block form b_{ip+r} = (p i^2 + (p+2r+2) i + 2r+2)/2 for 0 <= r <= p-1.
Coefficient b_block(long i, long r, long p);

// First difference b_k - b_{k-1} = floor(k/p) + 1 (k >= 1).
Coefficient first_difference(long k, long p);

// Checks, with b_closed values:
//   second difference b_k - 2b_{k-1} + b_{k-2} == 0 for 2 <= k <= p-1 and
//   k = p+1; == 1 at k = p; and the six-term relation
//   b_k - 2b_{k-1} + b_{k-2} - b_{k-p} + 2b_{k-p-1} - b_{k-p-2} == 0 for
//   p+2 <= k <= k_max. Empty k-ranges (p = 2) pass vacuously.
// Requires k_max >= p+2. Failures are recorded, not thrown.
AuditReport check_recurrences(long p, long k_max);

// Multiplies the truncated series sum_{k<=n} b_k x^k by (1-x)^2 (1-x^p) in
// exact integer polynomial arithmetic and checks the product is
// 1 + O(x^{n+1}).
AuditReport generating_function_selftest(long p, long n);

}  // namespace cotsum::coeffs
