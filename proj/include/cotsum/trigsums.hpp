#pragma once

#include <cstdint>

namespace cotsum::trigsums {

// A reduced fraction q/p with p >= 2, 1 <= q <= p-1, gcd(q,p) = 1.
// Construction validates; every cotangent sum below takes one of these, so
// no pole cot(pi * integer) is ever sampled.
struct Fraction {
    long q;
    long p;

    Fraction(long q, long p);
};

long gcd(long a, long b);

// Inverse of q mod p via extended Euclid; result in [1, p-1].
// Requires gcd(q,p) = 1 and p >= 2.
long mod_inverse(long q, long p);

// c0(q/p) = -sum_{k=1}^{p-1} (k/p) cot(pi k q / p).
//
// The cotangent argument is reduced to pi * ((kq mod p)/p) with the exact
// integer residue (cot has period pi), so the argument error stays at one
// rounding of a number in (0, pi) regardless of p. Compensated summation,
// fixed left-to-right order: repeated calls are bit-identical.
double c0_direct(const Fraction& f);

// Vasyunin sum V(q/p) = sum_{r=1}^{p-1} {rq/p} cot(pi r / p); the
// fractional part is (rq mod p)/p with the exact residue. Satisfies
// V(q/p) = -c0(qbar/p).
double vasyunin_direct(const Fraction& f);

// Estermann zeta value at s = 0: 1/4 + (i/2) c0(q/p).
struct EstermannValue {
    double re;  // exactly 0.25
    double im;  // c0(q/p) / 2
};

EstermannValue estermann_at_zero(const Fraction& f);

}  // namespace cotsum::trigsums
