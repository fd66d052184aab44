#!/usr/bin/env python3
"""Regenerate the embedded decimal strings in src/constants.cpp.

Prints name, 40-significant-digit value, and the independent route used to
cross-check it. Run and diff against the table in constants.cpp whenever the
constants are touched.
"""
from mpmath import mp, mpf, log, pi, zeta, euler, nsum

mp.dps = 50

def gamma_independent():
    # Euler-Maclaurin via the Stieltjes-free route: gamma = lim (H_n - log n),
    # accelerated with the standard n^-k correction terms at n = 10**7.
    n = 10**7
    H = nsum(lambda k: 1/k, [1, n])
    # H_n - log n = gamma + 1/(2n) - 1/(12n^2) + 1/(120n^4) - ...
    return H - log(n) - mpf(1)/(2*n) + mpf(1)/(12*n**2) - mpf(1)/(120*n**4)

def zeta3_independent():
    # Globally convergent binomial series (Hasse / Knopp):
    # zeta(s) = 1/(1-2^(1-s)) * sum_n 1/2^(n+1) * sum_k (-1)^k C(n,k) (k+1)^-s
    s = 3
    total = mpf(0)
    from mpmath import binomial
    for n in range(0, 140):
        inner = sum((-1)**k * binomial(n, k) / mpf(k + 1)**s for k in range(n + 1))
        total += inner / mpf(2)**(n + 1)
    return total / (1 - mpf(2)**(1 - s))

def fmt(x):
    return mp.nstr(x, 40, strip_zeros=False)

rows = [
    ("gamma",      euler,         gamma_independent()),
    ("log_two_pi", log(2*pi),     log(2) + log(pi)),
    ("zeta2",      zeta(2),       pi**2/6),
    ("zeta3",      zeta(3),       zeta3_independent()),
    ("zeta4",      zeta(4),       pi**4/90),
]

for name, ref, indep in rows:
    assert abs(ref - indep) < mpf(10)**-35, (name, ref, indep)
    print(f"{name:11s} {fmt(ref)}")
