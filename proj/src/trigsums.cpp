#include "cotsum/trigsums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cotsum/summation.hpp"

namespace cotsum::trigsums {

long gcd(long a, long b) {
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

Fraction::Fraction(long q_, long p_) : q(q_), p(p_) {
    if (p < 2) throw std::invalid_argument("fraction needs p >= 2");
    if (q < 1 || q > p - 1)
        throw std::invalid_argument("fraction needs 1 <= q <= p-1, got q=" + std::to_string(q));
    if (gcd(q, p) != 1)
        throw std::invalid_argument("fraction needs gcd(q,p) = 1, got " + std::to_string(q) +
                                    "/" + std::to_string(p));
}

long mod_inverse(long q, long p) {
    if (p < 2) throw std::invalid_argument("mod_inverse needs p >= 2");
    if (gcd(q, p) != 1) throw std::invalid_argument("mod_inverse needs gcd(q,p) = 1");
    long r0 = p, r1 = ((q % p) + p) % p;
    long t0 = 0, t1 = 1;
    while (r1 != 0) {
        const long quo = r0 / r1;
        long tmp = r0 - quo * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - quo * t1;
        t0 = t1;
        t1 = tmp;
    }
    return ((t0 % p) + p) % p;
}

namespace {

inline double cot_pi_times(long residue, long p) {
    // residue in (0, p); angle in (0, pi), never at a pole.
    if (2 * residue == p) return 0.0;  // cot(pi/2) is exactly zero
    const double x = std::numbers::pi * (static_cast<double>(residue) / static_cast<double>(p));
    return std::cos(x) / std::sin(x);
}

}  // namespace

double c0_direct(const Fraction& f) {
    const long p = f.p, q = f.q;
    CompensatedSum acc;
    long residue = 0;  // kq mod p, maintained incrementally
    for (long k = 1; k <= p - 1; ++k) {
        residue += q;
        if (residue >= p) residue -= p;
        acc.add(static_cast<double>(k) / static_cast<double>(p) * cot_pi_times(residue, p));
    }
    return -acc.value() + 0.0;  // normalizes -0.0 (p = 2) to +0.0
}

double vasyunin_direct(const Fraction& f) {
    const long p = f.p, q = f.q;
    CompensatedSum acc;
    long residue = 0;
    for (long r = 1; r <= p - 1; ++r) {
        residue += q;
        if (residue >= p) residue -= p;
        const double frac = static_cast<double>(residue) / static_cast<double>(p);
        acc.add(frac * cot_pi_times(r, p));
    }
    return acc.value();
}

EstermannValue estermann_at_zero(const Fraction& f) {
    return EstermannValue{0.25, 0.5 * c0_direct(f)};
}

}  // namespace cotsum::trigsums
