#include "cotsum/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cotsum/constants.hpp"
#include "cotsum/summation.hpp"
#include "cotsum/trigsums.hpp"

namespace cotsum::bounds {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_phi_args(long r, long p, long n_terms) {
    if (p < 2) throw std::invalid_argument("phi needs p >= 2");
    if (r < 0 || r > p - 1) throw std::invalid_argument("phi needs 0 <= r <= p-1");
    if (n_terms < 0 || n_terms > kMaxPhiTerms)
        throw std::invalid_argument("phi needs 0 <= n_terms <= " + std::to_string(kMaxPhiTerms));
}

// 1 / ((ip+r+1)(ip+p+r+1)(ip+r+2)(ip+p+r)); factors stay below 2^53 for the
// i ranges used here, so only the products round.
inline double reciprocal_denom(long i, long r, long p) {
    const double a = static_cast<double>(i * p + r + 1);
    const double b = static_cast<double>(i * p + p + r + 1);
    const double c = static_cast<double>(i * p + r + 2);
    const double d = static_cast<double>(i * p + p + r);
    return 1.0 / ((a * b) * (c * d));
}

// Bracket of sum_{i>n} i^m * D_i. For n >= 1 the integral comparison on
// sum i^{m-4}; for n = 0 the full zeta(4-m) value brackets it directly.
void phi_tail(int m, long p, long n, double& lo, double& hi) {
    const double p4 = std::pow(static_cast<double>(p), 4);
    double pow_lo, pow_hi;
    if (n == 0) {
        static const char* kZeta[3] = {"zeta4", "zeta3", "zeta2"};
        pow_lo = pow_hi = constants::get(kZeta[m]);
    } else {
        const double s = static_cast<double>(3 - m);
        pow_lo = std::pow(static_cast<double>(n + 1), m - 3) / s;
        pow_hi = std::pow(static_cast<double>(n), m - 3) / s;
    }
    // one-sided rounding guard on the pow/div chain
    lo = pow_lo / (81.0 * p4) * (1.0 - 8.0 * kEps);
    hi = pow_hi / p4 * (1.0 + 8.0 * kEps);
}

PhiValue finish(int m, long r, long p, long n_terms, double partial) {
    double tlo, thi;
    phi_tail(m, p, n_terms, tlo, thi);
    const double slack = 16.0 * kEps * partial;
    PhiValue out;
    out.m = m;
    out.r = r;
    out.p = p;
    out.enclosure = Enclosure(partial - slack + tlo, partial + slack + thi);
    return out;
}

}  // namespace

std::array<PhiValue, 3> phi_all(long r, long p, long n_terms) {
    require_phi_args(r, p, n_terms);
    CompensatedSum acc0, acc1, acc2;
    acc0.add(reciprocal_denom(0, r, p));  // 0^0 = 1; orders 1,2 get zero
    for (long i = 1; i <= n_terms; ++i) {
        const double d = reciprocal_denom(i, r, p);
        const double di = static_cast<double>(i);
        acc0.add(d);
        acc1.add(di * d);
        acc2.add(di * di * d);
    }
    return {finish(0, r, p, n_terms, acc0.value()),
            finish(1, r, p, n_terms, acc1.value()),
            finish(2, r, p, n_terms, acc2.value())};
}

PhiValue phi(int m, long r, long p, long n_terms) {
    if (m < 0 || m > 2) throw std::invalid_argument("phi needs m in {0,1,2}");
    require_phi_args(r, p, n_terms);
    CompensatedSum acc;
    if (m == 0) acc.add(reciprocal_denom(0, r, p));
    for (long i = 1; i <= n_terms; ++i) {
        double w = 1.0;
        for (int j = 0; j < m; ++j) w *= static_cast<double>(i);
        acc.add(w * reciprocal_denom(i, r, p));
    }
    return finish(m, r, p, n_terms, acc.value());
}

Enclosure phi_closed_bounds(int m, long r, long p) {
    if (m < 0 || m > 2) throw std::invalid_argument("phi needs m in {0,1,2}");
    require_phi_args(r, p, 0);
    const double p4 = std::pow(static_cast<double>(p), 4);
    switch (m) {
        case 0: {
            const double z4 = constants::get("zeta4");
            const double dp = static_cast<double>(p);
            const double lo =
                1.0 / (2.0 * dp * dp * (dp + 1.0) * (2.0 * dp - 1.0)) + z4 / (81.0 * p4);
            const double hi = 1.0 / (2.0 * dp * (dp + 1.0)) + z4 / p4;
            return Enclosure(lo, hi);
        }
        case 1: {
            const double z3 = constants::get("zeta3");
            return Enclosure(z3 / (81.0 * p4), z3 / p4);
        }
        default: {
            const double z2 = constants::get("zeta2");
            return Enclosure(z2 / (81.0 * p4), z2 / p4);
        }
    }
}

Enclosure c0_phi_decomposition(long p, long n_terms) {
    if (p < 3) {
        if (p == 2) return Enclosure(0.0, 0.0);
        throw std::invalid_argument("c0_phi_decomposition needs p >= 3");
    }
    double lo = 0.0, hi = 0.0;
    for (long r = 0; r < p; ++r) {
        const auto f = phi_all(r, p, n_terms);
        const double cp = static_cast<double>(p);
        const double c1 = static_cast<double>(p + 2 * r + 2);
        const double c0w = static_cast<double>(2 * r + 2);
        lo += cp * f[2].enclosure.lo + c1 * f[1].enclosure.lo + c0w * f[0].enclosure.lo;
        hi += cp * f[2].enclosure.hi + c1 * f[1].enclosure.hi + c0w * f[0].enclosure.hi;
    }
    const double scale = static_cast<double>(p) * (p - 1) * (p - 2) / (2.0 * std::numbers::pi);
    Enclosure combined(lo * (1.0 - 8.0 * kEps * p), hi * (1.0 + 8.0 * kEps * p));
    return combined.scale_outward(scale, 4);
}

EnvelopeReport envelopes(long p) {
    if (p < 3) throw std::invalid_argument("envelopes needs p >= 3");
    const double z2 = constants::get("zeta2");
    const double z3 = constants::get("zeta3");
    const double z4 = constants::get("zeta4");
    const double dp = static_cast<double>(p);
    const double two_pi = 2.0 * std::numbers::pi;

    const double a = (dp - 1.0) * (dp - 2.0) / two_pi;
    const double upper =
        a * ((z2 + 2.0 * z3 + z4) / dp + 2.0 * (z3 + z4) / (dp * dp) + 1.0 + dp / 2.0);

    const double b = (dp - 1.0) * (dp - 1.0) * (dp - 2.0) / two_pi;
    const double lower =
        a * (z3 / (81.0 * dp) + (dp + 2.0) * z3 / (81.0 * dp * dp) +
             1.0 / ((dp + 1.0) * (2.0 * dp - 1.0)) + 2.0 * z4 / (81.0 * dp * dp)) +
        b * (z3 / (81.0 * dp * dp) + 1.0 / (2.0 * (dp + 1.0) * (2.0 * dp - 1.0)) +
             z4 / (81.0 * dp * dp));

    EnvelopeReport rep;
    rep.p = p;
    rep.lower = lower;
    rep.upper = upper;
    rep.c0 = trigsums::c0_direct(trigsums::Fraction(1, p));
    rep.contained = lower <= rep.c0 && rep.c0 <= upper;
    rep.scaled_ratio = rep.c0 / (dp * dp * dp);
    return rep;
}

void envelopes_alt(long p, double& lower, double& upper) {
    // Regrouped transcription: collect by constant, Horner in u = 1/p.
    const double z2 = constants::get("zeta2");
    const double z3 = constants::get("zeta3");
    const double z4 = constants::get("zeta4");
    const double dp = static_cast<double>(p);
    const double u = 1.0 / dp;
    const double a = (dp - 1.0) * (dp - 2.0) / (2.0 * std::numbers::pi);

    upper = a * (0.5 * dp + 1.0 + u * (z2 + 2.0 * z3 + z4 + u * (2.0 * z3 + 2.0 * z4)));

    const double inv_pp = 1.0 / ((dp + 1.0) * (2.0 * dp - 1.0));
    const double zeta_part = (z3 * (1.0 + (dp + 2.0) * u) + 2.0 * z4 * u +
                              (dp - 1.0) * u * (z3 + z4)) /
                             (81.0 * dp);
    const double rational_part = inv_pp * (1.0 + 0.5 * (dp - 1.0));
    lower = a * (zeta_part + rational_part);
}

std::vector<EnvelopeReport> limit_scan(const std::vector<long>& p_list) {
    std::vector<EnvelopeReport> out;
    out.reserve(p_list.size());
    for (long p : p_list) out.push_back(envelopes(p));
    return out;
}

}  // namespace cotsum::bounds
