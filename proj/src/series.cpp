#include "cotsum/series.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cotsum/coeffs.hpp"
#include "cotsum/constants.hpp"
#include "cotsum/summation.hpp"
#include "cotsum/trigsums.hpp"

namespace cotsum::series {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

mpz_class denominator(long k, long p) {
    return mpz_class(k + 1) * (k + p + 1) * (k + 2) * (k + p);
}

mpq_class make_q(mpz_class num, mpz_class den) {
    mpq_class q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

double prefactor(long p) {
    return static_cast<double>(p) * static_cast<double>(p - 1) * static_cast<double>(p - 2);
}

void require_float_range(long n) {
    if (n > kMaxTermIndex)
        throw std::invalid_argument("term index " + std::to_string(n) +
                                    " beyond float-path validity limit " +
                                    std::to_string(kMaxTermIndex));
}

// sum_{j=a}^{b} 1/j, exact.
mpq_class harmonic_slice(long a, long b) {
    mpq_class h = 0;
    for (long j = a; j <= b; ++j) h += make_q(1, j);
    return h;
}

// The exact brackets accept n >= 0; the public wrappers enforce the
// documented n >= 1 precondition.
void tail_bounds_impl(long p, long n, mpq_class& lo, mpq_class& hi) {
    const mpq_class t_lo = harmonic_slice(n + 3, n + p) / mpq_class(2 * p * (p - 2));
    const mpz_class m2 = 2 * n + 4;
    const mpq_class big_c = make_q(mpz_class(m2 + p) * (m2 + p), m2 * (m2 + 2 * p));
    lo = t_lo;
    hi = big_c * t_lo;

    mpq_class clo, chi;
    tail_bounds_crude_exact(p, n, clo, chi);
    if (clo > lo) lo = clo;
    if (chi < hi) hi = chi;
}

}  // namespace

mpq_class term_exact(long k, long p) {
    coeffs::require_modulus(p);
    coeffs::require_index(k);
    return make_q(coeffs::b_closed(k, p), denominator(k, p));
}

double term_double(long k, long p) {
    const long f = k / p;
    const std::int64_t half_ff1 = static_cast<std::int64_t>(f) * (f + 1) / 2;
    const std::int64_t b = static_cast<std::int64_t>(k + 1) * (f + 1) - p * half_ff1;
    const double den = (static_cast<double>(k + 1) * static_cast<double>(k + p + 1)) *
                       (static_cast<double>(k + 2) * static_cast<double>(k + p));
    return static_cast<double>(b) / den;
}

PartialSum partial_sum(long p, long n, SumMode mode, long exact_cap) {
    coeffs::require_modulus(p);
    coeffs::require_index(n);

    require_float_range(n);

    PartialSum out;
    out.n = n;
    out.prefactor_included = true;

    if (p == 2) {
        // prefactor p(p-1)(p-2) = 0 kills every term
        out.approx = 0.0;
        if (mode == SumMode::exact) out.exact = mpq_class(0);
        return out;
    }

    CompensatedSum acc;
    for (long k = 0; k <= n; ++k) acc.add(term_double(k, p));
    out.approx = acc.value() * prefactor(p);

    if (mode == SumMode::exact) {
        if (n > exact_cap)
            throw std::invalid_argument("exact partial sum capped at n = " +
                                        std::to_string(exact_cap));
        mpq_class s = 0;
        for (long k = 0; k <= n; ++k) s += term_exact(k, p);
        out.exact = mpq_class(p * (p - 1) * (p - 2)) * s;
    }
    return out;
}

void tail_bounds_exact(long p, long n, mpq_class& lo, mpq_class& hi) {
    tail_bounds_impl(p, n, lo, hi);
}

void tail_bounds_crude_exact(long p, long n, mpq_class& lo, mpq_class& hi) {
    // Upper: term <= 1/(p(k+p+1)(k+2)); 1/((k+2)(k+p+1)) telescopes with
    // gap p-1, leaving the p-1 harmonic terms j = n+3 .. n+p+1.
    hi = harmonic_slice(n + 3, n + p + 1) / mpq_class(p * (p - 1));
    // Lower: term > k/(2p(k+1)(k+p+1)(k+p)); pull out k/(k+1) >= (n+1)/(n+2)
    // and telescope 1/((k+p)(k+p+1)).
    lo = make_q(n + 1, n + 2) * make_q(1, 2 * p) * make_q(1, n + p + 1);
}

namespace {

void require_tail_args(long p, long n) {
    if (p < 3) throw std::invalid_argument("tail enclosure needs p >= 3");
    if (n < 1) throw std::invalid_argument("tail enclosure needs n >= 1");
}

}  // namespace

Enclosure tail_enclosure(long p, long n) {
    require_tail_args(p, n);
    mpq_class lo, hi;
    tail_bounds_impl(p, n, lo, hi);
    return enclosure_of(lo, hi);
}

Enclosure tail_enclosure_crude(long p, long n) {
    require_tail_args(p, n);
    mpq_class lo, hi;
    tail_bounds_crude_exact(p, n, lo, hi);
    return enclosure_of(lo, hi);
}

namespace {

SeriesEvaluation zero_evaluation(long p) {
    SeriesEvaluation ev;
    ev.p = p;
    ev.n_terms = 0;
    ev.partial.n = -1;
    ev.partial.exact = mpq_class(0);
    ev.partial.approx = 0.0;
    ev.tail = Enclosure(0.0, 0.0);
    ev.raw = Enclosure(0.0, 0.0);
    ev.value = Enclosure(0.0, 0.0);
    return ev;
}

// Float partial plus certified tail at a fixed n, float rounding slack
// folded into the raw bracket.
SeriesEvaluation assemble(long p, long n) {
    SeriesEvaluation ev;
    ev.p = p;
    ev.n_terms = n + 1;
    ev.partial.n = n;
    ev.partial.prefactor_included = false;

    CompensatedSum acc;
    for (long k = 0; k <= n; ++k) acc.add(term_double(k, p));
    const double partial = acc.value();
    ev.partial.approx = partial;

    mpq_class tlo, thi;
    tail_bounds_impl(p, n, tlo, thi);
    ev.tail = enclosure_of(tlo, thi);

    // Per-term products/division cost <= ~5 ulps each, accumulation O(eps);
    // 16 eps of the (positive) partial covers both with margin.
    const double slack = 16.0 * kEps * partial;
    ev.raw = Enclosure(partial + ev.tail.lo - slack, partial + ev.tail.hi + slack);
    ev.value = ev.raw.scale_outward(prefactor(p) / std::numbers::pi, 4);
    return ev;
}

double scaled_tail_width(long p, long n) {
    mpq_class lo, hi;
    tail_bounds_impl(p, n, lo, hi);
    mpq_class w = hi - lo;
    w *= p * (p - 1) * (p - 2);
    return w.get_d() / std::numbers::pi;
}

}  // namespace

SeriesEvaluation c0_series_fixed_n(long p, long n) {
    coeffs::require_modulus(p);
    if (p == 2) return zero_evaluation(p);
    coeffs::require_index(n);
    require_float_range(n);
    return assemble(p, n);
}

SeriesEvaluation c0_series(long p, double tol, long ceiling) {
    coeffs::require_modulus(p);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    if (p == 2) return zero_evaluation(p);

    // Reserve a slice of the budget for float rounding; the tail bracket
    // must fit in the rest.
    const double tail_budget = 0.75 * tol;

    long lo = 1, hi = 1;
    while (hi < ceiling && scaled_tail_width(p, hi) > tail_budget) {
        lo = hi;
        hi = std::min(ceiling, hi * 8);
    }

    if (scaled_tail_width(p, hi) > tail_budget) {
        SeriesEvaluation ev = assemble(p, ceiling);
        ev.status = SeriesStatus::tolerance_unreachable;
        return ev;
    }

    while (lo + 1 < hi) {
        const long mid = lo + (hi - lo) / 2;
        if (scaled_tail_width(p, mid) > tail_budget)
            lo = mid;
        else
            hi = mid;
    }

    SeriesEvaluation ev = assemble(p, hi);
    // The slack estimate is generous; re-check the realized width anyway.
    long n = hi;
    while (ev.value.width() > tol && n < ceiling) {
        n = std::min(ceiling, n * 2);
        ev = assemble(p, n);
    }
    if (ev.value.width() > tol) ev.status = SeriesStatus::tolerance_unreachable;
    return ev;
}

mpq_class theta_exact(long i, long r, long p) {
    coeffs::require_modulus(p);
    if (i < 0) throw std::invalid_argument("theta needs i >= 0");
    if (r < 0 || r > p - 1) throw std::invalid_argument("theta needs 0 <= r <= p-1");
    const mpz_class num = mpz_class(p) * i * i + mpz_class(p + 2 * r + 2) * i + (2 * r + 2);
    const long k = i * p + r;
    return make_q(num, denominator(k, p));
}

double theta_double(long i, long r, long p) {
    return 2.0 * term_double(i * p + r, p);
}

SeriesEvaluation c0_double_series(long p, long i_max) {
    coeffs::require_modulus(p);
    if (p == 2) return zero_evaluation(p);
    if (i_max < 0) throw std::invalid_argument("i_max must be >= 0");
    if (i_max > kMaxTermIndex / p)  // keeps (i_max+1)*p from overflowing
        require_float_range(kMaxTermIndex + 1);

    const long n = (i_max + 1) * p - 1;
    require_float_range(n);

    SeriesEvaluation ev;
    ev.p = p;
    ev.n_terms = n + 1;
    ev.partial.n = n;
    ev.partial.prefactor_included = false;

    // sum of theta(i,r)/2 over the block = single series through k = n,
    // same ascending order.
    CompensatedSum acc;
    for (long i = 0; i <= i_max; ++i)
        for (long r = 0; r < p; ++r) acc.add(0.5 * theta_double(i, r, p));
    const double partial = acc.value();
    ev.partial.approx = partial;

    mpq_class tlo, thi;
    tail_bounds_impl(p, n, tlo, thi);
    ev.tail = enclosure_of(tlo, thi);

    const double slack = 16.0 * kEps * partial;
    ev.raw = Enclosure(partial + ev.tail.lo - slack, partial + ev.tail.hi + slack);
    ev.value = ev.raw.scale_outward(prefactor(p) / std::numbers::pi, 4);
    return ev;
}

mpq_class double_partial_exact(long p, long N) {
    coeffs::require_modulus(p);
    if (N < 0 || N > kMaxTermIndex / p)
        throw std::invalid_argument("block count N out of range");
    mpq_class s = 0;
    for (long i = 0; i < N; ++i)
        for (long r = 0; r < p; ++r) s += theta_exact(i, r, p);
    return s / 2;
}

Enclosure zeta_integral_rhs(long p, double tol, long ceiling) {
    coeffs::require_modulus(p);
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");

    const double log2pi_minus_gamma =
        constants::get("log_two_pi") - constants::get("gamma");

    if (p == 2) {
        const double v = 0.25 * (2.0 * log2pi_minus_gamma - std::log(2.0));
        return Enclosure::point(v).pad(8.0 * kEps * std::abs(v));
    }

    // Final value = ((p-1)/(2p)) [2(log 2pi - gamma) - log p] +
    //               ((p-1)(p-2)/2) * Sigma.
    // A width-w bracket on the scaled series maps through pi/(2p).
    const double tol_c0 = tol * 2.0 * static_cast<double>(p) / std::numbers::pi;
    SeriesEvaluation ev = c0_series(p, tol_c0, ceiling);
    if (ev.status == SeriesStatus::tolerance_unreachable)
        throw std::runtime_error("zeta_integral_rhs: series tolerance unreachable at p = " +
                                 std::to_string(p));

    const double affine = (static_cast<double>(p - 1) / (2.0 * p)) *
                          (2.0 * log2pi_minus_gamma - std::log(static_cast<double>(p)));
    const double scale = static_cast<double>(p - 1) * static_cast<double>(p - 2) / 2.0;
    Enclosure sigma_part = ev.raw.scale_outward(scale, 4);
    Enclosure out(affine + sigma_part.lo, affine + sigma_part.hi);
    return out.pad(8.0 * kEps * (std::abs(affine) + std::abs(out.hi)));
}

double zeta_integral_reference(long p) {
    coeffs::require_modulus(p);
    const double L = constants::get("log_two_pi") - constants::get("gamma");
    const double c0 = (p == 2) ? 0.0 : trigsums::c0_direct(trigsums::Fraction(1, p));
    return 0.5 * L * (1.0 / p + 1.0) -
           (static_cast<double>(p - 1) / (2.0 * p)) * std::log(static_cast<double>(p)) +
           std::numbers::pi / (2.0 * p) * c0;
}

}  // namespace cotsum::series
