#include "cotsum/audit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cotsum/bounds.hpp"
#include "cotsum/coeffs.hpp"
#include "cotsum/constants.hpp"
#include "cotsum/series.hpp"
#include "cotsum/trigsums.hpp"

namespace cotsum::audit {

namespace {

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

void check_constants(AuditReport& rep) {
    const double pi = std::numbers::pi;
    const bool z2_ok =
        std::abs(constants::get("zeta2") - pi * pi / 6.0) <= 1e-15 * (pi * pi / 6.0);
    const double pi4_over_90 = pi * pi * pi * pi / 90.0;
    const bool z4_ok = std::abs(constants::get("zeta4") - pi4_over_90) <= 1e-15 * pi4_over_90;
    rep.add("constants_self_consistency", {}, {},
            z2_ok && z4_ok ? CheckStatus::pass : CheckStatus::fail,
            "zeta2 vs pi^2/6, zeta4 vs pi^4/90 at 1e-15 relative");
}

void check_coefficients(AuditReport& rep, long p_max, long k_max) {
    const long p_hi = std::min(p_max, 50L);
    const long k_hi = std::min(k_max, 5000L);
    for (long p = 2; p <= p_hi; ++p) {
        const auto stream = coeffs::b_recursive_stream(p, k_hi);
        long bad_k = -1;
        std::string why;
        for (long k = 0; k <= k_hi; ++k) {
            const auto closed = coeffs::b_closed(k, p);
            if (closed != stream[static_cast<std::size_t>(k)]) { bad_k = k; why = "recursive"; break; }
            if (closed != coeffs::b_convolution(k, p)) { bad_k = k; why = "convolution"; break; }
            if (closed != coeffs::b_block(k / p, k % p, p)) { bad_k = k; why = "block"; break; }
        }
        rep.add("coeff_four_way", p, bad_k < 0 ? std::optional<long>{} : bad_k,
                bad_k < 0 ? CheckStatus::pass : CheckStatus::fail,
                bad_k < 0 ? "closed = recursive = convolution = block, k <= " + std::to_string(k_hi)
                          : why + " route disagrees with closed form");

        long bad_d = -1;
        for (long k = 1; k <= k_hi; ++k) {
            if (coeffs::b_closed(k, p) - coeffs::b_closed(k - 1, p) !=
                coeffs::first_difference(k, p)) {
                bad_d = k;
                break;
            }
        }
        rep.add("coeff_first_difference", p, bad_d < 0 ? std::optional<long>{} : bad_d,
                bad_d < 0 ? CheckStatus::pass : CheckStatus::fail,
                bad_d < 0 ? "b_k - b_{k-1} = floor(k/p)+1" : "first difference mismatch");

        const AuditReport rec = coeffs::check_recurrences(p, std::max(k_max, p + 2));
        for (const auto& r : rec.records) rep.add(r);
    }

    const long g_hi = std::min(p_max, 20L);
    for (long p = 2; p <= g_hi; ++p) {
        const AuditReport g = coeffs::generating_function_selftest(p, 200);
        for (const auto& r : g.records) rep.add(r);
    }
}

void check_theta_identity(AuditReport& rep, long p_max) {
    // theta as printed (quadratic numerator) vs 2*term from the block form.
    for (long p = 2; p <= std::min(p_max, 12L); ++p) {
        bool ok = true;
        for (long i = 0; i <= 40 && ok; ++i)
            for (long r = 0; r < p && ok; ++r)
                ok = series::theta_exact(i, r, p) == 2 * series::term_exact(i * p + r, p);
        rep.add("theta_is_twice_term", p, {}, ok ? CheckStatus::pass : CheckStatus::fail,
                "theta(i,r) = 2 b_{ip+r} / denominator, exact, i <= 40");
    }
}

void check_rearrangement(AuditReport& rep, long p_max) {
    for (long p = 3; p <= std::min(p_max, 10L); ++p) {
        long bad_n = -1;
        mpq_class single = 0, dbl = 0;
        for (long i = 0; i < 50; ++i) {
            for (long r = 0; r < p; ++r) {
                dbl += series::theta_exact(i, r, p);
                single += series::term_exact(i * p + r, p);
            }
            if (dbl != 2 * single) { bad_n = i + 1; break; }
        }
        rep.add("rearrangement_exact", p, bad_n < 0 ? std::optional<long>{} : bad_n,
                bad_n < 0 ? CheckStatus::pass : CheckStatus::fail,
                bad_n < 0 ? "double partial sums equal single partial sums, N <= 50 (exact)"
                          : "mismatch at N = " + std::to_string(bad_n));
    }
}

void check_trig_identities(AuditReport& rep, long p_max) {
    for (long p = 2; p <= std::min(p_max, 60L); ++p) {
        double worst = 0.0;
        long worst_q = 1;
        for (long q = 1; q < p; ++q) {
            if (trigsums::gcd(q, p) != 1) continue;
            const double v = trigsums::vasyunin_direct(trigsums::Fraction(q, p));
            const double c = trigsums::c0_direct(trigsums::Fraction(trigsums::mod_inverse(q, p), p));
            if (std::abs(v + c) > worst) { worst = std::abs(v + c); worst_q = q; }
        }
        rep.add("vasyunin_relation", p, worst_q,
                worst < 1e-10 ? CheckStatus::pass : CheckStatus::fail,
                "max |V(q/p) + c0(qbar/p)| = " + fmt(worst));
    }
    for (long p = 3; p <= std::min(p_max, 100L); ++p) {
        double worst = 0.0;
        for (long q = 1; q < p; ++q) {
            if (trigsums::gcd(q, p) != 1) continue;
            const double a = trigsums::c0_direct(trigsums::Fraction(p - q, p));
            const double b = trigsums::c0_direct(trigsums::Fraction(q, p));
            worst = std::max(worst, std::abs(a + b));
        }
        rep.add("antisymmetry", p, {}, worst < 1e-10 ? CheckStatus::pass : CheckStatus::fail,
                "max |c0((p-q)/p) + c0(q/p)| = " + fmt(worst));
    }
}

void check_closed_forms(AuditReport& rep) {
    const double s3 = std::sqrt(3.0), s5 = std::sqrt(5.0), s10 = std::sqrt(10.0);
    const double targets[4] = {
        1.0 / (3.0 * s3),
        0.5,
        ((s5 - 1.0) * std::sqrt(5.0 - s5) + 3.0 * (s5 + 1.0) * std::sqrt(5.0 + s5)) / (10.0 * s10),
        7.0 / (3.0 * s3),
    };
    const long ps[4] = {3, 4, 5, 6};
    for (int i = 0; i < 4; ++i) {
        const double v = trigsums::c0_direct(trigsums::Fraction(1, ps[i]));
        const double err = std::abs(v - targets[i]);
        rep.add("closed_form_c0", ps[i], {}, err < 1e-12 ? CheckStatus::pass : CheckStatus::fail,
                "direct - closed = " + fmt(v - targets[i]));

        // the same values as raw series sums (pi/(18 sqrt3) etc.)
        const auto ev = series::c0_series(ps[i], 1e-8);
        const double sigma = targets[i] * std::numbers::pi /
                             (static_cast<double>(ps[i]) * (ps[i] - 1) * (ps[i] - 2));
        const bool ok =
            ev.raw.contains(sigma, 1e-13) && ev.value.width() <= 1e-8;
        rep.add("series_closed_form_values", ps[i], ev.partial.n,
                ok ? CheckStatus::pass : CheckStatus::fail,
                "raw sum bracket [" + fmt(ev.raw.lo) + ", " + fmt(ev.raw.hi) + "] vs " + fmt(sigma));
    }
}

void check_series_direct(AuditReport& rep, long p_max) {
    for (long p = 3; p <= std::min(p_max, 40L); ++p) {
        const auto ev = series::c0_series(p, 1e-8);
        const double direct = trigsums::c0_direct(trigsums::Fraction(1, p));
        const bool ok = ev.status == series::SeriesStatus::ok &&
                        ev.value.width() <= 1e-8 && ev.value.contains(direct, 1e-10);
        rep.add("series_direct_agreement", p, ev.partial.n,
                ok ? CheckStatus::pass : CheckStatus::fail,
                "enclosure [" + fmt(ev.value.lo) + ", " + fmt(ev.value.hi) + "] vs direct " +
                    fmt(direct));
    }
}

void check_phi(AuditReport& rep, long p_max) {
    for (long p = 3; p <= std::min(p_max, 30L); ++p) {
        bool all_inside = true;
        std::string note;
        bool hard_fail = false;
        for (long r = 0; r < p; ++r) {
            const auto f = bounds::phi_all(r, p, 1000);
            for (int m = 0; m < 3; ++m) {
                const auto bracket = bounds::phi_closed_bounds(m, r, p).pad(1e-15);
                if (bracket.contains(f[static_cast<std::size_t>(m)].enclosure)) continue;
                all_inside = false;
                // adjudicate with the high-truncation value
                const auto brute = bounds::phi_all(r, p, 1'000'000);
                const bool brute_inside =
                    bracket.contains(brute[static_cast<std::size_t>(m)].enclosure.mid());
                note = "m=" + std::to_string(m) + " r=" + std::to_string(r) +
                       (brute_inside ? " enclosure leaks bracket but brute-force value is inside"
                                     : " brute-force value escapes the published bracket");
                if (!brute_inside) hard_fail = true;
            }
        }
        rep.add("phi_bracket_containment", p, {},
                hard_fail ? CheckStatus::fail
                          : (all_inside ? CheckStatus::pass : CheckStatus::finding),
                all_inside ? "phi enclosures inside the closed-form brackets, all m, r" : note);

        const auto dec = bounds::c0_phi_decomposition(p, 10'000);
        const double direct = trigsums::c0_direct(trigsums::Fraction(1, p));
        rep.add("phi_decomposition_contains_direct", p, {},
                dec.contains(direct) ? CheckStatus::pass : CheckStatus::fail,
                "[" + fmt(dec.lo) + ", " + fmt(dec.hi) + "] vs " + fmt(direct));

        const auto ev = series::c0_series(p, 1e-8);
        rep.add("decomposition_series_consistency", p, {},
                dec.intersects(ev.value) ? CheckStatus::pass : CheckStatus::fail,
                "phi-decomposition bracket intersects series bracket");
    }
}

void check_envelopes(AuditReport& rep, long p_max) {
    for (long p = 3; p <= std::min(p_max, 100L); ++p) {
        const auto e = bounds::envelopes(p);
        rep.add("envelope_containment", p, {},
                e.contained ? CheckStatus::pass : CheckStatus::fail,
                fmt(e.lower) + " <= " + fmt(e.c0) + " <= " + fmt(e.upper));
        const bool window = e.scaled_ratio >= 0.0 && e.scaled_ratio < 0.5;
        rep.add("limit_window", p, {}, window ? CheckStatus::pass : CheckStatus::fail,
                "c0(1/p)/p^3 = " + fmt(e.scaled_ratio));
    }

    for (long p : {10L, 100L, 1000L, 10000L}) {
        const auto e = bounds::envelopes(p);
        rep.add("limit_scan_ratio", p, {}, CheckStatus::measured,
                "c0(1/p)/p^3 = " + fmt(e.scaled_ratio) +
                    "; conjectured limit 1/2 reported as data, not asserted");
    }
}

void check_zeta_integral(AuditReport& rep, long p_max) {
    const double L = constants::get("log_two_pi") - constants::get("gamma");
    {
        const auto enc = series::zeta_integral_rhs(3, 1e-9);
        const double ref = series::zeta_integral_reference(3);
        rep.add("zeta_integral_routes", 3, {},
                enc.contains(ref, 2e-9) ? CheckStatus::pass : CheckStatus::fail,
                "display route and generic q=1 route agree at p=3: " + fmt(enc.mid()) + " vs " +
                    fmt(ref));
    }
    for (long p = 4; p <= std::min(p_max, 8L); ++p) {
        const auto enc = series::zeta_integral_rhs(p, 1e-10);
        const double ref = series::zeta_integral_reference(p);
        const double gap = enc.mid() - ref;
        const double predicted = L * static_cast<double>(p - 3) / (2.0 * p);
        const bool explained = std::abs(gap - predicted) < 1e-7;
        rep.add("zeta_integral_display_mismatch", p, {},
                explained ? CheckStatus::finding : CheckStatus::fail,
                "display minus generic q=1 route = " + fmt(gap) +
                    "; (log 2pi - gamma)(p-3)/(2p) = " + fmt(predicted) +
                    "; the printed display only matches the generic identity at p=3");
    }
}

void add_text_findings(AuditReport& rep) {
    const auto s0 = series::partial_sum(3, 0, series::SumMode::exact);
    rep.add("sn_integer_label", 3, 0, CheckStatus::finding,
            "s_0(3) = " + s0.exact->get_str() +
                " (exact), not an integer; the 'integer sequence' label does not hold");
    rep.add("double_series_index_typo", {}, {}, CheckStatus::finding,
            "double-series inner sum printed with bound r-1 and summand theta(i,j); read as "
            "r = 0..p-1 with summand theta(i,r) - verified by exact rearrangement equality");
    rep.add("phi_convergence_index_phrasing", {}, {}, CheckStatus::finding,
            "convergence of phi_m stated for 'i in {0,1,2}'; the index must be m (summand ~ "
            "i^{m-4}, divergent for m >= 3)");
    rep.add("algebraicity_tension", 3, {}, CheckStatus::finding,
            "pi*c0(1/p) claimed algebraic; c0(1/3) = 1/(3 sqrt 3) is already algebraic, so "
            "pi*c0(1/3) cannot be - recorded without adjudication");
}

}  // namespace

AuditReport run_full_audit(const AuditOptions& opt) {
    AuditReport rep;
    check_constants(rep);
    check_coefficients(rep, opt.p_max, opt.k_max);
    check_theta_identity(rep, opt.p_max);
    check_rearrangement(rep, opt.p_max);
    check_trig_identities(rep, opt.p_max);
    check_closed_forms(rep);
    check_series_direct(rep, opt.p_max);
    check_phi(rep, opt.p_max);
    check_envelopes(rep, opt.p_max);
    check_zeta_integral(rep, opt.p_max);
    add_text_findings(rep);
    return rep;
}

}  // namespace cotsum::audit
