#include "cotsum/coeffs.hpp"

#include <stdexcept>
#include <string>

namespace cotsum::coeffs {

void require_modulus(long p) {
    if (p < 2) throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
}

void require_index(long k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0, got " + std::to_string(k));
}

Coefficient b_closed(long k, long p) {
    require_index(k);
    require_modulus(p);
    const long f = k / p;
    Coefficient t = Coefficient(f) * (f + 1);  // even
    t /= 2;
    return Coefficient(k + 1) * (f + 1) - Coefficient(p) * t;
}

std::vector<Coefficient> b_recursive_stream(long p, long n) {
    require_modulus(p);
    require_index(n);
    std::vector<Coefficient> b;
    b.reserve(static_cast<std::size_t>(n) + 1);
    for (long k = 0; k <= n; ++k) {
        if (k < p)
            b.emplace_back(k + 1);
        else
            b.push_back(b[static_cast<std::size_t>(k - p)] + (k + 1));
    }
    return b;
}

Coefficient b_convolution(long k, long p) {
    require_index(k);
    require_modulus(p);
    Coefficient acc = 0;
    for (long j = 0; j <= k; j += p) acc += k - j + 1;
    return acc;
}

Coefficient b_block(long i, long r, long p) {
    require_modulus(p);
    if (i < 0) throw std::invalid_argument("block index i must be >= 0");
    if (r < 0 || r > p - 1)
        throw std::invalid_argument("block remainder r must lie in [0, p-1]");
    Coefficient num = Coefficient(p) * i * i + Coefficient(p + 2 * r + 2) * i + (2 * r + 2);
    // num is always even: p i^2 + (p+2r+2) i = p i (i+1) + 2ri + 2i.
    num /= 2;
    return num;
}

Coefficient first_difference(long k, long p) {
    if (k < 1) throw std::invalid_argument("first difference needs k >= 1");
    require_modulus(p);
    return Coefficient(k / p + 1);
}

namespace {

Coefficient second_diff(long k, long p) {
    return b_closed(k, p) - 2 * b_closed(k - 1, p) + b_closed(k - 2, p);
}

}  // namespace

AuditReport check_recurrences(long p, long k_max) {
    require_modulus(p);
    if (k_max < p + 2)
        throw std::invalid_argument("check_recurrences requires k_max >= p+2");

    AuditReport rep;

    // b_k - 2b_{k-1} + b_{k-2} = 0 on 2 <= k <= p-1 and at k = p+1.
    bool ok = true;
    long bad_k = -1;
    for (long k = 2; k <= p - 1 && ok; ++k)
        if (second_diff(k, p) != 0) { ok = false; bad_k = k; }
    if (ok && second_diff(p + 1, p) != 0) { ok = false; bad_k = p + 1; }
    rep.add("second_diff_zero", p, ok ? std::optional<long>{} : bad_k,
            ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? (p == 2 ? "range 2<=k<=p-1 empty (vacuous); k=p+1 checked" : "")
               : "b_k - 2b_{k-1} + b_{k-2} != 0");

    ok = second_diff(p, p) == 1;
    rep.add("second_diff_at_p", p, p, ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? "" : "b_p - 2b_{p-1} + b_{p-2} != 1");

    ok = true;
    bad_k = -1;
    for (long k = p + 2; k <= k_max && ok; ++k) {
        Coefficient v = second_diff(k, p) - second_diff(k - p, p);
        if (v != 0) { ok = false; bad_k = k; }
    }
    rep.add("six_term_relation", p, ok ? std::optional<long>{} : bad_k,
            ok ? CheckStatus::pass : CheckStatus::fail,
            ok ? "" : "six-term relation nonzero");

    return rep;
}

AuditReport generating_function_selftest(long p, long n) {
    require_modulus(p);
    require_index(n);

    // (1-x)^2 (1-x^p) = 1 - 2x + x^2 - x^p + 2x^{p+1} - x^{p+2}.
    struct Mono { long deg; long coef; };
    const Mono factor[6] = {{0, 1}, {1, -2}, {2, 1}, {p, -1}, {p + 1, 2}, {p + 2, -1}};

    const std::vector<Coefficient> b = b_recursive_stream(p, n);

    AuditReport rep;
    for (long m = 0; m <= n; ++m) {
        Coefficient c = 0;
        for (const Mono& t : factor) {
            const long j = m - t.deg;
            if (j >= 0) c += t.coef * b[static_cast<std::size_t>(j)];
        }
        const bool ok = (m == 0) ? (c == 1) : (c == 0);
        if (!ok) {
            rep.add("generating_function_selftest", p, m, CheckStatus::fail,
                    "product coefficient at degree " + std::to_string(m) + " is " +
                        c.get_str());
            return rep;
        }
    }
    rep.add("generating_function_selftest", p, n, CheckStatus::pass,
            "product is 1 through degree n");
    return rep;
}

}  // namespace cotsum::coeffs
