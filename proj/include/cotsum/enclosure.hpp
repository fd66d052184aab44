#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <gmpxx.h>

namespace cotsum {

// Closed interval [lo, hi] certified to contain a real quantity.
struct Enclosure {
    double lo = 0.0;
    double hi = 0.0;

    Enclosure() = default;
    Enclosure(double lo_, double hi_) : lo(lo_), hi(hi_) {
        if (!(lo <= hi)) throw std::invalid_argument("Enclosure: lo > hi");
    }

    static Enclosure point(double x) { return Enclosure(x, x); }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(double x, double slack) const { return lo - slack <= x && x <= hi + slack; }
    bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }
    bool intersects(const Enclosure& e) const { return lo <= e.hi && e.lo <= hi; }

    Enclosure operator+(const Enclosure& e) const { return Enclosure(lo + e.lo, hi + e.hi); }
    Enclosure operator+(double x) const { return Enclosure(lo + x, hi + x); }

    // Tightest interval consistent with both brackets. Requires overlap.
    Enclosure intersect(const Enclosure& e) const {
        return Enclosure(std::max(lo, e.lo), std::min(hi, e.hi));
    }

    // Scale by a nonnegative factor, then pad each endpoint outward by
    // `ulps` representable steps to absorb the rounding of the multiply.
    Enclosure scale_outward(double factor, int ulps = 4) const {
        double a = lo * factor, b = hi * factor;
        for (int i = 0; i < ulps; ++i) {
            a = std::nextafter(a, -INFINITY);
            b = std::nextafter(b, INFINITY);
        }
        return Enclosure(a, b);
    }

    Enclosure pad(double slack) const { return Enclosure(lo - slack, hi + slack); }
};

// Directed rational-to-double conversions. mpq_get_d truncates toward zero,
// so one nextafter step in the right direction restores a safe bound.
inline double to_double_floor(const mpq_class& x) {
    double d = x.get_d();
    if (mpq_class(d) == x) return d;
    return sgn(x) >= 0 ? d : std::nextafter(d, -INFINITY);
}

inline double to_double_ceil(const mpq_class& x) {
    double d = x.get_d();
    if (mpq_class(d) == x) return d;
    return sgn(x) >= 0 ? std::nextafter(d, INFINITY) : d;
}

// Outward-rounded image of an exact rational interval.
inline Enclosure enclosure_of(const mpq_class& lo, const mpq_class& hi) {
    return Enclosure(to_double_floor(lo), to_double_ceil(hi));
}

}  // namespace cotsum
