#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace cotsum {

// Neumaier-compensated accumulator. Deterministic for a fixed insertion
// order; accumulation error is O(eps) * sum of |terms| independent of count.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// Fixed-shape pairwise reduction; used as an independent check on the
// compensated path (the two must agree to ~1e-14 on our series).
inline double pairwise_sum(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n == 0) return 0.0;
    if (n <= 8) {
        double s = 0.0;
        for (double x : xs) s += x;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(xs.subspan(0, half)) + pairwise_sum(xs.subspan(half));
}

}  // namespace cotsum
