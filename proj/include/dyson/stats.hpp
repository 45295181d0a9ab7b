#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>

namespace dyson {

// Wilson score interval for a binomial proportion at z standard normal
// quantiles (z = 1.959964... for 95%).
inline std::pair<double, double> wilson_interval(std::int64_t successes, std::int64_t n,
                                                 double z = 1.959963984540054) {
    if (n <= 0) return {0.0, 1.0};
    double p = static_cast<double>(successes) / static_cast<double>(n);
    double z2 = z * z;
    double denom = 1.0 + z2 / static_cast<double>(n);
    double center = (p + z2 / (2.0 * static_cast<double>(n))) / denom;
    double half = z / denom *
                  std::sqrt(p * (1.0 - p) / static_cast<double>(n) +
                            z2 / (4.0 * static_cast<double>(n) * static_cast<double>(n)));
    double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = successes == n ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

// Standard deviation of Binomial(n, p).
inline double binomial_sigma(double n, double p) { return std::sqrt(n * p * (1.0 - p)); }

// Streaming mean and standard error.
struct MeanAccumulator {
    std::int64_t n = 0;
    double sum = 0, sumsq = 0;
    void add(double x) {
        ++n;
        sum += x;
        sumsq += x * x;
    }
    double mean() const { return n ? sum / static_cast<double>(n) : 0.0; }
    double variance() const {
        if (n < 2) return 0.0;
        double m = mean();
        return std::max(0.0, (sumsq - static_cast<double>(n) * m * m) / static_cast<double>(n - 1));
    }
    double std_error() const { return n ? std::sqrt(variance() / static_cast<double>(n)) : 0.0; }
};

} // namespace dyson
