#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace perclab {

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
    double half_width() const { return 0.5 * (high - low); }
};

// 95% Wilson score interval for a frequency; well behaved near 0 and 1.
inline WilsonInterval wilson95(double successes, double trials) {
    if (trials <= 0) return {0.0, 1.0};
    constexpr double z = 1.959963984540054;
    const double z2 = z * z;
    const double phat = successes / trials;
    const double denom = 1.0 + z2 / trials;
    const double center = (phat + z2 / (2.0 * trials)) / denom;
    const double half =
        z * std::sqrt(phat * (1.0 - phat) / trials + z2 / (4.0 * trials * trials)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

// Binomial(m, p) pmf over k = 0..m. Log-space via lgamma, then normalized so
// the returned weights sum to 1 within accumulation rounding.
inline std::vector<double> binomial_weights(std::int64_t m, double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binomial_weights: p outside [0,1]");
    std::vector<double> w(static_cast<std::size_t>(m) + 1, 0.0);
    if (p == 0.0) { w.front() = 1.0; return w; }
    if (p == 1.0) { w.back() = 1.0; return w; }
    const double lp = std::log(p), lq = std::log1p(-p);
    const double lgm = std::lgamma(static_cast<double>(m) + 1.0);
    double max_lw = -HUGE_VAL;
    std::vector<double> lw(w.size());
    for (std::int64_t k = 0; k <= m; ++k) {
        lw[static_cast<std::size_t>(k)] = lgm - std::lgamma(static_cast<double>(k) + 1.0) -
                                          std::lgamma(static_cast<double>(m - k) + 1.0) +
                                          static_cast<double>(k) * lp +
                                          static_cast<double>(m - k) * lq;
        max_lw = std::max(max_lw, lw[static_cast<std::size_t>(k)]);
    }
    double sum = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] = std::exp(lw[k] - max_lw);
        sum += w[k];
    }
    for (double& x : w) x /= sum;
    return w;
}

// Streaming mean/variance (Welford).
struct MeanVar {
    std::int64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }
    double variance() const { return n > 1 ? m2 / static_cast<double>(n - 1) : 0.0; }
    double std_error() const {
        return n > 1 ? std::sqrt(variance() / static_cast<double>(n)) : 0.0;
    }
};

}  // namespace perclab
