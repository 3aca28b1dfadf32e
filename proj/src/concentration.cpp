#include "tbp/concentration.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "tbp/rng.hpp"

namespace tbp {

double vclb_bound(double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("band parameters a, b must be positive");
    double p = std::exp2(b / 2.0); // 2^(b/2 + 2) / (2^(b/2) - 1) = 4p / (p - 1)
    return 4.0 * p / (p - 1.0) * std::exp(-a / 2.0);
}

double chernoff_hoeffding_bound(long long t, double eps) {
    if (t < 1) throw std::domain_error("sample count must be at least 1");
    if (!(eps >= 0.0)) throw std::domain_error("eps must be non-negative");
    double v = 2.0 * std::exp(-2.0 * static_cast<double>(t) * eps * eps);
    return v < 1.0 ? v : 1.0;
}

VclbOutcome vclb_violation_rate(const VclbConfig& config) {
    if (config.horizon < 1) throw std::domain_error("horizon must be at least 1");
    if (!(config.a > 0.0) || !(config.b > 0.0))
        throw std::domain_error("band parameters a, b must be positive");
    if (!(config.mu >= 0.0) || !(config.mu <= 1.0))
        throw std::domain_error("mu must lie in [0, 1]");
    if (config.trials < 1) throw std::domain_error("trials must be at least 1");

    const long long L = config.horizon;
    // Violation at time t: |S_t - t mu| >= t * sqrt((a + b ln(L/t)) / t),
    // precomputed as a threshold on the centered sum.
    std::vector<double> threshold(static_cast<std::size_t>(L));
    for (long long t = 1; t <= L; ++t) {
        double td = static_cast<double>(t);
        threshold[static_cast<std::size_t>(t - 1)] =
            std::sqrt(td * (config.a + config.b * std::log(static_cast<double>(L) / td)));
    }

    VclbOutcome out;
    out.trials = config.trials;
    for (long long trial = 0; trial < config.trials; ++trial) {
        long long ones = 0;
        for (long long t = 1; t <= L; ++t) {
            ones += stream_uniform(config.seed, static_cast<std::uint64_t>(trial), 0,
                                   static_cast<std::uint64_t>(t - 1)) < config.mu;
            double dev = std::abs(static_cast<double>(ones) -
                                  static_cast<double>(t) * config.mu);
            if (dev >= threshold[static_cast<std::size_t>(t - 1)]) {
                out.violations += 1;
                break;
            }
        }
    }
    out.rate = static_cast<double>(out.violations) / static_cast<double>(out.trials);
    return out;
}

} // namespace tbp
