#pragma once
#include <cstdint>

namespace tbp {

// Failure probability of the shrinking confidence band
//   |mean_t - mu| < sqrt((a + b * ln(L / t)) / t),  t = 1..L:
// the chance that a bounded i.i.d. mean ever exits the band is at most
//   2^(b/2 + 2) / (2^(b/2) - 1) * exp(-a / 2),
// for any horizon L. Requires a > 0, b > 0. May exceed 1 (vacuous).
double vclb_bound(double a, double b);

// Fixed-time two-sided tail bound min{1, 2 exp(-2 t eps^2)} for means of
// t i.i.d. samples in [0, 1]. Requires t >= 1, eps >= 0.
double chernoff_hoeffding_bound(long long t, double eps);

// Monte-Carlo check of the band on Bernoulli(mu) samples.
struct VclbConfig {
    long long horizon = 1024; // L
    double a = 8.0;
    double b = 2.0;
    double mu = 0.5;
    long long trials = 100000;
    std::uint64_t seed = 1;
};

struct VclbOutcome {
    long long violations = 0;
    long long trials = 0;
    double rate = 0.0;
};

// Fraction of trials in which the running mean exits the band at some
// t <= horizon (|S_t - t mu| >= t * band_t). Deterministic given the seed.
VclbOutcome vclb_violation_rate(const VclbConfig& config);

} // namespace tbp
