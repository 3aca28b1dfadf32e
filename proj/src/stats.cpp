#include "tbp/stats.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace tbp {

double pairwise_sum(std::span<const double> values) {
    if (values.size() <= 16) {
        double s = 0.0;
        for (double v : values) s += v;
        return s;
    }
    std::size_t half = values.size() / 2;
    return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

MeanSe summarize(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("summarize: empty sample");
    std::size_t n = values.size();
    MeanSe out;
    out.mean = pairwise_sum(values) / static_cast<double>(n);
    if (n == 1) return out;
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        double d = values[i] - out.mean;
        sq[i] = d * d;
    }
    double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    out.se = std::sqrt(var / static_cast<double>(n));
    return out;
}

namespace {

// Lentz continued fraction for the incomplete beta function.
double betacf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 1e-15;
    constexpr double kTiny = 1e-300;

    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < kEps) return h;
    }
    throw std::runtime_error("incomplete beta continued fraction did not converge");
}

} // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("incomplete beta needs positive shape parameters");
    if (!(x >= 0.0) || !(x <= 1.0))
        throw std::domain_error("incomplete beta argument must lie in [0, 1]");
    if (x == 0.0 || x == 1.0) return x;
    double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
    double bt = std::exp(log_bt);
    if (x < (a + 1.0) / (a + b + 2.0)) return bt * betacf(a, b, x) / a;
    return 1.0 - bt * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_sided_p(double t_stat, double dof) {
    if (!(dof > 0.0)) throw std::domain_error("degrees of freedom must be positive");
    if (std::isnan(t_stat)) throw std::domain_error("t statistic is NaN");
    if (std::isinf(t_stat)) return 0.0;
    return regularized_incomplete_beta(dof / 2.0, 0.5,
                                       dof / (dof + t_stat * t_stat));
}

double paired_ttest(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw std::invalid_argument("paired test needs samples of equal length");
    if (x.size() < 2)
        throw std::invalid_argument("paired test needs at least two pairs");
    std::size_t n = x.size();
    std::vector<double> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = x[i] - y[i];
    double mean = pairwise_sum(d) / static_cast<double>(n);
    std::vector<double> sq(n);
    for (std::size_t i = 0; i < n; ++i) {
        double c = d[i] - mean;
        sq[i] = c * c;
    }
    double var = pairwise_sum(sq) / static_cast<double>(n - 1);
    if (var == 0.0) return mean == 0.0 ? 1.0 : 0.0;
    double t = mean / std::sqrt(var / static_cast<double>(n));
    return student_t_two_sided_p(t, static_cast<double>(n - 1));
}

} // namespace tbp
