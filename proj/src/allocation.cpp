#include "tbp/allocation.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace tbp {
namespace {

void check_gaps(std::span<const double> gaps) {
    if (gaps.empty()) throw std::invalid_argument("gaps must be non-empty");
    for (double g : gaps)
        if (!(g > 0.0) || !(g <= 1.0))
            throw std::domain_error("gaps must lie in (0, 1]");
}

// Water-filling coordinate for dual level phi.
double water_x(double phi, double gap, double c) {
    double x = (phi + std::log(gap)) / (c * gap * gap / 2.0);
    return x > 0.0 ? x : 0.0;
}

} // namespace

namespace detail {

double exp_term(double e) { return e < -700.0 ? 0.0 : std::exp(e); }

double profile_term(double x, double gap, double alpha) {
    double log_inv = -std::log(gap);
    if (x <= log_inv) return std::exp(2.0 * x);
    return (x - log_inv + alpha) / (alpha * gap * gap);
}

} // namespace detail

AllocationSolution optimal_allocation(std::span<const double> gaps,
                                      double budget, double c) {
    check_gaps(gaps);
    if (!(budget > 0.0)) throw std::domain_error("budget must be positive");
    if (!(c > 0.0)) throw std::domain_error("c must be positive");

    auto total = [&](double phi) {
        double s = 0.0;
        for (double g : gaps) s += water_x(phi, g, c);
        return s;
    };
    double phi = detail::solve_increasing(total, budget);

    AllocationSolution sol;
    sol.water_level = phi;
    sol.x.resize(gaps.size());
    double obj = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        sol.x[i] = water_x(phi, gaps[i], c);
        obj += detail::exp_term(-c * sol.x[i] * gaps[i] * gaps[i]);
    }
    sol.objective = obj;
    return sol;
}

IntegerAllocation bruteforce_integer_allocation(std::span<const double> gaps,
                                                long long budget, double c) {
    check_gaps(gaps);
    if (!(c > 0.0)) throw std::domain_error("c must be positive");
    if (budget < 0) throw std::domain_error("budget must be non-negative");
    const int K = static_cast<int>(gaps.size());
    if (K > 4 || budget > 60)
        throw std::invalid_argument(
            "exhaustive enumeration is capped at 4 arms and budget 60");

    // term[i][n] = exp(-c * n * gap_i^2)
    std::vector<std::vector<double>> term(static_cast<std::size_t>(K));
    for (int i = 0; i < K; ++i) {
        auto& row = term[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(budget) + 1);
        for (long long n = 0; n <= budget; ++n)
            row[static_cast<std::size_t>(n)] =
                detail::exp_term(-c * static_cast<double>(n) * gaps[static_cast<std::size_t>(i)] *
                                 gaps[static_cast<std::size_t>(i)]);
    }

    IntegerAllocation best;
    best.objective = std::numeric_limits<double>::infinity();
    std::vector<long long> current(static_cast<std::size_t>(K), 0);
    // Enumerates arms 0..K-2; the last arm absorbs the remainder. Ascending
    // order plus strict improvement keeps the first (lexicographically
    // smallest) optimum on ties.
    std::function<void(int, long long, double)> rec =
        [&](int arm, long long remaining, double partial) {
            if (arm == K - 1) {
                current[static_cast<std::size_t>(arm)] = remaining;
                double v = partial +
                           term[static_cast<std::size_t>(arm)][static_cast<std::size_t>(remaining)];
                if (v < best.objective) {
                    best.objective = v;
                    best.x = current;
                }
                return;
            }
            for (long long n = 0; n <= remaining; ++n) {
                current[static_cast<std::size_t>(arm)] = n;
                rec(arm + 1, remaining - n,
                    partial + term[static_cast<std::size_t>(arm)][static_cast<std::size_t>(n)]);
            }
        };
    rec(0, budget, 0.0);
    return best;
}

double clipped_water_level(std::span<const double> gaps, double budget, double c) {
    check_gaps(gaps);
    if (!(c > 0.0)) throw std::domain_error("c must be positive");
    if (!(budget >= static_cast<double>(gaps.size())))
        throw std::domain_error("budget must be at least the number of arms");
    auto balance = [&](double x) {
        double s = 0.0;
        for (double g : gaps) s += detail::profile_term(x, g, c / 2.0);
        return s;
    };
    return detail::solve_increasing(balance, budget);
}

LambdaProfile lambda_profile(std::span<const double> gaps, double budget,
                             double alpha) {
    check_gaps(gaps);
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    double scale = std::max(40.0 / alpha + 1.0, 40.0);
    double target = budget / scale;
    if (!(target >= static_cast<double>(gaps.size())))
        throw std::domain_error(
            "budget must be at least max{40/alpha + 1, 40} per arm");

    auto balance = [&](double x) {
        double s = 0.0;
        for (double g : gaps) s += detail::profile_term(x, g, alpha);
        return s;
    };

    LambdaProfile prof;
    prof.alpha = alpha;
    prof.scaled_budget = target;
    prof.level = detail::solve_increasing(balance, target);
    prof.per_arm.resize(gaps.size());
    for (std::size_t i = 0; i < gaps.size(); ++i)
        prof.per_arm[i] = detail::profile_term(prof.level, gaps[i], alpha);
    return prof;
}

double upper_bound_constant(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    double r = std::exp2(1.0 / (8.0 * alpha));
    return 9.3 * r / (r - 1.0) *
           std::exp((2.1 * alpha - std::log(alpha) - 0.5) / (4.0 * alpha));
}

double regret_upper_bound(std::span<const double> gaps, double budget,
                          double alpha) {
    LambdaProfile prof = lambda_profile(gaps, budget, alpha);
    double s = 0.0;
    for (std::size_t i = 0; i < gaps.size(); ++i)
        s += detail::exp_term(-prof.per_arm[i] * gaps[i] * gaps[i] / 10.0);
    return upper_bound_constant(alpha) * s;
}

double regret_lower_bound(std::span<const double> gaps, double budget) {
    check_gaps(gaps);
    for (double g : gaps)
        if (g > 0.25) throw std::domain_error("lower bound needs gaps in (0, 1/4]");
    if (!(budget >= static_cast<double>(gaps.size())))
        throw std::domain_error("budget must be at least the number of arms");
    return 0.25 * optimal_allocation(gaps, budget, 16.0).objective;
}

double scaling_residual(std::span<const double> gaps, double budget,
                        double c, double c_prime) {
    double lhs = optimal_allocation(gaps, budget, c).objective;
    double rhs = optimal_allocation(gaps, budget * c / c_prime, c_prime).objective;
    return std::abs(lhs - rhs);
}

} // namespace tbp
