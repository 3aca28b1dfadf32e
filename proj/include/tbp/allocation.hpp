#pragma once
#include <span>
#include <stdexcept>
#include <vector>

namespace tbp {

// Offline allocation programs over known gaps. Throughout, gaps lie in
// (0, 1] and the decision variable x_i is the sample count given to arm i.
// The objective sum_i exp(-c * x_i * gap_i^2) is a proxy for the expected
// number of misclassified arms.

struct AllocationSolution {
    std::vector<double> x;
    double water_level; // dual variable Phi: (c/2) x_i gap_i^2 + ln(1/gap_i) = Phi on the support
    double objective;
};

// Continuous program: minimize sum_i exp(-c x_i gap_i^2) over x >= 0 with
// sum x_i = budget. Solved by water-filling:
//   x_i = max{ (Phi - ln(1/gap_i)) / (c gap_i^2 / 2), 0 },
// with Phi chosen so the budget is met exactly.
AllocationSolution optimal_allocation(std::span<const double> gaps,
                                      double budget, double c);

struct IntegerAllocation {
    std::vector<long long> x;
    double objective;
};

// Exact integer optimum by exhaustive enumeration. Intended as a test
// reference; refuses instances beyond num_arms <= 4, budget <= 60.
IntegerAllocation bruteforce_integer_allocation(std::span<const double> gaps,
                                                long long budget, double c);

// Water level Psi of the self-clipped program: solving the continuous
// program on gaps clipped from below at exp(-Psi) yields water level
// Psi + c/2. Psi solves
//   sum_i [ exp(2x)                         if x <= ln(1/gap_i)
//           (x - ln(1/gap_i) + c/2) / (c gap_i^2 / 2)  otherwise ] = budget.
// Requires budget >= num_arms (the left side equals K at x = 0).
double clipped_water_level(std::span<const double> gaps, double budget, double c);

// Per-arm sample profile {lambda_i} realized by the adaptive rule with
// parameter alpha: the same balance equation as clipped_water_level with
// c = 2 * alpha, evaluated at the scaled budget
//   budget / max{40 / alpha + 1, 40}.
struct LambdaProfile {
    double level; // Lambda, the balance point
    std::vector<double> per_arm;
    double alpha;
    double scaled_budget;
};
LambdaProfile lambda_profile(std::span<const double> gaps, double budget,
                             double alpha);

// Leading constant of the regret guarantee:
//   [9.3 * r / (r - 1)] * exp((2.1 alpha - ln alpha - 0.5) / (4 alpha)),
// where r = 2^(1 / (8 alpha)).
double upper_bound_constant(double alpha);

// Guaranteed expected misclassification count of the adaptive rule:
//   upper_bound_constant(alpha) * sum_i exp(-lambda_i gap_i^2 / 10).
double regret_upper_bound(std::span<const double> gaps, double budget,
                          double alpha);

// Information-theoretic floor (1/4) * P_16(gaps, budget), valid when every
// gap lies in (0, 1/4] and budget >= num_arms.
double regret_lower_bound(std::span<const double> gaps, double budget);

// |P_c(gaps, budget) - P_c'(gaps, budget * c / c')|; zero in exact
// arithmetic for any positive c, c'.
double scaling_residual(std::span<const double> gaps, double budget,
                        double c, double c_prime);

namespace detail {

// Bisection for f(x) = target with f nondecreasing on [0, inf) and
// f(0) <= target. The bracket doubles from 1 and the bisection runs to
// machine precision.
template <typename F>
double solve_increasing(F&& f, double target);

// One arm's term of the lambda balance equation at level x.
double profile_term(double x, double gap, double alpha);

// exp(e) with exponents below -700 flushed to exact zero.
double exp_term(double e);

} // namespace detail

template <typename F>
double detail::solve_increasing(F&& f, double target) {
    double lo = 0.0;
    double hi = 1.0;
    int doublings = 0;
    while (f(hi) < target) {
        lo = hi;
        hi *= 2.0;
        if (++doublings > 1100)
            throw std::runtime_error("root bracketing failed: target unreachable");
    }
    for (int it = 0; it < 400; ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (f(mid) <= target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace tbp
