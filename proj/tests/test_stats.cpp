#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tbp/rng.hpp"
#include "tbp/stats.hpp"

using namespace tbp;

TEST_CASE("pairwise sum matches exact sums and beats naive accumulation") {
    CHECK(pairwise_sum({}) == 0.0);
    std::vector<double> v{1.0, 2.0, 3.0, 4.0, 5.0};
    CHECK(pairwise_sum(v) == 15.0);

    // 10^7 copies of 0.1: pairwise stays within a few ulps of the true sum
    std::vector<double> many(10000000, 0.1);
    double s = pairwise_sum(many);
    CHECK(s == doctest::Approx(1e6).epsilon(1e-12));
}

TEST_CASE("summarize: mean and standard error") {
    std::vector<double> single{3.5};
    MeanSe one = summarize(single);
    CHECK(one.mean == 3.5);
    CHECK(one.se == 0.0);

    std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    MeanSe m = summarize(v);
    CHECK(m.mean == doctest::Approx(2.5).epsilon(1e-15));
    // sample sd = sqrt(5/3), se = sd / 2
    CHECK(m.se == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("regularized incomplete beta: frozen values and identities") {
    CHECK(regularized_incomplete_beta(0.5, 0.5, 0.3) ==
          doctest::Approx(0.36901011956554536).epsilon(1e-13));
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.5) ==
          doctest::Approx(0.6875).epsilon(1e-14));
    for (double x : {0.0, 0.25, 0.5, 0.75, 1.0})
        CHECK(regularized_incomplete_beta(1.0, 1.0, x) ==
              doctest::Approx(x).epsilon(1e-14));
    // symmetry I_x(a, b) = 1 - I_{1-x}(b, a)
    CHECK(regularized_incomplete_beta(2.5, 4.0, 0.3) ==
          doctest::Approx(1.0 - regularized_incomplete_beta(4.0, 2.5, 0.7))
              .epsilon(1e-13));
    CHECK(regularized_incomplete_beta(2.0, 3.0, 0.0) == 0.0);
    CHECK(regularized_incomplete_beta(2.0, 3.0, 1.0) == 1.0);
}

TEST_CASE("two-sided t p-value") {
    CHECK(student_t_two_sided_p(0.0, 5.0) == doctest::Approx(1.0).epsilon(1e-14));
    // symmetric in the sign of t
    CHECK(student_t_two_sided_p(2.0, 7.0) ==
          doctest::Approx(student_t_two_sided_p(-2.0, 7.0)).epsilon(1e-15));
    // t with 1 dof is Cauchy: P(|T| > 1) = 1/2
    CHECK(student_t_two_sided_p(1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(student_t_two_sided_p(std::numeric_limits<double>::infinity(), 9.0) == 0.0);
}

TEST_CASE("paired t-test: conventions and a frozen case") {
    std::vector<double> x{1.0, 2.0, 3.0, 4.0};
    std::vector<double> same = x;
    CHECK(paired_ttest(x, same) == 1.0);

    std::vector<double> shifted{2.0, 3.0, 4.0, 5.0};
    CHECK(paired_ttest(x, shifted) == 0.0);

    // differences (1, 2, 3, 4): t = 2.5 / (sd/2), p pinned from the beta form
    std::vector<double> y{2.0, 4.0, 6.0, 8.0};
    CHECK(paired_ttest(x, y) ==
          doctest::Approx(0.030466291662170977).epsilon(1e-12));

    std::vector<double> shorter{1.0, 2.0};
    CHECK_THROWS_AS(paired_ttest(x, shorter), std::invalid_argument);
    std::vector<double> tiny{1.0};
    CHECK_THROWS_AS(paired_ttest(tiny, tiny), std::invalid_argument);
}

TEST_CASE("paired t-test: near-uniform p-values under the null") {
    // Paired normals with no true difference; p-values should look uniform.
    // Normals via Irwin-Hall(12) - 6 on the deterministic stream.
    auto normal = [](std::uint64_t run, std::uint64_t arm, std::uint64_t t) {
        double s = 0.0;
        for (std::uint64_t j = 0; j < 12; ++j)
            s += stream_uniform(2024, run, arm, 12 * t + j);
        return s - 6.0;
    };
    const int reps = 200, n = 30;
    std::vector<double> pvals;
    pvals.reserve(reps);
    for (int r = 0; r < reps; ++r) {
        std::vector<double> x(n), y(n);
        for (int i = 0; i < n; ++i) {
            x[static_cast<std::size_t>(i)] =
                normal(static_cast<std::uint64_t>(r), 0, static_cast<std::uint64_t>(i));
            y[static_cast<std::size_t>(i)] =
                normal(static_cast<std::uint64_t>(r), 1, static_cast<std::uint64_t>(i));
        }
        pvals.push_back(paired_ttest(x, y));
    }
    std::sort(pvals.begin(), pvals.end());
    double ks = 0.0;
    for (int i = 0; i < reps; ++i) {
        double ecdf_hi = static_cast<double>(i + 1) / reps;
        double ecdf_lo = static_cast<double>(i) / reps;
        double u = pvals[static_cast<std::size_t>(i)];
        ks = std::max({ks, std::abs(ecdf_hi - u), std::abs(u - ecdf_lo)});
    }
    CHECK(ks < 0.08);
}
