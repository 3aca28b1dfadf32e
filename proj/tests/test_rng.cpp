#include <doctest.h>

#include <cmath>
#include <set>

#include "tbp/instance.hpp"
#include "tbp/rng.hpp"

using namespace tbp;

TEST_CASE("stream words are pure functions of their coordinates") {
    CHECK(stream_word(1, 2, 3, 4) == stream_word(1, 2, 3, 4));
    std::set<std::uint64_t> seen;
    for (std::uint64_t seed : {0ull, 1ull, 99ull})
        for (std::uint64_t run : {0ull, 1ull})
            for (std::uint64_t arm : {0ull, 1ull})
                for (std::uint64_t t : {0ull, 1ull, 2ull})
                    seen.insert(stream_word(seed, run, arm, t));
    CHECK(seen.size() == 3 * 2 * 2 * 3); // no collisions across coordinates
}

TEST_CASE("uniforms live in [0, 1) and have the right mean") {
    const int n = 1000000;
    double sum = 0.0;
    for (int t = 0; t < n; ++t) {
        double u = stream_uniform(42, 0, 0, static_cast<std::uint64_t>(t));
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
    }
    // 4 sigma band, sigma = sqrt(1/12)/sqrt(n)
    CHECK(std::abs(sum / n - 0.5) < 4.0 * std::sqrt(1.0 / 12.0 / n));
}

TEST_CASE("draw respects degenerate means and matches Bernoulli rates") {
    BanditInstance degenerate({0.0, 1.0}, 0.5);
    RewardStream zero(7, 0, 0);
    RewardStream one(7, 0, 1);
    for (int t = 0; t < 1000; ++t) {
        CHECK(draw(zero, degenerate) == 0);
        CHECK(draw(one, degenerate) == 1);
    }

    BanditInstance inst({0.3}, 0.5);
    RewardStream s(123, 5, 0);
    const int n = 1000000;
    long long ones = 0;
    for (int t = 0; t < n; ++t) ones += draw(s, inst);
    double sigma = std::sqrt(0.3 * 0.7 / n);
    CHECK(std::abs(static_cast<double>(ones) / n - 0.3) < 4.0 * sigma);
}

TEST_CASE("per-arm draws do not depend on the consumption pattern") {
    const std::uint64_t seed = 11, run = 3;
    RunRewards interleaved(seed, run, 2);
    std::vector<double> arm0_a, arm1_a;
    for (int t = 0; t < 8; ++t) {
        arm0_a.push_back(interleaved.next_uniform(0));
        arm1_a.push_back(interleaved.next_uniform(1));
    }
    RunRewards sequential(seed, run, 2);
    std::vector<double> arm1_b, arm0_b;
    for (int t = 0; t < 8; ++t) arm1_b.push_back(sequential.next_uniform(1));
    for (int t = 0; t < 8; ++t) arm0_b.push_back(sequential.next_uniform(0));
    CHECK(arm0_a == arm0_b);
    CHECK(arm1_a == arm1_b);
    CHECK(interleaved.position(0) == 8);
    CHECK(sequential.position(1) == 8);
}

TEST_CASE("RewardStream agrees with the flat coordinate function") {
    RewardStream s(9, 4, 2);
    for (int t = 0; t < 16; ++t)
        CHECK(s.next_uniform() ==
              stream_uniform(9, 4, 2, static_cast<std::uint64_t>(t)));
}
