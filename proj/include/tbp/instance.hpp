#pragma once
#include <vector>

#include "tbp/rng.hpp"

namespace tbp {

// A Bernoulli bandit instance: one mean per arm plus the decision threshold.
// The target label of arm i is (means[i] >= threshold); a policy is judged by
// how many labels it gets wrong once the budget is spent.
struct BanditInstance {
    std::vector<double> means;
    double threshold;

    // Validates means in [0, 1], threshold in (0, 1), at least one arm.
    BanditInstance(std::vector<double> means, double threshold);

    int num_arms() const { return static_cast<int>(means.size()); }
    bool label(int i) const { return means[i] >= threshold; }
    double gap(int i) const;
    std::vector<double> gaps() const;

    // Sum over arms of gap^-2. Infinite when some arm sits on the threshold.
    double hardness() const;
};

// Benchmark instances 1..6, all with threshold 0.5:
//   1: 10 well-separated arms
//   2: 20 arms on a 0.01 grid straddling the threshold
//   3: 5 arms at 0.45 and 5 at 0.505
//   4: 10 arms on two geometric ladders approaching 0.4 and 0.6
//   5: 50 arms at 0.4 and 50 at 0.51
//   6: 10 arms on a 0.01 grid, all below the threshold
BanditInstance make_setup(int id);

// Two-instance family used to separate uniform sampling from adaptive
// sampling. Both have one distinguished arm and K-1 arms at 0.5 + sqrt(0.1);
// the distinguished arm sits at distance sqrt(1/(K-1)) below (I1) or above
// (I2) the threshold. Requires K >= 20 so that all means stay in [0, 1].
enum class HardInstance { I1, I2 };
BanditInstance make_hard_instance(int num_arms, HardInstance which);

// One Bernoulli reward (0 or 1) for the stream's arm.
int draw(RewardStream& stream, const BanditInstance& instance);

} // namespace tbp
