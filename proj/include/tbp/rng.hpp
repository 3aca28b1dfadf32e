#pragma once
#include <cstdint>
#include <vector>

namespace tbp {

// Bijective 64-bit finalizer with full avalanche.
std::uint64_t mix64(std::uint64_t x);

// Counter-based generator: the value for coordinate (seed, run, arm, t) is a
// pure function of its arguments. There is no sequential state, so draws can
// be produced in any order, from any thread, with identical results.
std::uint64_t stream_word(std::uint64_t seed, std::uint64_t run,
                          std::uint64_t arm, std::uint64_t t);

// Uniform double in [0, 1) with 53 random bits.
double stream_uniform(std::uint64_t seed, std::uint64_t run,
                      std::uint64_t arm, std::uint64_t t);

// Sequential view of one arm's reward coordinates within one run.
class RewardStream {
public:
    RewardStream(std::uint64_t seed, std::uint64_t run, std::uint32_t arm)
        : seed_(seed), run_(run), arm_(arm) {}

    double next_uniform() { return stream_uniform(seed_, run_, arm_, t_++); }
    std::uint32_t arm() const { return arm_; }
    std::uint64_t position() const { return t_; }

private:
    std::uint64_t seed_;
    std::uint64_t run_;
    std::uint32_t arm_;
    std::uint64_t t_ = 0;
};

// Per-run reward source covering all arms. Each arm has its own counter, so
// the t-th draw of arm i does not depend on which other arms were pulled in
// between. Two policies replayed against the same (seed, run) therefore see
// identical reward sequences per arm (common random numbers).
class RunRewards {
public:
    RunRewards(std::uint64_t seed, std::uint64_t run, int num_arms);

    double next_uniform(int arm);
    int num_arms() const { return static_cast<int>(cursors_.size()); }
    std::uint64_t position(int arm) const;

private:
    std::uint64_t seed_;
    std::uint64_t run_;
    std::vector<std::uint64_t> cursors_;
};

} // namespace tbp
