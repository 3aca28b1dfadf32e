#include "tbp/rng.hpp"

#include <stdexcept>

namespace tbp {

std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

std::uint64_t stream_word(std::uint64_t seed, std::uint64_t run,
                          std::uint64_t arm, std::uint64_t t) {
    std::uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
    h = mix64(h ^ run);
    h = mix64(h ^ arm);
    h = mix64(h ^ t);
    return h;
}

double stream_uniform(std::uint64_t seed, std::uint64_t run,
                      std::uint64_t arm, std::uint64_t t) {
    return static_cast<double>(stream_word(seed, run, arm, t) >> 11) * 0x1.0p-53;
}

RunRewards::RunRewards(std::uint64_t seed, std::uint64_t run, int num_arms)
    : seed_(seed), run_(run) {
    if (num_arms < 1) throw std::invalid_argument("RunRewards: need at least one arm");
    cursors_.assign(static_cast<std::size_t>(num_arms), 0);
}

double RunRewards::next_uniform(int arm) {
    auto& t = cursors_.at(static_cast<std::size_t>(arm));
    return stream_uniform(seed_, run_, static_cast<std::uint64_t>(arm), t++);
}

std::uint64_t RunRewards::position(int arm) const {
    return cursors_.at(static_cast<std::size_t>(arm));
}

} // namespace tbp
