#include "tbp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tbp {

BanditInstance::BanditInstance(std::vector<double> m, double thr)
    : means(std::move(m)), threshold(thr) {
    if (means.empty()) throw std::invalid_argument("instance needs at least one arm");
    if (!(threshold > 0.0) || !(threshold < 1.0))
        throw std::invalid_argument("threshold must lie in (0, 1)");
    for (double v : means)
        if (!(v >= 0.0) || !(v <= 1.0))
            throw std::invalid_argument("arm means must lie in [0, 1]");
}

double BanditInstance::gap(int i) const {
    return std::abs(means.at(static_cast<std::size_t>(i)) - threshold);
}

std::vector<double> BanditInstance::gaps() const {
    std::vector<double> g(means.size());
    for (int i = 0; i < num_arms(); ++i) g[static_cast<std::size_t>(i)] = gap(i);
    return g;
}

double BanditInstance::hardness() const {
    double h = 0.0;
    for (int i = 0; i < num_arms(); ++i) {
        double g = gap(i);
        h += 1.0 / (g * g); // +inf when g == 0, which callers must tolerate
    }
    return h;
}

BanditInstance make_setup(int id) {
    switch (id) {
    case 1:
        return {{0.2, 0.25, 0.3, 0.35, 0.45, 0.55, 0.65, 0.7, 0.75, 0.8}, 0.5};
    case 2: {
        std::vector<double> m(20);
        for (int i = 0; i < 20; ++i) m[static_cast<std::size_t>(i)] = (405.0 + 10.0 * i) / 1000.0;
        return {std::move(m), 0.5};
    }
    case 3: {
        std::vector<double> m(10, 0.45);
        std::fill(m.begin() + 5, m.end(), 0.505);
        return {std::move(m), 0.5};
    }
    case 4:
        // shoulders 0.4 - 0.2^j and 0.6 + 0.2^j, j = 1..4, plus 0.45 / 0.55
        return {{0.2, 0.36, 0.392, 0.3984, 0.45, 0.55, 0.6016, 0.608, 0.64, 0.8}, 0.5};
    case 5: {
        std::vector<double> m(100, 0.4);
        std::fill(m.begin() + 50, m.end(), 0.51);
        return {std::move(m), 0.5};
    }
    case 6: {
        std::vector<double> m(10);
        for (int i = 0; i < 10; ++i) m[static_cast<std::size_t>(i)] = (40.0 + i) / 100.0;
        return {std::move(m), 0.5};
    }
    default:
        throw std::invalid_argument("setup id must be between 1 and 6");
    }
}

BanditInstance make_hard_instance(int num_arms, HardInstance which) {
    if (num_arms < 20)
        throw std::invalid_argument("hard instances are defined for 20 or more arms");
    double shift = std::sqrt(1.0 / (num_arms - 1));
    std::vector<double> m(static_cast<std::size_t>(num_arms), 0.5 + std::sqrt(0.1));
    m[0] = which == HardInstance::I1 ? 0.5 - shift : 0.5 + shift;
    return {std::move(m), 0.5};
}

int draw(RewardStream& stream, const BanditInstance& instance) {
    double mean = instance.means.at(stream.arm());
    return stream.next_uniform() < mean ? 1 : 0;
}

} // namespace tbp
