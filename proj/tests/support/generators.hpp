#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

namespace gen {

using Rng = std::mt19937_64;

struct Instance {
    std::vector<std::string> ids;
    std::vector<std::vector<double>> x;
    std::vector<bool> is_cost;
    std::vector<double> w;
};

inline double crisp(Rng& rng) {
    static constexpr double kLevels[] = {2, 4, 6, 8, 10};
    return kLevels[std::uniform_int_distribution<int>(0, 4)(rng)];
}

/// Positive draws rescaled to sum to 1.
inline std::vector<double> weights(Rng& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(0.01, 1.0);
    std::vector<double> w(m);
    double s = 0.0;
    for (auto& v : w) {
        v = u(rng);
        s += v;
    }
    for (auto& v : w) v /= s;
    return w;
}

inline Instance instance(Rng& rng, std::size_t max_alternatives = 8, std::size_t max_criteria = 5,
                         bool allow_cost = true) {
    Instance in;
    const auto n = std::uniform_int_distribution<std::size_t>(1, max_alternatives)(rng);
    const auto m = std::uniform_int_distribution<std::size_t>(1, max_criteria)(rng);
    for (std::size_t i = 0; i < n; ++i) {
        char id[16];
        std::snprintf(id, sizeof id, "A%02zu", (i * 7 + 3) % 100);
        in.ids.emplace_back(id);
        std::vector<double> row;
        for (std::size_t j = 0; j < m; ++j) row.push_back(crisp(rng));
        in.x.push_back(row);
    }
    for (std::size_t j = 0; j < m; ++j) {
        in.is_cost.push_back(allow_cost && std::bernoulli_distribution(0.4)(rng));
    }
    in.w = weights(rng, m);
    return in;
}

}  // namespace gen
