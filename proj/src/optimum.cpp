#include "coin/optimum.hpp"

#include <limits>
#include <vector>

namespace coin {

double bar_optimum(const BarParams& params) {
    params.validate();
    int n = params.num_agents;
    constexpr double kUnreachable = -std::numeric_limits<double>::infinity();

    // best[m] = best value over the nights processed so far placing exactly m
    // agents on them. Nights are folded in one at a time.
    std::vector<double> best(n + 1, kUnreachable);
    best[0] = 0.0;
    std::vector<double> next(n + 1);
    for (int k = 1; k <= params.num_nights; ++k) {
        // Precompute this night's reward for every possible attendance.
        std::vector<double> reward(n + 1);
        for (int a = 0; a <= n; ++a) {
            reward[a] = night_reward(k, a, params);
        }
        for (int m = 0; m <= n; ++m) {
            double value = kUnreachable;
            for (int a = 0; a <= m; ++a) {
                if (best[m - a] == kUnreachable) {
                    continue;
                }
                double candidate = best[m - a] + reward[a];
                if (candidate > value) {
                    value = candidate;
                }
            }
            next[m] = value;
        }
        best.swap(next);
    }
    return best[n];
}

}  // namespace coin
