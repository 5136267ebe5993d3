#pragma once

#include <vector>

#include "coin/core.hpp"

namespace coin {

// Pairwise match frequencies of realized nights over a trailing window.
struct CorrelationMatrix {
    int num_agents = 0;
    int window = 0;
    std::vector<double> values;  // row-major num_agents x num_agents

    double at(int a, int b) const { return values[static_cast<std::size_t>(a) * num_agents + b]; }
};

// m[a][b] = fraction of the trailing `window` weeks before `end_week` in
// which agents a and b picked the same night.
CorrelationMatrix estimate_correlations(const JointHistory& history, int window, int end_week);

// Greedy grouping into triples: repeatedly take the most-correlated
// unassigned pair, then the third agent maximizing its summed correlation to
// the pair. Ties break toward lower agent ids.
SubworldPartition regroup(const CorrelationMatrix& corr);

// Exhaustive best triple partition (maximum total intra-triple correlation).
// Test oracle; feasible for num_agents <= 12.
std::vector<std::vector<int>> exact_best_triple_partition(const CorrelationMatrix& corr);

}  // namespace coin
