#include "coin/macrolearn.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace coin {

CorrelationMatrix estimate_correlations(const JointHistory& history, int window, int end_week) {
    if (window < 1) {
        throw std::invalid_argument("estimate_correlations: window must be >= 1");
    }
    if (end_week < window || end_week > history.num_weeks()) {
        throw std::out_of_range("estimate_correlations: window [" +
                                std::to_string(end_week - window) + "," +
                                std::to_string(end_week) + ") outside simulated history");
    }
    int n = history.num_agents();
    CorrelationMatrix corr;
    corr.num_agents = n;
    corr.window = window;
    corr.values.assign(static_cast<std::size_t>(n) * n, 0.0);

    std::vector<int> matches(static_cast<std::size_t>(n) * n, 0);
    for (int week = end_week - window; week < end_week; ++week) {
        ActionColumn column = history.column(week);
        for (int a = 0; a < n; ++a) {
            for (int b = a; b < n; ++b) {
                if (column[a] == column[b]) {
                    ++matches[static_cast<std::size_t>(a) * n + b];
                }
            }
        }
    }
    for (int a = 0; a < n; ++a) {
        for (int b = a; b < n; ++b) {
            double m = static_cast<double>(matches[static_cast<std::size_t>(a) * n + b]) / window;
            corr.values[static_cast<std::size_t>(a) * n + b] = m;
            corr.values[static_cast<std::size_t>(b) * n + a] = m;
        }
    }
    return corr;
}

SubworldPartition regroup(const CorrelationMatrix& corr) {
    int n = corr.num_agents;
    if (n % 3 != 0) {
        throw std::invalid_argument("regroup: number of agents must be divisible by 3");
    }
    std::vector<char> assigned(n, 0);
    std::vector<std::vector<int>> groups;
    groups.reserve(n / 3);
    for (int g = 0; g < n / 3; ++g) {
        // Best unassigned pair; ties fall to the lexicographically first pair.
        int best_a = -1;
        int best_b = -1;
        double best_pair = -1.0;
        for (int a = 0; a < n; ++a) {
            if (assigned[a]) {
                continue;
            }
            for (int b = a + 1; b < n; ++b) {
                if (assigned[b]) {
                    continue;
                }
                if (corr.at(a, b) > best_pair) {
                    best_pair = corr.at(a, b);
                    best_a = a;
                    best_b = b;
                }
            }
        }
        // Third member maximizing its correlation to the chosen pair.
        int best_c = -1;
        double best_sum = -1.0;
        for (int c = 0; c < n; ++c) {
            if (assigned[c] || c == best_a || c == best_b) {
                continue;
            }
            double sum = corr.at(best_a, c) + corr.at(best_b, c);
            if (sum > best_sum) {
                best_sum = sum;
                best_c = c;
            }
        }
        assigned[best_a] = assigned[best_b] = assigned[best_c] = 1;
        groups.push_back({best_a, best_b, best_c});
    }
    return partition_from_groups(std::move(groups), n);
}

namespace {

void enumerate_triples(const CorrelationMatrix& corr, std::vector<char>& used,
                       std::vector<std::vector<int>>& current, double current_score,
                       std::vector<std::vector<int>>& best, double& best_score) {
    int n = corr.num_agents;
    int first = -1;
    for (int a = 0; a < n; ++a) {
        if (!used[a]) {
            first = a;
            break;
        }
    }
    if (first == -1) {
        if (current_score > best_score) {
            best_score = current_score;
            best = current;
        }
        return;
    }
    used[first] = 1;
    for (int b = first + 1; b < n; ++b) {
        if (used[b]) {
            continue;
        }
        used[b] = 1;
        for (int c = b + 1; c < n; ++c) {
            if (used[c]) {
                continue;
            }
            used[c] = 1;
            current.push_back({first, b, c});
            double gain = corr.at(first, b) + corr.at(first, c) + corr.at(b, c);
            enumerate_triples(corr, used, current, current_score + gain, best, best_score);
            current.pop_back();
            used[c] = 0;
        }
        used[b] = 0;
    }
    used[first] = 0;
}

}  // namespace

std::vector<std::vector<int>> exact_best_triple_partition(const CorrelationMatrix& corr) {
    int n = corr.num_agents;
    if (n % 3 != 0) {
        throw std::invalid_argument("exact_best_triple_partition: n must be divisible by 3");
    }
    if (n > 12) {
        throw std::invalid_argument("exact_best_triple_partition: oracle limited to n <= 12");
    }
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> current;
    std::vector<std::vector<int>> best;
    double best_score = -1.0;
    enumerate_triples(corr, used, current, 0.0, best, best_score);
    return best;
}

}  // namespace coin
