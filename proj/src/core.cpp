#include "coin/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "coin/rng.hpp"

namespace coin {

JointHistory::JointHistory(int num_agents) : num_agents_(num_agents) {
    if (num_agents < 1) {
        throw std::invalid_argument("JointHistory: num_agents must be >= 1");
    }
}

void JointHistory::append_week(const ActionColumn& realized) {
    if (static_cast<int>(realized.size()) != num_agents_) {
        throw std::invalid_argument("JointHistory: column size does not match num_agents");
    }
    actions_.insert(actions_.end(), realized.begin(), realized.end());
}

NightAction JointHistory::action(int agent, int week) const {
    if (agent < 0 || agent >= num_agents_) {
        throw std::invalid_argument("JointHistory: unknown agent id " + std::to_string(agent));
    }
    if (week < 0 || week >= num_weeks()) {
        throw std::out_of_range("JointHistory: week " + std::to_string(week) + " not simulated");
    }
    return actions_[static_cast<std::size_t>(week) * num_agents_ + agent];
}

ActionColumn JointHistory::column(int week) const {
    if (week < 0 || week >= num_weeks()) {
        throw std::out_of_range("JointHistory: week " + std::to_string(week) + " not simulated");
    }
    auto begin = actions_.begin() + static_cast<std::ptrdiff_t>(week) * num_agents_;
    return ActionColumn(begin, begin + num_agents_);
}

namespace {

std::vector<int> identity_permutation(int n) {
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

}  // namespace

SubworldPartition make_partition(PartitionKind kind, int num_agents, std::uint64_t seed) {
    if (num_agents < 1) {
        throw std::invalid_argument("make_partition: num_agents must be >= 1");
    }
    std::vector<std::vector<int>> groups;
    switch (kind) {
    case PartitionKind::kSingleton:
        groups.reserve(num_agents);
        for (int a = 0; a < num_agents; ++a) {
            groups.push_back({a});
        }
        break;
    case PartitionKind::kTeamOfThree: {
        if (num_agents % 3 != 0) {
            throw std::invalid_argument("make_partition: num_agents must be divisible by 3");
        }
        for (int a = 0; a < num_agents; a += 3) {
            groups.push_back({a, a + 1, a + 2});
        }
        break;
    }
    case PartitionKind::kRandomOfThree: {
        if (num_agents % 3 != 0) {
            throw std::invalid_argument("make_partition: num_agents must be divisible by 3");
        }
        // Seeded Fisher-Yates shuffle, then consecutive cuts into triples.
        std::vector<int> ids = identity_permutation(num_agents);
        std::mt19937_64 rng(seed);
        for (int i = num_agents - 1; i > 0; --i) {
            int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
            std::swap(ids[i], ids[j]);
        }
        for (int a = 0; a < num_agents; a += 3) {
            groups.push_back({ids[a], ids[a + 1], ids[a + 2]});
        }
        break;
    }
    }
    return partition_from_groups(std::move(groups), num_agents);
}

SubworldPartition partition_from_groups(std::vector<std::vector<int>> groups, int num_agents) {
    SubworldPartition partition;
    partition.assignment.assign(num_agents, -1);
    for (std::size_t g = 0; g < groups.size(); ++g) {
        std::sort(groups[g].begin(), groups[g].end());
        for (int a : groups[g]) {
            if (a < 0 || a >= num_agents) {
                throw std::invalid_argument("partition: unknown agent id " + std::to_string(a));
            }
            if (partition.assignment[a] != -1) {
                throw std::invalid_argument("partition: agent " + std::to_string(a) +
                                            " assigned to two subworlds");
            }
            partition.assignment[a] = static_cast<int>(g);
        }
    }
    for (int a = 0; a < num_agents; ++a) {
        if (partition.assignment[a] == -1) {
            throw std::invalid_argument("partition: agent " + std::to_string(a) + " unassigned");
        }
    }
    partition.groups = std::move(groups);
    return partition;
}

ActionColumn clamp(const ActionColumn& column, const AgentSet& subworld) {
    for (int a : subworld) {
        if (a < 0 || a >= static_cast<int>(column.size())) {
            throw std::invalid_argument("clamp: unknown agent id " + std::to_string(a));
        }
    }
    ActionColumn clamped = column;
    for (int a : subworld) {
        clamped[a] = kClampedAction;
    }
    return clamped;
}

ActionColumn clamp(const JointHistory& history, const AgentSet& subworld, int week) {
    return clamp(history.column(week), subworld);
}

}  // namespace coin
