#pragma once

#include <cstdint>
#include <vector>

namespace coin {

// A night action. Values 1..num_nights are real bar nights; 0 is the reserved
// clamp sentinel ("absent") and never appears as a dynamically chosen action.
using NightAction = int;

inline constexpr NightAction kClampedAction = 0;
inline constexpr int kNumNights = 7;

// One week of actions, indexed by agent id.
using ActionColumn = std::vector<NightAction>;

// A set of agent ids (members of one subworld).
using AgentSet = std::vector<int>;

// The realized actions of every agent across all simulated weeks.
class JointHistory {
public:
    explicit JointHistory(int num_agents);

    int num_agents() const { return num_agents_; }
    int num_weeks() const { return static_cast<int>(actions_.size()) / num_agents_; }

    void append_week(const ActionColumn& realized);
    NightAction action(int agent, int week) const;
    ActionColumn column(int week) const;

private:
    int num_agents_;
    std::vector<NightAction> actions_;  // week-major
};

enum class PartitionKind { kSingleton, kTeamOfThree, kRandomOfThree };

// Exhaustive disjoint grouping of agents. Subworld ids are contiguous and
// start at 0; every agent belongs to exactly one subworld.
struct SubworldPartition {
    std::vector<int> assignment;           // agent id -> subworld id
    std::vector<std::vector<int>> groups;  // subworld id -> sorted member ids

    int num_agents() const { return static_cast<int>(assignment.size()); }
    int num_subworlds() const { return static_cast<int>(groups.size()); }

    bool operator==(const SubworldPartition& other) const = default;
};

SubworldPartition make_partition(PartitionKind kind, int num_agents, std::uint64_t seed);

// Builds a partition from explicit groups, checking the partition property.
SubworldPartition partition_from_groups(std::vector<std::vector<int>> groups, int num_agents);

// Clamps every agent in the subworld to the sentinel action 0; all other
// agents are unchanged. Inputs are never mutated.
ActionColumn clamp(const ActionColumn& column, const AgentSet& subworld);
ActionColumn clamp(const JointHistory& history, const AgentSet& subworld, int week);

// Running per-week world-reward record; world utility is the total.
struct WorldUtilityAccumulator {
    std::vector<double> per_week_reward;
    double total = 0.0;

    void add(double reward) {
        per_week_reward.push_back(reward);
        total += reward;
    }
};

}  // namespace coin
