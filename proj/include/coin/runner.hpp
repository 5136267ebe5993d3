#pragma once

#include <cstdint>
#include <vector>

#include "coin/config.hpp"
#include "coin/core.hpp"

namespace coin {

struct TrialResult {
    WorldUtilityAccumulator utility;    // per_week_reward is the weekly series
    SubworldPartition final_partition;  // partition in force when the trial ended
};

// Batch aggregate: per-week mean and (population) standard deviation of the
// world reward across runs, plus each run's final partition in seed order.
struct RunSeries {
    std::vector<double> mean;
    std::vector<double> stddev;
    std::vector<SubworldPartition> final_partitions;
};

// One seeded trial. Weekly loop: select -> enforce dynamics (leader-follower)
// -> record world reward -> reward agents -> update learners -> decay
// temperature; macrolearning regroups the partition once macro_week weeks
// have completed.
TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed);

// Trials seeded seed+0 .. seed+runs-1, merged in seed order. Trials may run
// on up to max_threads threads (0 = hardware concurrency); the output never
// depends on the thread count.
RunSeries run_batch(const ExperimentConfig& config, int max_threads = 0);

// True when every leader shares a subworld with both of its followers.
bool leaders_aligned(const SubworldPartition& partition, int num_leaders);

}  // namespace coin
