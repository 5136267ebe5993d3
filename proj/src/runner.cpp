#include "coin/runner.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <thread>
#include <utility>

#include "coin/bar.hpp"
#include "coin/leader.hpp"
#include "coin/learner.hpp"
#include "coin/macrolearn.hpp"
#include "coin/rng.hpp"

namespace coin {

namespace {

// Stream ids for deriving decorrelated child seeds from the trial seed.
constexpr std::uint64_t kPartitionStream = 0;
constexpr std::uint64_t kTensorStream = 1;
constexpr std::uint64_t kAgentStreamBase = 2;

void bar_rewards(const ExperimentConfig& config, const BarParams& params,
                 const SubworldPartition& partition, const ActionColumn& realized,
                 const AttendanceProfile& x, std::vector<double>& rewards) {
    const int num_agents = static_cast<int>(realized.size());
    switch (config.reward) {
    case RewardKind::kUd:
        for (int a = 0; a < num_agents; ++a) {
            rewards[a] = ud_reward(realized[a], x, params);
        }
        break;
    case RewardKind::kGr: {
        double shared = gr_reward(x, params);
        for (int a = 0; a < num_agents; ++a) {
            rewards[a] = shared;
        }
        break;
    }
    case RewardKind::kWl:
        if (partition.num_subworlds() == num_agents) {
            // Singleton subworlds: one table lookup per night suffices.
            std::vector<double> by_night(params.num_nights, 0.0);
            for (int k = 1; k <= params.num_nights; ++k) {
                if (x[k - 1] > 0) {
                    by_night[k - 1] = wl_reward_singleton(k, x[k - 1], params);
                }
            }
            for (int a = 0; a < num_agents; ++a) {
                rewards[a] = by_night[realized[a] - 1];
            }
        } else {
            std::vector<NightAction> member_nights;
            for (const auto& group : partition.groups) {
                member_nights.clear();
                for (int a : group) {
                    member_nights.push_back(realized[a]);
                }
                double shared = wl_reward_given_attendance(x, member_nights, params);
                for (int a : group) {
                    rewards[a] = shared;
                }
            }
        }
        break;
    }
}

}  // namespace

TrialResult run_trial(const ExperimentConfig& config, std::uint64_t trial_seed) {
    config.validate();
    const bool leader_follower = config.problem == Problem::kLeaderFollower;
    const int num_agents = config.active_agents();

    SubworldPartition partition =
        make_partition(config.partition, num_agents, derive_seed(trial_seed, kPartitionStream));

    TripleLayout layout{config.num_leaders};
    RewardTensor tensor;
    if (leader_follower) {
        tensor = config.tensor == TensorKind::kWorstCase
                     ? build_worst_case_tensor()
                     : random_tensor(derive_seed(trial_seed, kTensorStream));
    }

    BarParams bar_params = config.alpha_preset == AlphaPreset::kUniform
                               ? BarParams::uniform(config.num_agents)
                               : BarParams::single_night(config.num_agents);

    LearnerParams learner_params = config.learner;
    learner_params.num_actions = kNumNights;
    std::vector<LearnerState> learners;
    learners.reserve(num_agents);
    for (int a = 0; a < num_agents; ++a) {
        learners.emplace_back(learner_params, derive_seed(trial_seed, kAgentStreamBase + a));
    }

    JointHistory history(num_agents);
    TrialResult result;
    ActionColumn intents(num_agents);
    std::vector<double> rewards(num_agents, 0.0);

    for (int week = 0; week < config.weeks; ++week) {
        for (int a = 0; a < num_agents; ++a) {
            intents[a] = learners[a].select_action();
        }
        // Followers' intents never reach the realized state; their learners
        // still receive rewards for the night they were made to attend.
        ActionColumn realized = leader_follower ? enforce_dynamics(intents, layout) : intents;

        if (leader_follower) {
            result.utility.add(lf_world_reward(realized, tensor, layout));
            for (const auto& group : partition.groups) {
                double shared = lf_wl_reward(group, realized, tensor, layout);
                for (int a : group) {
                    rewards[a] = shared;
                }
            }
        } else {
            AttendanceProfile x = attendance(realized, bar_params.num_nights);
            result.utility.add(world_reward(x, bar_params));
            bar_rewards(config, bar_params, partition, realized, x, rewards);
        }

        for (int a = 0; a < num_agents; ++a) {
            learners[a].update(realized[a], rewards[a]);
        }
        for (int a = 0; a < num_agents; ++a) {
            learners[a].decay_temperature();
        }
        history.append_week(realized);

        if (config.macro_week && week + 1 == *config.macro_week) {
            CorrelationMatrix corr =
                estimate_correlations(history, config.macro_window, week + 1);
            partition = regroup(corr);
            if (config.macro_reset) {
                // Optimistic reset: starting every estimate above any reward
                // the regrouped subworlds can pay forces each learner to
                // re-try all nights, however cold the temperature already is.
                double optimistic = tensor_reward_bound(tensor);
                for (auto& learner : learners) {
                    learner.reset_estimates(optimistic);
                }
            }
        }
    }
    result.final_partition = std::move(partition);
    return result;
}

RunSeries run_batch(const ExperimentConfig& config, int max_threads) {
    config.validate();
    const int runs = config.runs;
    std::vector<TrialResult> trials(runs);

    int threads = max_threads > 0 ? max_threads
                                  : static_cast<int>(std::thread::hardware_concurrency());
    threads = std::max(1, std::min(threads, runs));

    if (threads == 1) {
        for (int i = 0; i < runs; ++i) {
            trials[i] = run_trial(config, config.seed + static_cast<std::uint64_t>(i));
        }
    } else {
        std::atomic<int> next{0};
        std::vector<std::exception_ptr> errors(threads);
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    int i;
                    while ((i = next.fetch_add(1)) < runs) {
                        trials[i] = run_trial(config, config.seed + static_cast<std::uint64_t>(i));
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& worker : pool) {
            worker.join();
        }
        for (const auto& error : errors) {
            if (error) {
                std::rethrow_exception(error);
            }
        }
    }

    RunSeries series;
    series.mean.assign(config.weeks, 0.0);
    series.stddev.assign(config.weeks, 0.0);
    series.final_partitions.reserve(runs);
    for (int i = 0; i < runs; ++i) {
        series.final_partitions.push_back(std::move(trials[i].final_partition));
    }
    for (int week = 0; week < config.weeks; ++week) {
        double sum = 0.0;
        for (int i = 0; i < runs; ++i) {
            sum += trials[i].utility.per_week_reward[week];
        }
        double mean = sum / runs;
        double variance = 0.0;
        for (int i = 0; i < runs; ++i) {
            double d = trials[i].utility.per_week_reward[week] - mean;
            variance += d * d;
        }
        series.mean[week] = mean;
        series.stddev[week] = std::sqrt(variance / runs);
    }
    return series;
}

bool leaders_aligned(const SubworldPartition& partition, int num_leaders) {
    for (int i = 0; i < num_leaders; ++i) {
        int subworld = partition.assignment[3 * i];
        if (partition.assignment[3 * i + 1] != subworld ||
            partition.assignment[3 * i + 2] != subworld) {
            return false;
        }
    }
    return true;
}

}  // namespace coin
