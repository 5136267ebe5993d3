#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "coin/core.hpp"
#include "coin/learner.hpp"

namespace coin {

enum class Problem { kBar, kLeaderFollower };
enum class RewardKind { kUd, kGr, kWl };
enum class AlphaPreset { kUniform, kSingleNight };
enum class TensorKind { kWorstCase, kRandom };

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Declarative experiment description. Parsed from flat `key = value` files
// with `#` comments; command-line flags override file keys.
struct ExperimentConfig {
    Problem problem = Problem::kBar;
    RewardKind reward = RewardKind::kWl;
    AlphaPreset alpha_preset = AlphaPreset::kSingleNight;  // bar only
    TensorKind tensor = TensorKind::kWorstCase;            // leader-follower only
    PartitionKind partition = PartitionKind::kSingleton;
    int weeks = 3000;
    int runs = 50;
    std::uint64_t seed = 1;
    std::optional<int> macro_week;  // weeks of microlearning before regrouping
    int macro_window = 100;
    bool macro_reset = true;        // optimistic estimate reset at regrouping
    LearnerParams learner;
    int num_agents = 168;   // bar
    int num_leaders = 56;   // leader-follower (agents = 3 * leaders)

    int active_agents() const {
        return problem == Problem::kBar ? num_agents : 3 * num_leaders;
    }

    void validate() const;  // throws ConfigError

    bool operator==(const ExperimentConfig&) const = default;
};

// Parses flat `key = value` text. Unknown keys are errors naming the key and
// its line number.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

// Emits every key in a fixed order; parse(serialize(c)) == c.
std::string serialize_config(const ExperimentConfig& config);

const char* to_string(Problem problem);
const char* to_string(RewardKind reward);
const char* to_string(AlphaPreset preset);
const char* to_string(TensorKind tensor);
const char* to_string(PartitionKind partition);

}  // namespace coin
