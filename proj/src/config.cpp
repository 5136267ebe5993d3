#include "coin/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace coin {

void ExperimentConfig::validate() const {
    if (weeks < 1) {
        throw ConfigError("config: weeks must be >= 1");
    }
    if (runs < 1) {
        throw ConfigError("config: runs must be >= 1");
    }
    if (problem == Problem::kLeaderFollower && reward != RewardKind::kWl) {
        throw ConfigError("config: reward " + std::string(to_string(reward)) +
                          " is only valid for problem = bar");
    }
    if (macro_week) {
        if (problem != Problem::kLeaderFollower) {
            throw ConfigError("config: macro_week is only valid for problem = leader_follower");
        }
        if (*macro_week < 1 || *macro_week >= weeks) {
            throw ConfigError("config: macro_week must be in 1..weeks-1");
        }
        if (*macro_week < macro_window) {
            throw ConfigError("config: macro_week must be >= macro_window");
        }
    }
    if (macro_window < 1) {
        throw ConfigError("config: macro_window must be >= 1");
    }
    if (num_agents < 1) {
        throw ConfigError("config: agents must be >= 1");
    }
    if (num_leaders < 1) {
        throw ConfigError("config: leaders must be >= 1");
    }
    if (partition != PartitionKind::kSingleton && active_agents() % 3 != 0) {
        throw ConfigError("config: triple partitions need an agent count divisible by 3");
    }
    try {
        learner.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
}

const char* to_string(Problem problem) {
    return problem == Problem::kBar ? "bar" : "leader_follower";
}

const char* to_string(RewardKind reward) {
    switch (reward) {
    case RewardKind::kUd: return "ud";
    case RewardKind::kGr: return "gr";
    case RewardKind::kWl: return "wl";
    }
    return "?";
}

const char* to_string(AlphaPreset preset) {
    return preset == AlphaPreset::kUniform ? "uniform" : "single_night";
}

const char* to_string(TensorKind tensor) {
    return tensor == TensorKind::kWorstCase ? "worst_case" : "random";
}

const char* to_string(PartitionKind partition) {
    switch (partition) {
    case PartitionKind::kSingleton: return "singleton";
    case PartitionKind::kTeamOfThree: return "team_of_3";
    case PartitionKind::kRandomOfThree: return "random_of_3";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    std::size_t end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
    throw ConfigError("config line " + std::to_string(line) + ": " + message);
}

Problem parse_problem(const std::string& v, int line) {
    if (v == "bar") return Problem::kBar;
    if (v == "leader_follower" || v == "lf") return Problem::kLeaderFollower;
    fail(line, "unknown problem '" + v + "'");
}

RewardKind parse_reward(const std::string& v, int line) {
    if (v == "ud") return RewardKind::kUd;
    if (v == "gr") return RewardKind::kGr;
    if (v == "wl") return RewardKind::kWl;
    fail(line, "unknown reward '" + v + "'");
}

AlphaPreset parse_alpha(const std::string& v, int line) {
    if (v == "uniform") return AlphaPreset::kUniform;
    if (v == "single_night" || v == "single") return AlphaPreset::kSingleNight;
    fail(line, "unknown alpha preset '" + v + "'");
}

TensorKind parse_tensor(const std::string& v, int line) {
    if (v == "worst_case" || v == "worst") return TensorKind::kWorstCase;
    if (v == "random") return TensorKind::kRandom;
    fail(line, "unknown tensor '" + v + "'");
}

PartitionKind parse_partition(const std::string& v, int line) {
    if (v == "singleton") return PartitionKind::kSingleton;
    if (v == "team_of_3" || v == "team") return PartitionKind::kTeamOfThree;
    if (v == "random_of_3" || v == "random") return PartitionKind::kRandomOfThree;
    fail(line, "unknown partition '" + v + "'");
}

int parse_int(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        int value = std::stoi(v, &pos);
        if (pos != v.size()) {
            fail(line, "trailing characters in integer '" + v + "'");
        }
        return value;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + v + "'");
    }
}

std::uint64_t parse_u64(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        unsigned long long value = std::stoull(v, &pos);
        if (pos != v.size()) {
            fail(line, "trailing characters in integer '" + v + "'");
        }
        return value;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a non-negative integer, got '" + v + "'");
    }
}

double parse_double(const std::string& v, int line) {
    try {
        std::size_t pos = 0;
        double value = std::stod(v, &pos);
        if (pos != v.size()) {
            fail(line, "trailing characters in number '" + v + "'");
        }
        return value;
    } catch (const ConfigError&) {
        throw;
    } catch (const std::exception&) {
        fail(line, "expected a number, got '" + v + "'");
    }
}

bool parse_bool(const std::string& v, int line) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    fail(line, "expected true or false, got '" + v + "'");
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
    ExperimentConfig config;
    std::istringstream stream(text);
    std::string raw;
    int line_number = 0;
    while (std::getline(stream, raw)) {
        ++line_number;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            fail(line_number, "expected 'key = value', got '" + trim(raw) + "'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) {
            fail(line_number, "missing key");
        }
        if (value.empty()) {
            fail(line_number, "missing value for key '" + key + "'");
        }

        if (key == "problem") {
            config.problem = parse_problem(value, line_number);
        } else if (key == "reward") {
            config.reward = parse_reward(value, line_number);
        } else if (key == "alpha") {
            config.alpha_preset = parse_alpha(value, line_number);
        } else if (key == "tensor") {
            config.tensor = parse_tensor(value, line_number);
        } else if (key == "partition") {
            config.partition = parse_partition(value, line_number);
        } else if (key == "weeks") {
            config.weeks = parse_int(value, line_number);
        } else if (key == "runs") {
            config.runs = parse_int(value, line_number);
        } else if (key == "seed") {
            config.seed = parse_u64(value, line_number);
        } else if (key == "macro_week") {
            if (value == "none") {
                config.macro_week.reset();
            } else {
                config.macro_week = parse_int(value, line_number);
            }
        } else if (key == "macro_window") {
            config.macro_window = parse_int(value, line_number);
        } else if (key == "macro_reset") {
            config.macro_reset = parse_bool(value, line_number);
        } else if (key == "eta") {
            config.learner.learning_rate = parse_double(value, line_number);
        } else if (key == "t0") {
            config.learner.initial_temperature = parse_double(value, line_number);
        } else if (key == "lambda") {
            config.learner.temperature_decay = parse_double(value, line_number);
        } else if (key == "t_min") {
            config.learner.min_temperature = parse_double(value, line_number);
        } else if (key == "initial_estimate") {
            config.learner.initial_estimate = parse_double(value, line_number);
        } else if (key == "agents") {
            config.num_agents = parse_int(value, line_number);
        } else if (key == "leaders") {
            config.num_leaders = parse_int(value, line_number);
        } else {
            fail(line_number, "unknown key '" + key + "'");
        }
    }
    return config;
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open config file " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

namespace {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

}  // namespace

std::string serialize_config(const ExperimentConfig& config) {
    std::ostringstream out;
    out << "problem = " << to_string(config.problem) << "\n";
    out << "reward = " << to_string(config.reward) << "\n";
    out << "alpha = " << to_string(config.alpha_preset) << "\n";
    out << "tensor = " << to_string(config.tensor) << "\n";
    out << "partition = " << to_string(config.partition) << "\n";
    out << "weeks = " << config.weeks << "\n";
    out << "runs = " << config.runs << "\n";
    out << "seed = " << config.seed << "\n";
    out << "macro_week = " << (config.macro_week ? std::to_string(*config.macro_week) : "none")
        << "\n";
    out << "macro_window = " << config.macro_window << "\n";
    out << "macro_reset = " << (config.macro_reset ? "true" : "false") << "\n";
    out << "eta = " << format_double(config.learner.learning_rate) << "\n";
    out << "t0 = " << format_double(config.learner.initial_temperature) << "\n";
    out << "lambda = " << format_double(config.learner.temperature_decay) << "\n";
    out << "t_min = " << format_double(config.learner.min_temperature) << "\n";
    out << "initial_estimate = " << format_double(config.learner.initial_estimate) << "\n";
    out << "agents = " << config.num_agents << "\n";
    out << "leaders = " << config.num_leaders << "\n";
    return out.str();
}

}  // namespace coin
