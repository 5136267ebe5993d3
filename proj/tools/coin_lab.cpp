#include <cstdio>
#include <exception>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "coin/config.hpp"
#include "coin/csv.hpp"
#include "coin/leader.hpp"
#include "coin/optimum.hpp"
#include "coin/runner.hpp"

namespace {

struct RunFlags {
    std::string config_path;
    std::string out_path = "-";
    std::optional<std::string> problem;
    std::optional<std::string> reward;
    std::optional<std::string> alpha;
    std::optional<std::string> tensor;
    std::optional<std::string> partition;
    std::optional<int> weeks;
    std::optional<int> runs;
    std::optional<std::uint64_t> seed;
    std::optional<int> macro_week;
    std::optional<int> macro_window;
    std::optional<bool> macro_reset;
    std::optional<double> eta;
    std::optional<double> t0;
    std::optional<double> lambda;
    std::optional<double> t_min;
    std::optional<int> agents;
    std::optional<int> leaders;
    int threads = 0;
};

coin::ExperimentConfig apply_flags(coin::ExperimentConfig config, const RunFlags& flags) {
    using namespace coin;
    if (flags.problem) {
        config.problem = *flags.problem == "bar" ? Problem::kBar : Problem::kLeaderFollower;
    }
    if (flags.reward) {
        config.reward = *flags.reward == "ud"   ? RewardKind::kUd
                        : *flags.reward == "gr" ? RewardKind::kGr
                                                : RewardKind::kWl;
    }
    if (flags.alpha) {
        config.alpha_preset =
            *flags.alpha == "uniform" ? AlphaPreset::kUniform : AlphaPreset::kSingleNight;
    }
    if (flags.tensor) {
        config.tensor = *flags.tensor == "worst" ? TensorKind::kWorstCase : TensorKind::kRandom;
    }
    if (flags.partition) {
        config.partition = *flags.partition == "singleton" ? PartitionKind::kSingleton
                           : *flags.partition == "team"    ? PartitionKind::kTeamOfThree
                                                           : PartitionKind::kRandomOfThree;
    }
    if (flags.weeks) config.weeks = *flags.weeks;
    if (flags.runs) config.runs = *flags.runs;
    if (flags.seed) config.seed = *flags.seed;
    if (flags.macro_week) {
        if (*flags.macro_week > 0) {
            config.macro_week = *flags.macro_week;
        } else {
            config.macro_week.reset();  // 0 disables macrolearning
        }
    }
    if (flags.macro_window) config.macro_window = *flags.macro_window;
    if (flags.macro_reset) config.macro_reset = *flags.macro_reset;
    if (flags.eta) config.learner.learning_rate = *flags.eta;
    if (flags.t0) config.learner.initial_temperature = *flags.t0;
    if (flags.lambda) config.learner.temperature_decay = *flags.lambda;
    if (flags.t_min) config.learner.min_temperature = *flags.t_min;
    if (flags.agents) config.num_agents = *flags.agents;
    if (flags.leaders) config.num_leaders = *flags.leaders;
    return config;
}

int do_run(const RunFlags& flags) {
    coin::ExperimentConfig config;
    if (!flags.config_path.empty()) {
        config = coin::parse_config_file(flags.config_path);
    }
    config = apply_flags(config, flags);
    config.validate();
    coin::RunSeries series = coin::run_batch(config, flags.threads);
    if (flags.out_path == "-") {
        std::fputs(coin::series_to_csv(series).c_str(), stdout);
    } else {
        coin::write_csv(series, flags.out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coin-lab: batch simulations of reward design for collective learning"};
    app.require_subcommand(1);

    RunFlags flags;
    auto* run = app.add_subcommand("run", "Run a seeded batch experiment and emit the CSV curve");
    run->add_option("--config", flags.config_path, "Flat key = value config file");
    run->add_option("--problem", flags.problem, "bar | lf")
        ->check(CLI::IsMember({"bar", "lf"}));
    run->add_option("--reward", flags.reward, "ud | gr | wl")
        ->check(CLI::IsMember({"ud", "gr", "wl"}));
    run->add_option("--alpha", flags.alpha, "uniform | single (bar night weights)")
        ->check(CLI::IsMember({"uniform", "single"}));
    run->add_option("--tensor", flags.tensor, "worst | random (leader-follower payoffs)")
        ->check(CLI::IsMember({"worst", "random"}));
    run->add_option("--partition", flags.partition, "singleton | team | random")
        ->check(CLI::IsMember({"singleton", "team", "random"}));
    run->add_option("--weeks", flags.weeks, "Weeks per run");
    run->add_option("--runs", flags.runs, "Independent runs to average");
    run->add_option("--seed", flags.seed, "Base seed; run i uses seed+i");
    run->add_option("--macro-week", flags.macro_week, "Regroup subworlds after this many weeks (0 disables)");
    run->add_option("--macro-window", flags.macro_window, "Trailing weeks used for correlations");
    run->add_option("--macro-reset", flags.macro_reset, "Reset learner estimates at regrouping");
    run->add_option("--eta", flags.eta, "Learning rate");
    run->add_option("--t0", flags.t0, "Initial Boltzmann temperature");
    run->add_option("--lambda", flags.lambda, "Weekly temperature decay factor");
    run->add_option("--t-min", flags.t_min, "Temperature floor");
    run->add_option("--agents", flags.agents, "Bar agent count");
    run->add_option("--leaders", flags.leaders, "Leader-follower triple count");
    run->add_option("--threads", flags.threads, "Max worker threads (0 = hardware)");
    run->add_option("--out", flags.out_path, "Output CSV path (- for stdout)");

    std::string opt_alpha = "uniform";
    int opt_agents = 168;
    double opt_capacity = 6.0;
    auto* optimum = app.add_subcommand("optimum", "Print the exact optimal per-week world reward");
    optimum->add_option("--alpha", opt_alpha, "uniform | single")
        ->check(CLI::IsMember({"uniform", "single"}));
    optimum->add_option("--agents", opt_agents, "Agent count");
    optimum->add_option("--capacity", opt_capacity, "Per-night capacity c");

    std::string tensor_kind = "worst";
    std::uint64_t tensor_seed = 1;
    std::string tensor_out;
    auto* tensor = app.add_subcommand("tensor", "Export a leader-follower reward tensor as CSV");
    tensor->add_option("--kind", tensor_kind, "worst | random")
        ->check(CLI::IsMember({"worst", "random"}));
    tensor->add_option("--seed", tensor_seed, "Seed for the random tensor");
    tensor->add_option("--out", tensor_out, "Output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // bad flags are config errors
    }

    try {
        if (run->parsed()) {
            return do_run(flags);
        }
        if (optimum->parsed()) {
            coin::BarParams params = opt_alpha == "uniform"
                                         ? coin::BarParams::uniform(opt_agents)
                                         : coin::BarParams::single_night(opt_agents);
            params.capacity = opt_capacity;
            std::printf("%.6f\n", coin::bar_optimum(params));
            return 0;
        }
        if (tensor->parsed()) {
            coin::RewardTensor t = tensor_kind == "worst" ? coin::build_worst_case_tensor()
                                                          : coin::random_tensor(tensor_seed);
            coin::write_tensor_csv(t, tensor_out);
            return 0;
        }
    } catch (const coin::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
