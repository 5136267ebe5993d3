#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "coin/core.hpp"

namespace coin {

struct LearnerParams {
    double learning_rate = 0.1;        // eta in (0,1]
    double initial_temperature = 1.0;  // T0 > 0
    double temperature_decay = 0.995;  // lambda in (0,1], applied once per week
    double min_temperature = 0.001;    // floor, > 0
    int num_actions = kNumNights;
    double initial_estimate = 0.0;     // starting value of every component

    void validate() const;

    bool operator==(const LearnerParams&) const = default;
};

// Boltzmann selection probabilities, exp(E_k/T) / sum_j exp(E_j/T), computed
// with max-subtraction for numerical stability.
std::vector<double> boltzmann_probabilities(const std::vector<double>& estimates,
                                            double temperature);

// One agent's microlearner: a per-night expected-reward vector updated by an
// exponential moving average, with Boltzmann action selection.
class LearnerState {
public:
    LearnerState(const LearnerParams& params, std::uint64_t seed);

    // Samples a night in 1..num_actions and advances the generator.
    NightAction select_action();

    // E_d <- (1-eta)*E_d + eta*reward; other components unchanged.
    void update(NightAction night, double reward);

    // T <- max(T_min, lambda*T).
    void decay_temperature();

    // Resets every estimate component to the given value, keeping temperature
    // and generator state.
    void reset_estimates(double value);

    const std::vector<double>& estimates() const { return estimates_; }
    double temperature() const { return temperature_; }
    const LearnerParams& params() const { return params_; }

private:
    LearnerParams params_;
    std::vector<double> estimates_;
    double temperature_;
    std::mt19937_64 rng_;
};

}  // namespace coin
