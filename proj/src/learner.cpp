#include "coin/learner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "coin/rng.hpp"

namespace coin {

void LearnerParams::validate() const {
    if (!(learning_rate > 0.0) || learning_rate > 1.0) {
        throw std::invalid_argument("LearnerParams: learning_rate must be in (0,1]");
    }
    if (!(initial_temperature > 0.0)) {
        throw std::invalid_argument("LearnerParams: initial_temperature must be > 0");
    }
    if (!(temperature_decay > 0.0) || temperature_decay > 1.0) {
        throw std::invalid_argument("LearnerParams: temperature_decay must be in (0,1]");
    }
    if (!(min_temperature > 0.0)) {
        throw std::invalid_argument("LearnerParams: min_temperature must be > 0");
    }
    if (num_actions < 1) {
        throw std::invalid_argument("LearnerParams: num_actions must be >= 1");
    }
    if (!std::isfinite(initial_estimate)) {
        throw std::invalid_argument("LearnerParams: initial_estimate must be finite");
    }
}

std::vector<double> boltzmann_probabilities(const std::vector<double>& estimates,
                                            double temperature) {
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("boltzmann_probabilities: temperature must be > 0");
    }
    if (estimates.empty()) {
        throw std::invalid_argument("boltzmann_probabilities: empty estimate vector");
    }
    double max_estimate = estimates[0];
    for (double e : estimates) {
        if (!std::isfinite(e)) {
            throw std::logic_error("boltzmann_probabilities: non-finite estimate");
        }
        max_estimate = std::max(max_estimate, e);
    }
    std::vector<double> probs(estimates.size());
    double normalizer = 0.0;
    for (std::size_t k = 0; k < estimates.size(); ++k) {
        probs[k] = std::exp((estimates[k] - max_estimate) / temperature);
        normalizer += probs[k];
    }
    for (double& p : probs) {
        p /= normalizer;
    }
    return probs;
}

LearnerState::LearnerState(const LearnerParams& params, std::uint64_t seed)
    : params_(params),
      estimates_(params.num_actions, params.initial_estimate),
      temperature_(params.initial_temperature),
      rng_(seed) {
    params_.validate();
}

NightAction LearnerState::select_action() {
    std::vector<double> probs = boltzmann_probabilities(estimates_, temperature_);
    double u = canonical_double(rng_());
    double cumulative = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        cumulative += probs[k];
        if (u < cumulative) {
            return static_cast<NightAction>(k + 1);
        }
    }
    return static_cast<NightAction>(probs.size());  // rounding left u past the last bin
}

void LearnerState::update(NightAction night, double reward) {
    if (night < 1 || night > params_.num_actions) {
        throw std::invalid_argument("LearnerState::update: night " + std::to_string(night) +
                                    " out of 1.." + std::to_string(params_.num_actions));
    }
    if (!std::isfinite(reward)) {
        throw std::invalid_argument("LearnerState::update: non-finite reward");
    }
    double& estimate = estimates_[night - 1];
    estimate = (1.0 - params_.learning_rate) * estimate + params_.learning_rate * reward;
}

void LearnerState::decay_temperature() {
    temperature_ = std::max(params_.min_temperature, params_.temperature_decay * temperature_);
}

void LearnerState::reset_estimates(double value) {
    if (!std::isfinite(value)) {
        throw std::invalid_argument("LearnerState::reset_estimates: non-finite value");
    }
    estimates_.assign(params_.num_actions, value);
}

}  // namespace coin
