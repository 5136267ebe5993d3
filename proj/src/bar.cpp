#include "coin/bar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coin {

BarParams BarParams::uniform(int num_agents) {
    BarParams params;
    params.alpha.assign(kNumNights, 1.0);
    params.num_agents = num_agents;
    return params;
}

BarParams BarParams::single_night(int num_agents) {
    BarParams params;
    params.alpha.assign(kNumNights, 0.0);
    params.alpha[3] = 7.0;  // night 4 carries all the weight
    params.num_agents = num_agents;
    return params;
}

void BarParams::validate() const {
    if (num_nights < 1) {
        throw std::invalid_argument("BarParams: num_nights must be >= 1");
    }
    if (!(capacity > 0.0)) {
        throw std::invalid_argument("BarParams: capacity must be > 0");
    }
    if (static_cast<int>(alpha.size()) != num_nights) {
        throw std::invalid_argument("BarParams: alpha must have one entry per night");
    }
    for (double a : alpha) {
        if (!(a >= 0.0)) {
            throw std::invalid_argument("BarParams: alpha entries must be >= 0");
        }
    }
    if (num_agents < 1) {
        throw std::invalid_argument("BarParams: num_agents must be >= 1");
    }
}

double night_reward(int night, double attendance_count, const BarParams& params) {
    if (night < 1 || night > params.num_nights) {
        throw std::invalid_argument("night_reward: night " + std::to_string(night) +
                                    " out of 1.." + std::to_string(params.num_nights));
    }
    if (attendance_count < 0.0) {
        throw std::invalid_argument("night_reward: attendance must be >= 0");
    }
    return params.alpha[night - 1] * attendance_count * std::exp(-attendance_count / params.capacity);
}

AttendanceProfile attendance(const ActionColumn& column, int num_nights) {
    AttendanceProfile x(num_nights, 0);
    for (NightAction action : column) {
        if (action < 0 || action > num_nights) {
            throw std::invalid_argument("attendance: action " + std::to_string(action) +
                                        " out of 0.." + std::to_string(num_nights));
        }
        if (action != kClampedAction) {
            ++x[action - 1];
        }
    }
    return x;
}

double world_reward(const AttendanceProfile& x, const BarParams& params) {
    double total = 0.0;
    for (int k = 1; k <= params.num_nights; ++k) {
        total += night_reward(k, x[k - 1], params);
    }
    return total;
}

double ud_reward(int night, const AttendanceProfile& x, const BarParams& params) {
    if (night < 1 || night > params.num_nights) {
        throw std::invalid_argument("ud_reward: invalid night " + std::to_string(night));
    }
    int x_d = x[night - 1];
    if (x_d < 1) {
        throw std::logic_error("ud_reward: agent claims night " + std::to_string(night) +
                               " with zero attendance");
    }
    return night_reward(night, x_d, params) / x_d;
}

double gr_reward(const AttendanceProfile& x, const BarParams& params) {
    return world_reward(x, params);
}

double wl_reward(const AgentSet& subworld, const ActionColumn& column, const BarParams& params) {
    AttendanceProfile x = attendance(column, params.num_nights);
    std::vector<NightAction> member_nights;
    member_nights.reserve(subworld.size());
    for (int a : subworld) {
        if (a < 0 || a >= static_cast<int>(column.size())) {
            throw std::invalid_argument("wl_reward: unknown agent id " + std::to_string(a));
        }
        member_nights.push_back(column[a]);
    }
    return wl_reward_given_attendance(x, member_nights, params);
}

double wl_reward_given_attendance(const AttendanceProfile& x,
                                  const std::vector<NightAction>& member_nights,
                                  const BarParams& params) {
    // Clamping removes each member from the night it attended; already-clamped
    // members attend nothing and remove nothing.
    AttendanceProfile clamped = x;
    for (NightAction night : member_nights) {
        if (night != kClampedAction) {
            --clamped[night - 1];
        }
    }
    double delta = 0.0;
    for (int k = 1; k <= params.num_nights; ++k) {
        if (clamped[k - 1] != x[k - 1]) {
            if (clamped[k - 1] < 0) {
                throw std::invalid_argument("wl_reward: more members on a night than attendees");
            }
            delta += night_reward(k, x[k - 1], params) - night_reward(k, clamped[k - 1], params);
        }
    }
    return delta;
}

double wl_reward_singleton(int night, int own_night_attendance, const BarParams& params) {
    return night_reward(night, own_night_attendance, params) -
           night_reward(night, own_night_attendance - 1, params);
}

}  // namespace coin
