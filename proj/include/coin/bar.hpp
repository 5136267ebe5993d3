#pragma once

#include <vector>

#include "coin/core.hpp"

namespace coin {

// Bar environment parameters: per-night weights and the capacity at which a
// night's reward peaks.
struct BarParams {
    int num_nights = kNumNights;
    double capacity = 6.0;      // c
    std::vector<double> alpha;  // one weight per night, each >= 0
    int num_agents = 168;

    static BarParams uniform(int num_agents = 168);       // alpha = [1,1,1,1,1,1,1]
    static BarParams single_night(int num_agents = 168);  // alpha = [0,0,0,7,0,0,0]

    void validate() const;
};

// Attendance per night for one week; x[k-1] is the attendance on night k.
using AttendanceProfile = std::vector<int>;

// gamma_k(y) = alpha_k * y * exp(-y/c). Peaks at y = c.
double night_reward(int night, double attendance_count, const BarParams& params);

// Counts agents per night; clamped agents (action 0) count toward no night.
AttendanceProfile attendance(const ActionColumn& column, int num_nights);

// One week's world reward: sum over nights of gamma_k(x_k).
double world_reward(const AttendanceProfile& x, const BarParams& params);

// Uniform division: the attended night's reward split among its attendees.
double ud_reward(int night, const AttendanceProfile& x, const BarParams& params);

// Global reward: every agent receives the full world reward.
double gr_reward(const AttendanceProfile& x, const BarParams& params);

// Wonderful-life reward of a subworld: world reward minus world reward with
// the subworld clamped. Computed night-by-night so that untouched nights
// cancel exactly.
double wl_reward(const AgentSet& subworld, const ActionColumn& column, const BarParams& params);

// Same, given the week's attendance and the subworld members' nights. Used by
// the trial loop to avoid recounting attendance per subworld.
double wl_reward_given_attendance(const AttendanceProfile& x,
                                  const std::vector<NightAction>& member_nights,
                                  const BarParams& params);

// Single-agent shortcut: gamma_d(x_d) - gamma_d(x_d - 1), needing only the
// attendance on the agent's own night.
double wl_reward_singleton(int night, int own_night_attendance, const BarParams& params);

}  // namespace coin
