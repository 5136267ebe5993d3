#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "coin/core.hpp"

namespace coin {

// Tensor index range: nights 1..7 plus the clamp sentinel 0.
inline constexpr int kTensorDim = kNumNights + 1;

// Triply-indexed payoff for (leader night, follower1 night, follower2 night),
// defined for every index in {0..7} including dynamically unrealizable
// triples produced by clamping.
class RewardTensor {
public:
    RewardTensor() { values_.fill(0.0); }

    double at(int l, int f1, int f2) const { return values_[index(l, f1, f2)]; }
    void set(int l, int f1, int f2, double value) { values_[index(l, f1, f2)] = value; }

    bool operator==(const RewardTensor&) const = default;

private:
    static std::size_t index(int l, int f1, int f2);
    std::array<double, kTensorDim * kTensorDim * kTensorDim> values_;
};

// Agents are stored as consecutive triples: leader 3i, followers 3i+1, 3i+2.
struct TripleLayout {
    int num_leaders = 56;

    int num_agents() const { return 3 * num_leaders; }
    int leader(int triple) const { return 3 * triple; }
    int follower1(int triple) const { return 3 * triple + 1; }
    int follower2(int triple) const { return 3 * triple + 2; }
    int triple_of(int agent) const { return agent / 3; }
    bool is_leader(int agent) const { return agent % 3 == 0; }
};

// Overwrites followers' actions with their leader's; leaders are unchanged.
ActionColumn enforce_dynamics(const ActionColumn& intents, const TripleLayout& layout);

// One week's world reward: sum over triples of R[l_i, f1_i, f2_i], using the
// actual column values including any clamp sentinels.
double lf_world_reward(const ActionColumn& column, const RewardTensor& tensor,
                       const TripleLayout& layout);

// WL reward of a subworld. Evaluated triple-by-triple so that triples with no
// member in the subworld cancel exactly.
double lf_wl_reward(const AgentSet& subworld, const ActionColumn& column,
                    const RewardTensor& tensor, const TripleLayout& layout);

// Hand-crafted tensor for which separate-subworld WL-greedy leaders drive the
// world reward to its minimum while team subworlds drive it to its maximum:
// R[l,l,l] = l/7, R[0,l,l] = 2l/7, everything else 0.
RewardTensor build_worst_case_tensor();

// Every entry drawn independently uniform on [0,1); deterministic per seed.
RewardTensor random_tensor(std::uint64_t seed);

// Upper bound on any single-triple WL reward: the spread between the largest
// and smallest tensor entries.
double tensor_reward_bound(const RewardTensor& tensor);

// CSV export/import with columns l,f1,f2,value (512 data rows). Values round
// trip exactly.
void write_tensor_csv(const RewardTensor& tensor, const std::string& path);
RewardTensor read_tensor_csv(const std::string& path);

}  // namespace coin
