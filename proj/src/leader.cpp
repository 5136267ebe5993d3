#include "coin/leader.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "coin/rng.hpp"

namespace coin {

std::size_t RewardTensor::index(int l, int f1, int f2) {
    if (l < 0 || l >= kTensorDim || f1 < 0 || f1 >= kTensorDim || f2 < 0 || f2 >= kTensorDim) {
        throw std::out_of_range("RewardTensor: index outside 0..7");
    }
    return static_cast<std::size_t>((l * kTensorDim + f1) * kTensorDim + f2);
}

ActionColumn enforce_dynamics(const ActionColumn& intents, const TripleLayout& layout) {
    if (static_cast<int>(intents.size()) != layout.num_agents()) {
        throw std::invalid_argument("enforce_dynamics: column size does not match layout");
    }
    ActionColumn realized = intents;
    for (int i = 0; i < layout.num_leaders; ++i) {
        realized[layout.follower1(i)] = realized[layout.leader(i)];
        realized[layout.follower2(i)] = realized[layout.leader(i)];
    }
    return realized;
}

double lf_world_reward(const ActionColumn& column, const RewardTensor& tensor,
                       const TripleLayout& layout) {
    if (static_cast<int>(column.size()) != layout.num_agents()) {
        throw std::invalid_argument("lf_world_reward: column size does not match layout");
    }
    double total = 0.0;
    for (int i = 0; i < layout.num_leaders; ++i) {
        total += tensor.at(column[layout.leader(i)], column[layout.follower1(i)],
                           column[layout.follower2(i)]);
    }
    return total;
}

double lf_wl_reward(const AgentSet& subworld, const ActionColumn& column,
                    const RewardTensor& tensor, const TripleLayout& layout) {
    if (static_cast<int>(column.size()) != layout.num_agents()) {
        throw std::invalid_argument("lf_wl_reward: column size does not match layout");
    }
    // Mark the triples touched by the subworld; all others contribute zero.
    std::vector<char> member(column.size(), 0);
    std::vector<char> touched(layout.num_leaders, 0);
    for (int a : subworld) {
        if (a < 0 || a >= static_cast<int>(column.size())) {
            throw std::invalid_argument("lf_wl_reward: unknown agent id " + std::to_string(a));
        }
        member[a] = 1;
        touched[layout.triple_of(a)] = 1;
    }
    double delta = 0.0;
    for (int i = 0; i < layout.num_leaders; ++i) {
        if (!touched[i]) {
            continue;
        }
        int l = column[layout.leader(i)];
        int f1 = column[layout.follower1(i)];
        int f2 = column[layout.follower2(i)];
        int cl = member[layout.leader(i)] ? kClampedAction : l;
        int cf1 = member[layout.follower1(i)] ? kClampedAction : f1;
        int cf2 = member[layout.follower2(i)] ? kClampedAction : f2;
        delta += tensor.at(l, f1, f2) - tensor.at(cl, cf1, cf2);
    }
    return delta;
}

RewardTensor build_worst_case_tensor() {
    RewardTensor tensor;
    for (int l = 1; l <= kNumNights; ++l) {
        double v = static_cast<double>(l) / kNumNights;
        tensor.set(l, l, l, v);       // realized diagonal payoffs
        tensor.set(0, l, l, 2.0 * v); // leader-clamped entries, anti-aligned
    }
    return tensor;
}

RewardTensor random_tensor(std::uint64_t seed) {
    RewardTensor tensor;
    std::mt19937_64 rng(seed);
    for (int l = 0; l < kTensorDim; ++l) {
        for (int f1 = 0; f1 < kTensorDim; ++f1) {
            for (int f2 = 0; f2 < kTensorDim; ++f2) {
                tensor.set(l, f1, f2, canonical_double(rng()));
            }
        }
    }
    return tensor;
}

double tensor_reward_bound(const RewardTensor& tensor) {
    double max_entry = tensor.at(0, 0, 0);
    double min_entry = max_entry;
    for (int l = 0; l < kTensorDim; ++l) {
        for (int f1 = 0; f1 < kTensorDim; ++f1) {
            for (int f2 = 0; f2 < kTensorDim; ++f2) {
                max_entry = std::max(max_entry, tensor.at(l, f1, f2));
                min_entry = std::min(min_entry, tensor.at(l, f1, f2));
            }
        }
    }
    return max_entry - min_entry;
}

void write_tensor_csv(const RewardTensor& tensor, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_tensor_csv: cannot open " + path);
    }
    out << "l,f1,f2,value\n";
    char buffer[64];
    for (int l = 0; l < kTensorDim; ++l) {
        for (int f1 = 0; f1 < kTensorDim; ++f1) {
            for (int f2 = 0; f2 < kTensorDim; ++f2) {
                std::snprintf(buffer, sizeof(buffer), "%d,%d,%d,%.17g\n", l, f1, f2,
                              tensor.at(l, f1, f2));
                out << buffer;
            }
        }
    }
    if (!out) {
        throw std::runtime_error("write_tensor_csv: write failed for " + path);
    }
}

RewardTensor read_tensor_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("read_tensor_csv: cannot open " + path);
    }
    std::string line;
    if (!std::getline(in, line) || line != "l,f1,f2,value") {
        throw std::runtime_error("read_tensor_csv: bad header in " + path);
    }
    RewardTensor tensor;
    std::vector<char> seen(kTensorDim * kTensorDim * kTensorDim, 0);
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        int l = 0;
        int f1 = 0;
        int f2 = 0;
        double value = 0.0;
        char trailing = '\0';
        if (std::sscanf(line.c_str(), "%d,%d,%d,%lf%c", &l, &f1, &f2, &value, &trailing) != 4) {
            throw std::runtime_error("read_tensor_csv: malformed row in " + path + ": " + line);
        }
        tensor.set(l, f1, f2, value);
        std::size_t flat = static_cast<std::size_t>((l * kTensorDim + f1) * kTensorDim + f2);
        seen[flat] = 1;
        ++rows;
    }
    if (rows != kTensorDim * kTensorDim * kTensorDim) {
        throw std::runtime_error("read_tensor_csv: expected 512 rows in " + path + ", got " +
                                 std::to_string(rows));
    }
    for (char s : seen) {
        if (!s) {
            throw std::runtime_error("read_tensor_csv: duplicate and missing rows in " + path);
        }
    }
    return tensor;
}

}  // namespace coin
