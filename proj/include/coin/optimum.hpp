#pragma once

#include "coin/bar.hpp"

namespace coin {

// Exact maximum of sum_k gamma_k(x_k) over non-negative integer attendance
// profiles with sum_k x_k = num_agents, by dynamic programming over
// (night, agents remaining).
double bar_optimum(const BarParams& params);

}  // namespace coin
