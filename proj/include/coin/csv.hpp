#pragma once

#include <string>

#include "coin/runner.hpp"

namespace coin {

// CSV rows `week,mean_world_reward,std_world_reward` with %.6f formatting and
// LF line endings; weeks are 1-based.
std::string series_to_csv(const RunSeries& series);
void write_csv(const RunSeries& series, const std::string& path);

}  // namespace coin
