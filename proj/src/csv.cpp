#include "coin/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace coin {

std::string series_to_csv(const RunSeries& series) {
    std::string out = "week,mean_world_reward,std_world_reward\n";
    char buffer[96];
    for (std::size_t t = 0; t < series.mean.size(); ++t) {
        std::snprintf(buffer, sizeof(buffer), "%lu,%.6f,%.6f\n",
                      static_cast<unsigned long>(t + 1), series.mean[t], series.stddev[t]);
        out += buffer;
    }
    return out;
}

void write_csv(const RunSeries& series, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("write_csv: cannot open " + path);
    }
    out << series_to_csv(series);
    if (!out) {
        throw std::runtime_error("write_csv: write failed for " + path);
    }
}

}  // namespace coin
