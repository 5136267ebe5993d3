#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "coin/bar.hpp"

using namespace coin;

namespace {

// Full-sum oracle: world reward of the column minus world reward of the
// clamped column, straight from the definition.
double wl_full_sum(const AgentSet& subworld, const ActionColumn& column, const BarParams& p) {
    return world_reward(attendance(column, p.num_nights), p) -
           world_reward(attendance(clamp(column, subworld), p.num_nights), p);
}

}  // namespace

TEST_CASE("night reward closed form") {
    BarParams uniform = BarParams::uniform();
    CHECK(night_reward(1, 0.0, uniform) == 0.0);
    CHECK(night_reward(3, 6.0, uniform) == doctest::Approx(2.2072766470286539).epsilon(1e-12));

    BarParams single = BarParams::single_night();
    CHECK(night_reward(1, 10.0, single) == 0.0);  // zero weight
    CHECK(night_reward(4, 6.0, single) == doctest::Approx(15.450936529200578).epsilon(1e-12));

    CHECK_THROWS_AS(night_reward(1, -1.0, uniform), std::invalid_argument);
    CHECK_THROWS_AS(night_reward(0, 1.0, uniform), std::invalid_argument);
    CHECK_THROWS_AS(night_reward(8, 1.0, uniform), std::invalid_argument);
}

TEST_CASE("night reward peaks at capacity") {
    BarParams p = BarParams::uniform();
    for (int night = 1; night <= 7; ++night) {
        for (int y = 0; y < 6; ++y) {
            CHECK(night_reward(night, y, p) < night_reward(night, y + 1, p));
        }
        for (int y = 6; y < 40; ++y) {
            CHECK(night_reward(night, y, p) > night_reward(night, y + 1, p));
        }
    }
}

TEST_CASE("attendance counts per night, ignoring clamped agents") {
    CHECK(attendance({2, 2, 2}, 7) == AttendanceProfile{0, 3, 0, 0, 0, 0, 0});
    CHECK(attendance({0, 0, 0}, 7) == AttendanceProfile{0, 0, 0, 0, 0, 0, 0});
    CHECK(attendance({1, 4, 4, 7}, 7) == AttendanceProfile{1, 0, 0, 2, 0, 0, 1});
    CHECK_THROWS_AS(attendance({8}, 7), std::invalid_argument);
    CHECK_THROWS_AS(attendance({-1}, 7), std::invalid_argument);
}

TEST_CASE("attendance conserves the unclamped agent count") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 64);
        ActionColumn column(n);
        int unclamped = 0;
        for (auto& a : column) {
            a = static_cast<int>(rng() % 8);
            unclamped += a != kClampedAction;
        }
        AttendanceProfile x = attendance(column, 7);
        int total = 0;
        for (int count : x) {
            total += count;
        }
        CHECK(total == unclamped);
    }
}

TEST_CASE("world reward sums the night rewards") {
    BarParams uniform = BarParams::uniform();
    CHECK(world_reward({6, 6, 6, 6, 6, 6, 6}, uniform) ==
          doctest::Approx(15.450936529200578).epsilon(1e-12));

    BarParams single = BarParams::single_night();
    CHECK(world_reward({3, 9, 1, 6, 0, 2, 5}, single) ==
          doctest::Approx(15.450936529200578).epsilon(1e-12));

    CHECK(world_reward({0, 0, 0, 0, 0, 0, 0}, uniform) == 0.0);
}

TEST_CASE("uniform division reward") {
    BarParams uniform = BarParams::uniform();
    AttendanceProfile x{0, 0, 0, 0, 0, 0, 0};
    x[1] = 6;
    CHECK(ud_reward(2, x, uniform) == doctest::Approx(0.36787944117144233).epsilon(1e-12));
    x[1] = 1;
    CHECK(ud_reward(2, x, uniform) == doctest::Approx(0.8464817248906141).epsilon(1e-12));

    BarParams single = BarParams::single_night();
    x[1] = 5;
    CHECK(ud_reward(2, x, single) == 0.0);  // zero-weight night still well defined

    x[1] = 0;
    CHECK_THROWS_AS(ud_reward(2, x, uniform), std::logic_error);
}

TEST_CASE("global reward equals world reward for every agent") {
    BarParams p = BarParams::uniform();
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        AttendanceProfile x(7);
        for (auto& count : x) {
            count = static_cast<int>(rng() % 20);
        }
        CHECK(gr_reward(x, p) == world_reward(x, p));
    }
}

TEST_CASE("wonderful-life reward, singleton examples") {
    BarParams p = BarParams::uniform(3);
    // Lone agent on night 2: gamma(1) - gamma(0).
    CHECK(wl_reward({0}, {2, 3, 4}, p) == doctest::Approx(0.8464817248906141).epsilon(1e-12));

    // Six agents on night 2, clamp one: gamma(6) - gamma(5).
    BarParams p6 = BarParams::uniform(6);
    ActionColumn six(6, 2);
    CHECK(wl_reward({3}, six, p6) == doctest::Approx(0.03428560449326281).epsilon(1e-12));

    CHECK(wl_reward({}, six, p6) == 0.0);  // empty subworld: G - G
}

TEST_CASE("wl reduction identity against the full-sum oracle") {
    std::mt19937_64 rng(2024);
    BarParams p = BarParams::uniform(30);
    for (int trial = 0; trial < 1000; ++trial) {
        ActionColumn column(30);
        for (auto& a : column) {
            a = 1 + static_cast<int>(rng() % 7);
        }
        int agent = static_cast<int>(rng() % 30);
        double fast = wl_reward({agent}, column, p);
        double oracle = wl_full_sum({agent}, column, p);
        CHECK(std::abs(fast - oracle) <= 1e-12);

        // The single-night shortcut must agree with the general path exactly.
        AttendanceProfile x = attendance(column, p.num_nights);
        int night = column[agent];
        CHECK(fast == wl_reward_singleton(night, x[night - 1], p));
    }
}

TEST_CASE("wl of multi-agent subworlds matches the full-sum oracle") {
    std::mt19937_64 rng(77);
    BarParams p = BarParams::uniform(12);
    for (int trial = 0; trial < 500; ++trial) {
        ActionColumn column(12);
        for (auto& a : column) {
            a = 1 + static_cast<int>(rng() % 7);
        }
        AgentSet subworld;
        for (int a = 0; a < 12; ++a) {
            if (rng() % 4 == 0) {
                subworld.push_back(a);
            }
        }
        CHECK(std::abs(wl_reward(subworld, column, p) - wl_full_sum(subworld, column, p)) <=
              1e-12);
    }
}

TEST_CASE("singleton WL is exactly factored: 4 agents, 3 nights, all columns") {
    BarParams p = BarParams::uniform(4);
    p.num_nights = 3;
    p.alpha = {1.0, 0.7, 1.3};  // uneven weights; factoredness must not care

    int checked = 0;
    for (int code = 0; code < 81; ++code) {
        ActionColumn column(4);
        int rest = code;
        for (int a = 0; a < 4; ++a) {
            column[a] = 1 + rest % 3;
            rest /= 3;
        }
        double g_before = world_reward(attendance(column, 3), p);
        for (int agent = 0; agent < 4; ++agent) {
            double wl_before = wl_reward({agent}, column, p);
            for (int night = 1; night <= 3; ++night) {
                if (night == column[agent]) {
                    continue;
                }
                ActionColumn deviated = column;
                deviated[agent] = night;
                double g_after = world_reward(attendance(deviated, 3), p);
                double wl_after = wl_reward({agent}, deviated, p);
                double delta_g = g_after - g_before;
                double delta_wl = wl_after - wl_before;
                CHECK(std::abs(delta_wl - delta_g) <= 1e-12);
                ++checked;
            }
        }
    }
    CHECK(checked == 81 * 4 * 2);
}

TEST_CASE("bar params validation") {
    BarParams p = BarParams::uniform();
    CHECK_NOTHROW(p.validate());
    p.capacity = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = BarParams::uniform();
    p.alpha.pop_back();
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = BarParams::uniform();
    p.alpha[2] = -0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}
