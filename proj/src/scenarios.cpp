#include "wplap/scenarios.hpp"

#include <stdexcept>

namespace wplap {

namespace {

ExperimentConfig unit_interval_p2() {
    ExperimentConfig c;
    c.command = "eigen";
    c.omega1 = {"constant", 0.0, 1.0, ""};
    c.omega2 = {"constant", 0.0, 1.0, ""};
    c.mesh = {0.0, 1.0, 256, 1.0, "interval", 1};
    c.physics.p = 2.0;
    c.physics.lambda = 0.0;
    c.physics.q = 3.0;
    c.physics.s = 4.0;
    c.physics.lambda_lo = 5.0;
    c.physics.lambda_hi = 15.0;
    c.physics.bisection_steps = 12;
    c.time = {1e-3, 1.0, 1e-9};
    c.initial = {"bump", 1.0, ""};
    return c;
}

// omega1 = |x|^{-p}, omega2 = 1, reduced radially in dimension N = 4 so
// that p < N keeps the singular weight locally integrable.
ExperimentConfig radial_power() {
    ExperimentConfig c;
    c.command = "eigen-study";
    c.omega1 = {"power-radial", -3.0, 1.0, ""};
    c.omega2 = {"constant", 0.0, 1.0, ""};
    c.mesh = {0.0, 1.0, 512, 2.0, "radial", 4};
    c.physics.p = 3.0;
    c.physics.lambda = 0.015;
    c.physics.m_list = {10.0, 100.0, 1000.0, 10000.0};
    c.physics.q = 4.0;
    c.physics.s = 6.0;
    c.physics.lambda_lo = 0.005;
    c.physics.lambda_hi = 0.5;
    c.physics.bisection_steps = 12;
    c.time = {1e-3, 1.0, 1e-9};
    c.initial = {"bump", 1.0, ""};
    return c;
}

// omega1 = dist(x,boundary)^{gamma-p}, omega2 = dist(x,boundary)^{gamma}
// with gamma = -1 < 0 and p = 3 on the unit interval.
ExperimentConfig distance_pair() {
    ExperimentConfig c;
    c.command = "evolve";
    c.omega1 = {"distance-boundary", -4.0, 1.0, ""};
    c.omega2 = {"distance-boundary", -1.0, 1.0, ""};
    c.mesh = {0.0, 1.0, 512, 1.0, "interval", 1};
    c.physics.p = 3.0;
    c.physics.lambda = 1.0;
    c.physics.q = 4.0;
    c.physics.s = 6.0;
    c.physics.lambda_lo = 0.5;
    c.physics.lambda_hi = 8.0;
    c.physics.bisection_steps = 12;
    c.physics.m_list = {10.0, 100.0, 1000.0, 10000.0};
    c.time = {1e-3, 1.0, 1e-9};
    c.initial = {"bump", 1.0, ""};
    return c;
}

}  // namespace

std::vector<std::pair<std::string, ExperimentConfig>> builtin_scenarios() {
    return {{"radial-power", radial_power()},
            {"distance-pair", distance_pair()},
            {"unit-interval-p2", unit_interval_p2()}};
}

ExperimentConfig scenario(const std::string& name) {
    for (auto& [key, config] : builtin_scenarios())
        if (key == name) return config;
    throw std::invalid_argument("unknown scenario: " + name);
}

std::vector<std::string> scenario_names() {
    std::vector<std::string> names;
    for (auto& [key, config] : builtin_scenarios()) names.push_back(key);
    return names;
}

}  // namespace wplap
