#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wplap/mesh.hpp"
#include "wplap/weights.hpp"

namespace wplap {

struct WeightConfig {
    std::string kind = "constant";  // constant | power-radial | distance-boundary | tabulated
    double exponent = 0.0;
    double value = 1.0;
    std::string table_path;
};

struct MeshConfig {
    double a = 0.0, b = 1.0;
    std::size_t n = 256;
    double grading = 1.0;
    std::string metric = "interval";  // interval | radial
    int dim = 1;
};

struct PhysicsConfig {
    double p = 2.0;
    double lambda = 0.0;
    std::optional<double> m;       // reaction/eigen truncation level
    std::vector<double> m_list;    // eigen-study / truncation-study levels
    double q = 3.0, s = 4.0;       // admissibility exponents, p < q < s
    double lambda_lo = 0.0, lambda_hi = 0.0;
    int bisection_steps = 12;
};

struct TimeConfig {
    double dt = 1e-3;
    double T = 1.0;
    double dt_min = 1e-9;
};

struct SolverConfig {
    double tol = 1e-9;
    int max_iters = 20000;
    std::uint64_t seed = 1;
    std::optional<double> eps;
    double picard_tol = 1e-10;
    int picard_max = 50;
    double blowup_factor = 1e6;
};

struct InitialConfig {
    std::string kind = "bump";  // zero | bump | hat | csv
    double amplitude = 1.0;
    std::string path;
};

struct IoConfig {
    std::string out_dir = "out";
};

/// One experiment: a command plus everything it needs.  Parsed from a JSON
/// config file; unknown commands or malformed sections are parse errors,
/// mutually inconsistent values are precondition errors.
struct ExperimentConfig {
    std::string command;  // check-weights | eigen | eigen-study | evolve | sweep | truncation-study
    WeightConfig omega1, omega2;
    MeshConfig mesh;
    PhysicsConfig physics;
    TimeConfig time;
    SolverConfig solver;
    InitialConfig initial;
    IoConfig io;
};

ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& config);

/// Command-specific semantic checks (throws std::invalid_argument).
void validate(const ExperimentConfig& config);

Mesh1D make_mesh(const MeshConfig& mc);
WeightSpec make_weight(const WeightConfig& wc, const MeshConfig& mc);
Field make_initial(const InitialConfig& ic, const Mesh1D& mesh);

}  // namespace wplap
