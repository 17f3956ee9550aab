#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wplap/mesh.hpp"
#include "wplap/weights.hpp"

namespace wplap {

struct RayleighOptions {
    int max_iters = 20000;
    double tol = 1e-9;            // relative quotient decrease
    std::uint64_t seed = 1;
    double armijo_shrink = 0.5;
    double armijo_slope = 1e-4;   // sufficient-decrease constant
    double noise_amplitude = 0.01;
};

/// Outcome of a Rayleigh-quotient minimization.  The minimizer is
/// normalized so that mass_energy(minimizer) = 1 and lambda_est equals its
/// quotient; the history of accepted quotient values is nonincreasing.
struct RayleighReport {
    double lambda_est = 0.0;
    Field minimizer;
    int iterations = 0;
    std::vector<double> history;
    bool converged = false;
    std::string note;
    double p = 0.0;
    std::optional<double> truncation;  // level applied to ω₁, if any
};

/// Estimate the first eigenvalue λ₁ = inf ∫ω₂|∇u|^p / ∫ω₁|u|^p by projected
/// gradient descent over the interior nodes with Armijo backtracking,
/// renormalizing the mass energy after each accepted step.  The quotient is
/// nonconvex for p != 2; the report carries the best local minimum found.
/// Requires p >= 2 and ω₁ not identically zero at the mesh midpoints.
RayleighReport minimize_rayleigh(const WeightSpec& omega1, const WeightSpec& omega2, double p,
                                 const Mesh1D& mesh, const RayleighOptions& opts = {},
                                 const Field* warm_start = nullptr);

struct EigenStudyRow {
    double m = 0.0;
    double lambda = 0.0;
    int iterations = 0;
    bool converged = false;
};

struct EigenStudyResult {
    std::vector<EigenStudyRow> rows;      // one per truncation level, in input order
    double lambda_untruncated = 0.0;      // estimate with ω₁ itself
    RayleighReport untruncated_report;
};

/// Minimize for each truncated weight W_m = T_m(ω₁), m strictly increasing,
/// warm-starting every run from the previous minimizer (the first level
/// starts fresh).  The untruncated estimate is computed with the same seeded
/// fresh start and then improved, if possible, by the quotient of the final
/// truncated minimizer evaluated against ω₁ itself; with warm starting the
/// emitted λ₁(m) sequence is nonincreasing and bounded below by it.
EigenStudyResult truncated_eigen_study(const WeightSpec& omega1, const WeightSpec& omega2,
                                       double p, const Mesh1D& mesh,
                                       const std::vector<double>& m_list,
                                       const RayleighOptions& opts = {});

}  // namespace wplap
