#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wplap/mesh.hpp"
#include "wplap/weights.hpp"

namespace wplap {

struct EvolutionConfig {
    double p = 3.0;
    double lambda = 0.0;
    std::optional<double> m;      // reaction weight truncation level; unset = untruncated
    double dt = 1e-3;
    double T = 1.0;
    std::optional<double> eps;    // gradient regularization; default 1e-8/(b-a)
    int picard_max = 50;
    double picard_tol = 1e-10;
    double blowup_factor = 1e6;
    double dt_min = 1e-9;
};

void validate(const EvolutionConfig& cfg);

enum class EvolutionStatus { Global, BlowUp, SolverFailure };

std::string to_string(EvolutionStatus s);

/// Energy time series of one evolution run.  times/l2sq/dirichlet/mass have
/// equal length, times strictly increasing from 0.  BlowUp means the last
/// recorded L² norm reached blowup_factor times the initial one.
struct EvolutionTrace {
    std::vector<double> times;
    std::vector<double> l2sq;
    std::vector<double> dirichlet;
    std::vector<double> mass;
    EvolutionStatus status = EvolutionStatus::Global;
    double event_time = 0.0;                 // blow-up / failure time
    double energy_budget = 0.0;              // ½ l2sq[0] = ½‖f‖²
    double dirichlet_time_integral = 0.0;    // Σ dt · dirichlet(u^{n+1})
    std::optional<double> hardy_estimate;    // K̂ supplied by the caller
    std::optional<double> energy_residual;   // ½l2sq(end) + (1-λ/K̂)Σdt·dirichlet - ½l2sq(0)
    Field final_state;
    std::vector<Field> snapshots;            // aligned with times when recorded

    bool decayed() const { return l2sq.back() < l2sq.front(); }
};

struct StepOutcome {
    Field u;
    bool converged = false;
    int picard_iterations = 0;
};

/// One backward-Euler step of u_t - div(ω₂|∇u|^{p-2}∇u) = λ W_m |u|^{p-2}u
/// solved by Picard lagging: |∇u|^{p-2} and |u|^{p-2} are frozen at the
/// previous Picard iterate, so each inner problem is a symmetric
/// positive-definite tridiagonal solve (the reaction stays on the left with
/// its lagged coefficient).  Non-convergence or loss of positive
/// definiteness is reported through the converged flag; halving dt is the
/// caller's policy.
StepOutcome step_implicit(const Field& u_n, double dt, const EvolutionConfig& cfg,
                          const WeightSpec& omega1, const WeightSpec& omega2, const Mesh1D& mesh);

/// March from f to time T with halving-on-failure dt control, recording
/// energies at every accepted step.  Stops early on blow-up detection
/// (L² norm reaching blowup_factor times its initial value) or when dt
/// falls below dt_min.
EvolutionTrace evolve(const Field& f, const EvolutionConfig& cfg, const WeightSpec& omega1,
                      const WeightSpec& omega2, const Mesh1D& mesh,
                      std::optional<double> hardy_estimate = {}, bool record_snapshots = false);

class bracket_error : public std::runtime_error {
public:
    bracket_error(std::string lo_status, std::string hi_status);
    const std::string lo_status, hi_status;
};

struct SweepRun {
    double lambda = 0.0;
    bool grew = false;
    EvolutionTrace trace;
};

struct SweepResult {
    double lambda_crit = 0.0;     // midpoint of the final bracket
    double lo = 0.0, hi = 0.0;    // final bracket
    std::vector<SweepRun> runs;   // in evaluation order, endpoints first
};

/// Bisect the decay/growth indicator (terminal vs initial L² norm) in λ.
/// Requires the endpoint runs to behave oppositely: decay at lambda_lo,
/// growth or blow-up at lambda_hi; otherwise throws bracket_error naming
/// both endpoint statuses.
SweepResult sweep_lambda(const Field& f, const EvolutionConfig& cfg, const WeightSpec& omega1,
                         const WeightSpec& omega2, const Mesh1D& mesh, double lambda_lo,
                         double lambda_hi, int bisection_steps,
                         std::optional<double> hardy_estimate = {});

struct FamilyComparison {
    double m_lo = 0.0, m_hi = 0.0;        // consecutive truncation levels m < m'
    std::vector<double> times;            // time samples shared by both runs
    std::vector<double> min_node_diff;    // min over nodes of u_{m'} - u_m
};

struct FamilyStudyResult {
    std::vector<double> m_list;
    std::vector<EvolutionTrace> traces;
    std::vector<FamilyComparison> comparisons;
};

/// Evolve once per truncation level and tabulate, per shared time sample,
/// the minimum nodal difference between consecutive levels.  The sign
/// pattern is reported, not asserted.
FamilyStudyResult truncation_family_study(const Field& f, double lambda,
                                          const std::vector<double>& m_list,
                                          const EvolutionConfig& cfg, const WeightSpec& omega1,
                                          const WeightSpec& omega2, const Mesh1D& mesh,
                                          std::optional<double> hardy_estimate = {});

}  // namespace wplap
