#include "wplap/runner.hpp"

#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>

#include "wplap/eigensolver.hpp"
#include "wplap/io.hpp"
#include "wplap/operators.hpp"
#include "wplap/parabolic.hpp"

namespace wplap {

namespace {

using nlohmann::json;

std::string status_label(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::Pass: return "pass";
        case ConditionStatus::Fail: return "fail";
        case ConditionStatus::AnalyticOnly: return "analytic-only";
    }
    return "unknown";
}

json admissibility_to_json(const AdmissibilityReport& report) {
    json conditions = json::array();
    for (const auto& e : report.entries) {
        json entry{{"condition", e.condition},
                   {"status", status_label(e.status)},
                   {"note", e.note}};
        entry["evidence"] = std::isfinite(e.evidence) ? json(e.evidence) : json(nullptr);
        conditions.push_back(entry);
    }
    return json{{"parameters", {{"p", report.p}, {"q", report.q}, {"s", report.s}}},
                {"conditions", conditions}};
}

RayleighOptions solver_options(const ExperimentConfig& c) {
    RayleighOptions opts;
    opts.max_iters = c.solver.max_iters;
    opts.tol = c.solver.tol;
    opts.seed = c.solver.seed;
    return opts;
}

EvolutionConfig evolution_config(const ExperimentConfig& c) {
    EvolutionConfig e;
    e.p = c.physics.p;
    e.lambda = c.physics.lambda;
    e.m = c.physics.m;
    e.dt = c.time.dt;
    e.T = c.time.T;
    e.dt_min = c.time.dt_min;
    e.eps = c.solver.eps;
    e.picard_max = c.solver.picard_max;
    e.picard_tol = c.solver.picard_tol;
    e.blowup_factor = c.solver.blowup_factor;
    return e;
}

void write_history_csv(const std::string& path, const std::vector<double>& history) {
    std::ostringstream out;
    out.precision(17);
    out << "iteration,quotient\n";
    for (std::size_t i = 0; i < history.size(); ++i) out << i << "," << history[i] << "\n";
    write_text_file(path, out.str());
}

json trace_summary(const EvolutionTrace& trace) {
    json j{{"status", to_string(trace.status)},
           {"initial_l2sq", trace.l2sq.front()},
           {"terminal_l2sq", trace.l2sq.back()},
           {"energy_budget", trace.energy_budget},
           {"dirichlet_time_integral", trace.dirichlet_time_integral},
           {"steps", trace.times.size() - 1}};
    if (trace.status != EvolutionStatus::Global) j["event_time"] = trace.event_time;
    if (trace.hardy_estimate) j["hardy_estimate"] = *trace.hardy_estimate;
    if (trace.energy_residual) j["energy_residual"] = *trace.energy_residual;
    return j;
}

struct RunContext {
    std::filesystem::path out;
    json report;

    void flush() const {
        write_text_file((out / "report.json").string(), report.dump(2) + "\n");
    }
};

int run_check_weights(const ExperimentConfig& c, RunContext& ctx, const Mesh1D& mesh,
                      const WeightSpec& w1, const WeightSpec& w2) {
    const auto report = check_admissibility(w1, w2, c.physics.p, c.physics.q, c.physics.s, mesh);
    const json adm = admissibility_to_json(report);
    write_text_file((ctx.out / "admissibility.json").string(), adm.dump(2) + "\n");
    ctx.report["headline"] = {{"numeric_entries_pass", report.numeric_entries_pass()},
                              {"W2_evidence", report.entry(2).evidence}};
    ctx.report["admissibility"] = adm;
    ctx.report["status"] = "ok";
    return exit_code::ok;
}

int run_eigen(const ExperimentConfig& c, RunContext& ctx, const Mesh1D& mesh,
              const WeightSpec& w1, const WeightSpec& w2) {
    const WeightSpec mass_weight = c.physics.m ? truncate_weight(w1, *c.physics.m) : w1;
    const auto rep = minimize_rayleigh(mass_weight, w2, c.physics.p, mesh, solver_options(c));
    write_field_csv((ctx.out / "minimizer.csv").string(), mesh, rep.minimizer);
    write_history_csv((ctx.out / "eigen_history.csv").string(), rep.history);
    ctx.report["headline"] = {{"lambda_hat", rep.lambda_est},
                              {"iterations", rep.iterations},
                              {"converged", rep.converged}};
    if (!rep.note.empty()) ctx.report["headline"]["note"] = rep.note;
    ctx.report["status"] = rep.converged ? "ok" : "solver-failure";
    return rep.converged ? exit_code::ok : exit_code::solver;
}

int run_eigen_study(const ExperimentConfig& c, RunContext& ctx, const Mesh1D& mesh,
                    const WeightSpec& w1, const WeightSpec& w2) {
    const auto study =
        truncated_eigen_study(w1, w2, c.physics.p, mesh, c.physics.m_list, solver_options(c));
    std::ostringstream rows;
    rows.precision(17);
    rows << "m,lambda,iterations,converged\n";
    json jrows = json::array();
    for (const auto& r : study.rows) {
        rows << r.m << "," << r.lambda << "," << r.iterations << "," << (r.converged ? 1 : 0)
             << "\n";
        jrows.push_back({{"m", r.m},
                         {"lambda", r.lambda},
                         {"iterations", r.iterations},
                         {"converged", r.converged}});
    }
    write_text_file((ctx.out / "eigen.csv").string(), rows.str());
    write_field_csv((ctx.out / "minimizer.csv").string(), mesh, study.untruncated_report.minimizer);
    bool monotone = true;
    for (std::size_t k = 1; k < study.rows.size(); ++k)
        monotone = monotone && study.rows[k].lambda <= study.rows[k - 1].lambda * (1.0 + 1e-12);
    ctx.report["headline"] = {{"lambda_untruncated", study.lambda_untruncated},
                              {"rows", jrows},
                              {"nonincreasing", monotone}};
    ctx.report["status"] = "ok";
    return exit_code::ok;
}

int run_evolve(const ExperimentConfig& c, RunContext& ctx, const Mesh1D& mesh,
               const WeightSpec& w1, const WeightSpec& w2) {
    const auto eig = minimize_rayleigh(w1, w2, c.physics.p, mesh, solver_options(c));
    const Field f = make_initial(c.initial, mesh);
    const auto trace = evolve(f, evolution_config(c), w1, w2, mesh, eig.lambda_est);
    write_trace_csv((ctx.out / "trace.csv").string(), trace);
    write_field_csv((ctx.out / "final_state.csv").string(), mesh, trace.final_state);
    ctx.report["headline"] = trace_summary(trace);
    ctx.report["headline"]["lambda"] = c.physics.lambda;
    ctx.report["headline"]["lambda_hat"] = eig.lambda_est;
    const bool failed = trace.status == EvolutionStatus::SolverFailure;
    ctx.report["status"] = failed ? "solver-failure" : "ok";
    return failed ? exit_code::solver : exit_code::ok;
}

int run_sweep(const ExperimentConfig& c, RunContext& ctx, const Mesh1D& mesh,
              const WeightSpec& w1, const WeightSpec& w2) {
    const auto eig = minimize_rayleigh(w1, w2, c.physics.p, mesh, solver_options(c));
    const Field f = make_initial(c.initial, mesh);
    const auto sweep = sweep_lambda(f, evolution_config(c), w1, w2, mesh, c.physics.lambda_lo,
                                    c.physics.lambda_hi, c.physics.bisection_steps,
                                    eig.lambda_est);
    std::ostringstream rows;
    rows.precision(17);
    rows << "lambda,grew,status,terminal_over_initial\n";
    for (std::size_t k = 0; k < sweep.runs.size(); ++k) {
        const auto& run = sweep.runs[k];
        rows << run.lambda << "," << (run.grew ? 1 : 0) << "," << to_string(run.trace.status)
             << "," << run.trace.l2sq.back() / run.trace.l2sq.front() << "\n";
        std::ostringstream name;
        name << "trace_" << k << ".csv";
        write_trace_csv((ctx.out / name.str()).string(), run.trace);
    }
    write_text_file((ctx.out / "sweep.csv").string(), rows.str());
    ctx.report["headline"] = {{"lambda_crit_est", sweep.lambda_crit},
                              {"bracket_lo", sweep.lo},
                              {"bracket_hi", sweep.hi},
                              {"lambda_hat", eig.lambda_est},
                              {"crit_over_hat", sweep.lambda_crit / eig.lambda_est},
                              {"runs", sweep.runs.size()}};
    ctx.report["status"] = "ok";
    return exit_code::ok;
}

int run_truncation_study(const ExperimentConfig& c, RunContext& ctx, const Mesh1D& mesh,
                         const WeightSpec& w1, const WeightSpec& w2) {
    const auto eig = minimize_rayleigh(w1, w2, c.physics.p, mesh, solver_options(c));
    const Field f = make_initial(c.initial, mesh);
    const auto family = truncation_family_study(f, c.physics.lambda, c.physics.m_list,
                                                evolution_config(c), w1, w2, mesh,
                                                eig.lambda_est);
    json jtraces = json::array();
    for (std::size_t k = 0; k < family.traces.size(); ++k) {
        std::ostringstream name;
        name << "trace_m" << k << ".csv";
        write_trace_csv((ctx.out / name.str()).string(), family.traces[k]);
        json t = trace_summary(family.traces[k]);
        t["m"] = family.m_list[k];
        jtraces.push_back(t);
    }
    std::ostringstream cmp;
    cmp.precision(17);
    cmp << "m_lo,m_hi,t,min_node_diff\n";
    double family_min = std::numeric_limits<double>::infinity();
    for (const auto& comparison : family.comparisons) {
        for (std::size_t i = 0; i < comparison.times.size(); ++i) {
            cmp << comparison.m_lo << "," << comparison.m_hi << "," << comparison.times[i] << ","
                << comparison.min_node_diff[i] << "\n";
            family_min = std::min(family_min, comparison.min_node_diff[i]);
        }
    }
    write_text_file((ctx.out / "comparison.csv").string(), cmp.str());
    ctx.report["headline"] = {{"traces", jtraces},
                              {"lambda_hat", eig.lambda_est},
                              {"min_consecutive_difference",
                               std::isfinite(family_min) ? json(family_min) : json(nullptr)}};
    ctx.report["status"] = "ok";
    return exit_code::ok;
}

}  // namespace

int run_experiment(ExperimentConfig config, const std::string& out_dir_override,
                   std::optional<std::uint64_t> seed_override) {
    if (!out_dir_override.empty()) config.io.out_dir = out_dir_override;
    if (seed_override) config.solver.seed = *seed_override;

    RunContext ctx;
    ctx.out = config.io.out_dir;
    std::filesystem::create_directories(ctx.out);
    ctx.report["command"] = config.command;
    ctx.report["config"] = to_json(config);

    auto fail = [&](const std::string& category, const std::string& message, int code) {
        ctx.report["status"] = "error";
        ctx.report["error"] = {{"category", category}, {"message", message}};
        ctx.flush();
        return code;
    };

    try {
        validate(config);
        const Mesh1D mesh = make_mesh(config.mesh);
        const WeightSpec w1 = make_weight(config.omega1, config.mesh);
        const WeightSpec w2 = make_weight(config.omega2, config.mesh);

        int code = exit_code::ok;
        if (config.command == "check-weights")
            code = run_check_weights(config, ctx, mesh, w1, w2);
        else if (config.command == "eigen")
            code = run_eigen(config, ctx, mesh, w1, w2);
        else if (config.command == "eigen-study")
            code = run_eigen_study(config, ctx, mesh, w1, w2);
        else if (config.command == "evolve")
            code = run_evolve(config, ctx, mesh, w1, w2);
        else if (config.command == "sweep")
            code = run_sweep(config, ctx, mesh, w1, w2);
        else if (config.command == "truncation-study")
            code = run_truncation_study(config, ctx, mesh, w1, w2);
        else
            return fail("parse", "unknown command: " + config.command, exit_code::parse);
        ctx.flush();
        return code;
    } catch (const bracket_error& e) {
        ctx.report["error_detail"] = {{"lo_status", e.lo_status}, {"hi_status", e.hi_status}};
        return fail("bracket", e.what(), exit_code::precondition);
    } catch (const std::invalid_argument& e) {
        return fail("precondition", e.what(), exit_code::precondition);
    } catch (const std::domain_error& e) {
        return fail("precondition", e.what(), exit_code::precondition);
    } catch (const std::exception& e) {
        return fail("solver", e.what(), exit_code::solver);
    }
}

}  // namespace wplap
