#include "wplap/parabolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wplap {

void validate(const EvolutionConfig& cfg) {
    if (!(cfg.p >= 2.0)) throw std::invalid_argument("evolution requires p >= 2");
    if (!(cfg.lambda >= 0.0)) throw std::invalid_argument("lambda must be nonnegative");
    if (!(cfg.dt > 0.0)) throw std::invalid_argument("dt must be positive");
    if (!(cfg.T >= cfg.dt)) throw std::invalid_argument("T must be at least dt");
    if (!(cfg.dt_min > 0.0 && cfg.dt_min <= cfg.dt))
        throw std::invalid_argument("dt_min must satisfy 0 < dt_min <= dt");
    if (!(cfg.picard_tol > 0.0)) throw std::invalid_argument("picard_tol must be positive");
    if (cfg.picard_max < 1) throw std::invalid_argument("picard_max must be at least 1");
    if (!(cfg.blowup_factor > 1.0)) throw std::invalid_argument("blowup_factor must exceed 1");
    if (cfg.m && !(*cfg.m > 0.0)) throw std::invalid_argument("truncation level must be positive");
    if (cfg.eps && !(*cfg.eps >= 0.0)) throw std::invalid_argument("eps must be nonnegative");
}

std::string to_string(EvolutionStatus s) {
    switch (s) {
        case EvolutionStatus::Global: return "global";
        case EvolutionStatus::BlowUp: return "blow-up";
        case EvolutionStatus::SolverFailure: return "solver-failure";
    }
    return "unknown";
}

bracket_error::bracket_error(std::string lo, std::string hi)
    : std::runtime_error("sweep bracket precondition violated: lower endpoint " + lo +
                         ", upper endpoint " + hi),
      lo_status(std::move(lo)),
      hi_status(std::move(hi)) {}

namespace {

// Midpoint weight samples and lumped masses for one evolution run.  The
// energy sums mirror integrate / nodal_integrate element by element.
struct Workspace {
    double p, lambda, eps;
    int picard_max;
    double picard_tol;
    std::vector<double> h, metric_mid, w2_mid, wm_mid;  // wm = truncated reaction weight
    std::vector<double> ml, mlw;                        // lumped metric / reaction masses
    std::vector<char> dirichlet;
    // scratch for the tridiagonal Picard solves
    std::vector<double> diag, sub, rhs, piv, ulag, unew;

    Workspace(const EvolutionConfig& cfg, const WeightSpec& omega1, const WeightSpec& omega2,
              const Mesh1D& mesh) {
        p = cfg.p;
        lambda = cfg.lambda;
        eps = cfg.eps ? *cfg.eps : 1e-8 / (mesh.b() - mesh.a());
        picard_max = cfg.picard_max;
        picard_tol = cfg.picard_tol;

        const WeightSpec reaction = cfg.m ? truncate_weight(omega1, *cfg.m) : omega1;
        const std::size_t n = mesh.element_count();
        h.resize(n);
        metric_mid.resize(n);
        w2_mid.resize(n);
        wm_mid.resize(n);
        for (std::size_t e = 0; e < n; ++e) {
            const double mid = mesh.midpoint(e);
            h[e] = mesh.h(e);
            metric_mid[e] = mesh.metric_factor(mid);
            w2_mid[e] = omega2(mid);
            wm_mid[e] = reaction(mid);
        }
        ml.assign(n + 1, 0.0);
        mlw.assign(n + 1, 0.0);
        for (std::size_t e = 0; e < n; ++e) {
            ml[e] += 0.5 * h[e] * metric_mid[e];
            ml[e + 1] += 0.5 * h[e] * metric_mid[e];
            const double c = 0.5 * wm_mid[e] * h[e] * metric_mid[e];
            mlw[e] += c;
            mlw[e + 1] += c;
        }
        dirichlet.resize(n + 1);
        for (std::size_t j = 0; j <= n; ++j) dirichlet[j] = mesh.dirichlet(j) ? 1 : 0;
        diag.resize(n + 1);
        sub.resize(n);
        rhs.resize(n + 1);
        piv.resize(n + 1);
        ulag.resize(n + 1);
        unew.resize(n + 1);
    }

    double l2sq(const std::vector<double>& u) const {
        double sum = 0.0;
        for (std::size_t e = 0; e < h.size(); ++e)
            sum += 0.5 * (u[e] * u[e] + u[e + 1] * u[e + 1]) * 1.0 * h[e] * metric_mid[e];
        return sum;
    }

    double dirichlet_energy(const std::vector<double>& u) const {
        double sum = 0.0;
        for (std::size_t e = 0; e < h.size(); ++e) {
            const double g = (u[e + 1] - u[e]) / h[e];
            sum += std::pow(std::abs(g), p) * w2_mid[e] * h[e] * metric_mid[e];
        }
        return sum;
    }

    double mass_energy(const std::vector<double>& u) const {
        double sum = 0.0;
        for (std::size_t e = 0; e < h.size(); ++e) {
            const double ga = std::pow(std::abs(u[e]), p);
            const double gb = std::pow(std::abs(u[e + 1]), p);
            sum += 0.5 * (ga + gb) * wm_mid[e] * h[e] * metric_mid[e];
        }
        return sum;
    }

    // Backward-Euler step by Picard lagging.  Each inner system is
    // symmetric tridiagonal; the LDL^T factorization doubles as the
    // positive-definiteness check (a nonpositive pivot aborts the step).
    bool picard_step(const std::vector<double>& u_n, double dt, std::vector<double>& out,
                     int& iterations) {
        const std::size_t nn = u_n.size();
        ulag = u_n;
        for (iterations = 1; iterations <= picard_max; ++iterations) {
            for (std::size_t j = 0; j < nn; ++j) {
                const double lag = std::abs(ulag[j]);
                diag[j] = ml[j] / dt - lambda * mlw[j] * std::pow(lag, p - 2.0);
                rhs[j] = ml[j] * u_n[j] / dt;
            }
            for (std::size_t e = 0; e + 1 < nn; ++e) {
                const double g = (ulag[e + 1] - ulag[e]) / h[e];
                const double cond =
                    w2_mid[e] * metric_mid[e] * std::pow(g * g + eps * eps, 0.5 * (p - 2.0));
                const double k = cond / h[e];
                diag[e] += k;
                diag[e + 1] += k;
                sub[e] = -k;
            }
            for (std::size_t j = 0; j < nn; ++j) {
                if (!dirichlet[j]) continue;
                diag[j] = 1.0;
                rhs[j] = 0.0;
                if (j > 0) sub[j - 1] = 0.0;
                if (j + 1 < nn) sub[j] = 0.0;
            }

            // LDL^T factorization and solve
            double d = diag[0];
            if (!(d > 0.0) || !std::isfinite(d)) return false;
            piv[0] = d;
            unew[0] = rhs[0];
            for (std::size_t j = 1; j < nn; ++j) {
                const double l = sub[j - 1] / piv[j - 1];
                d = diag[j] - sub[j - 1] * l;
                if (!(d > 0.0) || !std::isfinite(d)) return false;
                piv[j] = d;
                unew[j] = rhs[j] - l * unew[j - 1];
                sub[j - 1] = l;  // store the multiplier
            }
            unew[nn - 1] /= piv[nn - 1];
            for (std::size_t j = nn - 1; j-- > 0;)
                unew[j] = unew[j] / piv[j] - sub[j] * unew[j + 1];

            double change = 0.0, scale = 0.0, finite = 1.0;
            for (std::size_t j = 0; j < nn; ++j) {
                if (!std::isfinite(unew[j])) finite = 0.0;
                change = std::max(change, std::abs(unew[j] - ulag[j]));
                scale = std::max(scale, std::abs(unew[j]));
            }
            if (finite == 0.0) return false;
            std::swap(ulag, unew);
            if (change <= picard_tol * (scale + std::numeric_limits<double>::min())) {
                out = ulag;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

StepOutcome step_implicit(const Field& u_n, double dt, const EvolutionConfig& cfg,
                          const WeightSpec& omega1, const WeightSpec& omega2, const Mesh1D& mesh) {
    validate(cfg);
    validate_field(u_n, mesh);
    if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
    Workspace ws(cfg, omega1, omega2, mesh);
    StepOutcome out;
    out.u = zero_field(mesh);
    out.converged = ws.picard_step(u_n.values, dt, out.u.values, out.picard_iterations);
    if (!out.converged) out.u = u_n;
    return out;
}

EvolutionTrace evolve(const Field& f, const EvolutionConfig& cfg, const WeightSpec& omega1,
                      const WeightSpec& omega2, const Mesh1D& mesh,
                      std::optional<double> hardy_estimate, bool record_snapshots) {
    validate(cfg);
    validate_field(f, mesh);
    Workspace ws(cfg, omega1, omega2, mesh);

    EvolutionTrace trace;
    trace.hardy_estimate = hardy_estimate;

    std::vector<double> u = f.values;
    auto record = [&](double t) {
        trace.times.push_back(t);
        trace.l2sq.push_back(ws.l2sq(u));
        trace.dirichlet.push_back(ws.dirichlet_energy(u));
        trace.mass.push_back(ws.mass_energy(u));
        if (record_snapshots) trace.snapshots.push_back(Field{u});
    };
    record(0.0);
    const double l20 = trace.l2sq.front();
    trace.energy_budget = 0.5 * l20;

    double t = 0.0, dt = cfg.dt;
    std::vector<double> next(u.size());
    trace.status = EvolutionStatus::Global;
    while (t < cfg.T * (1.0 - 1e-12)) {
        const double dt_step = std::min(dt, cfg.T - t);
        int iters = 0;
        if (!ws.picard_step(u, dt_step, next, iters)) {
            dt *= 0.5;
            if (dt < cfg.dt_min) {
                trace.status = EvolutionStatus::SolverFailure;
                trace.event_time = t;
                break;
            }
            continue;
        }
        u = next;
        t += dt_step;
        record(t);
        trace.dirichlet_time_integral += dt_step * trace.dirichlet.back();
        if (l20 > 0.0 && trace.l2sq.back() >= cfg.blowup_factor * l20) {
            trace.status = EvolutionStatus::BlowUp;
            trace.event_time = t;
            break;
        }
    }

    if (hardy_estimate) {
        trace.energy_residual = 0.5 * trace.l2sq.back() +
                                (1.0 - cfg.lambda / *hardy_estimate) * trace.dirichlet_time_integral -
                                0.5 * l20;
    }
    trace.final_state = Field{std::move(u)};
    return trace;
}

namespace {

std::string endpoint_summary(const EvolutionTrace& trace) {
    const double ratio = trace.l2sq.front() > 0.0 ? trace.l2sq.back() / trace.l2sq.front()
                                                  : std::numeric_limits<double>::quiet_NaN();
    return to_string(trace.status) + " (terminal/initial L2^2 = " + std::to_string(ratio) + ")";
}

}  // namespace

SweepResult sweep_lambda(const Field& f, const EvolutionConfig& cfg, const WeightSpec& omega1,
                         const WeightSpec& omega2, const Mesh1D& mesh, double lambda_lo,
                         double lambda_hi, int bisection_steps,
                         std::optional<double> hardy_estimate) {
    if (!(lambda_lo < lambda_hi)) throw std::invalid_argument("sweep needs lambda_lo < lambda_hi");
    if (bisection_steps < 1) throw std::invalid_argument("sweep needs at least one bisection step");

    auto run_at = [&](double lambda) {
        EvolutionConfig c = cfg;
        c.lambda = lambda;
        SweepRun run;
        run.lambda = lambda;
        run.trace = evolve(f, c, omega1, omega2, mesh, hardy_estimate);
        run.grew = !run.trace.decayed();
        return run;
    };

    SweepResult result;
    result.runs.push_back(run_at(lambda_lo));
    result.runs.push_back(run_at(lambda_hi));
    const bool lo_ok = !result.runs[0].grew;
    const bool hi_ok = result.runs[1].grew;
    if (!lo_ok || !hi_ok)
        throw bracket_error(endpoint_summary(result.runs[0].trace),
                            endpoint_summary(result.runs[1].trace));

    double lo = lambda_lo, hi = lambda_hi;
    for (int step = 0; step < bisection_steps; ++step) {
        const double mid = 0.5 * (lo + hi);
        result.runs.push_back(run_at(mid));
        if (result.runs.back().grew)
            hi = mid;
        else
            lo = mid;
    }
    result.lo = lo;
    result.hi = hi;
    result.lambda_crit = 0.5 * (lo + hi);
    return result;
}

FamilyStudyResult truncation_family_study(const Field& f, double lambda,
                                          const std::vector<double>& m_list,
                                          const EvolutionConfig& cfg, const WeightSpec& omega1,
                                          const WeightSpec& omega2, const Mesh1D& mesh,
                                          std::optional<double> hardy_estimate) {
    if (m_list.empty()) throw std::invalid_argument("family study needs at least one level");
    FamilyStudyResult result;
    result.m_list = m_list;
    for (double m : m_list) {
        EvolutionConfig c = cfg;
        c.lambda = lambda;
        c.m = m;
        result.traces.push_back(evolve(f, c, omega1, omega2, mesh, hardy_estimate, true));
    }

    const double time_tol = 1e-9 * std::max(1.0, cfg.T);
    for (std::size_t k = 0; k + 1 < result.traces.size(); ++k) {
        const auto& lo = result.traces[k];
        const auto& hi = result.traces[k + 1];
        FamilyComparison cmp;
        cmp.m_lo = m_list[k];
        cmp.m_hi = m_list[k + 1];
        std::size_t i = 0, j = 0;
        while (i < lo.times.size() && j < hi.times.size()) {
            const double ti = lo.times[i], tj = hi.times[j];
            if (std::abs(ti - tj) <= time_tol) {
                double min_diff = std::numeric_limits<double>::infinity();
                const auto& a = lo.snapshots[i].values;
                const auto& b = hi.snapshots[j].values;
                for (std::size_t node = 0; node < a.size(); ++node)
                    min_diff = std::min(min_diff, b[node] - a[node]);
                cmp.times.push_back(ti);
                cmp.min_node_diff.push_back(min_diff);
                ++i;
                ++j;
            } else if (ti < tj) {
                ++i;
            } else {
                ++j;
            }
        }
        result.comparisons.push_back(std::move(cmp));
    }
    return result;
}

}  // namespace wplap
