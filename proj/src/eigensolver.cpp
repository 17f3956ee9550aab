#include "wplap/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "wplap/operators.hpp"

namespace wplap {

namespace {

// Midpoint samples of both weights plus mesh geometry.  The energy
// evaluations below follow the exact arithmetic of integrate /
// nodal_integrate so that reported quotients match the public operators
// bit for bit.
struct QuotientCache {
    double p;
    std::vector<double> h, metric_mid, w1_mid, w2_mid;
    std::vector<double> lumped_w1;
    std::vector<char> dirichlet;

    QuotientCache(const WeightSpec& w1, const WeightSpec& w2, double p_, const Mesh1D& mesh)
        : p(p_) {
        const std::size_t n = mesh.element_count();
        h.resize(n);
        metric_mid.resize(n);
        w1_mid.resize(n);
        w2_mid.resize(n);
        for (std::size_t e = 0; e < n; ++e) {
            const double mid = mesh.midpoint(e);
            h[e] = mesh.h(e);
            metric_mid[e] = mesh.metric_factor(mid);
            w1_mid[e] = w1(mid);
            w2_mid[e] = w2(mid);
        }
        lumped_w1.assign(n + 1, 0.0);
        for (std::size_t e = 0; e < n; ++e) {
            const double c = 0.5 * w1_mid[e] * h[e] * metric_mid[e];
            lumped_w1[e] += c;
            lumped_w1[e + 1] += c;
        }
        dirichlet.resize(n + 1);
        for (std::size_t j = 0; j <= n; ++j) dirichlet[j] = mesh.dirichlet(j) ? 1 : 0;
    }

    double dirichlet_energy(const Field& u) const {
        double sum = 0.0;
        for (std::size_t e = 0; e < h.size(); ++e) {
            const double g = (u.values[e + 1] - u.values[e]) / h[e];
            sum += std::pow(std::abs(g), p) * w2_mid[e] * h[e] * metric_mid[e];
        }
        return sum;
    }

    double mass_energy(const Field& u) const {
        double sum = 0.0;
        for (std::size_t e = 0; e < h.size(); ++e) {
            const double ga = std::pow(std::abs(u.values[e]), p);
            const double gb = std::pow(std::abs(u.values[e + 1]), p);
            sum += 0.5 * (ga + gb) * w1_mid[e] * h[e] * metric_mid[e];
        }
        return sum;
    }

    // Gradient of log(dirichlet) - log(mass) at u, zero on Dirichlet nodes;
    // `diag` receives a positive curvature-scaled diagonal for Jacobi
    // preconditioning.  Both outputs are invariant under joint weight
    // scaling, and grad/diag scales like u itself.
    void log_quotient_gradient(const Field& u, double dir, double mass,
                               std::vector<double>& grad, std::vector<double>& diag) const {
        grad.assign(u.values.size(), 0.0);
        diag.assign(u.values.size(), 0.0);
        for (std::size_t e = 0; e < h.size(); ++e) {
            const double g = (u.values[e + 1] - u.values[e]) / h[e];
            const double cond = w2_mid[e] * std::pow(g * g, 0.5 * (p - 2.0)) * metric_mid[e];
            const double flux = cond * g;
            grad[e] -= flux;
            grad[e + 1] += flux;
            diag[e] += cond / h[e];
            diag[e + 1] += cond / h[e];
        }
        double diag_max = 0.0;
        for (std::size_t j = 0; j < grad.size(); ++j) {
            if (dirichlet[j]) {
                grad[j] = 0.0;
                diag[j] = 0.0;
                continue;
            }
            const double uj = u.values[j];
            const double lagged = lumped_w1[j] * std::pow(std::abs(uj), p - 2.0);
            grad[j] = p * (grad[j] / dir - lagged * uj / mass);
            diag[j] = p * (diag[j] / dir + (p - 1.0) * lagged / mass);
            diag_max = std::max(diag_max, diag[j]);
        }
        // guard flat spots so the preconditioned direction stays defined
        for (std::size_t j = 0; j < diag.size(); ++j)
            if (!dirichlet[j] && !(diag[j] > diag_max * 1e-14))
                diag[j] = diag_max > 0.0 ? diag_max * 1e-14 : 1.0;
    }
};

Field seeded_initial_guess(const Mesh1D& mesh, const RayleighOptions& opts) {
    Field u = bump_field(mesh, 1.0);
    std::mt19937_64 rng(opts.seed);
    std::uniform_real_distribution<double> noise(-opts.noise_amplitude, opts.noise_amplitude);
    for (std::size_t j = 0; j < u.values.size(); ++j) {
        const double nj = noise(rng);
        if (!mesh.dirichlet(j)) u.values[j] += nj;
    }
    return u;
}

}  // namespace

RayleighReport minimize_rayleigh(const WeightSpec& omega1, const WeightSpec& omega2, double p,
                                 const Mesh1D& mesh, const RayleighOptions& opts,
                                 const Field* warm_start) {
    if (!(p >= 2.0)) throw std::invalid_argument("minimize_rayleigh requires p >= 2");
    const QuotientCache cache(omega1, omega2, p, mesh);

    double w1_total = 0.0;
    for (double v : cache.w1_mid) w1_total += v;
    if (!(w1_total > 0.0))
        throw std::invalid_argument("omega1 vanishes at every mesh midpoint");

    Field u = warm_start ? *warm_start : seeded_initial_guess(mesh, opts);
    if (u.values.size() != mesh.node_count())
        throw std::invalid_argument("warm start length does not match the mesh");
    pin_dirichlet(u, mesh);

    const double mass0 = cache.mass_energy(u);
    if (!(mass0 > 0.0) || !std::isfinite(mass0))
        throw std::runtime_error("initialization error: initial guess has zero mass energy");
    const double gamma0 = std::pow(mass0, 1.0 / p);
    for (double& v : u.values) v /= gamma0;

    double dir = cache.dirichlet_energy(u);
    double mass = cache.mass_energy(u);
    if (!std::isfinite(dir) || !std::isfinite(mass))
        throw std::runtime_error("initialization error: non-finite energy at the initial guess");

    RayleighReport report;
    report.p = p;
    report.truncation = omega1.truncation_level();

    double q = dir / mass;
    report.history.push_back(q);

    // Jacobi-preconditioned descent with Armijo backtracking.  Direction,
    // slope, and acceptance test are all ratios of energies, so the whole
    // iteration is invariant under joint weight scaling and under uniform
    // rescaling of u.
    double alpha = 1.0;
    int stall = 0;
    bool converged = false;
    Field trial = u;
    std::vector<double> grad, diag, direction(u.values.size(), 0.0);

    for (int iter = 0; iter < opts.max_iters && !converged; ++iter) {
        cache.log_quotient_gradient(u, dir, mass, grad, diag);
        double slope = 0.0, dir_max = 0.0;
        for (std::size_t j = 0; j < grad.size(); ++j) {
            direction[j] = cache.dirichlet[j] ? 0.0 : grad[j] / diag[j];
            slope += grad[j] * direction[j];  // -dF/dalpha, nonnegative
            dir_max = std::max(dir_max, std::abs(direction[j]));
        }

        double q_next = q;
        if (dir_max > 0.0 && std::isfinite(dir_max) && std::isfinite(slope)) {
            alpha = std::min(alpha * 2.0, 4.0);
            bool accepted = false;
            while (alpha >= 1e-20) {
                for (std::size_t j = 0; j < u.values.size(); ++j)
                    trial.values[j] =
                        cache.dirichlet[j] ? 0.0 : u.values[j] - alpha * direction[j];
                const double dir_t = cache.dirichlet_energy(trial);
                const double mass_t = cache.mass_energy(trial);
                if (std::isfinite(dir_t) && std::isfinite(mass_t) && mass_t > 0.0 && dir_t > 0.0) {
                    const double q_t = dir_t / mass_t;
                    // Sufficient decrease checked on the quotient itself;
                    // the accepted value can never exceed the previous one.
                    if (std::isfinite(q_t) &&
                        q_t <= q * (1.0 - opts.armijo_slope * alpha * slope)) {
                        const double gamma = std::pow(mass_t, 1.0 / p);
                        for (std::size_t j = 0; j < u.values.size(); ++j)
                            u.values[j] = trial.values[j] / gamma;
                        dir = q_t;
                        mass = 1.0;
                        q_next = q_t;
                        accepted = true;
                        break;
                    }
                }
                alpha *= opts.armijo_shrink;
            }
            if (!accepted) alpha = 1.0;
        }

        report.history.push_back(q_next);
        const double rel_decrease = (q - q_next) / q;
        stall = (rel_decrease < opts.tol) ? stall + 1 : 0;
        q = q_next;
        if (stall >= 5) converged = true;
    }

    report.iterations = static_cast<int>(report.history.size()) - 1;
    report.converged = converged;
    if (!converged && report.note.empty())
        report.note = "iteration budget exhausted before the quotient settled";

    // First-eigenfunction positivity: the minimizer should be sign-definite
    // on the non-Dirichlet nodes.
    double interior_min = 0.0, interior_max = 0.0;
    bool first = true;
    for (std::size_t j = 0; j < u.values.size(); ++j) {
        if (cache.dirichlet[j]) continue;
        const double v = u.values[j];
        interior_min = first ? v : std::min(interior_min, v);
        interior_max = first ? v : std::max(interior_max, v);
        first = false;
    }
    const bool sign_definite =
        (interior_min > 0.0 && interior_max > 0.0) || (interior_min < 0.0 && interior_max < 0.0);
    if (!sign_definite) {
        report.converged = false;
        report.note = "local minimum suspected: minimizer is not sign-definite on interior nodes";
    }

    report.minimizer = std::move(u);
    report.lambda_est = cache.dirichlet_energy(report.minimizer) / cache.mass_energy(report.minimizer);
    return report;
}

EigenStudyResult truncated_eigen_study(const WeightSpec& omega1, const WeightSpec& omega2,
                                       double p, const Mesh1D& mesh,
                                       const std::vector<double>& m_list,
                                       const RayleighOptions& opts) {
    if (m_list.empty()) throw std::invalid_argument("truncation study needs at least one level");
    for (std::size_t k = 0; k < m_list.size(); ++k) {
        if (!(m_list[k] > 0.0)) throw std::invalid_argument("truncation levels must be positive");
        if (k > 0 && !(m_list[k - 1] < m_list[k]))
            throw std::invalid_argument("truncation levels must be strictly increasing");
    }

    EigenStudyResult result;
    Field previous;
    for (std::size_t k = 0; k < m_list.size(); ++k) {
        const WeightSpec truncated = truncate_weight(omega1, m_list[k]);
        const RayleighReport rep = minimize_rayleigh(truncated, omega2, p, mesh, opts,
                                                     k == 0 ? nullptr : &previous);
        result.rows.push_back({m_list[k], rep.lambda_est, rep.iterations, rep.converged});
        previous = rep.minimizer;
    }

    // Untruncated estimate: a fresh run with the same seed, improved when the
    // final truncated minimizer already sits lower against omega1 itself.
    RayleighReport fresh = minimize_rayleigh(omega1, omega2, p, mesh, opts);
    const double carry_quotient = wplap::dirichlet_energy(previous, omega2, p, mesh) /
                                  wplap::mass_energy(previous, omega1, p, mesh);
    if (std::isfinite(carry_quotient) && carry_quotient < fresh.lambda_est) {
        RayleighReport carried;
        carried.lambda_est = carry_quotient;
        carried.minimizer = previous;
        const double gamma = std::pow(wplap::mass_energy(previous, omega1, p, mesh), 1.0 / p);
        for (double& v : carried.minimizer.values) v /= gamma;
        carried.iterations = 0;
        carried.history = {carry_quotient};
        carried.converged = result.rows.back().converged;
        carried.note = "carried from the largest truncation level";
        carried.p = p;
        result.untruncated_report = std::move(carried);
        result.lambda_untruncated = carry_quotient;
    } else {
        result.lambda_untruncated = fresh.lambda_est;
        result.untruncated_report = std::move(fresh);
    }
    return result;
}

}  // namespace wplap
