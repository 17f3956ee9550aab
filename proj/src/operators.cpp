#include "wplap/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace wplap {

double dirichlet_energy(const Field& u, const WeightSpec& omega2, double p, const Mesh1D& mesh) {
    if (!(p > 1.0)) throw std::invalid_argument("dirichlet_energy requires p > 1");
    const auto g = gradient(u, mesh);
    std::vector<double> cell(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) cell[e] = std::pow(std::abs(g[e]), p);
    return integrate(cell, omega2, mesh);
}

double mass_energy(const Field& u, const WeightSpec& omega1, double p, const Mesh1D& mesh) {
    if (!(p > 1.0)) throw std::invalid_argument("mass_energy requires p > 1");
    std::vector<double> nodal(u.values.size());
    for (std::size_t j = 0; j < nodal.size(); ++j) nodal[j] = std::pow(std::abs(u.values[j]), p);
    return nodal_integrate(nodal, omega1, mesh);
}

double l2_norm_sq(const Field& u, const Mesh1D& mesh) {
    std::vector<double> nodal(u.values.size());
    for (std::size_t j = 0; j < nodal.size(); ++j) nodal[j] = u.values[j] * u.values[j];
    return nodal_integrate(nodal, WeightSpec::constant(1.0), mesh);
}

EnergyBreakdown energy_breakdown(const Field& u, const WeightSpec& omega1,
                                 const WeightSpec& omega2, double p, const Mesh1D& mesh) {
    EnergyBreakdown out;
    out.dirichlet = dirichlet_energy(u, omega2, p, mesh);
    out.mass = mass_energy(u, omega1, p, mesh);
    out.l2sq = l2_norm_sq(u, mesh);
    if (out.mass > 0.0) out.quotient = out.dirichlet / out.mass;
    return out;
}

Field apply_plap(const Field& u, const WeightSpec& omega2, double p, double eps,
                 const Mesh1D& mesh) {
    if (!(p >= 2.0)) throw std::invalid_argument("apply_plap requires p >= 2");
    if (!(eps >= 0.0)) throw std::invalid_argument("apply_plap requires eps >= 0");
    const auto g = gradient(u, mesh);

    Field res = zero_field(mesh);
    for (std::size_t e = 0; e < g.size(); ++e) {
        const double mid = mesh.midpoint(e);
        // Metric-weighted flux through element e; the residual is its
        // difference across each node (hat-basis test functions).
        const double flux = omega2(mid) * std::pow(g[e] * g[e] + eps * eps, 0.5 * (p - 2.0)) *
                            g[e] * mesh.metric_factor(mid);
        res.values[e] -= flux;
        res.values[e + 1] += flux;
    }
    for (std::size_t j = 0; j < res.values.size(); ++j)
        if (mesh.dirichlet(j)) res.values[j] = u.values[j];
    return res;
}

double pairing_L_lambda(const Field& u, double lambda, const WeightSpec& omega1,
                        const WeightSpec& omega2, double p, const Mesh1D& mesh) {
    return dirichlet_energy(u, omega2, p, mesh) - lambda * mass_energy(u, omega1, p, mesh);
}

}  // namespace wplap
