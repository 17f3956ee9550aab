#include "wplap/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wplap/weights.hpp"

namespace wplap {

Mesh1D::Mesh1D(std::vector<double> nodes, Metric metric, int dim, bool dirichlet_left,
               bool dirichlet_right, double grading)
    : nodes_(std::move(nodes)),
      metric_(metric),
      dim_(dim),
      dirichlet_left_(dirichlet_left),
      dirichlet_right_(dirichlet_right),
      grading_(grading) {
    if (nodes_.size() < 3) throw std::invalid_argument("mesh needs at least 2 elements");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw std::invalid_argument("mesh nodes must be strictly increasing");
    if (metric_ == Metric::Radial) {
        if (dim_ < 1) throw std::invalid_argument("radial metric needs dimension >= 1");
        if (nodes_.front() < 0.0)
            throw std::invalid_argument("radial mesh needs a nonnegative left endpoint");
        if (nodes_.front() == 0.0 && dirichlet_left_)
            throw std::invalid_argument("the origin of a radial mesh carries no Dirichlet flag");
    }
}

double Mesh1D::metric_factor(double x) const {
    if (metric_ == Metric::Interval || dim_ == 1) return 1.0;
    return std::pow(x, dim_ - 1);
}

Mesh1D build_mesh(double a, double b, std::size_t n, double grading, Metric metric, int dim) {
    if (!(a < b)) throw std::invalid_argument("build_mesh requires a < b");
    if (n < 2) throw std::invalid_argument("build_mesh requires n >= 2");
    if (!(grading >= 1.0)) throw std::invalid_argument("build_mesh requires grading >= 1");

    std::vector<double> nodes(n + 1);
    nodes[0] = a;
    for (std::size_t i = 1; i < n; ++i)
        nodes[i] = a + (b - a) * std::pow(static_cast<double>(i) / static_cast<double>(n), grading);
    nodes[n] = b;

    const bool dir_left = !(metric == Metric::Radial && a == 0.0);
    return Mesh1D(std::move(nodes), metric, dim, dir_left, true, grading);
}

double Field::max_abs() const {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
}

Field zero_field(const Mesh1D& mesh) {
    Field u;
    u.values.assign(mesh.node_count(), 0.0);
    return u;
}

Field make_field(const Mesh1D& mesh, const std::function<double(double)>& f) {
    Field u;
    u.values.resize(mesh.node_count());
    for (std::size_t i = 0; i < mesh.node_count(); ++i) u.values[i] = f(mesh.node(i));
    pin_dirichlet(u, mesh);
    return u;
}

Field bump_field(const Mesh1D& mesh, double amplitude) {
    const double a = mesh.a(), len = mesh.b() - mesh.a();
    const bool left = mesh.dirichlet_left(), right = mesh.dirichlet_right();
    return make_field(mesh, [=](double x) {
        const double s = (x - a) / len;
        double shape = 1.0;
        if (left && right)
            shape = std::sin(std::numbers::pi * s);
        else if (right)
            shape = std::cos(0.5 * std::numbers::pi * s);
        else if (left)
            shape = std::sin(0.5 * std::numbers::pi * s);
        return amplitude * shape;
    });
}

void pin_dirichlet(Field& u, const Mesh1D& mesh) {
    if (u.values.size() != mesh.node_count())
        throw std::invalid_argument("field length does not match the mesh");
    if (mesh.dirichlet_left()) u.values.front() = 0.0;
    if (mesh.dirichlet_right()) u.values.back() = 0.0;
}

void validate_field(const Field& u, const Mesh1D& mesh) {
    if (u.values.size() != mesh.node_count())
        throw std::invalid_argument("field length does not match the mesh");
    for (double v : u.values)
        if (!std::isfinite(v)) throw std::invalid_argument("field carries non-finite values");
    if (mesh.dirichlet_left() && u.values.front() != 0.0)
        throw std::invalid_argument("field violates the left Dirichlet pinning");
    if (mesh.dirichlet_right() && u.values.back() != 0.0)
        throw std::invalid_argument("field violates the right Dirichlet pinning");
}

std::vector<double> gradient(const Field& u, const Mesh1D& mesh) {
    if (u.values.size() != mesh.node_count())
        throw std::invalid_argument("field length does not match the mesh");
    std::vector<double> g(mesh.element_count());
    for (std::size_t e = 0; e < g.size(); ++e)
        g[e] = (u.values[e + 1] - u.values[e]) / mesh.h(e);
    return g;
}

double integrate(std::span<const double> cell_values, const WeightSpec& w, const Mesh1D& mesh) {
    if (cell_values.size() != mesh.element_count())
        throw std::invalid_argument("integrand length does not match the element count");
    double sum = 0.0;
    for (std::size_t e = 0; e < cell_values.size(); ++e) {
        const double mid = mesh.midpoint(e);
        sum += cell_values[e] * w(mid) * mesh.h(e) * mesh.metric_factor(mid);
    }
    return sum;
}

double nodal_integrate(std::span<const double> node_values, const WeightSpec& w,
                       const Mesh1D& mesh) {
    if (node_values.size() != mesh.node_count())
        throw std::invalid_argument("integrand length does not match the node count");
    double sum = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double mid = mesh.midpoint(e);
        const double g_mid = 0.5 * (node_values[e] + node_values[e + 1]);
        sum += g_mid * w(mid) * mesh.h(e) * mesh.metric_factor(mid);
    }
    return sum;
}

std::vector<double> lumped_metric_mass(const Mesh1D& mesh) {
    std::vector<double> ml(mesh.node_count(), 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double mid = mesh.midpoint(e);
        const double c = 0.5 * mesh.h(e) * mesh.metric_factor(mid);
        ml[e] += c;
        ml[e + 1] += c;
    }
    return ml;
}

std::vector<double> lumped_weighted_mass(const WeightSpec& w, const Mesh1D& mesh) {
    std::vector<double> ml(mesh.node_count(), 0.0);
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double mid = mesh.midpoint(e);
        const double c = 0.5 * w(mid) * mesh.h(e) * mesh.metric_factor(mid);
        ml[e] += c;
        ml[e + 1] += c;
    }
    return ml;
}

}  // namespace wplap
