#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace wplap {

class WeightSpec;

enum class Metric { Interval, Radial };

/// Graded 1D mesh over [a, b], either a plain interval or the radial
/// reduction of a ball in dimension N (every integrand then carries the
/// metric factor r^{N-1}).  Nodes flagged Dirichlet carry the homogeneous
/// boundary condition; a radial mesh starting at the origin leaves the
/// left node free (symmetry condition at r = 0).
///
/// Immutable after construction.
class Mesh1D {
public:
    Mesh1D(std::vector<double> nodes, Metric metric, int dim,
           bool dirichlet_left, bool dirichlet_right, double grading = 1.0);

    std::size_t element_count() const { return nodes_.size() - 1; }
    std::size_t node_count() const { return nodes_.size(); }
    double node(std::size_t i) const { return nodes_[i]; }
    const std::vector<double>& nodes() const { return nodes_; }
    double h(std::size_t e) const { return nodes_[e + 1] - nodes_[e]; }
    double midpoint(std::size_t e) const { return 0.5 * (nodes_[e] + nodes_[e + 1]); }
    double a() const { return nodes_.front(); }
    double b() const { return nodes_.back(); }

    Metric metric() const { return metric_; }
    int dim() const { return dim_; }
    double grading() const { return grading_; }
    double metric_factor(double x) const;

    bool dirichlet_left() const { return dirichlet_left_; }
    bool dirichlet_right() const { return dirichlet_right_; }
    bool dirichlet(std::size_t node_index) const {
        return (node_index == 0 && dirichlet_left_) ||
               (node_index + 1 == nodes_.size() && dirichlet_right_);
    }

private:
    std::vector<double> nodes_;
    Metric metric_ = Metric::Interval;
    int dim_ = 1;
    bool dirichlet_left_ = true;
    bool dirichlet_right_ = true;
    double grading_ = 1.0;
};

/// Nodes x_i = a + (b-a)(i/n)^grading, graded toward a where the singular
/// weight lives; grading = 1 gives a uniform mesh.
Mesh1D build_mesh(double a, double b, std::size_t n, double grading, Metric metric, int dim = 1);

/// Nodal values of a piecewise-linear function on a mesh.  Valid fields
/// are finite and vanish at Dirichlet nodes.
struct Field {
    std::vector<double> values;

    double max_abs() const;
};

Field zero_field(const Mesh1D& mesh);
Field make_field(const Mesh1D& mesh, const std::function<double(double)>& f);
/// Positive bump vanishing on the Dirichlet part of the boundary
/// (sin-shaped on an interval, cos-shaped on a radial section).
Field bump_field(const Mesh1D& mesh, double amplitude = 1.0);
void pin_dirichlet(Field& u, const Mesh1D& mesh);
void validate_field(const Field& u, const Mesh1D& mesh);

/// Per-element difference quotients (u_{i+1} - u_i)/h_i; exact for the
/// piecewise-linear interpolant.
std::vector<double> gradient(const Field& u, const Mesh1D& mesh);

/// Midpoint-rule quadrature of a per-element integrand against a weight:
/// sum_e g_e w(x_{e+1/2}) h_e metric(x_{e+1/2}).
double integrate(std::span<const double> cell_values, const WeightSpec& w, const Mesh1D& mesh);

/// Midpoint-rule quadrature of a nodal integrand: the linear interpolant
/// of the nodal values is evaluated at element midpoints.
double nodal_integrate(std::span<const double> node_values, const WeightSpec& w, const Mesh1D& mesh);

/// Lumped metric masses: ml_j = sum over adjacent elements of
/// h_e metric(mid_e)/2.  nodal_integrate(g, 1) == sum_j g_j ml_j.
std::vector<double> lumped_metric_mass(const Mesh1D& mesh);
std::vector<double> lumped_weighted_mass(const WeightSpec& w, const Mesh1D& mesh);

}  // namespace wplap
