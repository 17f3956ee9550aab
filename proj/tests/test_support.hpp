#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "wplap/mesh.hpp"

namespace wplap::testing {

/// Random field with entries uniform in [-1, 1], pinned at Dirichlet nodes.
inline Field random_field(const Mesh1D& mesh, std::mt19937_64& rng, double amplitude = 1.0) {
    std::uniform_real_distribution<double> dist(-amplitude, amplitude);
    Field u;
    u.values.resize(mesh.node_count());
    for (auto& v : u.values) v = dist(rng);
    pin_dirichlet(u, mesh);
    return u;
}

/// Smooth random field: a few random Fourier bump modes.  Better behaved
/// than white noise for derivative checks.
inline Field random_smooth_field(const Mesh1D& mesh, std::mt19937_64& rng, int modes = 4) {
    std::uniform_real_distribution<double> amp(-1.0, 1.0);
    std::vector<double> coeff(static_cast<std::size_t>(modes));
    for (auto& c : coeff) c = amp(rng);
    const double a = mesh.a(), len = mesh.b() - mesh.a();
    Field u;
    u.values.resize(mesh.node_count());
    for (std::size_t i = 0; i < mesh.node_count(); ++i) {
        const double s = (mesh.node(i) - a) / len;
        double v = 0.0;
        for (int k = 0; k < modes; ++k)
            v += coeff[static_cast<std::size_t>(k)] * std::sin((k + 1) * 3.14159265358979323846 * s);
        u.values[i] = v;
    }
    pin_dirichlet(u, mesh);
    return u;
}

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

}  // namespace wplap::testing
