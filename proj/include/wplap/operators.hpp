#pragma once

#include <optional>

#include "wplap/mesh.hpp"
#include "wplap/weights.hpp"

namespace wplap {

/// The three energies entering the Hardy quotient, plus the plain L^2 norm.
/// quotient is present iff mass > 0.
struct EnergyBreakdown {
    double dirichlet = 0.0;  // ∫ ω₂ |∇u|^p
    double mass = 0.0;       // ∫ ω₁ |u|^p
    double l2sq = 0.0;       // ∫ u²
    std::optional<double> quotient;
};

double dirichlet_energy(const Field& u, const WeightSpec& omega2, double p, const Mesh1D& mesh);
double mass_energy(const Field& u, const WeightSpec& omega1, double p, const Mesh1D& mesh);
double l2_norm_sq(const Field& u, const Mesh1D& mesh);

EnergyBreakdown energy_breakdown(const Field& u, const WeightSpec& omega1,
                                 const WeightSpec& omega2, double p, const Mesh1D& mesh);

/// Weak-form action of the weighted p-Laplacian in its positive-definite
/// sign convention: residual_j = <-div(ω₂ |∇u|^{p-2} ∇u), φ_j> with the
/// gradient regularized as (|∇u|² + ε²)^{(p-2)/2}.  Rows at Dirichlet
/// nodes are identities on the boundary value.  Requires p >= 2.
///
/// For every field respecting the Dirichlet pinning and ε = 0,
/// <apply_plap(u), u> equals dirichlet_energy(u).
Field apply_plap(const Field& u, const WeightSpec& omega2, double p, double eps, const Mesh1D& mesh);

/// <L_λ u, u> = dirichlet_energy(u) - λ mass_energy(u).
double pairing_L_lambda(const Field& u, double lambda, const WeightSpec& omega1,
                        const WeightSpec& omega2, double p, const Mesh1D& mesh);

}  // namespace wplap
