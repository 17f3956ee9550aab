#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wplap {

class Mesh1D;

enum class WeightKind { Constant, PowerRadial, DistanceBoundary, Tabulated };

/// A nonnegative spatial weight on a 1D domain (interval or radial section).
///
/// Supported shapes: a constant, a power of the radial coordinate |x|^e,
/// a power of the distance to the boundary dist(x,∂Ω)^e, and a tabulated
/// function with linear interpolation.  A weight may carry a truncation
/// level m, in which case evaluation clamps to [-m, m]; truncated weights
/// are finite everywhere, including on the singular set.
///
/// WeightSpec values are immutable after construction and safe to share
/// across threads.
class WeightSpec {
public:
    static WeightSpec constant(double value);
    static WeightSpec power_radial(double exponent);
    static WeightSpec distance_boundary(double exponent, double domain_lo, double domain_hi,
                                        bool radial_domain = false);
    static WeightSpec tabulated(std::vector<double> nodes, std::vector<double> values);

    /// Evaluate at a point of the domain.  Throws std::domain_error when x
    /// lies outside the domain (DistanceBoundary) or the tabulated range.
    /// Untruncated singular weights return +inf in the limit points.
    double operator()(double x) const;

    /// Pointwise truncation min(w, m) (clamp to [-m, m] in general).
    /// Truncating twice keeps the smaller level.
    WeightSpec truncated(double level) const;

    WeightKind kind() const { return kind_; }
    std::optional<double> truncation_level() const { return trunc_; }
    double exponent() const { return exponent_; }
    double value() const { return value_; }
    const std::vector<double>& table_nodes() const { return nodes_; }
    const std::vector<double>& table_values() const { return values_; }
    double domain_lo() const { return lo_; }
    double domain_hi() const { return hi_; }
    bool radial_domain() const { return radial_domain_; }

private:
    WeightSpec() = default;

    WeightKind kind_ = WeightKind::Constant;
    double exponent_ = 0.0;                 // PowerRadial / DistanceBoundary
    double value_ = 0.0;                    // Constant
    std::vector<double> nodes_, values_;    // Tabulated
    double lo_ = 0.0, hi_ = 0.0;            // DistanceBoundary domain
    bool radial_domain_ = false;
    std::optional<double> trunc_;
};

double eval_weight(const WeightSpec& w, double x);
WeightSpec truncate_weight(const WeightSpec& w, double level);

enum class ConditionStatus { Pass, Fail, AnalyticOnly };

struct ConditionEntry {
    std::string condition;   // "W1".."W6"
    ConditionStatus status = ConditionStatus::AnalyticOnly;
    double evidence = 0.0;   // integral estimate or lower bound; NaN for analytic-only
    std::string note;
};

/// Numeric evidence for the admissibility conditions of a weight pair.
/// Local (L^1_loc) conditions are checked on the interior subinterval at
/// distance 10% of the domain diameter from the endpoints; global (L^1)
/// conditions use the whole mesh.
struct AdmissibilityReport {
    std::array<ConditionEntry, 6> entries;  // W1..W6 in order
    double p = 0.0, q = 0.0, s = 0.0;

    const ConditionEntry& entry(int condition_number) const;  // 1-based
    bool numeric_entries_pass() const;
};

AdmissibilityReport check_admissibility(const WeightSpec& omega1, const WeightSpec& omega2,
                                        double p, double q, double s, const Mesh1D& mesh);

}  // namespace wplap
