#include "wplap/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wplap/mesh.hpp"

namespace wplap {

WeightSpec WeightSpec::constant(double value) {
    if (!(value >= 0.0)) throw std::invalid_argument("constant weight must be nonnegative");
    WeightSpec w;
    w.kind_ = WeightKind::Constant;
    w.value_ = value;
    return w;
}

WeightSpec WeightSpec::power_radial(double exponent) {
    WeightSpec w;
    w.kind_ = WeightKind::PowerRadial;
    w.exponent_ = exponent;
    return w;
}

WeightSpec WeightSpec::distance_boundary(double exponent, double domain_lo, double domain_hi,
                                         bool radial_domain) {
    if (!(domain_lo < domain_hi))
        throw std::invalid_argument("distance-boundary weight needs a nonempty domain");
    WeightSpec w;
    w.kind_ = WeightKind::DistanceBoundary;
    w.exponent_ = exponent;
    w.lo_ = domain_lo;
    w.hi_ = domain_hi;
    w.radial_domain_ = radial_domain;
    return w;
}

WeightSpec WeightSpec::tabulated(std::vector<double> nodes, std::vector<double> values) {
    if (nodes.size() != values.size() || nodes.size() < 2)
        throw std::invalid_argument("tabulated weight needs matching node/value columns (>= 2)");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!(nodes[i] < nodes[i + 1]))
            throw std::invalid_argument("tabulated weight nodes must be strictly increasing");
    for (double v : values)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("tabulated weight values must be finite and nonnegative");
    WeightSpec w;
    w.kind_ = WeightKind::Tabulated;
    w.nodes_ = std::move(nodes);
    w.values_ = std::move(values);
    return w;
}

double WeightSpec::operator()(double x) const {
    double v = 0.0;
    switch (kind_) {
        case WeightKind::Constant:
            v = value_;
            break;
        case WeightKind::PowerRadial:
            v = std::pow(std::abs(x), exponent_);
            break;
        case WeightKind::DistanceBoundary: {
            if (x < lo_ || x > hi_)
                throw std::domain_error("point outside the weight's domain");
            // A radial section starting at the origin has its boundary at hi only.
            const double d = (radial_domain_ && lo_ == 0.0) ? (hi_ - x)
                                                            : std::min(x - lo_, hi_ - x);
            v = std::pow(d, exponent_);
            break;
        }
        case WeightKind::Tabulated: {
            if (x < nodes_.front() || x > nodes_.back())
                throw std::domain_error("point outside the tabulated range");
            auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
            if (it == nodes_.end()) return trunc_ ? std::min(values_.back(), *trunc_) : values_.back();
            std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
            if (i == 0) i = 1;
            const double t = (x - nodes_[i - 1]) / (nodes_[i] - nodes_[i - 1]);
            v = (1.0 - t) * values_[i - 1] + t * values_[i];
            break;
        }
    }
    if (trunc_) v = std::clamp(v, -*trunc_, *trunc_);
    return v;
}

WeightSpec WeightSpec::truncated(double level) const {
    if (!(level > 0.0)) throw std::invalid_argument("truncation level must be positive");
    WeightSpec w = *this;
    w.trunc_ = trunc_ ? std::min(*trunc_, level) : level;
    return w;
}

double eval_weight(const WeightSpec& w, double x) { return w(x); }

WeightSpec truncate_weight(const WeightSpec& w, double level) { return w.truncated(level); }

const ConditionEntry& AdmissibilityReport::entry(int condition_number) const {
    if (condition_number < 1 || condition_number > 6)
        throw std::invalid_argument("condition number out of range");
    return entries[static_cast<std::size_t>(condition_number - 1)];
}

bool AdmissibilityReport::numeric_entries_pass() const {
    for (const auto& e : entries)
        if (e.status == ConditionStatus::Fail) return false;
    return true;
}

namespace {

// Midpoint-rule quadrature of w(x)^power over the part of the mesh inside
// [lo, hi]; elements straddling the cut are clipped so the estimate matches
// the exact subinterval integral to the usual midpoint order.
double weight_power_integral(const WeightSpec& w, double power, const Mesh1D& mesh, double lo,
                             double hi) {
    double sum = 0.0;
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double c_lo = std::max(mesh.node(e), lo);
        const double c_hi = std::min(mesh.node(e + 1), hi);
        if (!(c_hi > c_lo)) continue;
        const double mid = 0.5 * (c_lo + c_hi);
        sum += std::pow(w(mid), power) * (c_hi - c_lo) * mesh.metric_factor(mid);
    }
    return sum;
}

std::string format_value(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

ConditionEntry numeric_entry(std::string name, bool pass, double evidence, std::string note) {
    ConditionEntry e;
    e.condition = std::move(name);
    e.status = pass ? ConditionStatus::Pass : ConditionStatus::Fail;
    e.evidence = evidence;
    e.note = std::move(note);
    return e;
}

}  // namespace

AdmissibilityReport check_admissibility(const WeightSpec& omega1, const WeightSpec& omega2,
                                        double p, double q, double s, const Mesh1D& mesh) {
    if (!(p > 2.0)) throw std::invalid_argument("admissibility check requires p > 2");
    if (!(p < q && q < s)) throw std::invalid_argument("exponents must satisfy p < q < s");

    const double a = mesh.a(), b = mesh.b();
    const double margin = 0.1 * (b - a);
    const double loc_lo = a + margin, loc_hi = b - margin;
    const double nan = std::numeric_limits<double>::quiet_NaN();

    AdmissibilityReport report;
    report.p = p;
    report.q = q;
    report.s = s;

    // W1: both weights locally integrable.
    const double w1_loc = weight_power_integral(omega1, 1.0, mesh, loc_lo, loc_hi);
    const double w2_loc = weight_power_integral(omega2, 1.0, mesh, loc_lo, loc_hi);
    report.entries[0] = numeric_entry(
        "W1", std::isfinite(w1_loc) && std::isfinite(w2_loc), std::max(w1_loc, w2_loc),
        "local integrals on [" + format_value(loc_lo) + ", " + format_value(loc_hi) +
            "]: omega1 = " + format_value(w1_loc) + ", omega2 = " + format_value(w2_loc));

    // W2: omega1^{-2/(p-2)} integrable globally (and locally; both scopes reported).
    const double w2_power = -2.0 / (p - 2.0);
    const double w2_global = weight_power_integral(omega1, w2_power, mesh, a, b);
    const double w2_local = weight_power_integral(omega1, w2_power, mesh, loc_lo, loc_hi);
    report.entries[1] = numeric_entry(
        "W2", std::isfinite(w2_global) && std::isfinite(w2_local), w2_global,
        "global integral of omega1^(" + format_value(w2_power) + ") = " + format_value(w2_global) +
            "; local counterpart = " + format_value(w2_local));

    // W3: omega2 bounded below by a positive constant on interior compacts;
    // the evidence is the midpoint minimum over the interior subinterval.
    double w2_min = std::numeric_limits<double>::infinity();
    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const double mid = mesh.midpoint(e);
        if (mid < loc_lo || mid > loc_hi) continue;
        w2_min = std::min(w2_min, omega2(mid));
    }
    report.entries[2] =
        numeric_entry("W3", std::isfinite(w2_min) && w2_min > 0.0, w2_min,
                      "midpoint minimum of omega2 over the interior subinterval");

    // W4: the Hardy inequality itself; its constant is the eigensolver's job.
    report.entries[3].condition = "W4";
    report.entries[3].status = ConditionStatus::AnalyticOnly;
    report.entries[3].evidence = nan;
    report.entries[3].note =
        "Hardy constant K is not decidable by quadrature; use the Rayleigh-quotient estimate";

    // W5: compact embedding; no finite-dimensional content.
    report.entries[4].condition = "W5";
    report.entries[4].status = ConditionStatus::AnalyticOnly;
    report.entries[4].evidence = nan;
    report.entries[4].note = "compact embedding statement; no finite-dimensional content";

    // W6: omega1^{-q/(s-q)} and omega2^{q/(q-p)} locally integrable.
    const double w6a_power = -q / (s - q);
    const double w6b_power = q / (q - p);
    const double w6a = weight_power_integral(omega1, w6a_power, mesh, loc_lo, loc_hi);
    const double w6b = weight_power_integral(omega2, w6b_power, mesh, loc_lo, loc_hi);
    report.entries[5] = numeric_entry(
        "W6", std::isfinite(w6a) && std::isfinite(w6b), std::max(w6a, w6b),
        "local integrals: omega1^(" + format_value(w6a_power) + ") = " + format_value(w6a) +
            ", omega2^(" + format_value(w6b_power) + ") = " + format_value(w6b));

    return report;
}

}  // namespace wplap
