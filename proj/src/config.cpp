#include "wplap/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "wplap/io.hpp"

namespace wplap {

namespace {

using nlohmann::json;

class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

template <typename T>
void read_into(const json& j, const char* key, T& target) {
    if (j.contains(key)) j.at(key).get_to(target);
}

void read_optional(const json& j, const char* key, std::optional<double>& target) {
    if (j.contains(key) && !j.at(key).is_null()) target = j.at(key).get<double>();
}

const std::set<std::string> kCommands = {"check-weights", "eigen",  "eigen-study",
                                         "evolve",        "sweep",  "truncation-study"};
const std::set<std::string> kWeightKinds = {"constant", "power-radial", "distance-boundary",
                                            "tabulated"};
const std::set<std::string> kInitialKinds = {"zero", "bump", "hat", "csv"};

WeightConfig parse_weight(const json& j) {
    WeightConfig wc;
    read_into(j, "kind", wc.kind);
    read_into(j, "exponent", wc.exponent);
    read_into(j, "value", wc.value);
    read_into(j, "table-path", wc.table_path);
    if (!kWeightKinds.count(wc.kind)) throw parse_error("unknown weight kind: " + wc.kind);
    return wc;
}

json weight_to_json(const WeightConfig& wc) {
    json j{{"kind", wc.kind}};
    if (wc.kind == "constant") j["value"] = wc.value;
    if (wc.kind == "power-radial" || wc.kind == "distance-boundary") j["exponent"] = wc.exponent;
    if (wc.kind == "tabulated") j["table-path"] = wc.table_path;
    return j;
}

}  // namespace

ExperimentConfig parse_config(const json& j) {
    try {
        ExperimentConfig c;
        read_into(j, "command", c.command);
        if (!kCommands.count(c.command)) throw parse_error("unknown command: '" + c.command + "'");

        if (j.contains("weights")) {
            const auto& w = j.at("weights");
            if (w.contains("omega1")) c.omega1 = parse_weight(w.at("omega1"));
            if (w.contains("omega2")) c.omega2 = parse_weight(w.at("omega2"));
        }
        if (j.contains("mesh")) {
            const auto& m = j.at("mesh");
            read_into(m, "a", c.mesh.a);
            read_into(m, "b", c.mesh.b);
            read_into(m, "n", c.mesh.n);
            read_into(m, "grading", c.mesh.grading);
            read_into(m, "metric", c.mesh.metric);
            read_into(m, "N", c.mesh.dim);
            if (c.mesh.metric != "interval" && c.mesh.metric != "radial")
                throw parse_error("unknown mesh metric: " + c.mesh.metric);
        }
        if (j.contains("physics")) {
            const auto& p = j.at("physics");
            read_into(p, "p", c.physics.p);
            read_into(p, "lambda", c.physics.lambda);
            read_optional(p, "m", c.physics.m);
            read_into(p, "m_list", c.physics.m_list);
            read_into(p, "q", c.physics.q);
            read_into(p, "s", c.physics.s);
            read_into(p, "lambda_lo", c.physics.lambda_lo);
            read_into(p, "lambda_hi", c.physics.lambda_hi);
            read_into(p, "bisection_steps", c.physics.bisection_steps);
        }
        if (j.contains("time")) {
            const auto& t = j.at("time");
            read_into(t, "dt", c.time.dt);
            read_into(t, "T", c.time.T);
            read_into(t, "dt_min", c.time.dt_min);
        }
        if (j.contains("solver")) {
            const auto& s = j.at("solver");
            read_into(s, "tol", c.solver.tol);
            read_into(s, "max_iters", c.solver.max_iters);
            read_into(s, "seed", c.solver.seed);
            read_optional(s, "eps", c.solver.eps);
            read_into(s, "picard_tol", c.solver.picard_tol);
            read_into(s, "picard_max", c.solver.picard_max);
            read_into(s, "blowup_factor", c.solver.blowup_factor);
        }
        if (j.contains("initial")) {
            const auto& i = j.at("initial");
            read_into(i, "kind", c.initial.kind);
            read_into(i, "amplitude", c.initial.amplitude);
            read_into(i, "path", c.initial.path);
            if (!kInitialKinds.count(c.initial.kind))
                throw parse_error("unknown initial data kind: " + c.initial.kind);
        }
        if (j.contains("io")) read_into(j.at("io"), "out_dir", c.io.out_dir);
        return c;
    } catch (const json::exception& e) {
        throw parse_error(std::string("config parse failure: ") + e.what());
    }
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_config(j);
}

nlohmann::json to_json(const ExperimentConfig& c) {
    json j;
    j["command"] = c.command;
    j["weights"] = {{"omega1", weight_to_json(c.omega1)}, {"omega2", weight_to_json(c.omega2)}};
    j["mesh"] = {{"a", c.mesh.a},       {"b", c.mesh.b},           {"n", c.mesh.n},
                 {"grading", c.mesh.grading}, {"metric", c.mesh.metric}, {"N", c.mesh.dim}};
    j["physics"] = {{"p", c.physics.p},
                    {"lambda", c.physics.lambda},
                    {"m", c.physics.m ? json(*c.physics.m) : json(nullptr)},
                    {"m_list", c.physics.m_list},
                    {"q", c.physics.q},
                    {"s", c.physics.s},
                    {"lambda_lo", c.physics.lambda_lo},
                    {"lambda_hi", c.physics.lambda_hi},
                    {"bisection_steps", c.physics.bisection_steps}};
    j["time"] = {{"dt", c.time.dt}, {"T", c.time.T}, {"dt_min", c.time.dt_min}};
    j["solver"] = {{"tol", c.solver.tol},
                   {"max_iters", c.solver.max_iters},
                   {"seed", c.solver.seed},
                   {"eps", c.solver.eps ? json(*c.solver.eps) : json(nullptr)},
                   {"picard_tol", c.solver.picard_tol},
                   {"picard_max", c.solver.picard_max},
                   {"blowup_factor", c.solver.blowup_factor}};
    j["initial"] = {{"kind", c.initial.kind},
                    {"amplitude", c.initial.amplitude},
                    {"path", c.initial.path}};
    j["io"] = {{"out_dir", c.io.out_dir}};
    return j;
}

void validate(const ExperimentConfig& c) {
    const bool evolution_command =
        c.command == "evolve" || c.command == "sweep" || c.command == "truncation-study";
    const bool eigen_command = c.command == "eigen" || c.command == "eigen-study";

    if (evolution_command || c.command == "check-weights") {
        if (!(c.physics.p > 2.0))
            throw std::invalid_argument(c.command + " requires p > 2");
    }
    if (eigen_command && !(c.physics.p >= 2.0))
        throw std::invalid_argument(c.command + " requires p >= 2");
    if (c.command == "check-weights" && !(c.physics.p < c.physics.q && c.physics.q < c.physics.s))
        throw std::invalid_argument("check-weights requires p < q < s");
    if (c.command == "eigen-study" || c.command == "truncation-study") {
        if (c.physics.m_list.empty())
            throw std::invalid_argument(c.command + " requires a nonempty m_list");
        for (std::size_t k = 0; k < c.physics.m_list.size(); ++k) {
            if (!(c.physics.m_list[k] > 0.0))
                throw std::invalid_argument("m_list entries must be positive");
            if (k > 0 && !(c.physics.m_list[k - 1] < c.physics.m_list[k]))
                throw std::invalid_argument("m_list must be strictly increasing");
        }
    }
    if (c.command == "sweep") {
        if (!(c.physics.lambda_lo < c.physics.lambda_hi))
            throw std::invalid_argument("sweep requires lambda_lo < lambda_hi");
        if (c.physics.bisection_steps < 1)
            throw std::invalid_argument("sweep requires at least one bisection step");
    }
    if (evolution_command) {
        if (!(c.time.dt > 0.0) || !(c.time.T >= c.time.dt) ||
            !(c.time.dt_min > 0.0 && c.time.dt_min <= c.time.dt))
            throw std::invalid_argument("time section must satisfy 0 < dt_min <= dt <= T");
        if (!(c.physics.lambda >= 0.0) && c.command == "evolve")
            throw std::invalid_argument("lambda must be nonnegative");
    }
    if (c.physics.m && !(*c.physics.m > 0.0))
        throw std::invalid_argument("truncation level m must be positive");
    if (!(c.mesh.a < c.mesh.b) || c.mesh.n < 2 || !(c.mesh.grading >= 1.0))
        throw std::invalid_argument("mesh section must satisfy a < b, n >= 2, grading >= 1");
    if (c.initial.kind == "csv" && c.initial.path.empty())
        throw std::invalid_argument("csv initial data needs a path");
    if (!(c.solver.tol > 0.0) || !(c.solver.picard_tol > 0.0) || !(c.solver.blowup_factor > 1.0))
        throw std::invalid_argument("solver tolerances must be positive (blowup_factor > 1)");
}

Mesh1D make_mesh(const MeshConfig& mc) {
    const Metric metric = mc.metric == "radial" ? Metric::Radial : Metric::Interval;
    return build_mesh(mc.a, mc.b, mc.n, mc.grading, metric, mc.dim);
}

WeightSpec make_weight(const WeightConfig& wc, const MeshConfig& mc) {
    if (wc.kind == "constant") return WeightSpec::constant(wc.value);
    if (wc.kind == "power-radial") return WeightSpec::power_radial(wc.exponent);
    if (wc.kind == "distance-boundary")
        return WeightSpec::distance_boundary(wc.exponent, mc.a, mc.b, mc.metric == "radial");
    if (wc.kind == "tabulated") {
        auto [nodes, values] = read_two_column_csv(wc.table_path);
        return WeightSpec::tabulated(std::move(nodes), std::move(values));
    }
    throw std::invalid_argument("unknown weight kind: " + wc.kind);
}

Field make_initial(const InitialConfig& ic, const Mesh1D& mesh) {
    if (ic.kind == "zero") return zero_field(mesh);
    if (ic.kind == "bump") return bump_field(mesh, ic.amplitude);
    if (ic.kind == "hat") {
        const double a = mesh.a(), len = mesh.b() - mesh.a();
        const double amp = ic.amplitude;
        return make_field(mesh, [=](double x) {
            const double s = (x - a) / len;
            return amp * (1.0 - std::abs(2.0 * s - 1.0));
        });
    }
    if (ic.kind == "csv") return read_field_csv(ic.path, mesh);
    throw std::invalid_argument("unknown initial data kind: " + ic.kind);
}

}  // namespace wplap
