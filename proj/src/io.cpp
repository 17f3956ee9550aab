#include "wplap/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace wplap {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.precision(17);
    return out;
}

bool numeric_line(const std::string& line) {
    for (char c : line) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.')
            return true;
        if (std::isalpha(static_cast<unsigned char>(c))) return false;
    }
    return false;
}

}  // namespace

void write_field_csv(const std::string& path, const Mesh1D& mesh, const Field& u) {
    if (u.values.size() != mesh.node_count())
        throw std::invalid_argument("field length does not match the mesh");
    auto out = open_out(path);
    out << "node,value\n";
    for (std::size_t i = 0; i < u.values.size(); ++i)
        out << mesh.node(i) << "," << u.values[i] << "\n";
}

Field read_field_csv(const std::string& path, const Mesh1D& mesh) {
    auto [nodes, values] = read_two_column_csv(path);
    if (values.size() != mesh.node_count())
        throw std::runtime_error("field file row count does not match the mesh: " + path);
    Field u;
    u.values = std::move(values);
    return u;
}

void write_trace_csv(const std::string& path, const EvolutionTrace& trace) {
    auto out = open_out(path);
    out << "t,l2sq,dirichlet,mass\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        out << trace.times[i] << "," << trace.l2sq[i] << "," << trace.dirichlet[i] << ","
            << trace.mass[i] << "\n";
}

std::pair<std::vector<double>, std::vector<double>> read_two_column_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::vector<double> col1, col2;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!numeric_line(line)) continue;  // header or comment
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream row(line);
        double a = 0.0, b = 0.0;
        if (!(row >> a >> b)) throw std::runtime_error("malformed CSV row in " + path);
        col1.push_back(a);
        col2.push_back(b);
    }
    if (col1.empty()) throw std::runtime_error("no data rows in " + path);
    return {std::move(col1), std::move(col2)};
}

nlohmann::json mesh_to_json(const Mesh1D& mesh) {
    return nlohmann::json{{"a", mesh.a()},
                          {"b", mesh.b()},
                          {"n", mesh.element_count()},
                          {"grading", mesh.grading()},
                          {"metric", mesh.metric() == Metric::Radial ? "radial" : "interval"},
                          {"N", mesh.dim()}};
}

void write_text_file(const std::string& path, const std::string& content) {
    auto out = open_out(path);
    out << content;
}

}  // namespace wplap
