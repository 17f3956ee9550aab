#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wplap/mesh.hpp"
#include "wplap/parabolic.hpp"

namespace wplap {

/// Fields serialize to two-column CSV (node, value).
void write_field_csv(const std::string& path, const Mesh1D& mesh, const Field& u);
Field read_field_csv(const std::string& path, const Mesh1D& mesh);

/// Traces serialize to CSV with columns t, l2sq, dirichlet, mass.
void write_trace_csv(const std::string& path, const EvolutionTrace& trace);

/// Two-column numeric CSV (optionally with a header line), e.g. tabulated
/// weight data.
std::pair<std::vector<double>, std::vector<double>> read_two_column_csv(const std::string& path);

nlohmann::json mesh_to_json(const Mesh1D& mesh);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace wplap
