#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "zdg/automorphism.hpp"
#include "zdg/graph.hpp"
#include "zdg/invariants.hpp"
#include "zdg/suite.hpp"
#include "zdg/zero_divisor.hpp"

namespace zdg {

enum class ExportFormat { Json, Dot, Csv };

/// "json", "dot" or "csv"; throws std::invalid_argument otherwise.
ExportFormat parse_format(std::string_view name);

// All writers emit sorted keys, sorted edge lists and LF line endings, and
// end with a newline.

/// {"edges": [[u, v], ...], "labels": [...], "vertices": n}
std::string to_json(const Graph& g);
/// Undirected DOT, one node per vertex named by its label, edges u < v.
std::string to_dot(const Graph& g);
/// Graph JSON plus "classMap": class index of each Gamma(R) vertex.
std::string to_json(const CompressedGraph& g);
/// {"generators": [[images]...], "orbits": [...], "order": "<decimal>"}
std::string to_json(const AutGroup& group);
/// {kind, lower, upper, exact, method, certificate: [vertex labels of g]}
std::string to_json(const InvariantResult& result, const Graph& g);
std::string to_json(const SuiteReport& report);
/// Row table when every case shares one column layout, otherwise one line
/// per check: case,check,expected,actual,status.
std::string to_csv(const SuiteReport& report);

/// Json or Dot; Csv throws std::invalid_argument.
std::string render(const Graph& g, ExportFormat format);
/// Json or Csv; Dot throws std::invalid_argument.
std::string render(const SuiteReport& report, ExportFormat format);

/// Writes bytes verbatim; throws std::runtime_error on I/O failure.
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace zdg
