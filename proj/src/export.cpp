#include "zdg/export.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace zdg {

using nlohmann::json;

namespace {

json graph_json(const Graph& g) {
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  json labels = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  return {{"edges", std::move(edges)}, {"labels", std::move(labels)}, {"vertices", g.vertex_count()}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void csv_line(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_field(fields[i]);
  }
  out += "\n";
}

}  // namespace

ExportFormat parse_format(std::string_view name) {
  if (name == "json") return ExportFormat::Json;
  if (name == "dot") return ExportFormat::Dot;
  if (name == "csv") return ExportFormat::Csv;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string to_json(const Graph& g) { return dump(graph_json(g)); }

std::string to_dot(const Graph& g) {
  std::string out = "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out += "  " + dot_id(g.label(v)) + ";\n";
  for (const auto& [u, v] : g.edges()) out += "  " + dot_id(g.label(u)) + " -- " + dot_id(g.label(v)) + ";\n";
  return out + "}\n";
}

std::string to_json(const CompressedGraph& g) {
  json j = graph_json(g.graph);
  j["classMap"] = g.class_of;
  return dump(j);
}

std::string to_json(const AutGroup& group) {
  json generators = json::array();
  for (const auto& p : group.generators) generators.push_back(p.image());
  return dump({{"generators", std::move(generators)}, {"orbits", group.orbits}, {"order", group.order.str()}});
}

std::string to_json(const InvariantResult& result, const Graph& g) {
  json certificate = json::array();
  for (Vertex v : result.certificate) certificate.push_back(g.label(v));
  return dump({{"kind", to_string(result.kind)},
               {"lower", result.lower},
               {"upper", result.upper},
               {"exact", result.exact},
               {"method", result.method},
               {"certificate", std::move(certificate)}});
}

std::string to_json(const SuiteReport& report) {
  json cases = json::array();
  for (const auto& c : report.cases) {
    json checks = json::array();
    for (const auto& check : c.checks) {
      json entry = {{"name", check.name},
                    {"expected", check.expected},
                    {"actual", check.actual},
                    {"status", to_string(check.status)}};
      if (!check.note.empty()) entry["note"] = check.note;
      checks.push_back(std::move(entry));
    }
    json row = json::object();
    for (const auto& [key, value] : c.row) row[key] = value;
    cases.push_back({{"id", c.id}, {"checks", std::move(checks)}, {"row", std::move(row)}});
  }
  const auto& s = report.summary;
  json summary = {{"cases", s.cases},   {"checks", s.checks},         {"passed", s.passed},
                  {"failed", s.failed}, {"deviations", s.deviations}};
  return dump({{"suite", report.name}, {"cases", std::move(cases)}, {"summary", std::move(summary)}});
}

std::string to_csv(const SuiteReport& report) {
  std::vector<std::string> columns;
  bool uniform = !report.cases.empty();
  for (const auto& c : report.cases) {
    std::vector<std::string> keys;
    for (const auto& kv : c.row) keys.push_back(kv.first);
    if (columns.empty()) columns = keys;
    if (keys.empty() || keys != columns) uniform = false;
  }
  std::string out;
  if (uniform) {
    csv_line(out, columns);
    for (const auto& c : report.cases) {
      std::vector<std::string> fields;
      for (const auto& kv : c.row) fields.push_back(kv.second);
      csv_line(out, fields);
    }
    return out;
  }
  csv_line(out, {"case", "check", "expected", "actual", "status"});
  for (const auto& c : report.cases)
    for (const auto& check : c.checks) csv_line(out, {c.id, check.name, check.expected, check.actual, to_string(check.status)});
  return out;
}

std::string render(const Graph& g, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return to_json(g);
    case ExportFormat::Dot: return to_dot(g);
    case ExportFormat::Csv: break;
  }
  throw std::invalid_argument("csv is not available for graphs");
}

std::string render(const SuiteReport& report, ExportFormat format) {
  switch (format) {
    case ExportFormat::Json: return to_json(report);
    case ExportFormat::Csv: return to_csv(report);
    case ExportFormat::Dot: break;
  }
  throw std::invalid_argument("dot is only available for graphs");
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

}  // namespace zdg
