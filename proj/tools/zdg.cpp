// zdg: zero-divisor graph toolkit.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "zdg/export.hpp"
#include "zdg/suite.hpp"

namespace {

using nlohmann::json;

constexpr int kUsageError = 2;

struct Output {
  std::string path;

  void emit(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      std::cout.flush();
    } else {
      zdg::write_file(path, content);
    }
  }
};

std::string emit_ring(const zdg::Ring& ring, const std::string& what, zdg::ExportFormat format) {
  if (what == "elements") {
    if (format != zdg::ExportFormat::Json) throw std::invalid_argument("--emit elements supports json only");
    const auto zd = zdg::zero_divisors(ring);
    json elements = json::array();
    for (zdg::Element x = 0; x < ring.order(); ++x)
      elements.push_back({{"value", x},
                          {"label", ring.render(x)},
                          {"zeroDivisor", std::binary_search(zd.begin(), zd.end(), x)}});
    return json{{"ring", ring.describe()}, {"order", ring.order()}, {"elements", elements}}.dump(2) + "\n";
  }
  if (what == "compressed") {
    const auto ce = zdg::compressed_graph(ring);
    return format == zdg::ExportFormat::Json ? zdg::to_json(ce) : zdg::to_dot(ce.graph);
  }
  if (what == "ann") return zdg::render(zdg::annihilating_ideal_graph(ring), format);
  return zdg::render(zdg::zero_divisor_graph(ring), format);
}

// Closed-form certificates offered to the searches as hints.
void add_hints(const zdg::Ring& ring, zdg::SearchOptions& det, zdg::SearchOptions& dim) {
  std::vector<zdg::Element> elements;
  bool resolving = true;
  if (ring.kind() == zdg::RingKind::Zn) {
    if (ring.order() >= 4 && !zdg::is_prime(ring.order())) elements = zdg::zn_canonical_set(ring.order());
  } else if (ring.is_field_product() && ring.components().size() >= 2) {
    if (!ring.is_boolean()) {
      elements = zdg::semisimple_canonical_set(ring);
    } else if (ring.components().size() >= 5) {
      elements = zdg::boolean_canonical_set(static_cast<std::uint32_t>(ring.components().size()));
      resolving = false;
    }
  }
  if (elements.empty()) return;
  const auto set = zdg::vertices_of(ring, elements);
  det.hints.push_back(set);
  if (resolving) dim.hints.push_back(set);
}

json result_json(const zdg::InvariantResult& r, const zdg::Graph& g) { return json::parse(zdg::to_json(r, g)); }

std::string describe(const zdg::InvariantResult& r, const zdg::Graph& g) {
  std::string out = zdg::to_string(r.kind) + ": ";
  out += r.exact ? std::to_string(r.upper) : "[" + std::to_string(r.lower) + ", " + std::to_string(r.upper) + "]";
  out += "  (" + r.method + ")  certificate {";
  for (std::size_t i = 0; i < r.certificate.size(); ++i) out += (i ? ", " : "") + g.label(r.certificate[i]);
  return out + "}\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero-divisor graphs of finite commutative rings: construction, symmetry, Det and metric dimension"};
  app.require_subcommand(1);
  app.fallthrough();

  std::size_t workers = 1;
  Output output;
  bool seedless = false;
  app.add_option("--workers", workers, "Concurrent suite cases")->check(CLI::Range(1, 256));
  app.add_option("--out", output.path, "Write output to PATH instead of stdout");
  app.add_flag("--seedless", seedless, "Assert that no RNG is used (always holds)");

  std::uint64_t exhaustive_limit = zdg::default_exhaustive_limit();

  auto* ring_cmd = app.add_subcommand("ring", "Build Gamma(R), Gamma_E(R) or Gamma_Ann(R)");
  std::string ring_spec, emit = "zdg", format_name = "json";
  ring_cmd->add_option("spec", ring_spec, "zn:N | gf:Q | bool:N | prod:fQ,fQ,...")->required();
  ring_cmd->add_option("--emit", emit)->check(CLI::IsMember({"zdg", "compressed", "ann", "elements"}));
  ring_cmd->add_option("--format", format_name)->check(CLI::IsMember({"json", "dot"}));

  auto* inv_cmd = app.add_subcommand("invariants", "Det and dim_M of Gamma(R)");
  std::string inv_spec;
  bool inv_json = false;
  inv_cmd->add_option("spec", inv_spec)->required();
  inv_cmd->add_option("--exhaustive-limit", exhaustive_limit, "Largest C(n, s) searched exhaustively");
  inv_cmd->add_flag("--json", inv_json);

  auto* verify_cmd = app.add_subcommand("verify", "Run a theorem suite");
  verify_cmd->require_subcommand(1);
  verify_cmd->fallthrough();
  zdg::SuiteParams params;
  std::string report_format = "json";
  verify_cmd->add_option("--format", report_format)->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--exhaustive-limit", exhaustive_limit);
  verify_cmd->add_subcommand("zn")->add_option("--max-n", params.zn_max_n);
  verify_cmd->add_subcommand("semisimple")->add_option("--max-order", params.semisimple_max_order);
  verify_cmd->add_subcommand("boolean")->add_option("--max-n", params.boolean_max_n);
  verify_cmd->add_subcommand("join")->add_option("--instances", params.join_instances);
  verify_cmd->add_subcommand("gap")->add_option("--max-k", params.gap_max_k);
  verify_cmd->add_subcommand("all");

  auto* gap_cmd = app.add_subcommand("gap", "Det and dim_M of the gap family member k");
  std::size_t gap_k = 1;
  bool gap_exact = false;
  gap_cmd->add_option("--k", gap_k)->required()->check(CLI::Range(1, 40));
  gap_cmd->add_flag("--exact", gap_exact, "Plain exhaustive search for both invariants");
  gap_cmd->add_option("--exhaustive-limit", exhaustive_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }
  (void)seedless;

  try {
    if (ring_cmd->parsed()) {
      output.emit(emit_ring(zdg::make_ring(ring_spec), emit, zdg::parse_format(format_name)));
      return 0;
    }

    if (inv_cmd->parsed()) {
      const zdg::Ring ring = zdg::make_ring(inv_spec);
      const zdg::Graph g = zdg::zero_divisor_graph(ring);
      zdg::SearchOptions det_options, dim_options;
      det_options.exhaustive_limit = dim_options.exhaustive_limit = exhaustive_limit;
      add_hints(ring, det_options, dim_options);
      const auto det = zdg::determining_number(g, det_options);
      const auto dim = zdg::metric_dimension(g, dim_options);
      if (inv_json) {
        output.emit(json{{"ring", ring.describe()}, {"vertices", g.vertex_count()}, {"det", result_json(det, g)},
                         {"metricDim", result_json(dim, g)}}
                        .dump(2) +
                    "\n");
      } else {
        output.emit(ring.describe() + ", " + std::to_string(g.vertex_count()) + " vertices\n" + describe(det, g) +
                    describe(dim, g));
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      std::string suite;
      for (const auto* sub : verify_cmd->get_subcommands()) suite = sub->get_name();
      params.exhaustive_limit = exhaustive_limit;
      params.workers = workers;
      const zdg::SuiteReport report = zdg::run_suite(suite, params);
      output.emit(zdg::render(report, zdg::parse_format(report_format)));
      const auto& s = report.summary;
      std::fprintf(stderr, "%s: %zu cases, %zu checks, %zu passed, %zu failed, %zu expected deviations (%.2f s)\n",
                   report.name.c_str(), s.cases, s.checks, s.passed, s.failed, s.deviations, report.wall_seconds);
      return zdg::exit_status(report);
    }

    if (gap_cmd->parsed()) {
      const zdg::Graph g = zdg::boutin_gap_graph(gap_k);
      json out = {{"k", gap_k}, {"vertices", g.vertex_count()}};
      if (gap_exact) {
        const auto det = zdg::exhaustive_determining_set(g, exhaustive_limit);
        const auto dim = zdg::exhaustive_resolving_set(g, exhaustive_limit);
        auto entry = [&](const std::optional<zdg::VertexSet>& set) -> json {
          if (!set) return nullptr;
          json labels = json::array();
          for (auto v : *set) labels.push_back(g.label(v));
          return {{"value", set->size()}, {"certificate", labels}};
        };
        out["det"] = entry(det);
        out["metricDim"] = entry(dim);
      } else {
        zdg::SearchOptions det_options;
        det_options.exhaustive_limit = exhaustive_limit;
        det_options.hints.push_back({zdg::gap_path_vertex(gap_k, 1)});
        out["det"] = result_json(zdg::determining_number(g, det_options), g);
        out["metricDim"] = result_json(zdg::metric_dimension(g, exhaustive_limit), g);
      }
      output.emit(out.dump(2) + "\n");
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "zdg: %s\n", e.what());
    return kUsageError;
  } catch (const std::out_of_range& e) {
    std::fprintf(stderr, "zdg: %s\n", e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "zdg: %s\n", e.what());
    return 1;
  }
  return kUsageError;
}
