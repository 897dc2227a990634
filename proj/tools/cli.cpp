#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "antipodal/exact_solver.hpp"
#include "antipodal/gp_constructions.hpp"
#include "antipodal/serialize.hpp"
#include "antipodal/torus_constructions.hpp"

namespace antipodal::cli {

namespace {

// Bad arguments found after parsing; reported with exit code 2.
struct BadUsage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FamilyArgs {
  std::string family;
  std::optional<int> n, r, s;

  void attach(CLI::App* cmd, const std::vector<std::string>& families) {
    cmd->add_option("--family", family, "graph family")
        ->required()
        ->check(CLI::IsMember(families));
    cmd->add_option("--n", n, "GP(n,1) or cycle size");
    cmd->add_option("--r", r, "torus rows");
    cmd->add_option("--s", s, "torus columns");
  }

  void validate() const {
    if (family == "torus") {
      if (!r || !s) throw BadUsage("--family torus needs --r and --s");
      if (n) throw BadUsage("--n does not apply to --family torus");
    } else {
      if (!n) throw BadUsage("--family " + family + " needs --n");
      if (r || s) throw BadUsage("--r/--s apply only to --family torus");
    }
  }

  Graph graph() const {
    validate();
    if (family == "gp") return make_gp(*n);
    if (family == "cycle") return make_cycle(*n);
    return make_torus(*r, *s);
  }
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadUsage("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw BadUsage(path + " is not valid JSON: " + e.what());
  }
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw BadUsage("cannot write " + path);
  file << text;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

// ---- subcommands ----------------------------------------------------------

int cmd_gen(const FamilyArgs& fam, const std::string& out_path, std::ostream& out) {
  fam.validate();
  Construction c;
  if (fam.family == "gp") {
    c = gp_construction(*fam.n);
  } else {
    if (*fam.r % 2 == 1 && *fam.s % 2 == 1) {
      throw BadUsage("no construction exists for odd r and odd s; try `formula`");
    }
    c = torus_construction(*fam.r, *fam.s);
  }
  write_text(construction_document(fam.graph(), c).dump(2) + "\n", out_path, out);
  return Ok;
}

int cmd_verify(const std::string& path, bool as_json, std::ostream& out) {
  ColoringDocument doc = [&] {
    try {
      return parse_coloring_document(read_json_file(path));
    } catch (const std::invalid_argument& e) {
      throw BadUsage(e.what());
    }
  }();
  const DistanceMatrix dist = all_pairs_distances(doc.graph);
  const int k = doc.coloring.k;
  if (static_cast<int>(doc.coloring.colors.size()) != doc.graph.order()) {
    throw BadUsage("coloring has " + std::to_string(doc.coloring.colors.size()) +
                     " colors for a graph of order " + std::to_string(doc.graph.order()));
  }
  if (k < 1 || k > dist.diameter()) {
    throw BadUsage("k = " + std::to_string(k) + " is outside 1.." +
                     std::to_string(dist.diameter()));
  }

  const VerificationReport report = verify_radio_k(dist, doc.coloring, k);
  const int sp = span(doc.coloring);

  // Use the recorded ordering when it is a valid color-sorted sequence; ties
  // between equal colors matter for the certificate.
  ColorOrdering ordering = order_by_color(doc.coloring, dist);
  std::string ordering_source = "color-sorted";
  if (doc.ordering) {
    try {
      ordering = ordering_from_sequence(doc.coloring, dist, *doc.ordering);
      ordering_source = "recorded";
    } catch (const std::invalid_argument&) {
    }
  }

  Json result;
  result["valid"] = report.valid;
  result["span"] = sp;
  result["k"] = k;
  result["diameter"] = dist.diameter();
  result["verification"] = to_json(report);
  result["ordering_source"] = ordering_source;
  const int min_color = doc.coloring.colors.empty()
                            ? 0
                            : *std::min_element(doc.coloring.colors.begin(),
                                                doc.coloring.colors.end());
  if (report.valid && min_color == 0) {
    result["span_identity_residual"] = span_identity_residual(ordering, dist, k);
  }
  std::string cert_text = "not applicable (k != d-1)";
  if (report.valid && k == dist.diameter() - 1) {
    const auto cert = minimality_certificate(ordering, dist);
    result["certificate"] = to_json(cert);
    cert_text = to_string(cert.status);
  }
  if (doc.meta.contains("claimed_span")) {
    result["claimed_span_matches"] = doc.meta["claimed_span"] == sp;
  }

  if (as_json) {
    out << result.dump(2) << "\n";
  } else {
    out << (report.valid ? "valid" : "invalid") << ", span " << sp << ", certificate "
        << cert_text << "\n";
    if (result.contains("span_identity_residual")) {
      out << "span identity residual " << result["span_identity_residual"].get<long long>()
          << "\n";
    }
    for (const auto& v : report.violations) {
      out << "violation " << v.u << " " << v.v << ": gap " << v.actual_gap << " < "
          << v.required_gap << "\n";
    }
    if (result.contains("certificate")) {
      for (const auto& f : result["certificate"]["failures"]) {
        out << "certificate failure at j=" << f["j"].get<int>() << " ("
            << f["clause"].get<std::string>() << "): observed " << f["observed"].get<int>()
            << ", required " << f["required"].get<int>() << "\n";
      }
    }
    if (result.contains("claimed_span_matches") && !result["claimed_span_matches"].get<bool>()) {
      out << "claimed span " << doc.meta["claimed_span"].dump() << " differs from span " << sp
          << "\n";
    }
  }
  return report.valid ? Ok : VerificationFailed;
}

int cmd_formula(const FamilyArgs& fam, std::ostream& out) {
  fam.validate();
  const FormulaResult f = fam.family == "gp" ? gp_ac_formula(*fam.n)
                                             : torus_ac_formula(*fam.r, *fam.s);
  out << to_json(f).dump(2) << "\n";
  return Ok;
}

int cmd_exact(const FamilyArgs& fam, const std::string& graph_path, std::optional<int> k_opt,
              long long max_nodes, double max_seconds, bool timing, std::ostream& out) {
  std::optional<Graph> graph;
  if (!graph_path.empty()) {
    if (!fam.family.empty()) throw BadUsage("--graph and --family are mutually exclusive");
    try {
      graph = graph_from_json(read_json_file(graph_path));
    } catch (const std::invalid_argument& e) {
      throw BadUsage(e.what());
    }
  } else {
    if (fam.family.empty()) throw BadUsage("exact needs --family or --graph");
    graph = fam.graph();
  }
  const DistanceMatrix dist = all_pairs_distances(*graph);
  const int k = k_opt.value_or(std::max(dist.diameter() - 1, 1));
  if (k < 1 || k > dist.diameter()) {
    throw BadUsage("--k must lie in 1.." + std::to_string(dist.diameter()));
  }
  const ExactResult result = exact_rc_k(*graph, dist, k, SolverBudget{max_nodes, max_seconds});
  out << to_json(result, timing).dump(2) << "\n";
  return result.status == ExactStatus::Solved ? Ok : SolverTimeout;
}

int cmd_validate(const FamilyArgs& fam, std::ostream& out) {
  fam.validate();
  PatternReport report;
  if (fam.family == "gp") {
    report = validate_gp_ordering(*fam.n);
  } else {
    if (*fam.r % 2 == 1 && *fam.s % 2 == 1) throw BadUsage("no ordering for odd r and odd s");
    report = validate_torus_ordering(*fam.r, *fam.s);
  }
  out << to_json(report).dump(2) << "\n";
  return report.ok ? Ok : VerificationFailed;
}

struct TableRow {
  std::string family, params;
  int n = 0, diameter = 0, k = 0;
  FormulaResult formula;
  std::optional<int> construction_span;
  std::string certificate = "none";
  std::string discrepancy;
};

TableRow construction_row(const Graph& g, const Construction& c, const std::string& params) {
  const DistanceMatrix dist = all_pairs_distances(g);
  TableRow row;
  row.family = to_string(g.family());
  row.params = params;
  row.n = g.order();
  row.diameter = dist.diameter();
  row.k = c.coloring.k;
  row.formula = c.formula;
  if (verify_radio_k(dist, c.coloring).valid) {
    row.construction_span = span(c.coloring);
    row.certificate = to_string(
        minimality_certificate(ordering_from_sequence(c.coloring, dist, c.ordering), dist).status);
  } else {
    row.certificate = "invalid-coloring";
  }
  if (c.formula.discrepancy) row.discrepancy = *c.formula.discrepancy;
  return row;
}

int cmd_table(const std::string& family, int n_from, int n_to, int r_max, int s_max,
              const std::string& format, std::ostream& out) {
  std::vector<TableRow> rows;
  if (family == "gp") {
    if (n_from < 3 || n_to < n_from) throw BadUsage("need 3 <= --n-from <= --n-to");
    for (int n = n_from; n <= n_to; ++n) {
      const Graph g = make_gp(n);
      TableRow row = construction_row(g, gp_construction(n), "n=" + std::to_string(n));
      if (gp_case(n).cls == GpClass::TwoMod4EvenT) {
        const DistanceMatrix dist = all_pairs_distances(g);
        const Coloring tight = gp_tight_increment_coloring(n);
        const auto cert = minimality_certificate(
            ordering_from_sequence(tight, dist, gp_ordering(n)), dist);
        row.discrepancy = "increment (n+2)/4 gives span " + std::to_string(span(tight)) +
                          " with certificate " + to_string(cert.status);
      }
      rows.push_back(std::move(row));
    }
  } else {
    if (r_max < 3 || s_max < 3) throw BadUsage("need --r-max, --s-max >= 3");
    for (int r = 3; r <= r_max; ++r) {
      for (int s = 3; s <= s_max; ++s) {
        const std::string params = "r=" + std::to_string(r) + ";s=" + std::to_string(s);
        if (r % 2 == 1 && s % 2 == 1) {
          const DistanceMatrix dist = all_pairs_distances(make_torus(r, s));
          TableRow row;
          row.family = "torus";
          row.params = params;
          row.n = r * s;
          row.diameter = dist.diameter();
          row.k = row.diameter - 1;
          row.formula = torus_ac_formula(r, s);
          rows.push_back(std::move(row));
          continue;
        }
        rows.push_back(construction_row(make_torus(r, s), torus_construction(r, s), params));
      }
    }
  }

  if (format == "csv") {
    out << "family,params,n,diameter,k,case_label,formula_value,formula_status,"
           "construction_span,certificate,discrepancy\n";
    for (const auto& row : rows) {
      out << row.family << "," << csv_field(row.params) << "," << row.n << "," << row.diameter
          << "," << row.k << "," << csv_field(row.formula.case_label) << ","
          << row.formula.value << "," << to_string(row.formula.status) << ","
          << (row.construction_span ? std::to_string(*row.construction_span) : "") << ","
          << row.certificate << "," << csv_field(row.discrepancy) << "\n";
    }
  } else {
    Json arr = Json::array();
    for (const auto& row : rows) {
      Json j;
      j["family"] = row.family;
      j["params"] = row.params;
      j["n"] = row.n;
      j["diameter"] = row.diameter;
      j["k"] = row.k;
      j["case_label"] = row.formula.case_label;
      j["formula_value"] = row.formula.value;
      j["formula_status"] = to_string(row.formula.status);
      j["construction_span"] =
          row.construction_span ? Json(*row.construction_span) : Json(nullptr);
      j["certificate"] = row.certificate;
      j["discrepancy"] = row.discrepancy;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << "\n";
  }
  return Ok;
}

int cmd_export_dot(const std::string& path, const std::string& out_path, std::ostream& out) {
  ColoringDocument doc = [&] {
    try {
      return parse_coloring_document(read_json_file(path));
    } catch (const std::invalid_argument& e) {
      throw BadUsage(e.what());
    }
  }();
  const Graph& g = doc.graph;
  if (static_cast<int>(doc.coloring.colors.size()) != g.order()) {
    throw BadUsage("coloring size does not match graph order");
  }
  const int top = std::max(span(doc.coloring), 1);
  std::ostringstream dot;
  dot << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) {
    const int c = doc.coloring.colors[v];
    // Ten grayscale buckets, light for low colors and dark for high ones.
    const int bucket = std::min(9, c * 10 / (top + 1));
    const int gray = 95 - 8 * bucket;
    const int font = gray < 50 ? 100 : 0;
    dot << "  " << v << " [label=\"" << c << "\", style=filled, fillcolor=gray" << gray
        << ", fontcolor=gray" << font;
    if (g.has_labels()) dot << ", tooltip=\"" << to_string(g.label(v)) << "\"";
    dot << "];\n";
  }
  for (const auto& [u, v] : g.edges()) dot << "  " << u << " -- " << v << ";\n";
  dot << "}\n";
  write_text(dot.str(), out_path, out);
  return Ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Antipodal colorings of GP(n,1) and toroidal grids", "antipodal-cli"};
  app.require_subcommand(1);

  FamilyArgs gen_fam, formula_fam, exact_fam, validate_fam;
  std::string out_path, verify_path, dot_path, dot_out, graph_path;
  bool verify_json = false, timing = false;
  std::optional<int> exact_k;
  long long max_nodes = SolverBudget{}.max_nodes;
  double max_seconds = SolverBudget{}.max_seconds;
  std::string table_family, table_format = "csv";
  int n_from = 0, n_to = 0, r_max = 0, s_max = 0;

  auto* gen = app.add_subcommand("gen", "emit a construction as coloring JSON");
  gen_fam.attach(gen, {"gp", "torus"});
  gen->add_option("--out", out_path, "output file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "verify a coloring file");
  verify->add_option("file", verify_path, "coloring JSON")->required();
  verify->add_flag("--json", verify_json, "print the full report as JSON");

  auto* formula = app.add_subcommand("formula", "closed-form antipodal number");
  formula_fam.attach(formula, {"gp", "torus"});

  auto* exact = app.add_subcommand("exact", "exact rc_k by branch and bound");
  exact->add_option("--family", exact_fam.family, "graph family")
      ->check(CLI::IsMember({"gp", "torus", "cycle"}));
  exact->add_option("--n", exact_fam.n, "GP(n,1) or cycle size");
  exact->add_option("--r", exact_fam.r, "torus rows");
  exact->add_option("--s", exact_fam.s, "torus columns");
  exact->add_option("--graph", graph_path, "graph JSON instead of a family");
  exact->add_option("--k", exact_k, "radio parameter (default: diameter - 1)");
  exact->add_option("--max-nodes", max_nodes, "search node budget");
  exact->add_option("--max-seconds", max_seconds, "wall-clock budget");
  exact->add_flag("--timing", timing, "include elapsed time in the output");

  auto* validate = app.add_subcommand("validate-ordering", "check the ordering's distance pattern");
  validate_fam.attach(validate, {"gp", "torus"});

  auto* table = app.add_subcommand("table", "batch formulas, spans and certificates");
  table->add_option("--family", table_family, "graph family")
      ->required()
      ->check(CLI::IsMember({"gp", "torus"}));
  auto* nf = table->add_option("--n-from", n_from, "first n (gp)");
  auto* nt = table->add_option("--n-to", n_to, "last n (gp)");
  auto* rm = table->add_option("--r-max", r_max, "largest r (torus)");
  auto* sm = table->add_option("--s-max", s_max, "largest s (torus)");
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* dot = app.add_subcommand("export-dot", "DOT graph with colors as labels");
  dot->add_option("file", dot_path, "coloring JSON")->required();
  dot->add_option("--out", dot_out, "output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    if (*gen) return cmd_gen(gen_fam, out_path, out);
    if (*verify) return cmd_verify(verify_path, verify_json, out);
    if (*formula) return cmd_formula(formula_fam, out);
    if (*exact) {
      if (!exact_fam.family.empty()) exact_fam.validate();
      return cmd_exact(exact_fam, graph_path, exact_k, max_nodes, max_seconds, timing, out);
    }
    if (*validate) return cmd_validate(validate_fam, out);
    if (*table) {
      const bool gp_flags = nf->count() || nt->count();
      const bool torus_flags = rm->count() || sm->count();
      if (table_family == "gp" && (!nf->count() || !nt->count() || torus_flags)) {
        throw BadUsage("table --family gp takes --n-from and --n-to only");
      }
      if (table_family == "torus" && (!rm->count() || !sm->count() || gp_flags)) {
        throw BadUsage("table --family torus takes --r-max and --s-max only");
      }
      return cmd_table(table_family, n_from, n_to, r_max, s_max, table_format, out);
    }
    if (*dot) return cmd_export_dot(dot_path, dot_out, out);
  } catch (const BadUsage& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return UsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return VerificationFailed;
  }
  return UsageError;
}

}  // namespace antipodal::cli
