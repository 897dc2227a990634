#include "antipodal/serialize.hpp"

#include <stdexcept>

namespace antipodal {

namespace {

VertexLabel parse_label(const std::string& text) {
  try {
    if (!text.empty() && (text[0] == 'x' || text[0] == 'y')) {
      std::size_t used = 0;
      const int pos = std::stoi(text.substr(1), &used);
      if (used + 1 == text.size()) {
        return GpVertex{text[0] == 'x' ? Ring::Outer : Ring::Inner, pos};
      }
    } else if (text.size() >= 5 && text.front() == '(' && text.back() == ')') {
      const auto comma = text.find(',');
      if (comma != std::string::npos) {
        return GridVertex{std::stoi(text.substr(1, comma - 1)),
                          std::stoi(text.substr(comma + 1, text.size() - comma - 2))};
      }
    }
  } catch (const std::logic_error&) {
  }
  throw std::invalid_argument("cannot parse vertex label '" + text + "'");
}

template <typename Fn>
auto guarded(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  j["family"] = to_string(g.family());
  j["params"] = Json::object();
  for (const auto& [key, value] : g.params()) j["params"][key] = value;
  j["n"] = g.order();
  j["edges"] = Json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  j["labels"] = Json::object();
  for (int v = 0; v < static_cast<int>(g.labels().size()); ++v) {
    j["labels"][to_string(g.label(v))] = v;
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  return guarded("graph JSON", [&] {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [u, v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::map<std::string, int> params;
    if (j.contains("params")) {
      for (const auto& [key, value] : j["params"].items()) params[key] = value.get<int>();
    }
    std::vector<VertexLabel> labels;
    if (j.contains("labels") && !j["labels"].empty()) {
      if (n < 0) throw std::invalid_argument("negative vertex count");
      std::vector<std::optional<VertexLabel>> slots(n);
      for (const auto& [text, index] : j["labels"].items()) {
        const int v = index.get<int>();
        if (v < 0 || v >= n || slots[v]) throw std::invalid_argument("label map is not a bijection");
        slots[v] = parse_label(text);
      }
      for (auto& slot : slots) {
        if (!slot) throw std::invalid_argument("label map is not a bijection");
        labels.push_back(*slot);
      }
    }
    const Family family = family_from_string(j.value("family", std::string("custom")));
    return Graph(n, std::move(edges), family, std::move(params), std::move(labels));
  });
}

Json graph_ref(const Graph& g) {
  if (g.family() == Family::Custom) return graph_to_json(g);
  Json j;
  j["family"] = to_string(g.family());
  j["params"] = Json::object();
  for (const auto& [key, value] : g.params()) j["params"][key] = value;
  return j;
}

Graph graph_from_ref(const Json& ref) {
  return guarded("graph_ref", [&] {
    const Family family = family_from_string(ref.at("family").get<std::string>());
    switch (family) {
      case Family::Cycle: return make_cycle(ref.at("params").at("n").get<int>());
      case Family::Gp: return make_gp(ref.at("params").at("n").get<int>());
      case Family::Torus:
        return make_torus(ref.at("params").at("r").get<int>(), ref.at("params").at("s").get<int>());
      case Family::Custom: break;
    }
    return graph_from_json(ref);
  });
}

Json coloring_document(const Graph& g, const Coloring& coloring, Json meta) {
  Json j;
  j["graph_ref"] = graph_ref(g);
  j["k"] = coloring.k;
  j["colors"] = coloring.colors;
  j["meta"] = std::move(meta);
  return j;
}

Json construction_document(const Graph& g, const Construction& c) {
  Json meta;
  meta["construction"] = c.label;
  meta["claimed_span"] = span(c.coloring);
  meta["source"] = c.source;
  meta["ordering"] = c.ordering;
  meta["formula"] = to_json(c.formula);
  if (c.formula.discrepancy) meta["formula_discrepancy"] = *c.formula.discrepancy;
  return coloring_document(g, c.coloring, std::move(meta));
}

ColoringDocument parse_coloring_document(const Json& j) {
  return guarded("coloring JSON", [&] {
    ColoringDocument doc{graph_from_ref(j.at("graph_ref")),
                         Coloring{j.at("colors").get<std::vector<int>>(), j.at("k").get<int>()},
                         std::nullopt, j.value("meta", Json::object())};
    if (doc.meta.contains("ordering")) {
      doc.ordering = doc.meta["ordering"].get<std::vector<int>>();
    }
    return doc;
  });
}

Json to_json(const VerificationReport& report) {
  Json j;
  j["valid"] = report.valid;
  j["violations"] = Json::array();
  for (const auto& v : report.violations) {
    j["violations"].push_back(
        {{"u", v.u}, {"v", v.v}, {"required_gap", v.required_gap}, {"actual_gap", v.actual_gap}});
  }
  return j;
}

Json to_json(const MinimalityCertificate& cert) {
  Json j;
  j["status"] = to_string(cert.status);
  j["failures"] = Json::array();
  for (const auto& f : cert.failures) {
    j["failures"].push_back({{"j", f.j},
                             {"clause", to_string(f.clause)},
                             {"observed", f.observed},
                             {"required", f.required}});
  }
  return j;
}

Json to_json(const FormulaResult& f) {
  Json j;
  j["value"] = f.value;
  j["status"] = to_string(f.status);
  j["case"] = f.case_label;
  if (f.printed_value) j["printed_value"] = *f.printed_value;
  if (f.discrepancy) j["discrepancy"] = *f.discrepancy;
  return j;
}

Json to_json(const PatternReport& report) {
  Json j;
  j["ok"] = report.ok;
  j["description"] = report.description;
  j["checks"] = report.checks;
  j["mismatches"] = Json::array();
  for (const auto& m : report.mismatches) {
    j["mismatches"].push_back({{"clause", m.clause},
                               {"position", m.position},
                               {"relation", m.relation == Relation::Equal ? "==" : ">="},
                               {"expected", m.expected},
                               {"observed", m.observed}});
  }
  return j;
}

Json to_json(const ExactResult& result, bool include_timing) {
  Json j;
  j["status"] = to_string(result.status);
  j["value"] = result.value;
  j["lower_bound"] = result.lower_bound;
  j["upper_bound"] = result.value;
  j["k"] = result.witness.k;
  j["witness"] = result.witness.colors;
  j["nodes"] = result.nodes;
  if (include_timing) j["elapsed_seconds"] = result.elapsed_seconds;
  j["incumbent_source"] = result.incumbent_source;
  return j;
}

}  // namespace antipodal
