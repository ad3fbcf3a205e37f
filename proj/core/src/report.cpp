#include "groupdepth/report.hpp"

namespace groupdepth {

ChartabDocument make_chartab_document(const CharTableModP &table, const ClassData &cd,
                                      const std::string &label) {
  ChartabDocument doc;
  doc.label = label;
  doc.order = std::to_string(cd.group_order);
  doc.p = table.p;
  doc.e = table.e;
  doc.omega = table.omega;
  doc.sizes = cd.sizes;
  doc.centralizer_orders = cd.centralizer_orders;
  doc.element_orders = cd.element_orders;
  doc.inverse_class = cd.inverse_class;
  for (const auto &r : cd.reps)
    doc.reps.push_back(r.cycle_string());
  doc.degrees = table.degrees;
  doc.values = table.values;
  return doc;
}

Json to_json(const ChartabDocument &doc) {
  Json j;
  j["schema"] = "groupdepth-chartab/1";
  j["group"] = doc.label;
  j["order"] = doc.order;
  j["p"] = doc.p;
  j["e"] = doc.e;
  j["omega"] = doc.omega;
  j["classes"] = Json{{"sizes", doc.sizes},
                      {"centralizer_orders", doc.centralizer_orders},
                      {"element_orders", doc.element_orders},
                      {"inverse_class", doc.inverse_class},
                      {"representatives", doc.reps}};
  j["degrees"] = doc.degrees;
  j["values"] = doc.values;
  return j;
}

ChartabDocument chartab_document_from_json(const Json &j) {
  if (j.at("schema") != "groupdepth-chartab/1")
    throw ParseError("unsupported character table schema");
  ChartabDocument doc;
  doc.label = j.at("group").get<std::string>();
  doc.order = j.at("order").get<std::string>();
  doc.p = j.at("p").get<std::uint64_t>();
  doc.e = j.at("e").get<std::uint64_t>();
  doc.omega = j.at("omega").get<std::uint64_t>();
  const Json &c = j.at("classes");
  doc.sizes = c.at("sizes").get<std::vector<std::uint64_t>>();
  doc.centralizer_orders = c.at("centralizer_orders").get<std::vector<std::uint64_t>>();
  doc.element_orders = c.at("element_orders").get<std::vector<std::uint64_t>>();
  doc.inverse_class = c.at("inverse_class").get<std::vector<unsigned>>();
  doc.reps = c.at("representatives").get<std::vector<std::string>>();
  doc.degrees = j.at("degrees").get<std::vector<std::uint64_t>>();
  doc.values = j.at("values").get<std::vector<std::vector<std::uint64_t>>>();
  return doc;
}

Json graph_json(const InducedCharacterGraph &graph, const GraphDepthEstimate *est) {
  Json j;
  j["schema"] = "groupdepth-kgraph/1";
  j["vertices"] = graph.n;
  j["connected"] = graph.connected;
  Json adj = Json::array();
  for (std::size_t a = 0; a < graph.n; ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < graph.n; ++b)
      if (graph.adjacency[a][b])
        row.push_back(b);
    adj.push_back(std::move(row));
  }
  j["adjacency"] = std::move(adj);
  if (graph.connected)
    j["diameter"] = graph.diameter;
  if (est) {
    j["ell"] = est->ell;
    j["depth_candidates"] = est->candidates;
  }
  return j;
}

std::string graph_dot(const InducedCharacterGraph &graph) {
  std::string out = "graph induced_characters {\n";
  for (std::size_t a = 0; a < graph.n; ++a)
    out += "  v" + std::to_string(a) + ";\n";
  for (std::size_t a = 0; a < graph.n; ++a)
    for (std::size_t b = a + 1; b < graph.n; ++b)
      if (graph.adjacency[a][b])
        out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

Json depth_report_json(const DepthReport &rep, const std::string &group_label,
                       const std::string &subgroup_label, std::uint64_t seed,
                       const Json &extras, double wall_ms) {
  Json j;
  j["schema"] = "groupdepth-depth/1";
  j["group"] = group_label;
  j["subgroup"] = subgroup_label;
  j["group_order"] = rep.group_order.str();
  j["subgroup_order"] = rep.subgroup_order.str();
  j["index"] = rep.index.str();
  j["core_order"] = rep.core_order.str();
  j["depth"] = rep.depth;
  j["method"] = to_string(rep.method);
  if (rep.prime)
    j["prime"] = rep.prime;

  Json certs;
  certs["normalizer_order"] = rep.certs.normalizer_order.str();
  certs["iteration_cap"] = rep.certs.iteration_cap;
  if (rep.certs.min_positive_level)
    certs["min_positive_level"] = *rep.certs.min_positive_level;
  if (rep.certs.support_stable_level)
    certs["support_stable_level"] = *rep.certs.support_stable_level;
  if (rep.certs.normal_witness)
    certs["normal_witness"] = *rep.certs.normal_witness;
  if (rep.certs.vanishing_pair)
    certs["vanishing_pair"] = Json::array(
        {rep.certs.vanishing_pair->first, rep.certs.vanishing_pair->second});
  if (rep.certs.depth5_pair)
    certs["depth5_witness"] =
        Json::array({rep.certs.depth5_pair->first, rep.certs.depth5_pair->second});
  j["certificates"] = std::move(certs);

  if (rep.graph) {
    j["graph"] = Json{{"diameter", rep.graph->diameter},
                      {"ell", rep.graph->ell},
                      {"depth_candidates", rep.graph->candidates}};
  }
  if (rep.fusion)
    j["fusion"] = rep.fusion->map;
  if (rep.matrix) {
    j["inclusion_matrix"] = rep.matrix->m;
    j["inclusion_matrix_canonical"] = rep.matrix->canonical().m;
    j["row_degrees"] = rep.matrix->row_degrees;
    j["col_degrees"] = rep.matrix->col_degrees;
  }
  for (auto it = extras.begin(); it != extras.end(); ++it)
    j[it.key()] = it.value();
  j["seed"] = seed;
  j["volatile"] = Json{{"wall_ms", wall_ms}};
  return j;
}

Json basesize_json(const BaseSizeResult &res, const std::string &group_label,
                   const std::string &subgroup_label, const std::vector<QBound> &qs,
                   std::uint64_t seed, double wall_ms) {
  Json j;
  j["schema"] = "groupdepth-basesize/1";
  j["group"] = group_label;
  j["subgroup"] = subgroup_label;
  j["base_size"] = res.value;
  j["method"] = res.method == BaseSizeMethod::exact_backtrack ? "exact_backtrack"
                : res.method == BaseSizeMethod::random_witness ? "random_witness"
                                                               : "q_bound";
  Json w = Json::array();
  for (const auto &x : res.witness)
    w.push_back(x.cycle_string());
  j["witness"] = std::move(w);
  j["depth_upper_bound"] = depth_upper_from_base(res.value);
  if (!qs.empty()) {
    Json qj = Json::array();
    for (const auto &q : qs) {
      Json one;
      one["t"] = q.t;
      one["value"] = q.value.str();
      one["proves_base_at_most_t"] = q.proves_base_bound;
      if (q.proves_base_bound)
        one["depth_bound"] = q.depth_bound;
      qj.push_back(std::move(one));
    }
    j["q_bounds"] = std::move(qj);
  }
  j["seed"] = seed;
  j["volatile"] = Json{{"wall_ms", wall_ms}};
  return j;
}

} // namespace groupdepth
