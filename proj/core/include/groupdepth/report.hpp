#pragma once

#include <string>

#include <json.hpp>

#include "groupdepth/bases.hpp"
#include "groupdepth/depth.hpp"

namespace groupdepth {

using Json = nlohmann::ordered_json;

/// Serialized character table with its class metadata; round-trips through
/// JSON bit-exactly.
struct ChartabDocument {
  std::string label;
  std::string order;
  std::uint64_t p = 2, e = 1, omega = 1;
  std::vector<std::uint64_t> sizes, centralizer_orders, element_orders;
  std::vector<unsigned> inverse_class;
  std::vector<std::string> reps;
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<std::uint64_t>> values;
};

ChartabDocument make_chartab_document(const CharTableModP &table, const ClassData &cd,
                                      const std::string &label);
Json to_json(const ChartabDocument &doc);
ChartabDocument chartab_document_from_json(const Json &j);

/// Depth report JSON; `extras` (base-size bounds, witnesses, Q values) are
/// merged in as-is, and the timing lives under the "volatile" key so that
/// reports are byte-identical for identical inputs and seeds.
Json depth_report_json(const DepthReport &rep, const std::string &group_label,
                       const std::string &subgroup_label, std::uint64_t seed,
                       const Json &extras, double wall_ms);

Json graph_json(const InducedCharacterGraph &graph,
                const GraphDepthEstimate *est = nullptr);
std::string graph_dot(const InducedCharacterGraph &graph);

Json basesize_json(const BaseSizeResult &res, const std::string &group_label,
                   const std::string &subgroup_label, const std::vector<QBound> &qs,
                   std::uint64_t seed, double wall_ms);

} // namespace groupdepth
