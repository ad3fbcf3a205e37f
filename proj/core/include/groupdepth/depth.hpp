#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "groupdepth/char_graph.hpp"
#include "groupdepth/inclusion.hpp"

namespace groupdepth {

enum class DepthMethod {
  depth1_test,
  normality,
  inclusion_matrix_corefree,
  inclusion_matrix_general,
  graph_interval,
};

const char *to_string(DepthMethod m);

struct DepthCertificates {
  // core-free route: minimal k >= 2 with the k-th product support all-positive
  std::optional<unsigned> min_positive_level;
  // general route: minimal d >= 2 with supp(M^(d+1)) contained in supp(M^(d-1))
  std::optional<unsigned> support_stable_level;
  // an x in H whose H-class is smaller than its G-class (depth >= 2 witness)
  std::optional<std::string> normal_witness;
  // rows (a,b) of M with <a^G, b^G> = 0 (depth >= 4 witness)
  std::optional<std::pair<unsigned, unsigned>> vanishing_pair;
  // (row, column) witness with an irreducible restriction (depth >= 5)
  std::optional<std::pair<unsigned, unsigned>> depth5_pair;
  unsigned iteration_cap = 0; // 2 |G : N_G(H)|
  BigInt normalizer_order = 0;
};

/// The computed depth together with everything needed to re-verify it.
struct DepthReport {
  unsigned depth = 0;
  DepthMethod method = DepthMethod::depth1_test;
  BigInt group_order, subgroup_order, index, core_order;
  std::uint64_t prime = 0; // 0 when no character tables were needed
  DepthCertificates certs;
  std::optional<ClassFusion> fusion;
  std::optional<InclusionMatrix> matrix;
  std::optional<GraphDepthEstimate> graph;
};

/// The report plus the intermediate data (classes, tables) for callers
/// that want to attach further statistics without recomputation.
struct DepthComputation {
  DepthReport report;
  std::optional<ClassData> cdg, cdh;
  std::optional<CharTableModP> tabg, tabh;
};

/// End-to-end depth computation. Normal subgroups are resolved by the
/// class-size tests (depth 1 or 2); everything else goes through the
/// inclusion matrix, with the core-free criterion and the graph windows
/// cross-checked whenever the core is trivial.
DepthComputation compute_depth_full(const PermGroup &g, const PermGroup &h,
                                    const Limits &limits = {},
                                    std::optional<std::uint64_t> prime = std::nullopt);

inline DepthReport compute_depth(const PermGroup &g, const PermGroup &h,
                                 const Limits &limits = {},
                                 std::optional<std::uint64_t> prime = std::nullopt) {
  return compute_depth_full(g, h, limits, prime).report;
}

} // namespace groupdepth
