#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "groupdepth/inclusion.hpp"

namespace groupdepth {

/// Graph on the irreducible characters of H: two distinct characters are
/// adjacent when their inductions to G share an irreducible constituent,
/// i.e. when the corresponding entry of M M^T is nonzero. Connected exactly
/// when the core of H in G is trivial.
struct InducedCharacterGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::uint64_t>> gram; // M M^T, exact integers
  std::vector<std::vector<char>> adjacency;     // symmetric, loop-free
  std::vector<std::vector<int>> distance;       // -1 = unreachable
  bool connected = false;
  unsigned diameter = 0; // max finite distance
};

InducedCharacterGraph build_character_graph(const InclusionMatrix &m);

/// Maximal distance from any vertex to the set of constituents of the
/// restriction of the chi-th irreducible of G. Requires a connected graph.
unsigned max_distance_to_constituents(const InducedCharacterGraph &graph,
                                      const InclusionMatrix &m, std::size_t chi);

/// The two-element windows pinned by the graph statistics: the depth lies
/// in {2m, 2m+1} for the diameter m and in {2l+1, 2l+2} for the maximal
/// constituent distance l; their intersection may be a singleton.
struct GraphDepthEstimate {
  unsigned diameter = 0;
  unsigned ell = 0;
  std::vector<unsigned> candidates;
};

GraphDepthEstimate depth_interval(const InducedCharacterGraph &graph,
                                  const InclusionMatrix &m);

/// A pair (alpha, chi) with the restriction of chi irreducible and
/// <alpha^G, (chi_H)^G> = 0; its existence certifies depth >= 5.
std::optional<std::pair<unsigned, unsigned>> depth5_witness(const InclusionMatrix &m);

} // namespace groupdepth
