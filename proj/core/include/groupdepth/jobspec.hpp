#pragma once

#include <optional>
#include <string>

#include "groupdepth/permgroup.hpp"

namespace groupdepth {

/// A group source together with a printable label. Accepted forms:
///   symmetric:N alternating:N cyclic:N dihedral:N
///   psl2:Q pgl2:Q pgammal2:Q mathieu11 mathieu11_deg12
///   generators:DEG:(cycles);(cycles);...
///   file:PATH (or a bare path to an existing group file)
struct NamedGroup {
  PermGroup group;
  std::string label;
};

NamedGroup parse_group_source(const std::string &spec, const Limits &limits = {});

/// Versioned group file: a "permgroup v1" header, a "degree N" line, then
/// one generator per line in disjoint-cycle notation with 1-based points.
PermGroup parse_group_file(const std::string &path);
PermGroup parse_group_text(const std::string &text, const std::string &origin);

/// A subgroup of `parent` built from a chain of '/'-separated stages:
///   generated_by:(cycles);(cycles)...
///   stabilizer_of_points:[1,2,...]
///   derived_subgroup
///   normal_closure:(cycles);...
///   normalizer_of:{<subgroup spec>}
///   normalizer_of_cyclic:N        first element of order N, then N_G(<x>)
///   group:{<group source>}        an independently constructed group
///   expect_order:N                assertion on the stage result
/// Later stages apply to the result of earlier ones; the ambient group for
/// normalizers is always the current stage's parent.
PermGroup build_subgroup(const PermGroup &parent, const std::string &spec,
                         const Limits &limits = {});

} // namespace groupdepth
