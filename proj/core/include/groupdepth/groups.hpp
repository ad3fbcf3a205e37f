#pragma once

#include "groupdepth/permgroup.hpp"

namespace groupdepth {

PermGroup symmetric_group(unsigned n);
PermGroup alternating_group(unsigned n);
PermGroup cyclic_group(unsigned n);

/// Dihedral group of order 2n acting on the n vertices of a polygon, n >= 3.
PermGroup dihedral_group(unsigned n);

/// The Mathieu group on 11 points from its standard generators.
PermGroup mathieu11();

/// The same group in its second 2-transitive action, on 12 points; the
/// point stabilizer has order 660.
PermGroup mathieu11_degree12();

/// Projective groups on the q+1 points of the projective line over F_q
/// (points: field elements 1..q in file labels, infinity last).
PermGroup psl2(unsigned q);
PermGroup pgl2(unsigned q);
PermGroup pgammal2(unsigned q);

} // namespace groupdepth
