#pragma once

#include <cstdint>
#include <vector>

#include "groupdepth/chartab.hpp"
#include "groupdepth/classes.hpp"

namespace groupdepth {

/// map[i] = index of the G-class containing the i-th H-class.
struct ClassFusion {
  std::vector<unsigned> map;
};

/// A class function with values in F_p, tagged with its host group's order
/// and class count so cross-host arithmetic is rejected.
struct ClassFunction {
  std::uint64_t p = 2;
  std::uint64_t host_order = 1;
  std::vector<std::uint64_t> v;

  std::size_t size() const { return v.size(); }
};

/// Fusion of H-classes into G-classes for H <= G of the same degree.
/// Every representative is located by exact membership lookup and the
/// result is checked to preserve element orders, fix the identity and
/// commute with inversion.
ClassFusion class_fusion(const ClassData &cdh, const ClassData &cdg);

ClassFunction trivial_character(const ClassData &cd, std::uint64_t p);

/// Row i of a character table as a class function.
ClassFunction table_row(const CharTableModP &table, const ClassData &cd, std::size_t i);

/// Induction from H to G:
///   psi^G(g) = |C_G(g)| * sum over H-classes c fusing to [g] of psi(c)/|C_H(c)|.
ClassFunction induce(const ClassFunction &psi, const ClassFusion &fus, const ClassData &cdh,
                     const ClassData &cdg);

/// Restriction along the fusion map.
ClassFunction restrict_cf(const ClassFunction &chi, const ClassFusion &fus,
                          const ClassData &cdh);

/// <a, b> = (1/|G|) sum_k |C_k| a(k) b(k*), as a least nonnegative residue.
/// For genuine characters with p > |G| this is the exact integer multiplicity.
std::uint64_t inner_product(const ClassFunction &a, const ClassFunction &b,
                            const ClassData &cd);

/// Permutation character of G on G/H via induction of the trivial character.
ClassFunction permutation_character(const ClassFusion &fus, const ClassData &cdh,
                                    const ClassData &cdg, std::uint64_t p);

/// Independent route: fixed-coset counts per G-class, as true integers.
/// counts[k] = #{ cosets Ht : Ht g_k = Ht } for the k-th class representative.
std::vector<std::uint64_t> fixed_coset_counts(const std::vector<Permutation> &coset_reps,
                                              const PermGroup &h, const ClassData &cdg);

} // namespace groupdepth
