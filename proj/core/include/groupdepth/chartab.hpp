#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "groupdepth/classes.hpp"
#include "groupdepth/modp.hpp"

namespace groupdepth {

/// The full complex irreducible character table of a finite group,
/// represented exactly by residues in F_p. The prime satisfies
/// p ≡ 1 (mod exp(G)) and p > |G|, so integer quantities (degrees, inner
/// products of genuine characters) equal their least nonnegative residues.
///
/// Rows are ordered by ascending degree, ties broken lexicographically on
/// the residue row. Columns follow the canonical class order of ClassData.
struct CharTableModP {
  std::uint64_t p = 2;
  std::uint64_t e = 1;     // exponent of the group
  std::uint64_t omega = 1; // fixed element of order e in F_p^*
  std::vector<std::uint64_t> degrees;
  std::vector<std::vector<std::uint64_t>> values;

  std::size_t size() const { return values.size(); }
};

/// Structure-constant matrix of the i-th class: entry (j,k) counts pairs
/// (x,y) with x in class i, y in class j and xy equal to the k-th class
/// representative. Verified against the row-sum identity
/// sum_k a_ijk |C_k| = |C_i| |C_j|.
std::vector<std::vector<std::uint64_t>> class_matrix(const ClassData &cd, unsigned i);

/// Dixon's method: simultaneous eigenspace splitting of the class matrices
/// over F_p. A caller-supplied prime must be valid (prime, ≡ 1 mod exp(G),
/// > |G|); otherwise the least such prime is chosen.
CharTableModP character_table(const ClassData &cd,
                              std::optional<std::uint64_t> prime = std::nullopt);

/// Exact orthogonality checks; throws InternalError on violation.
void verify_character_table(const CharTableModP &table, const ClassData &cd);

} // namespace groupdepth
