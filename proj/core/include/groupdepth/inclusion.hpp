#pragma once

#include <cstdint>
#include <vector>

#include "groupdepth/induce.hpp"

namespace groupdepth {

/// The r x s matrix of induced-character multiplicities: entry (i,j) is the
/// multiplicity of the j-th irreducible of G in the induction of the i-th
/// irreducible of H. Every row and column is nonzero for H <= G.
struct InclusionMatrix {
  std::vector<std::vector<std::uint64_t>> m;
  std::vector<std::uint64_t> row_degrees; // degrees of Irr(H)
  std::vector<std::uint64_t> col_degrees; // degrees of Irr(G)

  std::size_t rows() const { return m.size(); }
  std::size_t cols() const { return m.empty() ? 0 : m[0].size(); }

  /// Row/column ordering canonicalized by iterated integer-key refinement;
  /// independent of the prime used to compute the tables.
  InclusionMatrix canonical() const;
};

/// Builds the matrix and checks irredundancy plus the degree bookkeeping
/// identities on both sides.
InclusionMatrix inclusion_matrix(const CharTableModP &tabh, const CharTableModP &tabg,
                                 const ClassFusion &fus, const ClassData &cdh,
                                 const ClassData &cdg);

/// Permutation equivalence test (exhaustive over column permutations with
/// row-multiset comparison); intended for small matrices.
bool permutation_equivalent(const std::vector<std::vector<std::uint64_t>> &a,
                            const std::vector<std::vector<std::uint64_t>> &b);

/// Bit-packed boolean matrix for the support iteration.
class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j);
  bool all_true() const;
  bool subset_of(const BitMatrix &other) const; // entrywise implication
  bool operator==(const BitMatrix &other) const = default;

  /// Boolean product this * other.
  BitMatrix mult(const BitMatrix &other) const;
  BitMatrix transposed() const;

private:
  std::size_t rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Iterator over the supports of the alternating products
/// M, M M^T, M M^T M, ... Level k is the support of the k-th product; the
/// supports grow monotonically two levels apart.
class SupportPowers {
public:
  explicit SupportPowers(const InclusionMatrix &m);

  unsigned level() const { return level_; }
  const BitMatrix &current() const { return cur_; }
  const BitMatrix &previous_same_parity() const { return prev_same_parity_; }
  void advance();

private:
  BitMatrix m_, mt_;
  BitMatrix cur_;
  BitMatrix prev_, prev_same_parity_; // levels k-1 and k-2
  unsigned level_ = 1;
};

/// Smallest d with the (d-1)-st product support all-positive; valid only
/// for nontrivial core-free subgroups (then d >= 3 and termination is
/// guaranteed by connectivity of the induced-character graph).
unsigned depth_core_free(const InclusionMatrix &m, unsigned iteration_cap);

/// Smallest d >= 2 whose (d+1)-st support is contained in the (d-1)-st;
/// with nonnegative integer entries this is exactly the existential bound
/// criterion. Depths 1 and 2 are the orchestrator's normality fast paths.
unsigned depth_general(const InclusionMatrix &m, unsigned iteration_cap);

} // namespace groupdepth
