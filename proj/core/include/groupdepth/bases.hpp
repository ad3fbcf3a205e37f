#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupdepth/classes.hpp"
#include "groupdepth/permgroup.hpp"

namespace groupdepth {

using Rational = boost::multiprecision::cpp_rational;

enum class BaseSizeMethod { exact_backtrack, random_witness, q_bound };

/// Exact base size of the action of G on G/H together with a verified
/// witness: conjugating elements x_2,...,x_b with H ∩ H^{x_2} ∩ ... = 1.
struct BaseSizeResult {
  unsigned value = 0;
  std::vector<Permutation> witness; // the b-1 nontrivial conjugators
  BaseSizeMethod method = BaseSizeMethod::exact_backtrack;
};

/// Ordered backtracking over the points of the coset action with
/// stabilizer-orbit pruning; deterministic (points ascending). Requires a
/// core-free H and index within limits.backtrack_index.
BaseSizeResult base_size_exact(const PermGroup &g, const PermGroup &h,
                               const Limits &limits = {});

/// Seeded search for x with H ∩ H^x = 1, which proves b = 2 and hence
/// depth 3. Exhausting the trials is inconclusive. Any returned witness has
/// been re-verified by explicit intersection.
std::optional<Permutation> random_base2_witness(const PermGroup &g, const PermGroup &h,
                                                unsigned trials, std::uint64_t seed);

/// Explicit intersection of H with its conjugates by the witness elements;
/// true iff the intersection is trivial.
bool verify_base_witness(const PermGroup &h, const std::vector<Permutation> &witness);

/// The fixed-point-ratio sum over prime-order classes bounding the
/// probability that t uniformly random points fail to form a base:
///   Q = sum |x_i^G| (chi(x_i)/n)^t over prime-order class reps x_i,
/// with chi the permutation character and n the index. Exact rational.
struct QBound {
  unsigned t = 2;
  Rational value;
  bool proves_base_bound = false; // value < 1 => b <= t => depth <= 2t-1
  unsigned depth_bound = 0;       // 2t-1 when proved
};

QBound q_bound(const ClassData &cdg, const std::vector<std::uint64_t> &perm_char_counts,
               unsigned t);

/// Exact probability that a uniformly random ordered pair of points has a
/// nontrivial stabilizer, for a faithful transitive action. Brute force,
/// intended for small degrees.
Rational exact_nonbase_probability_pairs(const PermGroup &action_image);

/// depth <= 2b - 1.
constexpr unsigned depth_upper_from_base(unsigned b) { return 2 * b - 1; }

} // namespace groupdepth
