#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "groupdepth/limits.hpp"
#include "groupdepth/perm.hpp"

namespace groupdepth {

using BigInt = boost::multiprecision::cpp_int;

class PermGroup;
struct CosetAction;
CosetAction coset_action(const PermGroup &g, const PermGroup &h, const Limits &limits);

/// Base and strong generating set with Schreier-vector transversals.
///
/// Base points are chosen by a priority vector (default: natural point
/// order, i.e. smallest moved point first), which keeps construction
/// deterministic for fixed input generators.
class StabilizerChain {
public:
  struct Level {
    Permutation::Point base = 0;
    std::vector<Permutation> gens;     // strong generators active at this level
    std::vector<Permutation> inv_gens; // aligned inverses
    std::vector<std::int32_t> orbit_pos; // point -> orbit index or -1
    std::vector<Permutation::Point> orbit; // BFS discovery order
    std::vector<std::int32_t> sv_gen;      // Schreier vector: arriving gen index
    std::vector<Permutation::Point> sv_parent;
  };

  StabilizerChain() = default;

  /// Deterministic Schreier-Sims; base points are the smallest moved
  /// points, taken in discovery order.
  static StabilizerChain build(unsigned degree, const std::vector<Permutation> &gens);

  /// Monte Carlo construction certified by the known target order; falls
  /// back to the deterministic closure if random sifting stalls.
  static StabilizerChain build_known_order(unsigned degree,
                                           const std::vector<Permutation> &gens,
                                           const BigInt &order);

  unsigned degree() const { return degree_; }
  const std::vector<Level> &levels() const { return levels_; }
  BigInt order() const;

  /// Transversal element u with u(base(level)) = point.
  Permutation transversal(std::size_t level, unsigned point) const;

  /// Strip g through the chain starting at `from`. Returns the residue and
  /// the level at which sifting stopped (== levels().size() on success).
  std::pair<Permutation, std::size_t> sift(const Permutation &g, std::size_t from = 0) const;

  bool contains(const Permutation &g) const;

  /// All strong generators fixing the first `n_base_points` base points.
  std::vector<Permutation> stabilizer_gens(std::size_t n_base_points) const;

private:
  unsigned degree_ = 1;
  std::vector<Level> levels_;

  void insert_generator(const Permutation &g, std::size_t max_level);
  void extend_orbit(std::size_t level);
  void deterministic_closure();
  std::size_t owning_levels(const Permutation &g) const;
};

/// A finite permutation group given by generators, with exact order and
/// membership via a stabilizer chain. Immutable after construction.
class PermGroup {
public:
  PermGroup() : PermGroup(1) {}

  /// Trivial group of the given degree.
  explicit PermGroup(unsigned degree);

  PermGroup(unsigned degree, std::vector<Permutation> gens);

  /// Certified Monte Carlo construction for a group of known order.
  static PermGroup with_known_order(unsigned degree, std::vector<Permutation> gens,
                                    const BigInt &order);

  unsigned degree() const { return degree_; }
  const BigInt &order() const { return order_; }
  const std::vector<Permutation> &generators() const { return gens_; }
  const StabilizerChain &chain() const { return chain_; }
  bool is_trivial() const { return order_ == 1; }

  bool contains(const Permutation &g) const;
  bool contains_subgroup(const PermGroup &h) const;

  Permutation random_element(std::mt19937_64 &rng) const;

  /// Visit every element; stop early if the callback returns false.
  /// Iteration order is deterministic for a fixed chain.
  void for_each_element(const std::function<bool(const Permutation &)> &f) const;

  PermGroup point_stabilizer(unsigned point) const;
  PermGroup pointwise_stabilizer(const std::vector<unsigned> &points) const;
  PermGroup derived_subgroup() const;
  PermGroup normal_closure(const std::vector<Permutation> &seeds) const;

  /// N_G(K) by scanning all elements of G; requires |G| <= limits.max_order.
  PermGroup normalizer_of(const PermGroup &k, const Limits &limits = {}) const;

  /// C_G(x) via the conjugation orbit of x and its Schreier generators,
  /// certified by |C| * |x^G| = |G|.
  PermGroup centralizer(const Permutation &x, const Limits &limits = {}) const;

private:
  unsigned degree_;
  std::vector<Permutation> gens_;
  StabilizerChain chain_;
  BigInt order_;

  PermGroup(unsigned degree, std::vector<Permutation> gens, StabilizerChain chain);

  friend struct CosetAction;
  friend CosetAction coset_action(const PermGroup &, const PermGroup &, const Limits &);
};

bool is_subgroup(const PermGroup &h, const PermGroup &g);
bool is_normal(const PermGroup &h, const PermGroup &g);

/// H^g.
PermGroup conjugate_subgroup(const PermGroup &h, const Permutation &g);

/// Conjugating element mapping x to y in G, if one exists. Searches the
/// conjugation orbit after filtering by element order and cycle type.
std::optional<Permutation> is_conjugate(const PermGroup &g, const Permutation &x,
                                        const Permutation &y, const Limits &limits = {});

/// The transitive action of G on the right cosets of H, with transversal
/// and kernel. The kernel equals the normal core of H in G.
struct CosetAction {
  PermGroup image;                      // degree |G:H|
  std::vector<Permutation> gen_images;  // aligned with G.generators()
  std::vector<Permutation> coset_reps;  // rep[i] maps coset 0 to coset i
  PermGroup kernel;                     // subgroup of G, original degree
};

inline CosetAction coset_action(const PermGroup &g, const PermGroup &h) {
  return coset_action(g, h, Limits{});
}

} // namespace groupdepth
