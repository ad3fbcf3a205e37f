#include "groupdepth/bases.hpp"

#include <algorithm>

#include "groupdepth/modp.hpp"

namespace groupdepth {

namespace {

// orbit minima of <gens> on {0..degree-1} \ chosen, skipping fixed points
std::vector<unsigned> orbit_representatives(const PermGroup &s, unsigned degree,
                                            const std::vector<unsigned> &chosen) {
  std::vector<char> taken(degree, 0);
  for (unsigned c : chosen)
    taken[c] = 1;
  std::vector<int> orbit_of(degree, -1);
  std::vector<unsigned> reps;
  for (unsigned p = 0; p < degree; ++p) {
    if (orbit_of[p] >= 0 || taken[p])
      continue;
    // BFS the orbit of p
    std::vector<unsigned> queue{p};
    orbit_of[p] = static_cast<int>(p);
    bool moved = false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      for (const auto &gen : s.generators()) {
        unsigned q = gen[queue[qi]];
        if (q != queue[qi])
          moved = true;
        if (orbit_of[q] < 0) {
          orbit_of[q] = static_cast<int>(p);
          queue.push_back(q);
        }
      }
    if (moved)
      reps.push_back(p); // a fixed point cannot shrink the stabilizer
  }
  return reps;
}

bool base_search(const PermGroup &stab, unsigned degree, unsigned remaining,
                 std::vector<unsigned> &chosen, std::vector<unsigned> &result) {
  if (stab.order() == 1) {
    result = chosen;
    return true;
  }
  if (remaining == 0)
    return false;
  // the stabilizer can shrink by at most a factor of `degree` per point
  BigInt reachable = 1;
  for (unsigned i = 0; i < remaining; ++i) {
    reachable *= degree;
    if (reachable >= stab.order())
      break;
  }
  if (reachable < stab.order())
    return false;

  for (unsigned p : orbit_representatives(stab, degree, chosen)) {
    chosen.push_back(p);
    PermGroup next = stab.point_stabilizer(p);
    if (base_search(next, degree, remaining - 1, chosen, result))
      return true;
    chosen.pop_back();
  }
  return false;
}

} // namespace

BaseSizeResult base_size_exact(const PermGroup &g, const PermGroup &h,
                               const Limits &limits) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("base size requires H <= G");
  BigInt index = g.order() / h.order();
  if (index > limits.backtrack_index)
    throw LimitError("index " + index.str() + " exceeds the backtrack bound " +
                     std::to_string(limits.backtrack_index));

  auto action = coset_action(g, h, limits);
  if (action.kernel.order() != 1)
    throw std::invalid_argument("base size is defined for core-free subgroups only");

  BaseSizeResult res;
  res.method = BaseSizeMethod::exact_backtrack;
  if (g.order() == 1)
    return res; // empty tuple is a base of the trivial group

  const unsigned degree = action.image.degree();
  for (unsigned t = 1;; ++t) {
    std::vector<unsigned> chosen, points;
    if (base_search(action.image, degree, t, chosen, points)) {
      res.value = static_cast<unsigned>(points.size());
      // independent re-verification through a fresh pointwise stabilizer
      if (action.image.pointwise_stabilizer(points).order() != 1)
        throw InternalError("base candidate fails the stabilizer check");
      for (unsigned p : points)
        if (p != 0)
          res.witness.push_back(action.coset_reps[p]);
      if (!verify_base_witness(h, res.witness))
        throw InternalError("base witness fails explicit intersection");
      return res;
    }
    if (t > degree)
      throw InternalError("base search exceeded the action degree");
  }
}

bool verify_base_witness(const PermGroup &h, const std::vector<Permutation> &witness) {
  // explicit intersection H ∩ H^{x_1} ∩ ... by element filtering
  std::vector<PermGroup> conj;
  conj.reserve(witness.size());
  for (const auto &x : witness)
    conj.push_back(conjugate_subgroup(h, x));
  bool trivial = true;
  h.for_each_element([&](const Permutation &e) {
    if (e.is_identity())
      return true;
    for (const auto &c : conj)
      if (!c.contains(e))
        return true;
    trivial = false;
    return false;
  });
  return trivial;
}

std::optional<Permutation> random_base2_witness(const PermGroup &g, const PermGroup &h,
                                                unsigned trials, std::uint64_t seed) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("witness search requires H <= G");
  if (h.order() == 1)
    return Permutation(g.degree());
  // |H ∩ H^x| >= |H|^2 / |G|, so a witness needs |H|^2 <= |G|
  if (h.order() * h.order() > g.order())
    return std::nullopt;

  std::mt19937_64 rng(seed);
  for (unsigned i = 0; i < trials; ++i) {
    Permutation x = g.random_element(rng);
    if (verify_base_witness(h, {x}))
      return x;
  }
  return std::nullopt;
}

QBound q_bound(const ClassData &cdg, const std::vector<std::uint64_t> &perm_char_counts,
               unsigned t) {
  if (perm_char_counts.size() != cdg.count())
    throw std::invalid_argument("permutation character has the wrong length");
  if (t < 2)
    throw std::invalid_argument("the bound needs t >= 2");
  QBound out;
  out.t = t;
  const std::uint64_t n = perm_char_counts[0];
  Rational sum = 0;
  for (std::size_t i = 0; i < cdg.count(); ++i) {
    if (!is_prime(cdg.element_orders[i]))
      continue;
    Rational ratio(perm_char_counts[i], n);
    Rational term = cdg.sizes[i];
    for (unsigned k = 0; k < t; ++k)
      term *= ratio;
    sum += term;
  }
  out.value = sum;
  if (sum < 1) {
    out.proves_base_bound = true;
    out.depth_bound = 2 * t - 1;
  }
  return out;
}

Rational exact_nonbase_probability_pairs(const PermGroup &action_image) {
  const unsigned n = action_image.degree();
  std::uint64_t bad = 0;
  for (unsigned a = 0; a < n; ++a) {
    PermGroup sa = action_image.point_stabilizer(a);
    for (unsigned b = 0; b < n; ++b)
      if (sa.point_stabilizer(b).order() != 1)
        ++bad;
  }
  return Rational(bad, std::uint64_t{n} * n);
}

} // namespace groupdepth
