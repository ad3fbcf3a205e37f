#include "groupdepth/permgroup.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace groupdepth {

namespace {

std::vector<Permutation> clean_generators(unsigned degree,
                                          const std::vector<Permutation> &gens) {
  std::vector<Permutation> out;
  std::unordered_set<Permutation> seen;
  for (const auto &g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generators have inconsistent degrees");
    if (g.is_identity())
      continue;
    if (seen.insert(g).second)
      out.push_back(g);
  }
  return out;
}

// Uniformly mixed elements of <gens> for the Monte Carlo chain builder.
class ProductReplacer {
public:
  ProductReplacer(const std::vector<Permutation> &gens, unsigned degree,
                  std::uint64_t seed)
      : acc_(degree), rng_(seed) {
    if (gens.empty())
      return;
    while (pool_.size() < 8)
      pool_.push_back(gens[pool_.size() % gens.size()]);
    for (int i = 0; i < 60; ++i)
      step();
  }

  bool usable() const { return !pool_.empty(); }

  const Permutation &step() {
    std::uniform_int_distribution<std::size_t> d(0, pool_.size() - 1);
    std::size_t i = d(rng_), j = d(rng_);
    while (j == i)
      j = d(rng_);
    pool_[i] = pool_[i] * pool_[j];
    acc_ = acc_ * pool_[i];
    return acc_;
  }

private:
  std::vector<Permutation> pool_;
  Permutation acc_;
  std::mt19937_64 rng_;
};

// Stabilizer chain over an action domain whose strong generators carry
// preimages from the acting group. Used to split |G| into |image| * |kernel|
// for a homomorphism known only on generators; no closure is run, validity
// comes from the external order certificate.
class ShadowChain {
public:
  ShadowChain(unsigned degree, unsigned shadow_degree)
      : degree_(degree), sdeg_(shadow_degree) {}

  BigInt order() const {
    BigInt n = 1;
    for (const auto &lv : levels_)
      n *= static_cast<unsigned>(lv.orbit.size());
    return n;
  }

  std::pair<Permutation, Permutation> sift(Permutation img, Permutation pre) const {
    for (const auto &lv : levels_) {
      unsigned p = img[lv.base];
      if (lv.orbit_pos[p] < 0)
        return {std::move(img), std::move(pre)};
      while (p != lv.base) {
        img = img * lv.inv_gens[lv.sv_gen[p]];
        pre = pre * lv.inv_shadows[lv.sv_gen[p]];
        p = lv.sv_parent[p];
      }
    }
    return {std::move(img), std::move(pre)};
  }

  void offer(const Permutation &img, const Permutation &pre) {
    if (img.is_identity())
      return;
    std::size_t drop = 0;
    while (drop < levels_.size() && img[levels_[drop].base] == levels_[drop].base)
      ++drop;
    if (drop == levels_.size()) {
      unsigned best = 0;
      while (img[best] == best)
        ++best;
      Lv lv;
      lv.base = best;
      lv.orbit_pos.assign(degree_, -1);
      lv.sv_gen.assign(degree_, -1);
      lv.sv_parent.assign(degree_, 0);
      levels_.push_back(std::move(lv));
    }
    for (std::size_t l = 0; l <= drop && l < levels_.size(); ++l) {
      levels_[l].gens.push_back(img);
      levels_[l].inv_gens.push_back(img.inverse());
      levels_[l].shadows.push_back(pre);
      levels_[l].inv_shadows.push_back(pre.inverse());
      extend(l);
    }
  }

private:
  struct Lv {
    unsigned base = 0;
    std::vector<Permutation> gens, inv_gens, shadows, inv_shadows;
    std::vector<int> orbit_pos;
    std::vector<unsigned> orbit;
    std::vector<int> sv_gen;
    std::vector<unsigned> sv_parent;
  };

  void extend(std::size_t l) {
    Lv &lv = levels_[l];
    std::fill(lv.orbit_pos.begin(), lv.orbit_pos.end(), -1);
    lv.orbit.assign(1, lv.base);
    lv.orbit_pos[lv.base] = 0;
    for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
      unsigned p = lv.orbit[qi];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        unsigned q = lv.gens[gi][p];
        if (lv.orbit_pos[q] < 0) {
          lv.orbit_pos[q] = static_cast<int>(lv.orbit.size());
          lv.orbit.push_back(q);
          lv.sv_gen[q] = static_cast<int>(gi);
          lv.sv_parent[q] = p;
        }
      }
    }
  }

  unsigned degree_, sdeg_;
  std::vector<Lv> levels_;
};

} // namespace

// ---------------------------------------------------------------------------
// StabilizerChain

BigInt StabilizerChain::order() const {
  BigInt n = 1;
  for (const auto &lv : levels_)
    n *= static_cast<unsigned>(lv.orbit.size());
  return n;
}

Permutation StabilizerChain::transversal(std::size_t level, unsigned point) const {
  const Level &lv = levels_[level];
  assert(lv.orbit_pos[point] >= 0);
  std::vector<std::int32_t> path;
  unsigned p = point;
  while (p != lv.base) {
    path.push_back(lv.sv_gen[p]);
    p = lv.sv_parent[p];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = u * lv.gens[*it];
  return u;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation &g,
                                                          std::size_t from) const {
  Permutation residue = g;
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level &lv = levels_[l];
    unsigned p = residue[lv.base];
    if (lv.orbit_pos[p] < 0)
      return {std::move(residue), l};
    while (p != lv.base) {
      residue = residue * lv.inv_gens[lv.sv_gen[p]];
      p = lv.sv_parent[p];
    }
  }
  return {std::move(residue), levels_.size()};
}

bool StabilizerChain::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

std::vector<Permutation> StabilizerChain::stabilizer_gens(std::size_t n_base_points) const {
  if (n_base_points >= levels_.size())
    return {};
  return levels_[n_base_points].gens;
}

std::size_t StabilizerChain::owning_levels(const Permutation &g) const {
  std::size_t l = 0;
  while (l < levels_.size() && g[levels_[l].base] == levels_[l].base)
    ++l;
  return l; // g moves base of level l (or fixes all bases)
}

void StabilizerChain::extend_orbit(std::size_t level) {
  Level &lv = levels_[level];
  // rebuild the orbit BFS from scratch; Schreier trees stay shallow
  std::fill(lv.orbit_pos.begin(), lv.orbit_pos.end(), -1);
  lv.orbit.clear();
  lv.orbit.push_back(lv.base);
  lv.orbit_pos[lv.base] = 0;
  for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
    unsigned p = lv.orbit[qi];
    for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
      unsigned q = lv.gens[gi][p];
      if (lv.orbit_pos[q] < 0) {
        lv.orbit_pos[q] = static_cast<std::int32_t>(lv.orbit.size());
        lv.orbit.push_back(static_cast<Permutation::Point>(q));
        lv.sv_gen[q] = static_cast<std::int32_t>(gi);
        lv.sv_parent[q] = static_cast<Permutation::Point>(p);
      }
    }
  }
}

void StabilizerChain::insert_generator(const Permutation &g, std::size_t from) {
  std::size_t drop = owning_levels(g);
  if (drop == levels_.size()) {
    // g fixes every existing base point: open a new level at the smallest
    // point it moves
    unsigned best = degree_;
    for (unsigned p = 0; p < degree_; ++p)
      if (g[p] != p) {
        best = p;
        break;
      }
    assert(best < degree_ && "non-identity generator moves some point");
    Level lv;
    lv.base = static_cast<Permutation::Point>(best);
    lv.orbit_pos.assign(degree_, -1);
    lv.sv_gen.assign(degree_, -1);
    lv.sv_parent.assign(degree_, 0);
    levels_.push_back(std::move(lv));
  }
  for (std::size_t l = std::min(from, drop); l <= drop && l < levels_.size(); ++l) {
    levels_[l].gens.push_back(g);
    levels_[l].inv_gens.push_back(g.inverse());
    extend_orbit(l);
  }
}

void StabilizerChain::deterministic_closure() {
  if (levels_.empty())
    return;
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool clean = true;
    const std::size_t li = static_cast<std::size_t>(i);
    for (std::size_t oi = 0; oi < levels_[li].orbit.size() && clean; ++oi) {
      unsigned p = levels_[li].orbit[oi];
      Permutation u_p = transversal(li, p);
      for (std::size_t gi = 0; gi < levels_[li].gens.size() && clean; ++gi) {
        const Permutation &s = levels_[li].gens[gi];
        unsigned q = s[p];
        Permutation sg = u_p * s * transversal(li, q).inverse();
        if (sg.is_identity())
          continue;
        auto [residue, drop] = sift(sg, li + 1);
        if (!residue.is_identity()) {
          insert_generator(residue, li + 1);
          // drop is the deepest level whose generator set changed;
          // revalidate from there back up
          i = static_cast<std::ptrdiff_t>(drop);
          clean = false;
        }
      }
    }
    if (clean)
      --i;
  }
}

StabilizerChain StabilizerChain::build(unsigned degree, const std::vector<Permutation> &gens) {
  StabilizerChain c;
  c.degree_ = degree;
  for (const auto &g : gens)
    if (!g.is_identity())
      c.insert_generator(g, 0);
  c.deterministic_closure();
  return c;
}

StabilizerChain StabilizerChain::build_known_order(unsigned degree,
                                                   const std::vector<Permutation> &gens,
                                                   const BigInt &order) {
  StabilizerChain c;
  c.degree_ = degree;
  for (const auto &g : gens)
    if (!g.is_identity())
      c.insert_generator(g, 0);

  if (c.order() != order) {
    // fixed seed: chain content must not depend on caller state
    ProductReplacer pr(gens, degree, 0x9e3779b97f4a7c15ull ^ degree);
    int stall = 0;
    while (pr.usable() && c.order() < order && stall < 512) {
      auto [residue, drop] = c.sift(pr.step());
      if (!residue.is_identity()) {
        c.insert_generator(residue, std::min<std::size_t>(drop, 1));
        stall = 0;
      } else {
        ++stall;
      }
    }
    if (c.order() != order)
      c.deterministic_closure();
  }
  if (c.order() != order)
    throw InternalError("known-order chain construction produced order " +
                        c.order().str() + ", expected " + order.str());
  return c;
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(unsigned degree) : degree_(std::max(degree, 1u)) {
  chain_ = StabilizerChain::build(degree_, {});
  order_ = 1;
}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens)
    : degree_(std::max(degree, 1u)), gens_(clean_generators(degree_, gens)) {
  chain_ = StabilizerChain::build(degree_, gens_);
  order_ = chain_.order();
}

PermGroup::PermGroup(unsigned degree, std::vector<Permutation> gens, StabilizerChain chain)
    : degree_(degree), gens_(std::move(gens)), chain_(std::move(chain)) {
  order_ = chain_.order();
}

PermGroup PermGroup::with_known_order(unsigned degree, std::vector<Permutation> gens,
                                      const BigInt &order) {
  degree = std::max(degree, 1u);
  auto cleaned = clean_generators(degree, gens);
  auto chain = StabilizerChain::build_known_order(degree, cleaned, order);
  return PermGroup(degree, std::move(cleaned), std::move(chain));
}

bool PermGroup::contains(const Permutation &g) const {
  if (g.degree() != degree_)
    return false;
  return chain_.contains(g);
}

bool PermGroup::contains_subgroup(const PermGroup &h) const {
  for (const auto &g : h.generators())
    if (!contains(g))
      return false;
  return true;
}

Permutation PermGroup::random_element(std::mt19937_64 &rng) const {
  Permutation r(degree_);
  for (std::size_t l = 0; l < chain_.levels().size(); ++l) {
    const auto &orbit = chain_.levels()[l].orbit;
    std::uniform_int_distribution<std::size_t> d(0, orbit.size() - 1);
    r = chain_.transversal(l, orbit[d(rng)]) * r;
  }
  return r;
}

void PermGroup::for_each_element(const std::function<bool(const Permutation &)> &f) const {
  const auto &levels = chain_.levels();
  const std::size_t m = levels.size();
  if (m == 0) {
    f(Permutation(degree_));
    return;
  }
  // odometer over transversals, innermost digit at level 0
  std::vector<std::size_t> state(m, 0);
  // partial[l] = u_{m-1} * ... * u_l ; element = partial[0]
  std::vector<Permutation> partial(m + 1);
  partial[m] = Permutation(degree_);
  auto refresh = [&](std::size_t from) {
    for (std::size_t l = from + 1; l-- > 0;) {
      partial[l] =
          partial[l + 1] * chain_.transversal(l, levels[l].orbit[state[l]]);
      if (l == 0)
        break;
    }
  };
  refresh(m - 1);
  for (;;) {
    if (!f(partial[0]))
      return;
    std::size_t l = 0;
    while (l < m) {
      if (++state[l] < levels[l].orbit.size())
        break;
      state[l] = 0;
      ++l;
    }
    if (l == m)
      return;
    refresh(l);
  }
}

PermGroup PermGroup::point_stabilizer(unsigned point) const {
  if (point >= degree_)
    throw std::invalid_argument("stabilizer point out of range");

  // orbit of the point with transversal words; the Schreier generators of
  // the orbit action generate the stabilizer, certified by
  // |S| * |orbit| = |G|
  std::vector<int> pos(degree_, -1);
  std::vector<unsigned> orbit{point};
  std::vector<Permutation> words{Permutation(degree_)};
  pos[point] = 0;
  for (std::size_t qi = 0; qi < orbit.size(); ++qi)
    for (const auto &g : gens_) {
      unsigned q = g[orbit[qi]];
      if (pos[q] < 0) {
        pos[q] = static_cast<int>(orbit.size());
        orbit.push_back(q);
        words.push_back(words[qi] * g);
      }
    }
  if (orbit.size() == 1)
    return *this;

  if (order_ % orbit.size() != 0)
    throw InternalError("orbit size does not divide the group order");
  const BigInt target = order_ / orbit.size();

  std::vector<Permutation> sgens;
  StabilizerChain schain = StabilizerChain::build(degree_, sgens);
  for (std::size_t i = 0; i < orbit.size() && schain.order() < target; ++i)
    for (const auto &g : gens_) {
      unsigned q = g[orbit[i]];
      Permutation schreier = words[i] * g * words[pos[q]].inverse();
      if (!schain.contains(schreier)) {
        sgens.push_back(std::move(schreier));
        schain = StabilizerChain::build(degree_, sgens);
        if (schain.order() == target)
          break;
      }
    }
  if (schain.order() != target)
    throw InternalError("point stabilizer failed the order certificate");
  return PermGroup(degree_, std::move(sgens), std::move(schain));
}

PermGroup PermGroup::pointwise_stabilizer(const std::vector<unsigned> &points) const {
  for (unsigned p : points)
    if (p >= degree_)
      throw std::invalid_argument("stabilizer point out of range");
  PermGroup s = *this;
  for (unsigned p : points)
    s = s.point_stabilizer(p);
  return s;
}

PermGroup PermGroup::derived_subgroup() const {
  std::vector<Permutation> seeds;
  for (const auto &a : gens_)
    for (const auto &b : gens_) {
      Permutation c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity())
        seeds.push_back(std::move(c));
    }
  return normal_closure(seeds);
}

PermGroup PermGroup::normal_closure(const std::vector<Permutation> &seeds) const {
  std::vector<Permutation> s = clean_generators(degree_, seeds);
  StabilizerChain c = StabilizerChain::build(degree_, s);
  std::deque<Permutation> queue(s.begin(), s.end());
  while (!queue.empty()) {
    Permutation t = std::move(queue.front());
    queue.pop_front();
    for (const auto &g : gens_) {
      Permutation u = t.conjugated_by(g);
      if (!c.contains(u)) {
        s.push_back(u);
        c = StabilizerChain::build(degree_, s);
        queue.push_back(std::move(u));
      }
    }
  }
  return PermGroup(degree_, std::move(s), std::move(c));
}

PermGroup PermGroup::normalizer_of(const PermGroup &k, const Limits &limits) const {
  if (k.degree() != degree_)
    throw std::invalid_argument("normalizer argument degree mismatch");
  if (order_ > limits.max_order)
    throw LimitError("normalizer scan needs |G| <= " + std::to_string(limits.max_order) +
                     ", got " + order_.str());

  std::vector<Permutation> ngens = k.generators();
  StabilizerChain nchain = StabilizerChain::build(degree_, ngens);
  for_each_element([&](const Permutation &g) {
    if (nchain.contains(g))
      return true;
    for (const auto &kg : k.generators())
      if (!k.contains(kg.conjugated_by(g)))
        return true;
    ngens.push_back(g);
    nchain = StabilizerChain::build(degree_, ngens);
    return true;
  });
  return PermGroup(degree_, std::move(ngens), std::move(nchain));
}

PermGroup PermGroup::centralizer(const Permutation &x, const Limits &limits) const {
  if (!contains(x))
    throw std::invalid_argument("centralizer argument is not a group element");

  // conjugation orbit of x with transversal words
  std::unordered_map<Permutation, std::uint32_t> index;
  std::vector<Permutation> elems{x};
  std::vector<Permutation> words{Permutation(degree_)};
  index.emplace(x, 0);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto &g : gens_) {
      Permutation y = elems[qi].conjugated_by(g);
      if (index.emplace(y, static_cast<std::uint32_t>(elems.size())).second) {
        if (elems.size() >= limits.max_order)
          throw LimitError("conjugacy class exceeds the enumeration bound");
        elems.push_back(std::move(y));
        words.push_back(words[qi] * g);
      }
    }
  }

  const BigInt class_size = static_cast<std::uint64_t>(elems.size());
  if (order_ % class_size != 0)
    throw InternalError("class size does not divide the group order");
  const BigInt target = order_ / class_size;

  std::vector<Permutation> cgens;
  StabilizerChain cchain = StabilizerChain::build(degree_, cgens);
  for (std::size_t i = 0; i < elems.size() && cchain.order() < target; ++i) {
    for (const auto &g : gens_) {
      Permutation y = elems[i].conjugated_by(g);
      std::uint32_t j = index.at(y);
      Permutation schreier = words[i] * g * words[j].inverse();
      if (!cchain.contains(schreier)) {
        cgens.push_back(schreier);
        cchain = StabilizerChain::build(degree_, cgens);
        if (cchain.order() == target)
          break;
      }
    }
  }
  if (cchain.order() != target)
    throw InternalError("centralizer construction failed the order certificate");
  return PermGroup(degree_, std::move(cgens), std::move(cchain));
}

bool is_subgroup(const PermGroup &h, const PermGroup &g) {
  return h.degree() == g.degree() && g.contains_subgroup(h);
}

bool is_normal(const PermGroup &h, const PermGroup &g) {
  for (const auto &hg : h.generators())
    for (const auto &gg : g.generators())
      if (!h.contains(hg.conjugated_by(gg)))
        return false;
  return true;
}

PermGroup conjugate_subgroup(const PermGroup &h, const Permutation &g) {
  std::vector<Permutation> gens;
  gens.reserve(h.generators().size());
  for (const auto &x : h.generators())
    gens.push_back(x.conjugated_by(g));
  return PermGroup::with_known_order(h.degree(), std::move(gens), h.order());
}

std::optional<Permutation> is_conjugate(const PermGroup &g, const Permutation &x,
                                        const Permutation &y, const Limits &limits) {
  if (!g.contains(x) || !g.contains(y))
    throw std::invalid_argument("conjugacy test arguments must lie in the group");
  if (x == y)
    return Permutation(g.degree());
  if (x.order() != y.order() || x.cycle_type() != y.cycle_type())
    return std::nullopt;

  std::unordered_map<Permutation, std::uint32_t> index;
  std::vector<Permutation> elems{x};
  std::vector<Permutation> words{Permutation(g.degree())};
  index.emplace(x, 0);
  for (std::size_t qi = 0; qi < elems.size(); ++qi) {
    for (const auto &s : g.generators()) {
      Permutation z = elems[qi].conjugated_by(s);
      if (index.emplace(z, static_cast<std::uint32_t>(elems.size())).second) {
        Permutation w = words[qi] * s;
        if (z == y)
          return w;
        if (elems.size() >= limits.max_order)
          throw LimitError("conjugacy class exceeds the enumeration bound");
        elems.push_back(std::move(z));
        words.push_back(std::move(w));
      }
    }
  }
  return std::nullopt;
}

CosetAction coset_action(const PermGroup &g, const PermGroup &h, const Limits &limits) {
  if (!is_subgroup(h, g))
    throw std::invalid_argument("coset action requires H <= G");
  if (g.order() % h.order() != 0)
    throw InternalError("|H| does not divide |G|");
  BigInt index_big = g.order() / h.order();
  if (index_big > limits.max_index)
    throw LimitError("coset index " + index_big.str() + " exceeds the bound " +
                     std::to_string(limits.max_index));
  if (index_big + g.degree() > limits.max_degree || index_big + g.degree() > 65536)
    throw LimitError("coset action of index " + index_big.str() +
                     " exceeds the degree cap");
  const std::size_t n = static_cast<std::size_t>(index_big);

  const auto &gens = g.generators();
  std::vector<Permutation> reps{Permutation(g.degree())};
  std::vector<Permutation> inv_reps{Permutation(g.degree())};
  std::vector<std::vector<std::uint32_t>> action(gens.size());

  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Permutation z = reps[i] * gens[gi];
      std::size_t j = reps.size();
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (h.chain().contains(z * inv_reps[c])) {
          j = c;
          break;
        }
      }
      if (j == reps.size()) {
        if (reps.size() == n)
          throw InternalError("coset enumeration found more cosets than |G:H|");
        inv_reps.push_back(z.inverse());
        reps.push_back(std::move(z));
      }
      if (action[gi].size() <= i)
        action[gi].resize(i + 1);
      action[gi][i] = static_cast<std::uint32_t>(j);
    }
  }
  if (reps.size() != n)
    throw InternalError("coset enumeration terminated early");
  for (auto &col : action)
    col.resize(n);

  const unsigned action_degree = static_cast<unsigned>(std::max<std::size_t>(n, 1));
  std::vector<Permutation> gen_images;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::vector<Permutation::Point> img(action_degree);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = static_cast<Permutation::Point>(action[gi][i]);
    gen_images.emplace_back(std::move(img));
  }

  // Image order and kernel generators by a shadowed sift: each element of
  // the image chain carries a preimage in G, so an element sifting to the
  // identity action yields a kernel element. Certified complete once
  // |image| * |kernel| = |G|.
  ShadowChain shadow(action_degree, g.degree());
  std::vector<Permutation> kernel_gens;
  StabilizerChain kchain = StabilizerChain::build(g.degree(), kernel_gens);

  auto feed = [&](const Permutation &img, const Permutation &pre) {
    auto [rimg, rshadow] = shadow.sift(img, pre);
    if (!rimg.is_identity()) {
      shadow.offer(rimg, rshadow);
      return true;
    }
    if (!rshadow.is_identity() && !kchain.contains(rshadow)) {
      kernel_gens.push_back(rshadow);
      kchain = StabilizerChain::build(g.degree(), kernel_gens);
      return true;
    }
    return false;
  };

  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    feed(gen_images[gi], gens[gi]);

  if (!gens.empty() && shadow.order() * kchain.order() != g.order()) {
    std::mt19937_64 rng(0x5ad0e5 ^ n);
    std::vector<std::pair<Permutation, Permutation>> pool;
    for (std::size_t gi = 0; gi < gens.size(); ++gi)
      pool.emplace_back(gen_images[gi], gens[gi]);
    while (pool.size() < 8)
      pool.push_back(pool[pool.size() % gens.size()]);
    std::pair<Permutation, Permutation> acc{Permutation(action_degree),
                                            Permutation(g.degree())};
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    int stall = 0;
    while (stall < 4096 && shadow.order() * kchain.order() != g.order()) {
      std::size_t i = pick(rng), j = pick(rng);
      while (j == i)
        j = pick(rng);
      pool[i].first = pool[i].first * pool[j].first;
      pool[i].second = pool[i].second * pool[j].second;
      acc.first = acc.first * pool[i].first;
      acc.second = acc.second * pool[i].second;
      stall = feed(acc.first, acc.second) ? 0 : stall + 1;
    }
  }
  if (shadow.order() * kchain.order() != g.order())
    throw InternalError("coset action kernel failed the order certificate");

  CosetAction result{
      PermGroup::with_known_order(action_degree, gen_images, shadow.order()),
      std::move(gen_images),
      std::move(reps),
      PermGroup(g.degree(), std::move(kernel_gens), std::move(kchain)),
  };
  return result;
}

} // namespace groupdepth
