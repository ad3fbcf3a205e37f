#include "groupdepth/classes.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <unordered_set>

namespace groupdepth {

namespace {

// Packed-key codecs. Keys compare like the image vectors they encode, so
// the lex-minimal key identifies the canonical class representative.
struct SmallCodec {
  using Key = std::uint64_t;
  unsigned degree;

  Key pack(const Permutation::Point *img) const {
    Key k = 0;
    for (unsigned i = 0; i < 16; ++i) {
      k <<= 4;
      if (i < degree)
        k |= img[i];
    }
    return k;
  }
  void unpack(Key k, Permutation::Point *out) const {
    for (unsigned i = 0; i < degree; ++i)
      out[i] = static_cast<Permutation::Point>((k >> (4 * (15 - i))) & 0xF);
  }
};

struct ByteCodec {
  using Key = std::string;
  unsigned degree;
  bool wide; // two bytes per point when degree > 256

  Key pack(const Permutation::Point *img) const {
    Key k;
    if (!wide) {
      k.resize(degree);
      for (unsigned i = 0; i < degree; ++i)
        k[i] = static_cast<char>(img[i]);
    } else {
      k.resize(2 * degree);
      for (unsigned i = 0; i < degree; ++i) {
        k[2 * i] = static_cast<char>(img[i] >> 8);
        k[2 * i + 1] = static_cast<char>(img[i] & 0xff);
      }
    }
    return k;
  }
  void unpack(const Key &k, Permutation::Point *out) const {
    if (!wide) {
      for (unsigned i = 0; i < degree; ++i)
        out[i] = static_cast<unsigned char>(k[i]);
    } else {
      for (unsigned i = 0; i < degree; ++i)
        out[i] = static_cast<Permutation::Point>(
            (static_cast<unsigned char>(k[2 * i]) << 8) |
            static_cast<unsigned char>(k[2 * i + 1]));
    }
  }
};

// order and cycle type straight from an image array
void element_invariant(const Permutation::Point *img, unsigned degree,
                       std::uint64_t &order, std::vector<unsigned> &type) {
  static thread_local std::vector<bool> seen;
  seen.assign(degree, false);
  order = 1;
  type.clear();
  for (unsigned i = 0; i < degree; ++i) {
    if (seen[i])
      continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    if (len >= 2)
      type.push_back(len);
    order = std::lcm(order, static_cast<std::uint64_t>(len));
  }
  std::sort(type.begin(), type.end());
}

template <class Codec> struct Enumeration {
  using Key = typename Codec::Key;

  struct FoundClass {
    std::vector<Key> elements; // sorted
    Key min_key;
    std::uint64_t element_order;
    std::vector<unsigned> cycle_type;
  };

  const PermGroup &g;
  Codec codec;
  std::uint64_t group_order;
  const Limits &limits;

  std::vector<FoundClass> classes;
  std::map<std::pair<std::uint64_t, std::vector<unsigned>>, std::vector<unsigned>> by_invariant;
  std::uint64_t covered = 0;

  Enumeration(const PermGroup &g_, Codec codec_, std::uint64_t order_, const Limits &lim)
      : g(g_), codec(codec_), group_order(order_), limits(lim) {}

  bool known(const Key &k, std::uint64_t order, const std::vector<unsigned> &type) const {
    auto it = by_invariant.find({order, type});
    if (it == by_invariant.end())
      return false;
    for (unsigned c : it->second) {
      const auto &v = classes[c].elements;
      if (std::binary_search(v.begin(), v.end(), k))
        return true;
    }
    return false;
  }

  // conjugation-orbit BFS from x; returns the class index
  unsigned expand_class(const Permutation &x) {
    const unsigned degree = g.degree();
    std::vector<const Permutation *> gens;
    for (const auto &gen : g.generators())
      gens.push_back(&gen);

    std::unordered_set<Key> visited;
    std::vector<Key> queue;
    Key start = codec.pack(x.images().data());
    visited.insert(start);
    queue.push_back(start);
    Key min_key = start;

    std::vector<Permutation::Point> cur(degree), img(degree);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      codec.unpack(queue[qi], cur.data());
      for (const Permutation *gen : gens) {
        const auto &gv = gen->images();
        for (unsigned i = 0; i < degree; ++i)
          img[gv[i]] = gv[cur[i]];
        Key k = codec.pack(img.data());
        if (visited.insert(k).second) {
          if (covered + visited.size() > group_order)
            throw InternalError("conjugacy class enumeration overran the group order");
          queue.push_back(k);
          if (k < min_key)
            min_key = k;
        }
      }
    }

    FoundClass fc;
    fc.elements.assign(visited.begin(), visited.end());
    std::sort(fc.elements.begin(), fc.elements.end());
    fc.min_key = min_key;
    codec.unpack(min_key, cur.data());
    element_invariant(cur.data(), degree, fc.element_order, fc.cycle_type);

    covered += fc.elements.size();
    classes.push_back(std::move(fc));
    if (classes.size() > limits.max_classes)
      throw LimitError("class count exceeds the configured cap of " +
                       std::to_string(limits.max_classes));
    unsigned idx = static_cast<unsigned>(classes.size() - 1);
    by_invariant[{classes[idx].element_order, classes[idx].cycle_type}].push_back(idx);
    return idx;
  }

  void add_if_new(const Permutation &x) {
    std::uint64_t order;
    std::vector<unsigned> type;
    element_invariant(x.images().data(), g.degree(), order, type);
    Key k = codec.pack(x.images().data());
    if (known(k, order, type))
      return;
    unsigned c = expand_class(x);
    // powers of the new representative often hit undiscovered classes
    Permutation p = x;
    for (std::uint64_t e = 2; e < classes[c].element_order; ++e) {
      p = p * x;
      add_if_new(p);
    }
  }

  ClassData run(std::uint64_t seed) {
    add_if_new(Permutation(g.degree()));
    for (const auto &gen : g.generators())
      add_if_new(gen);

    std::mt19937_64 rng(seed);
    std::uint64_t attempts = 0;
    while (covered < group_order) {
      if (++attempts > 512 * group_order + 100000)
        throw InternalError("class discovery failed to converge");
      add_if_new(g.random_element(rng));
    }

    // canonical order: identity first via element order 1, then ascending
    // element order, ascending size, minimal representative
    std::vector<unsigned> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::sort(perm.begin(), perm.end(), [&](unsigned a, unsigned b) {
      const auto &ca = classes[a], &cb = classes[b];
      if (ca.element_order != cb.element_order)
        return ca.element_order < cb.element_order;
      if (ca.elements.size() != cb.elements.size())
        return ca.elements.size() < cb.elements.size();
      return ca.min_key < cb.min_key;
    });

    ClassData cd;
    cd.degree = g.degree();
    cd.group_order = group_order;
    const unsigned s = static_cast<unsigned>(classes.size());
    cd.reps.reserve(s);
    std::vector<Permutation::Point> buf(g.degree());
    for (unsigned i = 0; i < s; ++i) {
      const auto &fc = classes[perm[i]];
      codec.unpack(fc.min_key, buf.data());
      cd.reps.emplace_back(buf);
      cd.sizes.push_back(fc.elements.size());
      cd.centralizer_orders.push_back(group_order / fc.elements.size());
      cd.element_orders.push_back(fc.element_order);
    }
    if (cd.sizes[0] != 1 || cd.element_orders[0] != 1)
      throw InternalError("canonical class order does not start at the identity");

    // merge the per-class key vectors into one global sorted index
    std::vector<Key> all_keys;
    std::vector<std::uint16_t> all_ids;
    all_keys.reserve(group_order);
    all_ids.reserve(group_order);
    {
      // k-way merge by repeated min scan; class counts are small
      std::vector<std::size_t> pos(s, 0);
      std::vector<unsigned> src(s);
      for (unsigned i = 0; i < s; ++i)
        src[i] = perm[i];
      for (std::uint64_t done = 0; done < group_order; ++done) {
        int best = -1;
        for (unsigned i = 0; i < s; ++i) {
          const auto &v = classes[src[i]].elements;
          if (pos[i] < v.size() &&
              (best < 0 || v[pos[i]] < classes[src[best]].elements[pos[best]]))
            best = static_cast<int>(i);
        }
        all_keys.push_back(classes[src[best]].elements[pos[best]]);
        all_ids.push_back(static_cast<std::uint16_t>(best));
        ++pos[best];
      }
    }
    if constexpr (std::is_same_v<Key, std::uint64_t>)
      cd.index = ElementIndex(g.degree(), std::move(all_keys), {}, std::move(all_ids));
    else
      cd.index = ElementIndex(g.degree(), {}, std::move(all_keys), std::move(all_ids));

    for (unsigned i = 0; i < s; ++i) {
      auto ic = cd.class_of(cd.reps[i].inverse());
      if (!ic)
        throw InternalError("inverse of a class representative not found");
      cd.inverse_class.push_back(*ic);
    }

    // consistency: partition and centralizer identities
    std::uint64_t total = std::accumulate(cd.sizes.begin(), cd.sizes.end(), std::uint64_t{0});
    if (total != group_order)
      throw InternalError("class sizes do not sum to the group order");
    for (unsigned i = 0; i < s; ++i) {
      if (cd.sizes[i] * cd.centralizer_orders[i] != group_order)
        throw InternalError("centralizer order identity failed");
      if (cd.inverse_class[cd.inverse_class[i]] != i)
        throw InternalError("inverse-class map is not an involution");
      if (cd.element_orders[cd.inverse_class[i]] != cd.element_orders[i])
        throw InternalError("inverse class changes the element order");
    }
    return cd;
  }
};

} // namespace

// ---------------------------------------------------------------------------
// ElementIndex

ElementIndex::ElementIndex(unsigned degree, std::vector<std::uint64_t> small_keys,
                           std::vector<std::string> big_keys,
                           std::vector<std::uint16_t> class_ids)
    : degree_(degree), small_keys_(std::move(small_keys)), big_keys_(std::move(big_keys)),
      class_ids_(std::move(class_ids)) {}

std::uint64_t ElementIndex::pack_small(const Permutation &p) {
  SmallCodec c{p.degree()};
  return c.pack(p.images().data());
}

std::string ElementIndex::pack_big(const Permutation &p) {
  ByteCodec c{p.degree(), p.degree() > 256};
  return c.pack(p.images().data());
}

std::optional<unsigned> ElementIndex::class_of(const Permutation &p) const {
  if (p.degree() != degree_)
    return std::nullopt;
  if (fits_small(degree_)) {
    std::uint64_t k = pack_small(p);
    auto it = std::lower_bound(small_keys_.begin(), small_keys_.end(), k);
    if (it == small_keys_.end() || *it != k)
      return std::nullopt;
    return class_ids_[it - small_keys_.begin()];
  }
  std::string k = pack_big(p);
  auto it = std::lower_bound(big_keys_.begin(), big_keys_.end(), k);
  if (it == big_keys_.end() || *it != k)
    return std::nullopt;
  return class_ids_[it - big_keys_.begin()];
}

void ElementIndex::for_each_in_class(unsigned cls,
                                     const std::function<void(const Permutation &)> &f) const {
  std::vector<Permutation::Point> buf(degree_);
  if (fits_small(degree_)) {
    SmallCodec c{degree_};
    for (std::size_t i = 0; i < small_keys_.size(); ++i)
      if (class_ids_[i] == cls) {
        c.unpack(small_keys_[i], buf.data());
        f(Permutation(buf));
      }
  } else {
    ByteCodec c{degree_, degree_ > 256};
    for (std::size_t i = 0; i < big_keys_.size(); ++i)
      if (class_ids_[i] == cls) {
        c.unpack(big_keys_[i], buf.data());
        f(Permutation(buf));
      }
  }
}

// ---------------------------------------------------------------------------

std::uint64_t ClassData::exponent() const {
  std::uint64_t e = 1;
  for (auto o : element_orders)
    e = std::lcm(e, o);
  return e;
}

ClassData conjugacy_classes(const PermGroup &g, const Limits &limits, std::uint64_t seed) {
  if (g.order() > limits.max_order)
    throw LimitError("group order " + g.order().str() + " exceeds the enumeration bound " +
                     std::to_string(limits.max_order));
  const std::uint64_t order = static_cast<std::uint64_t>(g.order());

  if (ElementIndex::fits_small(g.degree())) {
    Enumeration<SmallCodec> e(g, SmallCodec{g.degree()}, order, limits);
    return e.run(seed);
  }
  Enumeration<ByteCodec> e(g, ByteCodec{g.degree(), g.degree() > 256}, order, limits);
  return e.run(seed);
}

} // namespace groupdepth
