#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "groupdepth/limits.hpp"
#include "groupdepth/permgroup.hpp"

namespace groupdepth {

/// Membership index over all elements of an enumerated group: packed element
/// keys sorted globally, each tagged with its conjugacy class.
class ElementIndex {
public:
  ElementIndex() = default;
  ElementIndex(unsigned degree, std::vector<std::uint64_t> small_keys,
               std::vector<std::string> big_keys, std::vector<std::uint16_t> class_ids);

  unsigned degree() const { return degree_; }
  std::size_t size() const { return class_ids_.size(); }

  std::optional<unsigned> class_of(const Permutation &p) const;
  void for_each_in_class(unsigned cls,
                         const std::function<void(const Permutation &)> &f) const;

  static bool fits_small(unsigned degree) { return degree <= 16; }
  static std::uint64_t pack_small(const Permutation &p);
  static std::string pack_big(const Permutation &p);

private:
  unsigned degree_ = 0;
  std::vector<std::uint64_t> small_keys_; // used when degree <= 16
  std::vector<std::string> big_keys_;     // otherwise
  std::vector<std::uint16_t> class_ids_;  // parallel to the key array
};

/// The conjugacy classes of a finite permutation group, certified complete
/// by the size identity sum(sizes) = |G|. Classes are ordered canonically:
/// identity first, then ascending element order, ascending size, and
/// finally by the lexicographically minimal class representative.
struct ClassData {
  std::vector<Permutation> reps; // lex-minimal element of each class
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint64_t> centralizer_orders;
  std::vector<unsigned> inverse_class;
  std::vector<std::uint64_t> element_orders;
  std::uint64_t group_order = 1;
  unsigned degree = 1;
  ElementIndex index;

  std::size_t count() const { return reps.size(); }

  /// lcm of the element orders, i.e. the exponent of the group.
  std::uint64_t exponent() const;

  std::optional<unsigned> class_of(const Permutation &p) const { return index.class_of(p); }
};

/// Enumerates the conjugacy classes by seeded random discovery; each class
/// is expanded by a conjugation-orbit search, and completeness holds exactly
/// when the class sizes sum to |G|. The canonical ordering and canonical
/// representatives make the result independent of the seed.
ClassData conjugacy_classes(const PermGroup &g, const Limits &limits = {},
                            std::uint64_t seed = 0x5eed0f5eed);

} // namespace groupdepth
