#include "groupdepth/induce.hpp"

namespace groupdepth {

ClassFusion class_fusion(const ClassData &cdh, const ClassData &cdg) {
  if (cdh.degree != cdg.degree)
    throw std::invalid_argument("fusion requires groups of one degree");
  ClassFusion fus;
  fus.map.reserve(cdh.count());
  for (std::size_t i = 0; i < cdh.count(); ++i) {
    auto c = cdg.class_of(cdh.reps[i]);
    if (!c)
      throw InternalError("H-class representative not found in G (corrupted class data)");
    fus.map.push_back(*c);
  }
  if (fus.map[0] != 0)
    throw InternalError("fusion does not send the identity class to the identity");
  for (std::size_t i = 0; i < cdh.count(); ++i) {
    if (cdh.element_orders[i] != cdg.element_orders[fus.map[i]])
      throw InternalError("fusion changes an element order");
    if (fus.map[cdh.inverse_class[i]] != cdg.inverse_class[fus.map[i]])
      throw InternalError("fusion does not commute with inversion");
  }
  return fus;
}

ClassFunction trivial_character(const ClassData &cd, std::uint64_t p) {
  return ClassFunction{p, cd.group_order,
                       std::vector<std::uint64_t>(cd.count(), 1 % p)};
}

ClassFunction table_row(const CharTableModP &table, const ClassData &cd, std::size_t i) {
  return ClassFunction{table.p, cd.group_order, table.values[i]};
}

ClassFunction induce(const ClassFunction &psi, const ClassFusion &fus, const ClassData &cdh,
                     const ClassData &cdg) {
  if (psi.size() != cdh.count() || psi.host_order != cdh.group_order)
    throw std::invalid_argument("class function host mismatch in induction");
  if (psi.p <= cdg.group_order)
    throw std::invalid_argument("induction requires p > |G|");
  const Fp f{psi.p};

  ClassFunction out{psi.p, cdg.group_order,
                    std::vector<std::uint64_t>(cdg.count(), 0)};
  for (std::size_t c = 0; c < cdh.count(); ++c) {
    if (psi.v[c] == 0)
      continue;
    unsigned k = fus.map[c];
    out.v[k] = f.add(out.v[k], f.mul(psi.v[c], f.inv(cdh.centralizer_orders[c] % f.p)));
  }
  for (std::size_t k = 0; k < cdg.count(); ++k)
    out.v[k] = f.mul(out.v[k], cdg.centralizer_orders[k] % f.p);
  return out;
}

ClassFunction restrict_cf(const ClassFunction &chi, const ClassFusion &fus,
                          const ClassData &cdh) {
  ClassFunction out{chi.p, cdh.group_order, {}};
  out.v.reserve(cdh.count());
  for (std::size_t i = 0; i < cdh.count(); ++i)
    out.v.push_back(chi.v[fus.map[i]]);
  return out;
}

std::uint64_t inner_product(const ClassFunction &a, const ClassFunction &b,
                            const ClassData &cd) {
  if (a.p != b.p || a.host_order != b.host_order || a.size() != b.size() ||
      a.size() != cd.count() || a.host_order != cd.group_order)
    throw std::invalid_argument("inner product host mismatch");
  const Fp f{a.p};
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < cd.count(); ++k)
    sum = f.add(sum, f.mul(cd.sizes[k] % f.p,
                           f.mul(a.v[k], b.v[cd.inverse_class[k]])));
  return f.mul(sum, f.inv(cd.group_order % f.p));
}

ClassFunction permutation_character(const ClassFusion &fus, const ClassData &cdh,
                                    const ClassData &cdg, std::uint64_t p) {
  return induce(trivial_character(cdh, p), fus, cdh, cdg);
}

std::vector<std::uint64_t> fixed_coset_counts(const std::vector<Permutation> &coset_reps,
                                              const PermGroup &h, const ClassData &cdg) {
  std::vector<std::uint64_t> counts(cdg.count(), 0);
  for (std::size_t k = 0; k < cdg.count(); ++k) {
    const Permutation &g = cdg.reps[k];
    for (const auto &t : coset_reps)
      if (h.contains(t * g * t.inverse()))
        ++counts[k];
  }
  return counts;
}

} // namespace groupdepth
