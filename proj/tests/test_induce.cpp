#include <doctest.h>

#include <set>

#include "groupdepth/groups.hpp"
#include "groupdepth/induce.hpp"

using namespace groupdepth;

namespace {

struct Pair {
  PermGroup g, h;
  ClassData cdg, cdh;
  CharTableModP tabg, tabh;
  ClassFusion fus;

  Pair(PermGroup g_, PermGroup h_) : g(std::move(g_)), h(std::move(h_)) {
    cdg = conjugacy_classes(g);
    cdh = conjugacy_classes(h);
    tabg = character_table(cdg);
    tabh = character_table(cdh, tabg.p);
    fus = class_fusion(cdh, cdg);
  }
};

PermGroup s3_in_s4() {
  return PermGroup(4, {Permutation::parse_cycles("(1,2)", 4),
                       Permutation::parse_cycles("(1,2,3)", 4)});
}

} // namespace

TEST_CASE("fusion of S3 into S4 hits the expected cycle types") {
  Pair p(symmetric_group(4), s3_in_s4());
  REQUIRE(p.fus.map.size() == 3);
  CHECK(p.fus.map[0] == 0);
  std::set<unsigned> targets(p.fus.map.begin(), p.fus.map.end());
  CHECK(targets.size() == 3); // identity, transpositions, 3-cycles
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(p.cdh.element_orders[i] == p.cdg.element_orders[p.fus.map[i]]);
}

TEST_CASE("fusion of D8 into S4 merges two classes") {
  Pair p(symmetric_group(4), dihedral_group(4));
  REQUIRE(p.cdh.count() == 5);
  std::set<unsigned> targets(p.fus.map.begin(), p.fus.map.end());
  CHECK(targets.size() == 4); // the two reflection classes fuse together
}

TEST_CASE("fusion along H = G is the identity") {
  auto g = symmetric_group(4);
  auto cd = conjugacy_classes(g);
  auto fus = class_fusion(cd, cd);
  for (unsigned i = 0; i < fus.map.size(); ++i)
    CHECK(fus.map[i] == i);
}

TEST_CASE("induction of the trivial character is the permutation character") {
  Pair p(symmetric_group(4), s3_in_s4());
  auto chi = permutation_character(p.fus, p.cdh, p.cdg, p.tabg.p);
  // canonical S4 class order: 1, (2,2), 2-cycles, 3-cycles, 4-cycles
  CHECK(chi.v == std::vector<std::uint64_t>{4, 0, 2, 1, 0});
  CHECK(inner_product(chi, chi, p.cdg) == 2); // rank of the natural action

  // direct fixed-coset counting agrees
  auto action = coset_action(p.g, p.h);
  auto counts = fixed_coset_counts(action.coset_reps, p.h, p.cdg);
  CHECK(counts == chi.v);
}

TEST_CASE("induction from the trivial subgroup is the regular character") {
  auto g = symmetric_group(4);
  Pair p(g, PermGroup(4));
  auto reg = permutation_character(p.fus, p.cdh, p.cdg, p.tabg.p);
  CHECK(reg.v[0] == 24);
  for (std::size_t k = 1; k < reg.v.size(); ++k)
    CHECK(reg.v[k] == 0);
}

TEST_CASE("orthonormality of the irreducibles") {
  Pair p(symmetric_group(4), s3_in_s4());
  for (std::size_t i = 0; i < p.tabg.size(); ++i)
    for (std::size_t j = 0; j < p.tabg.size(); ++j)
      CHECK(inner_product(table_row(p.tabg, p.cdg, i), table_row(p.tabg, p.cdg, j),
                          p.cdg) == (i == j ? 1 : 0));
}

TEST_CASE("trivial constituent of any permutation character is single") {
  Pair p(alternating_group(5),
         PermGroup(5, {Permutation::parse_cycles("(1,2,3)", 5),
                       Permutation::parse_cycles("(1,2)(4,5)", 5)}));
  auto chi = permutation_character(p.fus, p.cdh, p.cdg, p.tabg.p);
  CHECK(inner_product(chi, trivial_character(p.cdg, p.tabg.p), p.cdg) == 1);
}

TEST_CASE("Frobenius reciprocity over full tables") {
  std::vector<Pair> pairs;
  pairs.emplace_back(symmetric_group(4), s3_in_s4());
  pairs.emplace_back(symmetric_group(4), dihedral_group(4));
  pairs.emplace_back(alternating_group(5),
                     PermGroup(5, {Permutation::parse_cycles("(1,2,3,4,5)", 5)}));
  for (Pair &p : pairs) {
    for (std::size_t i = 0; i < p.tabh.size(); ++i) {
      auto ind = induce(table_row(p.tabh, p.cdh, i), p.fus, p.cdh, p.cdg);
      CHECK(ind.v[0] ==
            p.tabh.degrees[i] * (p.cdg.group_order / p.cdh.group_order) % p.tabg.p);
      for (std::size_t j = 0; j < p.tabg.size(); ++j) {
        auto res = restrict_cf(table_row(p.tabg, p.cdg, j), p.fus, p.cdh);
        CHECK(inner_product(ind, table_row(p.tabg, p.cdg, j), p.cdg) ==
              inner_product(table_row(p.tabh, p.cdh, i), res, p.cdh));
      }
    }
  }
}

TEST_CASE("restriction of the standard character of S4 to S3") {
  Pair p(symmetric_group(4), s3_in_s4());
  // the standard degree-3 character: find the degree-3 row whose value on
  // transpositions is 1 (the other degree-3 row has -1 there)
  auto perm_char = permutation_character(p.fus, p.cdh, p.cdg, p.tabg.p);
  Fp f{p.tabg.p};
  ClassFunction standard{p.tabg.p, p.cdg.group_order, perm_char.v};
  for (auto &v : standard.v)
    v = f.sub(v, 1); // perm char minus trivial
  auto res = restrict_cf(standard, p.fus, p.cdh);
  CHECK(res.v[0] == 3);
  // <chi_H, standard of S3> = 1
  std::size_t std3 = 2; // degree-2 row of S3 (degrees 1,1,2)
  REQUIRE(p.tabh.degrees[std3] == 2);
  CHECK(inner_product(res, table_row(p.tabh, p.cdh, std3), p.cdh) == 1);
  // restriction along H = G is the identity
  auto idfus = class_fusion(p.cdg, p.cdg);
  auto same = restrict_cf(standard, idfus, p.cdg);
  CHECK(same.v == standard.v);
}

TEST_CASE("double-coset rank oracle for <1^G, 1^G>") {
  // the inner product of the permutation character with itself counts
  // H\G/H double cosets; verify by brute force
  auto g = symmetric_group(4);
  auto h = s3_in_s4();
  Pair p(g, h);
  auto chi = permutation_character(p.fus, p.cdh, p.cdg, p.tabg.p);
  std::uint64_t rank = inner_product(chi, chi, p.cdg);

  std::set<std::set<Permutation>> cosets;
  g.for_each_element([&](const Permutation &x) {
    std::set<Permutation> dc;
    h.for_each_element([&](const Permutation &a) {
      h.for_each_element([&](const Permutation &b) {
        dc.insert(a * x * b);
        return true;
      });
      return true;
    });
    cosets.insert(std::move(dc));
    return true;
  });
  CHECK(rank == cosets.size());
}

TEST_CASE("host mismatch is rejected") {
  Pair p(symmetric_group(4), s3_in_s4());
  auto a = trivial_character(p.cdg, p.tabg.p);
  auto b = trivial_character(p.cdh, p.tabg.p);
  CHECK_THROWS_AS(inner_product(a, b, p.cdg), std::invalid_argument);
}

TEST_CASE("permutation character values match M11 two-transitivity") {
  auto g = mathieu11();
  auto h = g.point_stabilizer(0);
  Pair p(g, h);
  auto chi = permutation_character(p.fus, p.cdh, p.cdg, p.tabg.p);
  CHECK(chi.v[0] == 11);
  CHECK(inner_product(chi, chi, p.cdg) == 2);
}
