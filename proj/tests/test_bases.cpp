#include <doctest.h>

#include "groupdepth/bases.hpp"
#include "groupdepth/depth.hpp"
#include "groupdepth/groups.hpp"
#include "groupdepth/induce.hpp"

using namespace groupdepth;

TEST_CASE("base size of the natural symmetric actions is n-1") {
  for (unsigned n : {4u, 5u, 6u}) {
    auto g = symmetric_group(n);
    auto res = base_size_exact(g, g.point_stabilizer(0));
    CHECK(res.value == n - 1);
    CHECK(res.witness.size() == n - 2);
    CHECK(verify_base_witness(g.point_stabilizer(0), res.witness));
  }
}

TEST_CASE("regular action has base size one") {
  auto g = cyclic_group(6);
  auto res = base_size_exact(g, PermGroup(6));
  CHECK(res.value == 1);
  CHECK(res.witness.empty());
}

TEST_CASE("base size for S4 over S3 by brute-force oracle") {
  auto g = symmetric_group(4);
  // pointwise stabilizer orders along the natural action: 2 points leave
  // order 2, three points leave the identity
  CHECK(g.pointwise_stabilizer({0, 1}).order() == 2);
  CHECK(g.pointwise_stabilizer({0, 1, 2}).order() == 1);
  auto res = base_size_exact(g, g.point_stabilizer(0));
  CHECK(res.value == 3);
}

TEST_CASE("base size errors") {
  auto s4 = symmetric_group(4);
  CHECK_THROWS_AS(base_size_exact(s4, dihedral_group(4)), std::invalid_argument);
  Limits tight;
  tight.backtrack_index = 2;
  CHECK_THROWS_AS(base_size_exact(s4, s4.point_stabilizer(0), tight), LimitError);
}

TEST_CASE("no base-2 witness exists for A4 inside A5") {
  auto a5 = alternating_group(5);
  auto a4 = a5.point_stabilizer(0);
  // exhaustive oracle over all 60 conjugators
  bool any = false;
  a5.for_each_element([&](const Permutation &x) {
    if (verify_base_witness(a4, {x})) {
      any = true;
      return false;
    }
    return true;
  });
  CHECK_FALSE(any);
  CHECK_FALSE(random_base2_witness(a5, a4, 200, 1).has_value());
  // consistent with the exact base size
  CHECK(base_size_exact(a5, a4).value == 3);
}

TEST_CASE("no base-2 witness exists for S3 inside S4") {
  auto s4 = symmetric_group(4);
  auto s3 = s4.point_stabilizer(0);
  bool any = false;
  s4.for_each_element([&](const Permutation &x) {
    if (verify_base_witness(s3, {x})) {
      any = true;
      return false;
    }
    return true;
  });
  CHECK_FALSE(any);
  CHECK_FALSE(random_base2_witness(s4, s3, 200, 7).has_value());
}

TEST_CASE("base-2 witness for C5 inside S5 is found and re-verifies") {
  auto s5 = symmetric_group(5);
  PermGroup c5(5, {Permutation::parse_cycles("(1,2,3,4,5)", 5)});
  auto w = random_base2_witness(s5, c5, 500, 42);
  REQUIRE(w.has_value());
  CHECK(verify_base_witness(c5, {*w}));
  CHECK(s5.contains(*w));
  // reproducible for a fixed seed
  auto w2 = random_base2_witness(s5, c5, 500, 42);
  REQUIRE(w2.has_value());
  CHECK(*w == *w2);
}

TEST_CASE("trivial subgroup gives an immediate witness") {
  auto s4 = symmetric_group(4);
  auto w = random_base2_witness(s4, PermGroup(4), 10, 3);
  CHECK(w.has_value());
}

TEST_CASE("exact Q values for A5 over A4 at t = 2") {
  auto a5 = alternating_group(5);
  auto a4 = a5.point_stabilizer(0);
  auto cdg = conjugacy_classes(a5);
  auto cdh = conjugacy_classes(a4);
  auto tab = character_table(cdg);
  auto fus = class_fusion(cdh, cdg);
  auto chi = permutation_character(fus, cdh, cdg, tab.p);
  std::vector<std::uint64_t> counts(chi.v.begin(), chi.v.end());

  auto q2 = q_bound(cdg, counts, 2);
  CHECK(q2.value == Rational(19, 5));
  CHECK_FALSE(q2.proves_base_bound);

  // Q dominates the exact non-base probability, which here is 1 (any two
  // points of the degree-5 action are fixed by a 3-cycle)
  auto action = coset_action(a5, a4);
  auto p2 = exact_nonbase_probability_pairs(action.image);
  CHECK(p2 == Rational(1));
  CHECK(q2.value >= p2);

  // Q is non-increasing in t when all ratios are at most one
  auto q3 = q_bound(cdg, counts, 3);
  CHECK(q3.value <= q2.value);
}

TEST_CASE("Q vanishes for regular actions") {
  auto g = symmetric_group(4);
  auto cdg = conjugacy_classes(g);
  std::vector<std::uint64_t> counts(cdg.count(), 0);
  counts[0] = 24;
  auto q = q_bound(cdg, counts, 2);
  CHECK(q.value == 0);
  CHECK(q.proves_base_bound);
  CHECK(q.depth_bound == 3);
}

TEST_CASE("Q below one certifies depth three") {
  auto g = symmetric_group(5);
  PermGroup c5(5, {Permutation::parse_cycles("(1,2,3,4,5)", 5)});
  auto cdg = conjugacy_classes(g);
  auto cdh = conjugacy_classes(c5);
  auto tab = character_table(cdg);
  auto fus = class_fusion(cdh, cdg);
  auto chi = permutation_character(fus, cdh, cdg, tab.p);
  std::vector<std::uint64_t> counts(chi.v.begin(), chi.v.end());
  auto q2 = q_bound(cdg, counts, 2);
  CHECK(q2.value == Rational(2, 3));
  CHECK(q2.proves_base_bound);
  CHECK(q2.depth_bound == 3);
  CHECK(compute_depth(g, c5).depth == 3);
}

TEST_CASE("base size of the exotic degree-6 action of S5") {
  auto s6 = symmetric_group(6);
  auto h = pgl2(5);
  REQUIRE(is_subgroup(h, s6));
  auto res = base_size_exact(s6, h);
  CHECK(res.value == 5);
  CHECK(depth_upper_from_base(res.value) == 9); // consistent with depth 9
  CHECK(verify_base_witness(h, res.witness));
}

TEST_CASE("depth bound from base size holds on computed pairs") {
  auto a5 = alternating_group(5);
  auto a4 = a5.point_stabilizer(0);
  auto b = base_size_exact(a5, a4);
  auto d = compute_depth(a5, a4);
  CHECK(d.depth <= depth_upper_from_base(b.value));
}
