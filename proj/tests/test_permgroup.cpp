#include <doctest.h>

#include <set>

#include "groupdepth/permgroup.hpp"

using namespace groupdepth;

namespace {

PermGroup make(unsigned degree, std::initializer_list<const char *> cycles) {
  std::vector<Permutation> gens;
  for (const char *c : cycles)
    gens.push_back(Permutation::parse_cycles(c, degree));
  return PermGroup(degree, std::move(gens));
}

} // namespace

TEST_CASE("orders of standard groups") {
  CHECK(make(4, {"(1,2)", "(1,2,3,4)"}).order() == 24);
  CHECK(make(5, {}).order() == 1);
  CHECK(make(5, {"(1,2,3,4,5)"}).order() == 5);
  CHECK(make(7, {"(1,2,3)", "(3,4,5)", "(5,6,7)"}).order() == 2520); // A7
}

TEST_CASE("M11 from its standard degree-11 generators") {
  auto m11 = make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
  CHECK(m11.order() == 7920);
  // Lagrange: 7920 divides 11!
  BigInt f = 1;
  for (int i = 2; i <= 11; ++i)
    f *= i;
  CHECK(f % m11.order() == 0);

  auto m10 = m11.point_stabilizer(0);
  CHECK(m10.order() == 720);
  CHECK(m10.point_stabilizer(0).order() == 720); // already fixes point 0
}

TEST_CASE("membership and element iteration") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  CHECK(s4.contains(Permutation::parse_cycles("(1,3)(2,4)", 4)));
  auto a4 = s4.derived_subgroup();
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(Permutation::parse_cycles("(1,2)", 4)));

  std::set<Permutation> seen;
  std::uint64_t sign_sum = 0;
  s4.for_each_element([&](const Permutation &p) {
    seen.insert(p);
    if (p.sign() == 1)
      ++sign_sum;
    return true;
  });
  CHECK(seen.size() == 24);
  CHECK(sign_sum == 12);
}

TEST_CASE("point stabilizers") {
  auto s5 = make(5, {"(1,2)", "(1,2,3,4,5)"});
  CHECK(s5.point_stabilizer(0).order() == 24);
  CHECK(s5.pointwise_stabilizer({0, 1}).order() == 6);
  auto c3 = make(3, {"(1,2,3)"});
  CHECK(c3.point_stabilizer(0).order() == 1);
}

TEST_CASE("derived subgroups and normal closure") {
  auto s5 = make(5, {"(1,2)", "(1,2,3,4,5)"});
  auto a5 = s5.derived_subgroup();
  CHECK(a5.order() == 60);
  CHECK(a5.derived_subgroup().order() == 60); // perfect
  CHECK(is_normal(a5, s5));

  // normal closure of a transposition is all of S5
  CHECK(s5.normal_closure({Permutation::parse_cycles("(1,2)", 5)}).order() == 120);
}

TEST_CASE("centralizers") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  CHECK(s4.centralizer(Permutation::parse_cycles("(1,2)", 4)).order() == 4);
  CHECK(s4.centralizer(Permutation(4)).order() == 24);
  auto s5 = make(5, {"(1,2)", "(1,2,3,4,5)"});
  CHECK(s5.centralizer(Permutation::parse_cycles("(1,2,3,4,5)", 5)).order() == 5);
  CHECK_THROWS(s4.centralizer(Permutation::parse_cycles("(1,2)", 5)));
}

TEST_CASE("normalizers") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  auto c4 = make(4, {"(1,2,3,4)"});
  auto d8 = s4.normalizer_of(c4);
  CHECK(d8.order() == 8);
  auto s5 = make(5, {"(1,2)", "(1,2,3,4,5)"});
  auto c5 = make(5, {"(1,2,3,4,5)"});
  CHECK(s5.normalizer_of(c5).order() == 20); // 5:4
}

TEST_CASE("conjugacy search") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  auto x = Permutation::parse_cycles("(1,2)", 4);
  auto y = Permutation::parse_cycles("(3,4)", 4);
  auto g = is_conjugate(s4, x, y);
  REQUIRE(g.has_value());
  CHECK(x.conjugated_by(*g) == y);

  auto s5 = make(5, {"(1,2)", "(1,2,3,4,5)"});
  CHECK_FALSE(is_conjugate(s5, Permutation::parse_cycles("(1,2,3)", 5),
                           Permutation::parse_cycles("(1,2,3)(4,5)", 5))
                  .has_value());
}

TEST_CASE("coset action on S4/D8: degree 3, kernel V4") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  auto d8 = make(4, {"(1,2,3,4)", "(1,3)"});
  REQUIRE(d8.order() == 8);
  auto act = coset_action(s4, d8);
  CHECK(act.image.degree() == 3);
  CHECK(act.image.order() == 6);
  CHECK(act.kernel.order() == 4);
  CHECK(is_normal(act.kernel, s4));
  CHECK(d8.contains_subgroup(act.kernel));

  // brute-force core: intersection of the conjugates of D8
  std::size_t in_all = 0;
  d8.for_each_element([&](const Permutation &h) {
    bool everywhere = true;
    s4.for_each_element([&](const Permutation &g) {
      if (!d8.contains(h.conjugated_by(g))) {
        everywhere = false;
        return false;
      }
      return true;
    });
    if (everywhere)
      ++in_all;
    return true;
  });
  CHECK(in_all == 4);
}

TEST_CASE("coset action trivial cases") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  auto s3 = make(4, {"(1,2)", "(1,2,3)"});
  auto act = coset_action(s4, s3);
  CHECK(act.image.degree() == 4);
  CHECK(act.kernel.order() == 1);

  auto self = coset_action(s4, s4);
  CHECK(self.image.degree() == 1);
  CHECK(self.kernel.order() == 24);

  auto s5 = make(5, {"(1,2)", "(1,2,3,4,5)"});
  auto a5 = s5.derived_subgroup();
  auto two = coset_action(s5, a5);
  CHECK(two.image.degree() == 2);
  CHECK(two.kernel.order() == 60);

  CHECK_THROWS_AS(coset_action(s3, s4), std::invalid_argument);
}

TEST_CASE("random elements are members and reproducible") {
  auto m11 = make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i)
    CHECK(m11.contains(m11.random_element(rng)));
  std::mt19937_64 r1(42), r2(42);
  CHECK(m11.random_element(r1) == m11.random_element(r2));
}

TEST_CASE("coset-action kernels equal brute-force cores on random pairs") {
  // 20 random subgroup pairs in groups of order <= 5000
  std::mt19937_64 rng(20240917);
  std::vector<PermGroup> pool{
      make(5, {"(1,2)", "(1,2,3,4,5)"}),
      make(6, {"(1,2)", "(1,2,3,4,5,6)"}),
      make(7, {"(1,2,3)", "(3,4,5)", "(5,6,7)"}),
      make(6, {"(1,2,3,4,5,6)", "(2,6)(3,5)"}),
      make(8, {"(1,2,3,4,5,6,7,8)", "(2,8)(3,7)(4,6)"}),
      make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"}),
      make(12, {"(1,2,3)(4,5,6)(7,8,9)(10,11,12)", "(1,4)(2,5)(3,6)",
                "(4,7)(5,8)(6,9)", "(7,10)(8,11)(9,12)"}),
  };
  unsigned tested = 0;
  while (tested < 20) {
    const PermGroup &g = pool[tested % pool.size()];
    std::vector<Permutation> hgens{g.random_element(rng)};
    if (tested % 2)
      hgens.push_back(g.random_element(rng));
    PermGroup h(g.degree(), hgens);
    if (g.order() / h.order() > 400)
      continue; // keep the brute-force core affordable
    auto act = coset_action(g, h);

    // brute force: elements of H lying in every conjugate H^t
    std::uint64_t core_size = 0;
    h.for_each_element([&](const Permutation &e) {
      for (const auto &t : act.coset_reps)
        if (!h.contains(e.conjugated_by(t)))
          return true;
      ++core_size;
      return true;
    });
    CHECK(act.kernel.order() == core_size);
    CHECK(is_normal(act.kernel, g));
    // the kernel is fixed by conjugation by every generator of G
    for (const auto &kg : act.kernel.generators())
      for (const auto &gg : g.generators())
        CHECK(act.kernel.contains(kg.conjugated_by(gg)));
    ++tested;
  }
}

TEST_CASE("chain invariants: transversal products and generator sifting") {
  auto m11 = make(11, {"(1,2,3,4,5,6,7,8,9,10,11)", "(3,7,11,8)(4,10,5,6)"});
  BigInt prod = 1;
  for (const auto &lv : m11.chain().levels())
    prod *= static_cast<unsigned>(lv.orbit.size());
  CHECK(prod == m11.order());
  // sifting any product of generators succeeds
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, m11.generators().size() - 1);
  Permutation w(11);
  for (int i = 0; i < 40; ++i) {
    w = w * m11.generators()[pick(rng)];
    CHECK(m11.contains(w));
  }
}

TEST_CASE("conjugate subgroup") {
  auto s4 = make(4, {"(1,2)", "(1,2,3,4)"});
  auto s3 = make(4, {"(1,2)", "(1,2,3)"});
  auto g = Permutation::parse_cycles("(1,4)", 4);
  auto h = conjugate_subgroup(s3, g);
  CHECK(h.order() == 6);
  CHECK(h.contains(Permutation::parse_cycles("(4,2)", 4)));
}
