#include <doctest.h>

#include "groupdepth/gf.hpp"
#include "groupdepth/groups.hpp"

using namespace groupdepth;

TEST_CASE("field arithmetic for small prime powers") {
  for (unsigned q : {2u, 3u, 4u, 5u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u}) {
    GaloisField f(q);
    CHECK(f.q() == q);
    // inverses and the Frobenius endomorphism
    for (unsigned a = 0; a < q; ++a) {
      if (a != 0)
        CHECK(f.mul(a, f.inv(a)) == 1);
      for (unsigned b = 0; b < q; ++b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
        for (unsigned c = 0; c < std::min(q, 8u); ++c)
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
    // the generator has full multiplicative order
    unsigned x = f.generator(), cur = x, ord = 1;
    while (cur != 1) {
      cur = f.mul(cur, x);
      ++ord;
    }
    CHECK(ord == q - 1);
  }
  CHECK_THROWS_AS(GaloisField(6), ParseError);
  CHECK_THROWS_AS(GaloisField(65), ParseError);
}

TEST_CASE("classical group constructors have the right orders") {
  CHECK(symmetric_group(6).order() == 720);
  CHECK(alternating_group(6).order() == 360);
  CHECK(cyclic_group(12).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(dihedral_group(9).order() == 18);
  CHECK(is_subgroup(dihedral_group(4), symmetric_group(4)));
}

TEST_CASE("projective groups") {
  // orders follow q(q^2-1)/gcd(2,q-1) etc.; the constructors self-check,
  // so exercising them is the test
  CHECK(psl2(4).order() == 60);
  CHECK(psl2(5).order() == 60);
  CHECK(psl2(7).order() == 168);
  CHECK(psl2(8).order() == 504);
  CHECK(psl2(9).order() == 360);
  CHECK(psl2(11).order() == 660);
  CHECK(psl2(13).order() == 1092);
  CHECK(psl2(16).order() == 4080);
  CHECK(psl2(25).order() == 7800);
  CHECK(pgl2(5).order() == 120);
  CHECK(pgl2(7).order() == 336);
  CHECK(pgl2(9).order() == 720);
  CHECK(pgammal2(9).order() == 1440);
  CHECK(pgammal2(8).order() == 1512);
  CHECK(pgammal2(4).order() == 120);

  // the projective line actions are transitive with Borel point stabilizers
  for (unsigned q : {7u, 9u}) {
    auto g = psl2(q);
    CHECK(g.degree() == q + 1);
    auto borel = g.point_stabilizer(0);
    CHECK(borel.order() * (q + 1) == g.order());
  }
}

TEST_CASE("pgl2(5) is the primitive copy of S5 inside S6") {
  auto h = pgl2(5);
  CHECK(h.order() == 120);
  CHECK(is_subgroup(h, symmetric_group(6)));
  // transitive on 6 points, unlike the intransitive natural S5
  CHECK(h.point_stabilizer(0).order() == 20);
}

TEST_CASE("Mathieu groups") {
  auto m11 = mathieu11();
  CHECK(m11.order() == 7920);
  CHECK(m11.point_stabilizer(0).order() == 720);
  auto m11b = mathieu11_degree12();
  CHECK(m11b.order() == 7920);
  CHECK(m11b.point_stabilizer(0).order() == 660);
}
