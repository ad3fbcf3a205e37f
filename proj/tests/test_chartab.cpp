#include <doctest.h>

#include <algorithm>

#include "groupdepth/chartab.hpp"
#include "groupdepth/groups.hpp"

using namespace groupdepth;

TEST_CASE("prime selection") {
  // least p ≡ 1 mod 12 with p > 24 is 37 (25 is composite)
  CHECK(choose_prime(24, 12) == 37);
  CHECK(choose_prime(1, 1) == 2);
  std::uint64_t p = choose_prime(7920, 1320);
  CHECK(p % 1320 == 1);
  CHECK(p > 7920);
  CHECK(is_prime(p));
  CHECK(p == 9241);
}

TEST_CASE("roots of unity and square roots mod p") {
  std::uint64_t w = element_of_order(12, 37);
  Fp f{37};
  CHECK(f.pow(w, 12) == 1);
  CHECK(f.pow(w, 6) != 1);
  CHECK(f.pow(w, 4) != 1);
  auto r = sqrt_mod(4, 10007);
  REQUIRE(r.has_value());
  CHECK((*r == 2 || *r == 10005));
  CHECK_FALSE(sqrt_mod(3, 7).has_value());
}

TEST_CASE("polynomial roots over F_p") {
  Fp f{101};
  // (x-3)(x-5)(x-7) = x^3 - 15x^2 + 71x - 105
  std::vector<std::uint64_t> poly{f.reduce_int(-105), 71, f.reduce_int(-15), 1};
  CHECK(poly_roots(poly, f) == std::vector<std::uint64_t>{3, 5, 7});
  // x^2 + 1 has no roots mod 7
  CHECK(poly_roots({1, 0, 1}, Fp{7}).empty());
  // repeated roots are reported once
  std::vector<std::uint64_t> sq{9, f.p - 6, 1}; // (x-3)^2
  CHECK(poly_roots(sq, f) == std::vector<std::uint64_t>{3});
}

TEST_CASE("class matrices") {
  auto cd1 = conjugacy_classes(PermGroup(1));
  CHECK(class_matrix(cd1, 0) ==
        std::vector<std::vector<std::uint64_t>>{{1}});

  auto cd2 = conjugacy_classes(cyclic_group(2));
  auto a = class_matrix(cd2, 1);
  CHECK(a[0][0] == 0); // products of the involution with itself hit the identity
  CHECK(a[0][1] == 1);
  CHECK(a[1][0] == 1);

  auto cd3 = conjugacy_classes(symmetric_group(3));
  // canonical order: identity, transpositions (3), 3-cycles (2)
  REQUIRE(cd3.sizes == std::vector<std::uint64_t>{1, 3, 2});
  auto t = class_matrix(cd3, 1);
  std::uint64_t weighted = 0;
  for (std::size_t k = 0; k < 3; ++k)
    weighted += t[1][k] * cd3.sizes[k];
  CHECK(weighted == 9);
  CHECK(t[1][0] == 3); // transposition * itself = identity, three ways
}

TEST_CASE("character table of S3") {
  auto cd = conjugacy_classes(symmetric_group(3));
  auto tab = character_table(cd);
  CHECK(tab.degrees == std::vector<std::uint64_t>{1, 1, 2});
  CHECK(tab.p % tab.e == 1);
  CHECK(tab.p > 6);
  // trivial character is the all-ones row
  CHECK(tab.values[0] == std::vector<std::uint64_t>(3, 1));
}

TEST_CASE("character table of C4 is a table of fourth roots") {
  auto cd = conjugacy_classes(cyclic_group(4));
  auto tab = character_table(cd);
  CHECK(tab.degrees == std::vector<std::uint64_t>{1, 1, 1, 1});
  Fp f{tab.p};
  for (const auto &row : tab.values)
    for (auto v : row)
      CHECK(f.pow(v, 4) == 1);
}

TEST_CASE("character table of S4") {
  auto cd = conjugacy_classes(symmetric_group(4));
  auto tab = character_table(cd);
  CHECK(tab.degrees == std::vector<std::uint64_t>{1, 1, 2, 3, 3});
}

TEST_CASE("prime independence of the degree data") {
  auto cd = conjugacy_classes(symmetric_group(4));
  auto t1 = character_table(cd);
  auto t2 = character_table(cd, choose_prime(t1.p, cd.exponent()));
  CHECK(t1.p != t2.p);
  CHECK(t1.degrees == t2.degrees);
}

TEST_CASE("explicit second orthogonality at the identity column") {
  auto cd = conjugacy_classes(alternating_group(5));
  auto tab = character_table(cd);
  Fp f{tab.p};
  for (std::size_t k = 1; k < cd.count(); ++k) {
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < cd.count(); ++i)
      sum = f.add(sum, f.mul(tab.degrees[i] % tab.p, tab.values[i][k]));
    CHECK(sum == 0);
  }
}

TEST_CASE("user-supplied primes are validated") {
  auto cd = conjugacy_classes(symmetric_group(3));
  CHECK_THROWS_AS(character_table(cd, 5), std::invalid_argument);   // too small
  CHECK_THROWS_AS(character_table(cd, 25), std::invalid_argument);  // composite
  CHECK_THROWS_AS(character_table(cd, 11), std::invalid_argument);  // not 1 mod 6
  CHECK_NOTHROW(character_table(cd, 13));
}

TEST_CASE("table of the trivial group") {
  auto cd = conjugacy_classes(PermGroup(3));
  auto tab = character_table(cd);
  CHECK(tab.degrees == std::vector<std::uint64_t>{1});
  CHECK(tab.values == std::vector<std::vector<std::uint64_t>>{{1}});
}
