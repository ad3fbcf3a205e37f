#include "groupdepth/groups.hpp"

#include <numeric>

#include "groupdepth/gf.hpp"

namespace groupdepth {

namespace {

Permutation cycle(unsigned degree, const std::string &text) {
  return Permutation::parse_cycles(text, degree);
}

std::string full_cycle(unsigned n) {
  std::string s = "(";
  for (unsigned i = 1; i <= n; ++i)
    s += std::to_string(i) + (i < n ? "," : ")");
  return s;
}

// permutation of PG(1,q) induced by the matrix [[a,b],[c,d]];
// points 0..q-1 are field elements, q is infinity
Permutation mobius(const GaloisField &gf, unsigned a, unsigned b, unsigned c, unsigned d) {
  const unsigned q = gf.q();
  std::vector<Permutation::Point> img(q + 1);
  for (unsigned x = 0; x < q; ++x) {
    unsigned num = gf.add(gf.mul(a, x), b);
    unsigned den = gf.add(gf.mul(c, x), d);
    img[x] = den == 0 ? q : static_cast<Permutation::Point>(gf.mul(num, gf.inv(den)));
  }
  img[q] = c == 0 ? q : static_cast<Permutation::Point>(gf.mul(a, gf.inv(c)));
  return Permutation(std::move(img));
}

void check_order(const PermGroup &g, const BigInt &expect, const char *what) {
  if (g.order() != expect)
    throw InternalError(std::string(what) + " construction has order " +
                        g.order().str() + ", expected " + expect.str());
}

} // namespace

PermGroup symmetric_group(unsigned n) {
  if (n == 0)
    throw ParseError("symmetric group needs n >= 1");
  if (n == 1)
    return PermGroup(1);
  std::vector<Permutation> gens{cycle(n, "(1,2)"), cycle(n, full_cycle(n))};
  PermGroup g(n, std::move(gens));
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i)
    f *= i;
  check_order(g, f, "symmetric group");
  return g;
}

PermGroup alternating_group(unsigned n) {
  if (n == 0)
    throw ParseError("alternating group needs n >= 1");
  if (n <= 2)
    return PermGroup(n);
  std::vector<Permutation> gens;
  for (unsigned i = 3; i <= n; ++i)
    gens.push_back(cycle(n, "(1,2," + std::to_string(i) + ")"));
  PermGroup g(n, std::move(gens));
  BigInt f = 1;
  for (unsigned i = 3; i <= n; ++i)
    f *= i;
  check_order(g, f, "alternating group");
  return g;
}

PermGroup cyclic_group(unsigned n) {
  if (n == 0)
    throw ParseError("cyclic group needs n >= 1");
  if (n == 1)
    return PermGroup(1);
  PermGroup g(n, {cycle(n, full_cycle(n))});
  check_order(g, n, "cyclic group");
  return g;
}

PermGroup dihedral_group(unsigned n) {
  if (n < 3)
    throw ParseError("dihedral group needs n >= 3 polygon vertices");
  std::vector<Permutation::Point> refl(n);
  for (unsigned i = 0; i < n; ++i)
    refl[i] = static_cast<Permutation::Point>((n - i) % n);
  PermGroup g(n, {cycle(n, full_cycle(n)), Permutation(std::move(refl))});
  check_order(g, 2 * n, "dihedral group");
  return g;
}

PermGroup mathieu11() {
  PermGroup g(11, {cycle(11, "(1,2,3,4,5,6,7,8,9,10,11)"),
                   cycle(11, "(3,7,11,8)(4,10,5,6)")});
  check_order(g, 7920, "Mathieu-11");
  return g;
}

PermGroup mathieu11_degree12() {
  // the degree-11 copy acting on the cosets of an index-12 subgroup of
  // order 660; the point stabilizer here is that subgroup
  PermGroup g(12, {cycle(12, "(2,3,4,6,9,12,5,7,11,8,10)"),
                   cycle(12, "(1,2)(3,5,8,4)(6,10)(7,9,11,12)")});
  check_order(g, 7920, "Mathieu-11 (degree 12)");
  if (g.point_stabilizer(0).order() != 660)
    throw InternalError("degree-12 point stabilizer is not of order 660");
  return g;
}

PermGroup psl2(unsigned q) {
  GaloisField gf(q);
  const unsigned nu = gf.generator();
  std::vector<Permutation> gens{
      mobius(gf, 1, 1, 0, 1),                      // x -> x + 1
      mobius(gf, nu, 0, 0, gf.inv(nu)),            // x -> nu^2 x
      mobius(gf, 0, 1, gf.neg(1), 0),              // x -> -1/x
  };
  PermGroup g(q + 1, std::move(gens));
  BigInt expect = BigInt(q) * (BigInt(q) * q - 1) / (q % 2 == 0 ? 1 : 2);
  check_order(g, expect, "PSL(2,q)");
  return g;
}

PermGroup pgl2(unsigned q) {
  GaloisField gf(q);
  if (q % 2 == 0)
    return psl2(q);
  const unsigned nu = gf.generator();
  std::vector<Permutation> gens{
      mobius(gf, 1, 1, 0, 1),
      mobius(gf, nu, 0, 0, 1), // x -> nu x, a non-square scalar
      mobius(gf, 0, 1, gf.neg(1), 0),
  };
  PermGroup g(q + 1, std::move(gens));
  check_order(g, BigInt(q) * (BigInt(q) * q - 1), "PGL(2,q)");
  return g;
}

PermGroup pgammal2(unsigned q) {
  GaloisField gf(q);
  PermGroup base = pgl2(q);
  if (gf.degree() == 1)
    return base;
  std::vector<Permutation::Point> frob(q + 1);
  for (unsigned x = 0; x < q; ++x)
    frob[x] = static_cast<Permutation::Point>(gf.frobenius(x));
  frob[q] = static_cast<Permutation::Point>(q);
  auto gens = base.generators();
  gens.emplace_back(std::move(frob));
  PermGroup g(q + 1, std::move(gens));
  check_order(g, BigInt(gf.degree()) * q * (BigInt(q) * q - 1), "PGammaL(2,q)");
  return g;
}

} // namespace groupdepth
