#include "groupdepth/modp.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "groupdepth/limits.hpp"

namespace groupdepth {

std::uint64_t Fp::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1)
      r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Fp::inv(std::uint64_t a) const { return pow(a, p - 2); }

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull})
    if (n % q == 0)
      return n == q;
  // deterministic Miller-Rabin for 64-bit inputs
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  Fp f{n};
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                          29ull, 31ull, 37ull}) {
    std::uint64_t x = f.pow(a, d);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = f.mul(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

std::uint64_t choose_prime(std::uint64_t order, std::uint64_t exponent) {
  if (order <= 1)
    return 2;
  std::uint64_t bound = order;
  std::uint64_t root = static_cast<std::uint64_t>(std::ceil(2.0 * std::sqrt(double(order))));
  bound = std::max(bound, root);

  std::uint64_t k = bound / exponent + 1;
  for (std::uint64_t tries = 0; tries < 100'000'000; ++tries, ++k) {
    std::uint64_t p = exponent * k + 1;
    if (p > bound && is_prime(p))
      return p;
  }
  throw InternalError("prime search exhausted (order " + std::to_string(order) +
                      ", exponent " + std::to_string(exponent) + ")");
}

namespace {

std::vector<std::uint64_t> factor_distinct(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  if (n > 1)
    fs.push_back(n);
  return fs;
}

} // namespace

std::uint64_t primitive_root(std::uint64_t p) {
  if (p == 2)
    return 1;
  Fp f{p};
  auto factors = factor_distinct(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool ok = true;
    for (std::uint64_t q : factors)
      if (f.pow(g, (p - 1) / q) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
}

std::uint64_t element_of_order(std::uint64_t n, std::uint64_t p) {
  if ((p - 1) % n != 0)
    throw InternalError("no element of order " + std::to_string(n) + " in F_p^*");
  Fp f{p};
  return f.pow(primitive_root(p), (p - 1) / n);
}

std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p) {
  Fp f{p};
  a %= p;
  if (a == 0)
    return 0;
  if (p == 2)
    return a;
  if (f.pow(a, (p - 1) / 2) != 1)
    return std::nullopt;
  if (p % 4 == 3)
    return f.pow(a, (p + 1) / 4);

  // Tonelli-Shanks
  std::uint64_t q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (f.pow(z, (p - 1) / 2) == 1)
    ++z;
  std::uint64_t m = s;
  std::uint64_t c = f.pow(z, q);
  std::uint64_t t = f.pow(a, q);
  std::uint64_t r = f.pow(a, (q + 1) / 2);
  while (t != 1) {
    std::uint64_t i = 0, tt = t;
    while (tt != 1) {
      tt = f.mul(tt, tt);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j)
      b = f.mul(b, b);
    m = i;
    c = f.mul(b, b);
    t = f.mul(t, c);
    r = f.mul(r, b);
  }
  return r;
}

// ---------------------------------------------------------------------------
// dense polynomials over F_p, coefficients ascending

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly mul(const Poly &a, const Poly &b, const Fp &f) {
  if (a.empty() || b.empty())
    return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

// remainder of a modulo monic m
Poly rem(Poly a, const Poly &m, const Fp &f) {
  trim(a);
  while (a.size() >= m.size()) {
    std::uint64_t lead = a.back();
    std::size_t shift = a.size() - m.size();
    if (lead != 0)
      for (std::size_t i = 0; i < m.size(); ++i)
        a[shift + i] = f.sub(a[shift + i], f.mul(lead, m[i]));
    a.pop_back();
    trim(a);
  }
  return a;
}

void make_monic(Poly &a, const Fp &f) {
  trim(a);
  if (a.empty() || a.back() == 1)
    return;
  std::uint64_t s = f.inv(a.back());
  for (auto &c : a)
    c = f.mul(c, s);
}

Poly gcd(Poly a, Poly b, const Fp &f) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    make_monic(b, f);
    Poly r = rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a, f);
  return a;
}

// x^e mod m
Poly xpow_mod(std::uint64_t e, const Poly &m, const Fp &f) {
  Poly result{1};
  Poly base{0, 1};
  base = rem(std::move(base), m, f);
  while (e) {
    if (e & 1)
      result = rem(mul(result, base, f), m, f);
    base = rem(mul(base, base, f), m, f);
    e >>= 1;
  }
  return result;
}

Poly pow_mod(Poly b, std::uint64_t e, const Poly &m, const Fp &f) {
  Poly result{1};
  b = rem(std::move(b), m, f);
  while (e) {
    if (e & 1)
      result = rem(mul(result, b, f), m, f);
    b = rem(mul(b, b, f), m, f);
    e >>= 1;
  }
  return result;
}

void split_linear(const Poly &g, const Fp &f, std::mt19937_64 &rng,
                  std::vector<std::uint64_t> &roots) {
  // g is a monic product of distinct linear factors
  if (g.size() <= 1)
    return;
  if (g.size() == 2) {
    roots.push_back(f.neg(g[0]));
    return;
  }
  std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
  for (;;) {
    // gcd with (x+a)^((p-1)/2) - 1 splits the roots into two halves
    Poly shifted{d(rng), 1};
    Poly h = pow_mod(std::move(shifted), (f.p - 1) / 2, g, f);
    if (h.empty())
      h = {0};
    h[0] = f.sub(h[0], 1);
    Poly g1 = gcd(g, h, f);
    if (g1.size() > 1 && g1.size() < g.size()) {
      // complementary factor
      Poly g2 = g;
      // long division g / g1 (both monic)
      Poly q;
      {
        Poly aa = g;
        q.assign(aa.size() - g1.size() + 1, 0);
        while (aa.size() >= g1.size()) {
          std::uint64_t lead = aa.back();
          std::size_t shift = aa.size() - g1.size();
          q[shift] = lead;
          for (std::size_t i = 0; i < g1.size(); ++i)
            aa[shift + i] = f.sub(aa[shift + i], f.mul(lead, g1[i]));
          trim(aa);
          if (aa.empty())
            break;
        }
      }
      trim(q);
      split_linear(g1, f, rng, roots);
      split_linear(q, f, rng, roots);
      return;
    }
  }
}

} // namespace

std::vector<std::uint64_t> poly_roots(std::vector<std::uint64_t> coeffs, const Fp &f) {
  trim(coeffs);
  if (coeffs.size() <= 1)
    return {};
  make_monic(coeffs, f);

  std::vector<std::uint64_t> roots;
  if (coeffs[0] == 0) {
    roots.push_back(0);
    // divide out x
    coeffs.erase(coeffs.begin());
    while (!coeffs.empty() && coeffs[0] == 0)
      coeffs.erase(coeffs.begin());
  }
  if (coeffs.size() > 1) {
    // product of the distinct linear factors: gcd(f, x^p - x)
    Poly xp = xpow_mod(f.p, coeffs, f);
    // xp - x
    if (xp.size() < 2)
      xp.resize(2, 0);
    xp[1] = f.sub(xp[1], 1);
    Poly lin = gcd(coeffs, xp, f);
    std::mt19937_64 rng(0x705eed ^ f.p);
    split_linear(lin, f, rng, roots);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

} // namespace groupdepth
