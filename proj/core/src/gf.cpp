#include "groupdepth/gf.hpp"

#include <stdexcept>

#include "groupdepth/limits.hpp"

namespace groupdepth {

namespace {

// digits of a in base p, length f
std::vector<unsigned> digits(unsigned a, unsigned p, unsigned f) {
  std::vector<unsigned> d(f);
  for (unsigned i = 0; i < f; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

unsigned undigits(const std::vector<unsigned> &d, unsigned p) {
  unsigned a = 0;
  for (std::size_t i = d.size(); i-- > 0;)
    a = a * p + d[i];
  return a;
}

// multiply polynomials over F_p and reduce modulo the monic modulus
std::vector<unsigned> polymulmod(const std::vector<unsigned> &a,
                                 const std::vector<unsigned> &b,
                                 const std::vector<unsigned> &mod, unsigned p) {
  const unsigned f = static_cast<unsigned>(mod.size()) - 1;
  std::vector<unsigned> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  for (std::size_t i = c.size(); i-- > f;) {
    unsigned lead = c[i];
    if (lead == 0)
      continue;
    c[i] = 0;
    for (unsigned j = 0; j < f; ++j)
      c[i - f + j] = (c[i - f + j] + (p - 1) * lead % p * mod[j]) % p;
  }
  c.resize(f);
  return c;
}

// multiplicative order of x modulo the monic polynomial
unsigned order_of_x(const std::vector<unsigned> &mod, unsigned p) {
  const unsigned f = static_cast<unsigned>(mod.size()) - 1;
  std::vector<unsigned> x(f, 0), cur(f, 0);
  if (f == 1) {
    // x reduces to the constant -mod[0]
    cur[0] = (p - mod[0] % p) % p;
  } else {
    cur[1] = 1;
  }
  x = cur;
  unsigned q = 1;
  for (unsigned i = 0; i < f; ++i)
    q *= p;
  for (unsigned k = 1; k <= q; ++k) {
    bool is_one = cur[0] == 1;
    for (unsigned i = 1; i < f; ++i)
      is_one &= cur[i] == 0;
    if (is_one)
      return k;
    cur = polymulmod(cur, x, mod, p);
  }
  return 0; // x is not invertible (reducible modulus with x | mod)
}

} // namespace

GaloisField::GaloisField(unsigned q) : q_(q) {
  if (q < 2 || q > 64)
    throw ParseError("field size must be a prime power in 2..64");
  unsigned p = 2;
  while (q % p != 0)
    ++p;
  unsigned f = 0, qq = q;
  while (qq > 1) {
    if (qq % p != 0)
      throw ParseError(std::to_string(q) + " is not a prime power");
    qq /= p;
    ++f;
  }
  p_ = p;
  f_ = f;

  // lexicographically least monic polynomial of degree f making x primitive
  std::vector<unsigned> mod;
  for (unsigned code = 0; code < q; ++code) {
    std::vector<unsigned> cand = digits(code, p, f);
    cand.push_back(1); // monic
    if (order_of_x(cand, p) == q - 1) {
      mod = cand;
      break;
    }
  }
  if (mod.empty())
    throw InternalError("no primitive polynomial found");

  // discrete-log tables over the generator x
  exp_.assign(q - 1, 0);
  log_.assign(q, 0);
  std::vector<unsigned> cur(f, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < q - 1; ++k) {
    unsigned idx = undigits(cur, p);
    exp_[k] = idx;
    log_[idx] = k;
    std::vector<unsigned> x(f, 0);
    if (f == 1)
      x[0] = (p - mod[0] % p) % p;
    else
      x[1] = 1;
    cur = polymulmod(cur, x, mod, p);
  }
  generator_ = exp_[1 % (q - 1)];
  if (q == 2)
    generator_ = 1;

  frob_.assign(q, 0);
  for (unsigned a = 0; a < q; ++a) {
    unsigned r = 1 % q;
    // a^p via repeated multiplication (p <= 61)
    if (a == 0)
      r = 0;
    else {
      unsigned e = (static_cast<unsigned long long>(log_[a]) * p) % (q - 1);
      r = exp_[e];
    }
    frob_[a] = r;
  }
}

unsigned GaloisField::add(unsigned a, unsigned b) const {
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    unsigned da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    r += ((da + db) % p_) * mult;
    mult *= p_;
  }
  return r;
}

unsigned GaloisField::neg(unsigned a) const {
  unsigned r = 0, mult = 1;
  for (unsigned i = 0; i < f_; ++i) {
    unsigned da = a % p_;
    a /= p_;
    r += ((p_ - da) % p_) * mult;
    mult *= p_;
  }
  return r;
}

unsigned GaloisField::mul(unsigned a, unsigned b) const {
  if (a == 0 || b == 0)
    return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

unsigned GaloisField::inv(unsigned a) const {
  if (a == 0)
    throw std::invalid_argument("division by zero in F_q");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

unsigned GaloisField::frobenius(unsigned a) const { return frob_[a]; }

} // namespace groupdepth
