#pragma once

#include <cstdint>
#include <vector>

namespace groupdepth {

/// The field F_q for prime powers q <= 64. Elements are indexed 0..q-1 by
/// the base-p digit encoding of their polynomial coordinates with respect
/// to a fixed primitive polynomial (the lexicographically least one), so
/// the labeling is deterministic.
class GaloisField {
public:
  explicit GaloisField(unsigned q);

  unsigned q() const { return q_; }
  unsigned characteristic() const { return p_; }
  unsigned degree() const { return f_; }

  unsigned add(unsigned a, unsigned b) const;
  unsigned neg(unsigned a) const;
  unsigned sub(unsigned a, unsigned b) const { return add(a, neg(b)); }
  unsigned mul(unsigned a, unsigned b) const;
  unsigned inv(unsigned a) const;
  unsigned frobenius(unsigned a) const; // a^p

  /// A fixed generator of the multiplicative group (the class of x, or the
  /// least primitive residue when q is prime).
  unsigned generator() const { return generator_; }

private:
  unsigned q_, p_, f_;
  unsigned generator_;
  std::vector<unsigned> log_, exp_; // discrete logs base the generator
  std::vector<unsigned> frob_;
};

} // namespace groupdepth
