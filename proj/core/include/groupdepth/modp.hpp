#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace groupdepth {

/// Arithmetic in the prime field F_p, p < 2^62.
struct Fp {
  std::uint64_t p;

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t reduce_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? static_cast<std::uint64_t>(r + static_cast<std::int64_t>(p))
                 : static_cast<std::uint64_t>(r);
  }
};

bool is_prime(std::uint64_t n);

/// Least prime p ≡ 1 (mod exponent) with p > max(order, 2*ceil(sqrt(order))),
/// so that every integer character quantity in scope is recovered exactly
/// as a least nonnegative residue. Returns 2 for the trivial group.
std::uint64_t choose_prime(std::uint64_t order, std::uint64_t exponent);

std::uint64_t primitive_root(std::uint64_t p);

/// An element of multiplicative order n in F_p^*, requires n | p-1.
std::uint64_t element_of_order(std::uint64_t n, std::uint64_t p);

/// Square root mod an odd prime, if one exists (Tonelli-Shanks).
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Distinct roots in F_p of a nonzero polynomial (coefficients ascending),
/// found by gcd with x^p - x and equal-degree splitting. Sorted ascending.
std::vector<std::uint64_t> poly_roots(std::vector<std::uint64_t> coeffs, const Fp &f);

} // namespace groupdepth
