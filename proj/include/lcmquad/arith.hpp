#pragma once

#include <cstdint>
#include <optional>
#include <ranges>
#include <span>
#include <vector>

#include "lcmquad/poly.hpp"

namespace lcmquad {

// Integer polynomial of degree at most two. Unlike QuadPoly it admits a == 0,
// which the linear-factor paths of the lcm engine rely on.
struct IntPoly {
  i64 a = 0, b = 0, c = 0;

  constexpr IntPoly() = default;
  constexpr IntPoly(i64 a_, i64 b_, i64 c_) : a(a_), b(b_), c(c_) {}
  IntPoly(const QuadPoly& f) : a(f.a()), b(f.b()), c(f.c()) {}  // NOLINT

  i128 operator()(i128 x) const noexcept { return (i128{a} * x + b) * x + c; }

  // f(x) mod m for 0 <= x < m < 2^63.
  u64 eval_mod(u64 x, u64 m) const noexcept;
  // f'(x) mod m
  u64 deriv_mod(u64 x, u64 m) const noexcept;
};

// --- modular arithmetic ------------------------------------------------------

inline u64 mulmod(u64 x, u64 y, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(x) * y % m);
}
u64 powmod(u64 base, u64 exp, u64 m) noexcept;
// Inverse of x modulo m; requires gcd(x, m) == 1.
u64 invmod(u64 x, u64 m);
// Reduces a signed value into [0, m).
u64 reduce_mod(i128 x, u64 m) noexcept;
int valuation(i64 x, u64 p) noexcept;
bool is_prime(u64 n) noexcept;

// Square root of x modulo an odd prime p (any prime for p < 64). Direct search
// below 64, Tonelli-Shanks above. Empty when x is a non-residue.
std::optional<u64> sqrt_mod_prime(u64 x, u64 p);

// Kronecker symbol (d / m). Not both zero.
int kronecker(i64 d, i64 m);

// --- primes ------------------------------------------------------------------

inline constexpr u64 kMaxSieveLimit = u64{1} << 32;

class PrimeTable {
 public:
  PrimeTable() = default;
  PrimeTable(u64 limit, std::vector<u64> primes)
      : limit_(limit), primes_(std::move(primes)) {}

  u64 limit() const noexcept { return limit_; }
  std::span<const u64> primes() const noexcept { return primes_; }
  std::size_t size() const noexcept { return primes_.size(); }
  bool contains(u64 n) const;

  auto begin() const noexcept { return primes_.begin(); }
  auto end() const noexcept { return primes_.end(); }

  // Primes p <= limit with p = residue (mod modulus).
  auto in_progression(u64 residue, u64 modulus) const {
    return primes_ | std::views::filter([residue, modulus](u64 p) {
             return modulus <= 1 || p % modulus == residue % modulus;
           });
  }

 private:
  u64 limit_ = 0;
  std::vector<u64> primes_;
};

// Segmented Eratosthenes; memory is O(sqrt(limit) + segment) beyond the output.
PrimeTable sieve_primes(u64 limit);

// --- roots of f modulo prime powers ------------------------------------------

struct RootSet {
  u64 p = 0;
  int k = 0;
  u64 modulus = 1;          // p^k
  std::vector<u64> roots;   // sorted, in [0, p^k)
};

// Sorted roots of f mod p.
std::vector<u64> roots_mod_prime(const IntPoly& f, u64 p);

// Given the complete root set of f mod pk, returns the sorted root set mod
// pk * p restricted to values <= max_candidate. Non-singular roots lift
// uniquely; singular ones by enumeration over the residues above them.
std::vector<u64> lift_roots(const IntPoly& f, u64 p, u64 pk, std::span<const u64> roots,
                            u64 max_candidate = ~u64{0});

RootSet roots_mod_prime_power(const IntPoly& f, u64 p, int k);

// s(f, p^k): number of x in [0, p^k) with f(x) = 0 (mod p^k), from the
// closed-form casework on the p-adic valuations of a, b and D. f irreducible.
u64 solution_count(const QuadPoly& f, u64 p, int k);

// Residue-by-residue count; reference for tests and small moduli.
u64 brute_force_solution_count(const IntPoly& f, u64 modulus);

}  // namespace lcmquad
