#pragma once

#include <optional>
#include <span>
#include <vector>

#include "lcmquad/poly.hpp"

namespace lcmquad {

struct RootSample {
  u64 p = 0;
  u64 nu = 0;
  double frac = 0.0;  // nu / p
};

struct Progression {
  u64 residue = 0;
  u64 modulus = 1;
};

// All (nu, p) with p <= x prime (in the progression, if given) and
// f(nu) = 0 mod p, 0 <= nu < p; sorted by p then nu.
std::vector<RootSample> root_samples(const QuadPoly& f, u64 x,
                                     std::optional<Progression> progression = std::nullopt,
                                     unsigned workers = 1);

// Exact star discrepancy of points in [0, 1).
double star_discrepancy(std::span<const double> fracs);

struct TSums {
  double T1 = 0.0;
  double T2 = 0.0;
  u64 prime_bound = 0;  // sums run over p < prime_bound
};

// Sums over 0 <= nu < p < C n with f(nu) = 0 mod p of (1/2 - nu/p) log p and
// (1/2 - {(n - nu)/p}) log p. cutoff_constant = 0 selects max(2a + b, 2) on the
// normalized polynomial.
TSums t_sums(const QuadPoly& f, u64 n, i64 cutoff_constant = 0);

// Number of primes p <= x with two simple roots (p not dividing 2aD,
// (D/p) = 1) whose roots violate nu1/p + nu2/p = r/q - l/(pq) (mod 1),
// r = l p^{-1} mod q, by more than 1e-12.
u64 pairing_check(const QuadPoly& f, u64 x);

}  // namespace lcmquad
