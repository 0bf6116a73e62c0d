#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcmquad/arith.hpp"
#include "lcmquad/poly.hpp"

namespace lcmquad {

struct PrimeExponent {
  u64 p;
  unsigned beta;

  friend bool operator==(const PrimeExponent&, const PrimeExponent&) = default;
};

// L_n(f) = prod p^beta * prod(residual primes). Residual primes exceed the
// sieve cutoff; each contributes exponent one.
struct ExponentMap {
  u64 n = 0;
  u64 cutoff = 0;                      // sieve limit; every entry p < cutoff
  std::vector<PrimeExponent> entries;  // ascending p, beta > 0
  std::vector<u64> residual_primes;    // ascending, distinct, all >= cutoff
  double large_prime_log_sum = 0.0;

  unsigned beta(u64 p) const noexcept;
};

struct LcmResult {
  u64 n = 0;
  double log_lcm = 0.0;
  std::size_t residual_count = 0;
  std::optional<ExponentMap> exponent_map;
  std::optional<std::string> exact_value;  // decimal, oracle path only

  double n_log_n() const noexcept;
};

struct SieveOptions {
  unsigned workers = 1;
  // Cutoff constant C (sieve to C * n); zero selects max(2a + b, 2) on the
  // normalized polynomial.
  i64 cutoff_constant = 0;
  bool keep_exponent_map = false;
};

inline constexpr u64 kMaxSieveN = 100'000'000;
inline constexpr u64 kOracleMaxN = 10'000;

ExponentMap beta_map(const QuadPoly& f, u64 n, const SieveOptions& options = {});

LcmResult log_lcm(const QuadPoly& f, u64 n, const SieveOptions& options = {});

// One sieve pass to max(ns); results in the order of `ns`.
std::vector<LcmResult> log_lcm_ladder(const QuadPoly& f, const std::vector<u64>& ns,
                                      const SieveOptions& options = {});

// Exact lcm{|f(1)|, ..., |f(n)|} by iterated gcd (zero values skipped).
LcmResult lcm_bigint_oracle(const QuadPoly& f, u64 n);

// Verifies that prod p^beta * prod(residuals) equals the oracle's value.
bool oracle_agrees(const QuadPoly& f, const ExponentMap& map);

// log L_n(f) - n log n - B n
double error_term(const QuadPoly& f, u64 n, double B, const SieveOptions& options = {});

// (q / phi(q)) * sum_{1<=k<=q, (k,q)=1} 1/k with q = a / gcd(a, b).
double ap_constant(i64 a, i64 b);

// (1/phi(q)) * sum_{(r,q)=1} max(a / (br)_a, c / (dr)_c), q = ac / gcd(a, c),
// for f = (ax + b)(cx + d).
double reducible_constant(i64 a, i64 b, i64 c, i64 d);

// Asymptotic slope of log L_n(f) for reducible f (square and distinct cases).
double reducible_asymptotic_constant(const QuadPoly& f);

// Exact log lcm for reducible f: content, square and distinct-factor paths.
LcmResult log_lcm_reducible(const QuadPoly& f, u64 n, const SieveOptions& options = {});

// log lcm{|a + b|, ..., |a n + b|}
LcmResult log_lcm_linear(i64 a, i64 b, u64 n, const SieveOptions& options = {});

}  // namespace lcmquad
