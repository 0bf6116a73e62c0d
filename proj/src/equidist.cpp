#include "lcmquad/equidist.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "lcmquad/arith.hpp"
#include "lcmquad/error.hpp"
#include "lcmquad/numeric.hpp"

namespace lcmquad {

std::vector<RootSample> root_samples(const QuadPoly& f, u64 x,
                                     std::optional<Progression> progression,
                                     unsigned workers) {
  if (x < 2) throw Error(ErrorKind::InvalidArgument, "x must be >= 2");
  if (progression && progression->modulus < 1) {
    throw Error(ErrorKind::InvalidArgument, "progression modulus must be >= 1");
  }
  const PrimeTable table = sieve_primes(x);
  std::vector<u64> primes;
  if (progression) {
    for (u64 p : table.in_progression(progression->residue, progression->modulus)) {
      primes.push_back(p);
    }
  } else {
    primes.assign(table.begin(), table.end());
  }

  workers = std::max(1u, workers);
  std::vector<std::vector<RootSample>> parts(workers);
  const std::size_t per = (primes.size() + workers - 1) / workers;
  auto work = [&](unsigned w) {
    const std::size_t lo = w * per, hi = std::min(primes.size(), lo + per);
    for (std::size_t i = lo; i < hi; ++i) {
      const u64 p = primes[i];
      for (u64 nu : roots_mod_prime(f, p)) {
        parts[w].push_back({p, nu, static_cast<double>(nu) / static_cast<double>(p)});
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  std::vector<RootSample> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

double star_discrepancy(std::span<const double> fracs) {
  if (fracs.empty()) throw Error(ErrorKind::EmptyInput, "star discrepancy of an empty set");
  std::vector<double> sorted(fracs.begin(), fracs.end());
  std::sort(sorted.begin(), sorted.end());
  const double N = static_cast<double>(sorted.size());
  double worst = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double xi = sorted[i];
    const double above = static_cast<double>(i + 1) / N - xi;
    const double below = xi - static_cast<double>(i) / N;
    worst = std::max({worst, above, below});
  }
  return worst;
}

namespace {

i64 floor_mod(i64 x, i64 m) {
  const i64 r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

TSums t_sums(const QuadPoly& f, u64 n, i64 cutoff_constant_override) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  const i64 C = cutoff_constant_override > 0 ? cutoff_constant_override
                                             : cutoff_constant(f, classify(f));
  TSums out;
  out.prime_bound = static_cast<u64>(C) * n;
  if (out.prime_bound <= 2) return out;
  const PrimeTable table = sieve_primes(out.prime_bound - 1);
  CompensatedSum t1, t2;
  for (u64 p : table) {
    const std::vector<u64> roots = roots_mod_prime(f, p);
    if (roots.empty()) continue;
    // Per-prime numerators over the common denominator 2p are exact integers.
    const i64 pi = static_cast<i64>(p);
    i64 num1 = 0, num2 = 0;
    for (u64 nu : roots) {
      num1 += pi - 2 * static_cast<i64>(nu);
      num2 += pi - 2 * floor_mod(static_cast<i64>(n) - static_cast<i64>(nu), pi);
    }
    const double weight = std::log(static_cast<double>(p)) / (2.0 * static_cast<double>(p));
    t1 += static_cast<double>(num1) * weight;
    t2 += static_cast<double>(num2) * weight;
  }
  out.T1 = t1.value();
  out.T2 = t2.value();
  return out;
}

u64 pairing_check(const QuadPoly& f, u64 x) {
  if (x < 2) return 0;
  const PolyProfile profile = classify(f);
  if (!profile.irreducible()) {
    throw Error(ErrorKind::NotIrreducible, "pairing_check requires an irreducible polynomial");
  }
  const i64 q = profile.q;
  const i64 l = profile.lred;
  const i64 a = profile.sign_flipped ? -f.a() : f.a();
  const i64 D = profile.D;
  u64 violations = 0;
  for (u64 p : sieve_primes(x)) {
    const i64 pi = static_cast<i64>(p);
    if ((2 * a) % pi == 0 || D % pi == 0) continue;
    if (kronecker(D, pi) != 1) continue;
    const std::vector<u64> roots = roots_mod_prime(f, p);
    if (roots.size() != 2) {
      ++violations;
      continue;
    }
    // r = l * p^{-1} mod q, taken in [1, q].
    i64 r = q == 1 ? 1 : static_cast<i64>(mulmod(reduce_mod(l, q), invmod(p % q, q), q));
    if (r == 0) r = q;
    // Compare both sides scaled by pq, as residues mod pq.
    const i128 pq = static_cast<i128>(pi) * q;
    const i128 lhs = static_cast<i128>(q) * (roots[0] + roots[1]);
    const i128 rhs = static_cast<i128>(r) * pi - l;
    i128 diff = (lhs - rhs) % pq;
    if (diff < 0) diff += pq;
    const double dist = static_cast<double>(std::min(diff, pq - diff)) / static_cast<double>(pq);
    if (dist > 1e-12) ++violations;
  }
  return violations;
}

}  // namespace lcmquad
