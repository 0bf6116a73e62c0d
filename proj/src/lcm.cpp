#include "lcmquad/lcm.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

#include "lcmquad/error.hpp"
#include "lcmquad/numeric.hpp"

namespace lcmquad {

unsigned ExponentMap::beta(u64 p) const noexcept {
  auto it = std::lower_bound(entries.begin(), entries.end(), p,
                             [](const PrimeExponent& e, u64 v) { return e.p < v; });
  if (it != entries.end() && it->p == p) return it->beta;
  return std::binary_search(residual_primes.begin(), residual_primes.end(), p) ? 1 : 0;
}

double LcmResult::n_log_n() const noexcept {
  const double x = static_cast<double>(n);
  return x * std::log(x);
}

namespace {

constexpr u64 kSegmentSize = u64{1} << 22;

// Everything one sieve pass to N records. For each sieved prime, first_hits[k-1]
// is the least i <= N with p^k | f(i) and f(i) != 0, so beta_p(n) is the
// number of levels whose first hit is <= n.
struct Ladder {
  u64 N = 0;
  u64 limit = 0;
  std::vector<u64> primes;
  std::vector<std::size_t> hit_offsets;  // size primes + 1
  std::vector<u64> first_hits;
  std::vector<std::pair<u64, u64>> residuals;  // (prime, first index), ascending prime
};

u64 abs_value(i128 v) { return static_cast<u64>(v < 0 ? -v : v); }

u64 max_abs_on_range(const IntPoly& f, u64 N) {
  i128 best = 0;
  auto consider = [&](i128 x) {
    if (x < 1 || x > static_cast<i128>(N)) return;
    const i128 v = f(x);
    const i128 mag = v < 0 ? -v : v;
    best = std::max(best, mag);
  };
  consider(1);
  consider(static_cast<i128>(N));
  if (f.a != 0) {
    const i128 vertex = -static_cast<i128>(f.b) / (2 * static_cast<i128>(f.a));
    for (i128 dx = -1; dx <= 1; ++dx) consider(vertex + dx);
  }
  if (best >= (i128{1} << 63)) {
    throw Error(ErrorKind::Overflow, "|f(i)| exceeds 63 bits on the requested range");
  }
  return static_cast<u64>(best);
}

template <class Fn>
void run_blocks(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t per = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * per;
    const std::size_t hi = std::min(count, lo + per);
    if (lo >= hi) break;
    pool.emplace_back([&fn, lo, hi] { fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
}

struct PrimeBlock {
  std::vector<u64> primes;
  std::vector<std::size_t> root_offsets{0};
  std::vector<u64> roots;
  std::vector<std::size_t> hit_offsets{0};
  std::vector<u64> hits;
};

Ladder run_sieve(const IntPoly& f, u64 N, u64 cutoff, unsigned workers) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (N > kMaxSieveN) {
    throw Error(ErrorKind::LimitTooLarge, "n exceeds the supported range 10^8");
  }
  const u64 fmax = max_abs_on_range(f, N);
  const u64 limit = std::max<u64>({cutoff, static_cast<u64>(isqrt(fmax)) + 1, 2});
  const PrimeTable table = sieve_primes(limit);
  const auto primes = table.primes();

  // i in [1, N] with f(i) == 0; these are excluded from the lcm.
  auto valid = [&f](u64 i) { return f(static_cast<i128>(i)) != 0; };

  // Least valid i <= N in the class rho mod m, or 0.
  auto first_rep = [&](u64 rho, u64 m) -> u64 {
    u64 i = rho == 0 ? m : rho;
    while (i <= N) {
      if (valid(i)) return i;
      i += m;
    }
    return 0;
  };

  // Phase A: roots mod p and first hits per level, parallel over prime blocks.
  const std::size_t block_count = std::max<std::size_t>(1, std::min<std::size_t>(
      primes.size(), std::size_t{4} * std::max(1u, workers)));
  std::vector<PrimeBlock> blocks(block_count);
  const std::size_t per_block = (primes.size() + block_count - 1) / block_count;
  run_blocks(block_count, workers, [&](std::size_t b_lo, std::size_t b_hi) {
    for (std::size_t b = b_lo; b < b_hi; ++b) {
      PrimeBlock& out = blocks[b];
      const std::size_t lo = b * per_block;
      const std::size_t hi = std::min(primes.size(), lo + per_block);
      for (std::size_t idx = lo; idx < hi; ++idx) {
        const u64 p = primes[idx];
        std::vector<u64> level = roots_mod_prime(f, p);
        if (level.empty()) continue;
        const std::vector<u64> level_one = level;
        u64 pk = p;
        std::vector<u64> hits;
        while (true) {
          u64 best = 0;
          std::vector<u64> live;
          for (u64 rho : level) {
            const u64 rep = first_rep(rho, pk);
            if (rep == 0) continue;
            live.push_back(rho);
            if (best == 0 || rep < best) best = rep;
          }
          if (best == 0) break;
          hits.push_back(best);
          if (pk > fmax / p) break;
          level = lift_roots(f, p, pk, live, N);
          pk *= p;
        }
        if (hits.empty()) continue;
        out.primes.push_back(p);
        out.roots.insert(out.roots.end(), level_one.begin(), level_one.end());
        out.root_offsets.push_back(out.roots.size());
        out.hits.insert(out.hits.end(), hits.begin(), hits.end());
        out.hit_offsets.push_back(out.hits.size());
      }
    }
  });

  Ladder ladder;
  ladder.N = N;
  ladder.limit = limit;
  ladder.hit_offsets.push_back(0);
  std::vector<u64> root_data;
  std::vector<std::size_t> root_offsets{0};
  for (const PrimeBlock& blk : blocks) {
    for (std::size_t j = 0; j < blk.primes.size(); ++j) {
      ladder.primes.push_back(blk.primes[j]);
      root_data.insert(root_data.end(), blk.roots.begin() + blk.root_offsets[j],
                       blk.roots.begin() + blk.root_offsets[j + 1]);
      root_offsets.push_back(root_data.size());
      ladder.first_hits.insert(ladder.first_hits.end(),
                               blk.hits.begin() + blk.hit_offsets[j],
                               blk.hits.begin() + blk.hit_offsets[j + 1]);
      ladder.hit_offsets.push_back(ladder.first_hits.size());
    }
  }
  blocks.clear();

  // Phase B: strip every sieved prime from |f(i)| segment by segment; what
  // remains is 1 or a single prime above the limit.
  const u64 seg_len = std::min<u64>(kSegmentSize, std::max<u64>(1, (N + workers - 1) / std::max(1u, workers)));
  const std::size_t seg_count = static_cast<std::size_t>((N + seg_len - 1) / seg_len);
  std::vector<std::vector<std::pair<u64, u64>>> seg_residuals(seg_count);
  run_blocks(seg_count, workers, [&](std::size_t s_lo, std::size_t s_hi) {
    std::vector<u64> vals;
    for (std::size_t s = s_lo; s < s_hi; ++s) {
      const u64 lo = 1 + s * seg_len;
      const u64 hi = std::min(N, lo + seg_len - 1);
      vals.resize(hi - lo + 1);
      for (u64 i = lo; i <= hi; ++i) {
        const i128 v = f(static_cast<i128>(i));
        vals[i - lo] = v == 0 ? 1 : abs_value(v);
      }
      for (std::size_t j = 0; j < ladder.primes.size(); ++j) {
        const u64 p = ladder.primes[j];
        for (std::size_t r = root_offsets[j]; r < root_offsets[j + 1]; ++r) {
          const u64 rho = root_data[r];
          u64 i = lo + (rho + p - lo % p) % p;
          for (; i <= hi; i += p) {
            u64& v = vals[i - lo];
            while (v % p == 0) v /= p;
          }
        }
      }
      auto& res = seg_residuals[s];
      for (u64 i = lo; i <= hi; ++i) {
        if (vals[i - lo] > 1) res.emplace_back(vals[i - lo], i);
      }
    }
  });

  for (auto& seg : seg_residuals) {
    ladder.residuals.insert(ladder.residuals.end(), seg.begin(), seg.end());
  }
  std::sort(ladder.residuals.begin(), ladder.residuals.end());
  ladder.residuals.erase(
      std::unique(ladder.residuals.begin(), ladder.residuals.end(),
                  [](const auto& x, const auto& y) { return x.first == y.first; }),
      ladder.residuals.end());
  return ladder;
}

LcmResult evaluate(const Ladder& ladder, u64 n, bool keep_map) {
  LcmResult out;
  out.n = n;
  CompensatedSum total;
  ExponentMap map;
  map.n = n;
  map.cutoff = ladder.limit;
  for (std::size_t j = 0; j < ladder.primes.size(); ++j) {
    unsigned beta = 0;
    for (std::size_t h = ladder.hit_offsets[j]; h < ladder.hit_offsets[j + 1]; ++h) {
      if (ladder.first_hits[h] <= n) ++beta;
    }
    if (beta == 0) continue;
    const u64 p = ladder.primes[j];
    total += static_cast<double>(beta) * std::log(static_cast<double>(p));
    if (keep_map) map.entries.push_back({p, beta});
  }
  CompensatedSum large;
  for (const auto& [q, first] : ladder.residuals) {
    if (first > n) continue;
    const double lq = std::log(static_cast<double>(q));
    total += lq;
    large += lq;
    ++out.residual_count;
    if (keep_map) map.residual_primes.push_back(q);
  }
  out.log_lcm = total.value();
  if (keep_map) {
    map.large_prime_log_sum = large.value();
    out.exponent_map = std::move(map);
  }
  return out;
}

void require_irreducible(const QuadPoly& f, const PolyProfile& profile) {
  if (!profile.irreducible()) {
    throw Error(ErrorKind::NotIrreducible,
                "polynomial " + f.to_string() + " is reducible (" + to_string(profile.klass) +
                    "); use the reducible path");
  }
}

u64 sieve_cutoff(const QuadPoly& f, u64 n, const SieveOptions& options) {
  const i64 C = options.cutoff_constant > 0 ? options.cutoff_constant
                                            : cutoff_constant(f, classify(f));
  const u128 limit = static_cast<u128>(C) * n;
  if (limit > kMaxSieveLimit) {
    throw Error(ErrorKind::LimitTooLarge, "cutoff C*n exceeds 2^32");
  }
  return static_cast<u64>(limit);
}

std::vector<LcmResult> ladder_results(const IntPoly& f, const std::vector<u64>& ns,
                                      u64 cutoff, const SieveOptions& options) {
  if (ns.empty()) return {};
  const u64 N = *std::max_element(ns.begin(), ns.end());
  const Ladder ladder = run_sieve(f, N, cutoff, options.workers);
  std::vector<LcmResult> out;
  out.reserve(ns.size());
  for (u64 n : ns) out.push_back(evaluate(ladder, n, options.keep_exponent_map));
  return out;
}

}  // namespace

std::vector<LcmResult> log_lcm_ladder(const QuadPoly& f, const std::vector<u64>& ns,
                                      const SieveOptions& options) {
  require_irreducible(f, classify(f));
  if (ns.empty()) return {};
  for (u64 n : ns) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  }
  const u64 N = *std::max_element(ns.begin(), ns.end());
  return ladder_results(f, ns, sieve_cutoff(f, N, options), options);
}

LcmResult log_lcm(const QuadPoly& f, u64 n, const SieveOptions& options) {
  return log_lcm_ladder(f, {n}, options).front();
}

ExponentMap beta_map(const QuadPoly& f, u64 n, const SieveOptions& options) {
  SieveOptions opts = options;
  opts.keep_exponent_map = true;
  return *log_lcm(f, n, opts).exponent_map;
}

namespace {

mpz_class to_mpz(u64 v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return z;
}

double mpz_log(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

mpz_class oracle_value(const QuadPoly& f, u64 n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (n > kOracleMaxN) {
    throw Error(ErrorKind::OracleRangeExceeded,
                "big-integer oracle limited to n <= " + std::to_string(kOracleMaxN));
  }
  mpz_class L = 1;
  for (u64 i = 1; i <= n; ++i) {
    const i128 v = f(static_cast<i128>(i));
    if (v == 0) continue;
    const mpz_class value = to_mpz(abs_value(v));
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), value.get_mpz_t());
  }
  return L;
}

}  // namespace

LcmResult lcm_bigint_oracle(const QuadPoly& f, u64 n) {
  const mpz_class L = oracle_value(f, n);
  LcmResult out;
  out.n = n;
  out.log_lcm = mpz_log(L);
  out.exact_value = L.get_str();
  return out;
}

bool oracle_agrees(const QuadPoly& f, const ExponentMap& map) {
  const mpz_class expected = oracle_value(f, map.n);
  mpz_class product = 1;
  for (const auto& [p, beta] : map.entries) {
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), to_mpz(p).get_mpz_t(), beta);
    product *= pk;
  }
  for (u64 q : map.residual_primes) product *= to_mpz(q);
  return product == expected;
}

double error_term(const QuadPoly& f, u64 n, double B, const SieveOptions& options) {
  const LcmResult r = log_lcm(f, n, options);
  return r.log_lcm - r.n_log_n() - B * static_cast<double>(n);
}

namespace {

u64 euler_phi(u64 q) {
  u64 result = q;
  for (u64 p = 2; p * p <= q; ++p) {
    if (q % p) continue;
    while (q % p == 0) q /= p;
    result -= result / p;
  }
  if (q > 1) result -= result / q;
  return result;
}

// Least positive integer congruent to x mod m.
i64 least_positive(i64 x, i64 m) {
  i64 r = x % m;
  if (r <= 0) r += m;
  return r;
}

}  // namespace

double ap_constant(i64 a, i64 b) {
  if (a < 1) throw Error(ErrorKind::InvalidArgument, "ap_constant requires a >= 1");
  const i64 q = a / std::gcd(a, b);
  CompensatedSum sum;
  for (i64 k = 1; k <= q; ++k) {
    if (std::gcd(k, q) == 1) sum += 1.0 / static_cast<double>(k);
  }
  return static_cast<double>(q) / static_cast<double>(euler_phi(static_cast<u64>(q))) *
         sum.value();
}

double reducible_constant(i64 a, i64 b, i64 c, i64 d) {
  if (a < 1 || c < 1) {
    throw Error(ErrorKind::InvalidArgument, "leading coefficients must be positive");
  }
  if (std::gcd(a, b) != 1 || std::gcd(c, d) != 1) {
    throw Error(ErrorKind::InvalidArgument, "linear factors must be primitive");
  }
  if (a * d == b * c) {
    throw Error(ErrorKind::DegenerateFactors, "factors are proportional (ad = bc)");
  }
  const i64 q = a * c / std::gcd(a, c);
  CompensatedSum sum;
  for (i64 r = 1; r <= q; ++r) {
    if (std::gcd(r, q) != 1) continue;
    const double left = static_cast<double>(a) / static_cast<double>(least_positive(b * r, a));
    const double right = static_cast<double>(c) / static_cast<double>(least_positive(d * r, c));
    sum += std::max(left, right);
  }
  return sum.value() / static_cast<double>(euler_phi(static_cast<u64>(q)));
}

double reducible_asymptotic_constant(const QuadPoly& f) {
  const Factorization fac = factor_reducible(f);
  if (fac.square) return 2.0 * ap_constant(fac.first.a, fac.first.b);
  return reducible_constant(fac.first.a, fac.first.b, fac.second.a, fac.second.b);
}

LcmResult log_lcm_linear(i64 a, i64 b, u64 n, const SieveOptions& options) {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "linear coefficient must be nonzero");
  const i64 C = options.cutoff_constant > 0 ? options.cutoff_constant : 2;
  SieveOptions opts = options;
  auto results = ladder_results(IntPoly(0, a, b), {n}, static_cast<u64>(C) * n, opts);
  return results.front();
}

LcmResult log_lcm_reducible(const QuadPoly& f, u64 n, const SieveOptions& options) {
  const Factorization fac = factor_reducible(f);
  const double log_content = std::log(static_cast<double>(fac.content < 0 ? -fac.content : fac.content));
  SieveOptions opts = options;
  opts.keep_exponent_map = false;
  LcmResult out;
  if (fac.square) {
    out = log_lcm_linear(fac.first.a, fac.first.b, n, opts);
    out.log_lcm = log_content + 2.0 * out.log_lcm;
  } else {
    const IntPoly primitive(fac.first.a * fac.second.a,
                            fac.first.a * fac.second.b + fac.first.b * fac.second.a,
                            fac.first.b * fac.second.b);
    const i64 C = options.cutoff_constant > 0 ? options.cutoff_constant
                                              : cutoff_constant(f, classify(f));
    out = ladder_results(primitive, {n}, static_cast<u64>(C) * n, opts).front();
    out.log_lcm += log_content;
  }
  return out;
}

}  // namespace lcmquad
