#include "lcmquad/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lcmquad/error.hpp"

namespace lcmquad {

u64 reduce_mod(i128 x, u64 m) noexcept {
  i128 r = x % static_cast<i128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 IntPoly::eval_mod(u64 x, u64 m) const noexcept {
  const u64 am = reduce_mod(a, m), bm = reduce_mod(b, m), cm = reduce_mod(c, m);
  u64 acc = (mulmod(am, x, m) + bm) % m;
  acc = mulmod(acc, x, m);
  return static_cast<u64>((static_cast<u128>(acc) + cm) % m);
}

u64 IntPoly::deriv_mod(u64 x, u64 m) const noexcept {
  const u64 a2 = reduce_mod(i128{2} * a, m), bm = reduce_mod(b, m);
  return static_cast<u64>((static_cast<u128>(mulmod(a2, x, m)) + bm) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) noexcept {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 invmod(u64 x, u64 m) {
  i128 old_r = x % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const i128 qt = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - qt * r};
    std::tie(old_s, s) = std::pair{s, old_s - qt * s};
  }
  if (old_r != 1) {
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(x) + " is not invertible mod " + std::to_string(m));
  }
  return reduce_mod(old_s, m);
}

int valuation(i64 x, u64 p) noexcept {
  if (x == 0) return 0;
  u64 v = static_cast<u64>(x < 0 ? -x : x);
  int e = 0;
  while (v % p == 0) {
    v /= p;
    ++e;
  }
  return e;
}

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::optional<u64> sqrt_mod_prime(u64 x, u64 p) {
  x %= p;
  if (x == 0) return 0;
  if (p < 64) {
    for (u64 r = 1; r < p; ++r) {
      if (r * r % p == x) return r;
    }
    return std::nullopt;
  }
  if (powmod(x, (p - 1) / 2, p) != 1) return std::nullopt;
  if (p % 4 == 3) return powmod(x, (p + 1) / 4, p);

  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  u64 q = p - 1;
  int s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  int m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(x, q, p);
  u64 r = powmod(x, (q + 1) / 2, p);
  while (t != 1) {
    int i = 0;
    u64 tt = t;
    while (tt != 1) {
      tt = mulmod(tt, tt, p);
      ++i;
    }
    u64 b = c;
    for (int j = 0; j < m - i - 1; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

int kronecker(i64 d, i64 m) {
  if (d == 0 && m == 0) {
    throw Error(ErrorKind::InvalidArgument, "kronecker(0, 0) is undefined");
  }
  if (m == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (m < 0) {
    m = -m;
    if (d < 0) result = -result;
  }
  // Factor 2 out of m.
  int twos = 0;
  while ((m & 1) == 0) {
    m >>= 1;
    ++twos;
  }
  if (twos > 0) {
    if ((d & 1) == 0) return 0;
    const i64 r8 = ((d % 8) + 8) % 8;
    if ((twos & 1) && (r8 == 3 || r8 == 5)) result = -result;
  }
  // Jacobi symbol (d / m), m odd positive.
  i64 a = d % m;
  if (a < 0) a += m;
  i64 n = m;
  while (a != 0) {
    while ((a & 1) == 0) {
      a >>= 1;
      const i64 r8 = n % 8;
      if (r8 == 3 || r8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

// --- primes -------------------------------------------------------------------

bool PrimeTable::contains(u64 n) const {
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeTable sieve_primes(u64 limit) {
  if (limit < 2) {
    throw Error(ErrorKind::InvalidArgument, "sieve limit must be at least 2");
  }
  if (limit > kMaxSieveLimit) {
    throw Error(ErrorKind::LimitTooLarge,
                "sieve limit " + std::to_string(limit) + " exceeds 2^32");
  }
  const u64 root = static_cast<u64>(isqrt(limit));
  std::vector<char> small(root + 1, 1);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = 0;
  }

  std::vector<u64> primes;
  if (limit > 100) {
    const double ln = std::log(static_cast<double>(limit));
    primes.reserve(static_cast<std::size_t>(limit / (ln - 1.1)) + 16);
  }
  constexpr u64 kSegment = u64{1} << 18;
  std::vector<char> seg(kSegment);
  for (u64 low = 2; low <= limit; low += kSegment) {
    const u64 high = std::min(low + kSegment - 1, limit);
    std::fill(seg.begin(), seg.end(), 1);
    for (u64 p : base) {
      if (p * p > high) break;
      u64 start = std::max(p * p, (low + p - 1) / p * p);
      for (u64 j = start; j <= high; j += p) seg[j - low] = 0;
    }
    for (u64 i = low; i <= high; ++i) {
      if (seg[i - low]) primes.push_back(i);
    }
  }
  return PrimeTable(limit, std::move(primes));
}

// --- roots ----------------------------------------------------------------------

std::vector<u64> roots_mod_prime(const IntPoly& f, u64 p) {
  const u64 a = reduce_mod(f.a, p), b = reduce_mod(f.b, p), c = reduce_mod(f.c, p);
  std::vector<u64> out;
  if (a == 0) {
    if (b != 0) {
      out.push_back(mulmod(c == 0 ? 0 : p - c, invmod(b, p), p));
    } else if (c == 0) {
      out.resize(p);
      std::iota(out.begin(), out.end(), u64{0});
    }
    return out;
  }
  if (p == 2) {
    for (u64 x = 0; x < 2; ++x) {
      if (f.eval_mod(x, 2) == 0) out.push_back(x);
    }
    return out;
  }
  const u64 disc = static_cast<u64>(
      (static_cast<u128>(mulmod(b, b, p)) + p - mulmod(4 % p, mulmod(a, c, p), p)) % p);
  const auto s = sqrt_mod_prime(disc, p);
  if (!s) return out;
  const u64 inv2a = invmod(mulmod(2, a, p), p);
  const u64 r1 = mulmod((p - b + *s) % p, inv2a, p);
  const u64 r2 = mulmod((2 * p - b - *s) % p, inv2a, p);
  out.push_back(r1);
  if (r2 != r1) out.push_back(r2);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<u64> lift_roots(const IntPoly& f, u64 p, u64 pk, std::span<const u64> roots,
                            u64 max_candidate) {
  if (pk > (~u64{0} >> 1) / p) {
    throw Error(ErrorKind::Overflow, "prime power exceeds 63 bits");
  }
  const u64 next = pk * p;
  std::vector<u64> out;
  for (u64 r : roots) {
    if (r > max_candidate) continue;
    const u64 fp = f.deriv_mod(r % p, p);
    if (fp != 0) {
      const u64 t0 = f.eval_mod(r, next) / pk;
      const u64 t = mulmod((p - t0 % p) % p, invmod(fp, p), p);
      const u64 lifted = r + t * pk;
      if (lifted <= max_candidate) out.push_back(lifted);
      continue;
    }
    const u64 t_max = std::min(p - 1, (max_candidate - r) / pk);
    for (u64 t = 0; t <= t_max; ++t) {
      const u64 cand = r + t * pk;
      if (f.eval_mod(cand, next) == 0) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSet roots_mod_prime_power(const IntPoly& f, u64 p, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "exponent k must be >= 1");
  RootSet out;
  out.p = p;
  out.k = k;
  out.roots = roots_mod_prime(f, p);
  out.modulus = p;
  for (int j = 1; j < k; ++j) {
    out.roots = lift_roots(f, p, out.modulus, out.roots);
    out.modulus *= p;
  }
  return out;
}

u64 brute_force_solution_count(const IntPoly& f, u64 modulus) {
  u64 count = 0;
  for (u64 x = 0; x < modulus; ++x) {
    if (f.eval_mod(x, modulus) == 0) ++count;
  }
  return count;
}

namespace {

u64 ipow(u64 base, int e) {
  u64 r = 1;
  while (e-- > 0) r *= base;
  return r;
}

i64 mod_floor(i64 x, i64 m) {
  const i64 r = x % m;
  return r < 0 ? r + m : r;
}

// Casework for f primitive at p (p does not divide all coefficients).
u64 primitive_count(i64 a, i64 b, i64 c, u64 p, int k) {
  const i64 D = b * b - 4 * a * c;
  if (p != 2) {
    if (a % static_cast<i64>(p) != 0) {
      const int l = valuation(D, p);
      i64 Dp = D;
      for (int i = 0; i < l; ++i) Dp /= static_cast<i64>(p);
      if (k <= l) return ipow(p, k / 2);
      if (l % 2 == 1 || kronecker(Dp, static_cast<i64>(p)) == -1) return 0;
      return 2 * ipow(p, l / 2);
    }
    return b % static_cast<i64>(p) == 0 ? 0 : 1;
  }
  if (b % 2 != 0) {
    if (a % 2 == 0) return 1;
    return c % 2 != 0 ? 0 : 2;
  }
  if (a % 2 == 0) return 0;
  // b even, a odd: D = 4^l D' with D' not divisible by 4.
  int l = 0;
  i64 Dq = D;
  while (Dq % 4 == 0) {
    Dq /= 4;
    ++l;
  }
  if (k <= 2 * l - 1) return ipow(2, k / 2);
  if (k == 2 * l) return mod_floor(Dq, 4) == 1 ? ipow(2, l) : 0;
  return mod_floor(Dq, 8) == 1 ? ipow(2, l + 1) : 0;
}

}  // namespace

u64 solution_count(const QuadPoly& f, u64 p, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "exponent k must be >= 1");
  if (f.discriminant() == 0 || is_perfect_square(f.discriminant())) {
    throw Error(ErrorKind::NotIrreducible,
                "solution_count requires an irreducible polynomial, got " + f.to_string());
  }
  // Content divisible by p^v: f = p^v g, and f = 0 mod p^k iff g = 0 mod p^(k-v).
  const int v = valuation(f.content(), p);
  if (k <= v) return ipow(p, k);
  const i64 pv = static_cast<i64>(ipow(p, v));
  return ipow(p, v) * primitive_count(f.a() / pv, f.b() / pv, f.c() / pv, p, k - v);
}

}  // namespace lcmquad
