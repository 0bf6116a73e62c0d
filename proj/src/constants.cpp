#include "lcmquad/constants.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "lcmquad/arith.hpp"
#include "lcmquad/error.hpp"
#include "lcmquad/numeric.hpp"

namespace lcmquad {

namespace {

// B_2, B_4, ..., B_16
constexpr std::array<double, 8> kBernoulli = {
    1.0 / 6.0,   -1.0 / 30.0,  1.0 / 42.0,  -1.0 / 30.0,
    5.0 / 66.0,  -691.0 / 2730.0, 7.0 / 6.0, -3617.0 / 510.0,
};

constexpr int kHurwitzTerms = 32;
constexpr int kDigammaShift = 16;
constexpr int kStieltjesTerms = 10'000;
// Largest k in the 2^k series (k = 0..7 for L, 1..7 for zeta).
constexpr int kDyadicTerms = 7;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// sum_{k>=0} (w k + offset)^{-s} and its s-derivative for s != 1, by
// Euler-Maclaurin at N = kHurwitzTerms. With w = 1 this is zeta(s, offset).
ZetaPair scaled_hurwitz(double s, double offset, double w) {
  CompensatedSum value, deriv;
  for (int k = 0; k < kHurwitzTerms; ++k) {
    const double t = w * k + offset;
    const double lt = std::log(t);
    const double ts = std::exp(-s * lt);
    value += ts;
    deriv += -lt * ts;
  }
  const double y = kHurwitzTerms + offset / w;
  const double Y = w * kHurwitzTerms + offset;
  const double lY = std::log(Y);
  const double Ys = std::exp(-s * lY);

  const double pole = Y * Ys / (w * (s - 1.0));
  value += pole;
  deriv += -pole * (lY + 1.0 / (s - 1.0));

  value += 0.5 * Ys;
  deriv += -0.5 * lY * Ys;

  double rising = s;       // (s)_m, m = 2j - 1
  double harmonic = 1.0 / s;  // sum_{i<m} 1/(s+i)
  double ypow = Ys / y;    // w^{-s} y^{-s-m} in the scaled frame
  for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
    const int m = 2 * j - 1;
    const double term = kBernoulli[j - 1] / factorial(2 * j) * rising * ypow;
    value += term;
    deriv += term * (harmonic - lY);
    rising *= (s + m) * (s + m + 1);
    harmonic += 1.0 / (s + m) + 1.0 / (s + m + 1);
    ypow /= y * y;
  }
  return {value.value(), deriv.value()};
}

}  // namespace

double digamma(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "digamma requires x > 0");
  CompensatedSum shift;
  for (int k = 0; k < kDigammaShift; ++k) shift += 1.0 / (x + k);
  const double y = x + kDigammaShift;
  CompensatedSum asym;
  asym += std::log(y);
  asym += -0.5 / y;
  double ypow = 1.0;
  for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
    ypow /= y * y;
    asym += -kBernoulli[j - 1] / (2.0 * j) * ypow;
  }
  return asym.value() - shift.value();
}

double stieltjes_gamma1(double x) {
  if (!(x > 0.0)) throw Error(ErrorKind::DomainError, "stieltjes_gamma1 requires x > 0");
  CompensatedSum sum;
  for (int k = 0; k < kStieltjesTerms; ++k) {
    const double t = k + x;
    sum += std::log(t) / t;
  }
  const double y = kStieltjesTerms + x;
  const double L = std::log(y);
  sum += -0.5 * L * L;
  sum += 0.5 * L / y;
  double ypow = 1.0;
  double harmonic = 0.0;  // H_{2j-1}
  int m = 0;
  for (int j = 1; j <= static_cast<int>(kBernoulli.size()); ++j) {
    ypow /= y * y;
    while (m < 2 * j - 1) harmonic += 1.0 / ++m;
    sum += -kBernoulli[j - 1] / (2.0 * j) * ypow * (harmonic - L);
  }
  return sum.value();
}

ZetaPair hurwitz_zeta_pair(double s, double x) {
  if (!(x > 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::DomainError, "hurwitz_zeta_pair requires x in (0, 1]");
  }
  if (!(s > 0.5) || !std::isfinite(s)) {
    throw Error(ErrorKind::DomainError, "hurwitz_zeta_pair requires s > 1/2");
  }
  if (s == 1.0) return {-digamma(x), stieltjes_gamma1(x)};
  return scaled_hurwitz(s, x, 1.0);
}

double zeta_log_deriv(double s) {
  if (!(s >= 2.0)) throw Error(ErrorKind::DomainError, "zeta_log_deriv requires s >= 2");
  const ZetaPair z = scaled_hurwitz(s, 1.0, 1.0);
  return z.derivative / z.value;
}

double zeta_log_deriv_mangoldt(double s, unsigned long terms, double* tail) {
  if (!(s > 1.0)) throw Error(ErrorKind::DomainError, "series requires s > 1");
  if (terms < 2) terms = 2;
  // Smallest-prime-factor table for Lambda(n).
  std::vector<unsigned long> spf(terms + 1, 0);
  for (unsigned long i = 2; i <= terms; ++i) {
    if (spf[i]) continue;
    for (unsigned long j = i; j <= terms; j += i) {
      if (!spf[j]) spf[j] = i;
    }
  }
  CompensatedSum sum;
  for (unsigned long n = 2; n <= terms; ++n) {
    const unsigned long p = spf[n];
    unsigned long m = n;
    while (m % p == 0) m /= p;
    if (m != 1) continue;
    sum += -std::log(static_cast<double>(p)) * std::pow(static_cast<double>(n), -s);
  }
  if (tail) {
    const double N = static_cast<double>(terms);
    *tail = std::pow(N, 1.0 - s) * (std::log(N) / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
  }
  return sum.value();
}

namespace {

void require_character(i64 d) {
  if (d == 1 || !is_fundamental_discriminant(d)) {
    throw Error(ErrorKind::DomainError,
                std::to_string(d) + " is not a fundamental discriminant != 1");
  }
}

// Real s != 1; analytic continuation below 1 (pole cancels since sum chi = 0).
LValue dirichlet_L_continued(double s, i64 d) {
  const i64 m = d < 0 ? -d : d;
  const double w = static_cast<double>(m);
  CompensatedSum value, deriv;
  for (i64 a = 1; a < m; ++a) {
    const int chi = kronecker(d, a);
    if (chi == 0) continue;
    const ZetaPair z = scaled_hurwitz(s, static_cast<double>(a), w);
    value += chi * z.value;
    deriv += chi * z.derivative;
  }
  return {value.value(), deriv.value()};
}

}  // namespace

LValue dirichlet_L(double s, i64 d) {
  require_character(d);
  if (!(s >= 1.0)) throw Error(ErrorKind::DomainError, "dirichlet_L requires s >= 1");
  if (s != 1.0) return dirichlet_L_continued(s, d);
  const i64 m = d < 0 ? -d : d;
  const double w = static_cast<double>(m);
  CompensatedSum psi_sum, g1_sum;
  for (i64 a = 1; a < m; ++a) {
    const int chi = kronecker(d, a);
    if (chi == 0) continue;
    const double x = static_cast<double>(a) / w;
    psi_sum += chi * digamma(x);
    g1_sum += chi * stieltjes_gamma1(x);
  }
  const double L = -psi_sum.value() / w;
  const double dL = -std::log(w) * L - g1_sum.value() / w;
  return {L, dL};
}

double L_log_deriv(double s, i64 d) {
  const LValue v = dirichlet_L(s, d);
  if (std::fabs(v.value) < 1e-12) {
    throw Error(ErrorKind::ZeroL, "L(s, chi_" + std::to_string(d) + ") vanished numerically");
  }
  return v.derivative / v.value;
}

double L_log_deriv_numeric(double s, i64 d, double h) {
  require_character(d);
  auto log_L = [d](double t) { return std::log(dirichlet_L_continued(t, d).value); };
  auto central = [&](double step) { return (log_L(s + step) - log_L(s - step)) / (2.0 * step); };
  return (4.0 * central(h / 2.0) - central(h)) / 3.0;
}

double s_p(u64 p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  const double lp = std::log(static_cast<double>(p));
  CompensatedSum sum;
  for (int k = 1; k < 16; ++k) {
    const double denom = std::pow(static_cast<double>(p), std::ldexp(1.0, k)) - 1.0;
    if (!std::isfinite(denom)) break;
    const double term = lp / denom;
    sum += term;
    if (term < 1e-18 * sum.value()) break;
  }
  return sum.value();
}

double log_deriv_bound(double s) {
  const double t = s - 1.0;
  return std::exp2(-s) * (4.0 / 3.0 * kLog2 + 9.0 / 4.0 * (kLog2 / t + 1.0 / (t * t)));
}

namespace {

// Bound summed over s = 2^k for k > K; dominated by twice the first omitted term.
double dyadic_tail(int K) { return 2.0 * log_deriv_bound(std::ldexp(1.0, K + 1)); }

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

u64 uabs(i64 v) { return static_cast<u64>(v < 0 ? -v : v); }

}  // namespace

double C0(std::vector<SeriesTerm>* terms) {
  CompensatedSum zeta_sum;
  for (int k = 1; k <= kDyadicTerms; ++k) {
    const double v = zeta_log_deriv(std::ldexp(1.0, k));
    zeta_sum += v;
    if (terms) terms->push_back({"zeta", k, v, k == kDyadicTerms ? dyadic_tail(k) : 0.0});
  }
  CompensatedSum total;
  total += kEulerGamma;
  total += -1.0;
  total += -2.0 * kLog2;
  total += -zeta_sum.value();
  return total.value();
}

double C_d(i64 d, std::vector<SeriesTerm>* terms) {
  require_character(d);
  CompensatedSum sum;
  for (int k = 0; k <= kDyadicTerms; ++k) {
    const double v = L_log_deriv(std::ldexp(1.0, k), d);
    sum += v;
    if (terms) terms->push_back({"L", k, v, k == kDyadicTerms ? dyadic_tail(k) : 0.0});
  }
  for (u64 p : prime_divisors(uabs(d))) {
    const double v = s_p(p);
    sum += -v;
    if (terms) terms->push_back({"s_p", static_cast<long>(p), v, 0.0});
  }
  return sum.value();
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

// sum_{k>=1} s(f, p^k) / p^k. Terms are summed until the counts have settled
// (constant past every valuation threshold), then the constant tail is added in
// closed form.
double special_prime_series(const QuadPoly& f, u64 p) {
  const int v = valuation(f.content(), p);
  const int vD = valuation(f.discriminant(), p);
  const int K = v + 2 * vD + 3;
  const double pd = static_cast<double>(p);
  CompensatedSum sum;
  u64 last = 0;
  for (int k = 1; k <= K; ++k) {
    last = solution_count(f, p, k);
    sum += static_cast<double>(last) * std::pow(pd, -k);
  }
  if (solution_count(f, p, K + 1) != last || solution_count(f, p, K + 2) != last) {
    throw Error(ErrorKind::DomainError,
                "solution counts did not stabilize at p = " + std::to_string(p));
  }
  // sum_{k>K} last / p^k
  sum += static_cast<double>(last) * std::pow(pd, -K) / (pd - 1.0);
  return sum.value();
}

}  // namespace

double C_f(const QuadPoly& f_in, std::vector<SeriesTerm>* terms) {
  const PolyProfile profile = classify(f_in);
  if (!profile.irreducible()) {
    throw Error(ErrorKind::NotIrreducible, "C(f) requires an irreducible polynomial");
  }
  const QuadPoly f = profile.sign_flipped ? f_in.negated() : f_in;
  const i64 q = profile.q;
  CompensatedSum total;

  CompensatedSum rsum;
  for (i64 r = 1; r <= q; ++r) {
    if (std::gcd(r, q) == 1) rsum += std::log1p(static_cast<double>(r) / static_cast<double>(q));
  }
  const double q_term = rsum.value() / static_cast<double>(euler_phi(static_cast<u64>(q)));
  total += q_term;
  if (terms) terms->push_back({"C(f):q", static_cast<long>(q), q_term, 0.0});

  const double log_a = std::log(static_cast<double>(f.a()));
  total += log_a;
  if (terms) terms->push_back({"C(f):log_a", static_cast<long>(f.a()), log_a, 0.0});

  std::vector<u64> special = prime_divisors(2 * uabs(f.a()));
  for (u64 p : prime_divisors(uabs(profile.D))) special.push_back(p);
  std::sort(special.begin(), special.end());
  special.erase(std::unique(special.begin(), special.end()), special.end());

  for (u64 p : special) {
    const double pd = static_cast<double>(p);
    const double expected = (1.0 + kronecker(profile.d, static_cast<i64>(p))) / (pd - 1.0);
    const double term = std::log(pd) * (expected - special_prime_series(f, p));
    total += term;
    if (terms) terms->push_back({"C(f):p", static_cast<long>(p), term, 0.0});
  }
  return total.value();
}

BfBreakdown B_f(const QuadPoly& f) {
  const PolyProfile profile = classify(f);
  if (!profile.irreducible()) {
    throw Error(ErrorKind::NotIrreducible,
                "B_f requires an irreducible polynomial, got " + f.to_string() + " (" +
                    to_string(profile.klass) + ")");
  }
  BfBreakdown out;
  out.d = profile.d;
  out.q = profile.q;
  out.C0 = C0(&out.terms);
  out.Cd = C_d(profile.d, &out.terms);
  out.Cf = C_f(f, &out.terms);
  out.B = out.C0 + out.Cd + out.Cf;
  return out;
}

double max_tail_bound(const BfBreakdown& b) noexcept {
  double worst = 0.0;
  for (const auto& t : b.terms) worst = std::max(worst, t.tail_bound);
  return worst;
}

double direct_prime_sum(i64 d, u64 P) {
  if (P < 2) throw Error(ErrorKind::InvalidArgument, "truncation bound must be >= 2");
  const PrimeTable primes = sieve_primes(P);
  CompensatedSum sum;
  for (u64 p : primes) {
    const int chi = kronecker(d, static_cast<i64>(p));
    if (chi == 0) continue;
    const double pd = static_cast<double>(p);
    sum += chi * std::log(pd) / (pd - 1.0);
  }
  return sum.value();
}

}  // namespace lcmquad
