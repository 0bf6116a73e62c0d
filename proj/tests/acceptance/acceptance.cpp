// Acceptance suite: one PASS/FAIL line per criterion, details indented above it.
#include <gmpxx.h>

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lcmquad/arith.hpp"
#include "lcmquad/constants.hpp"
#include "lcmquad/equidist.hpp"
#include "lcmquad/lcm.hpp"
#include "lcmquad/poly.hpp"

using namespace lcmquad;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, bool ok, const std::string& what) {
  std::printf("%s  criterion %d: %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

struct Row {
  QuadPoly f;
  i64 d;
  const char* B;
  int E[6];  // n = 10^2 .. 10^7
};

// Printed constant table and error-term table, in printed order.
const std::vector<Row>& rows() {
  static const std::vector<Row> r = {
      {{1, 0, 1}, -4, "-0.06627563421306070638", {-18, 6, -111, 34, -2634, -1557}},
      {{1, 0, 2}, -8, "-0.48950816301644200511", {-36, -11, -263, -761, -1462, -8457}},
      {{1, 0, -2}, 8, "0.39709034723782093451", {-7, -46, -54, -466, -764, -1472}},
      {{1, 1, 1}, -3, "0.13874777495070452108", {-6, -9, 17, -654, -2528, -1685}},
      {{1, 1, -1}, 5, "0.70387825168988607654", {-12, -91, -208, -253, -1075, -9636}},
      {{1, 1, 2}, -7, "-0.54444255904220314164", {9, -20, -218, -2120, 687, -686}},
      {{1, 2, -2}, 12, "0.18364993088853380692", {-17, -97, -297, -553, -454, -6336}},
      {{2, 0, 1}, -8, "0.55021260782347595900", {-15, -1, -301, -251, 1084, -14821}},
      {{2, 0, -1}, 8, "1.43680980556370005757", {-19, -69, -233, -182, -159, -10525}},
      {{2, 1, 1}, -7, "0.55416972962590654974", {-1, 6, 18, -1289, 235, -2553}},
      {{2, 1, 2}, -15, "0.17559560541609675388", {-34, 4, -295, 27, 1169, 1958}},
      {{2, 1, -2}, 17, "0.90886640180944034534", {-5, -37, -198, -1193, -4856, -16758}},
      {{2, -1, 1}, -7, "0.55416972962590654974", {-22, -126, -43, 177, -3077, -5459}},
      {{2, -1, 2}, -15, "0.17559560541609675388", {-5, -123, 74, -2083, -4851, -18152}},
      {{2, -1, -2}, 17, "0.90886640180944034534", {-17, -18, -136, -516, 3532, 907}},
      {{2, 2, 1}, -4, "0.97344513662685725774", {-9, -89, 9, -232, -2876, -10624}},
      {{2, 2, -1}, 12, "1.22337070172845177105", {-14, -41, 58, -331, -931, 689}},
  };
  return r;
}

bool shift_normalized(const QuadPoly& f) { return classify(f).shift > 0 || f.c() < 0; }

void criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  double worst_B = 0.0;
  for (const auto& row : rows()) {
    const double B = B_f(row.f).B;
    const double err = std::fabs(B - std::strtod(row.B, nullptr));
    worst_B = std::max(worst_B, err);
    if (err > 1e-10) {
      ok = false;
      std::printf("  B_f(%s) = %.17g, printed %s\n", row.f.to_string().c_str(), B, row.B);
    }
  }
  const std::pair<i64, const char*> cd[] = {
      {-4, "0.066550762366036180349"},  {-8, "-0.356681766437345118384"},
      {8, "0.529915431302878980184"},   {-3, "0.435045713698422447292"},
      {5, "1.102806342927250599260"},   {-7, "-0.111373766208260107471"},
      {12, "0.133374279356279078427"},  {-15, "-0.707190640126000030028"},
      {17, "0.279237874470781753922"},
  };
  double worst_Cd = 0.0;
  for (const auto& [d, text] : cd) {
    const double v = C_d(d);
    const double err = std::fabs(v - std::strtod(text, nullptr));
    worst_Cd = std::max(worst_Cd, err);
    if (err > 1e-10) {
      ok = false;
      std::printf("  C_%lld = %.17g, printed %s\n", static_cast<long long>(d), v, text);
    }
  }
  const std::pair<u64, const char*> sp[] = {
      {2, "0.279987673370859807200459206376"},  {3, "0.151226686598727076356318275233"},
      {5, "0.069643260624011195267442944307"},  {7, "0.041350928217815118656218939260"},
      {17, "0.009871469313243775687197132626"},
  };
  double worst_sp = 0.0;
  for (const auto& [p, text] : sp) {
    const double err = std::fabs(s_p(p) - std::strtod(text, nullptr));
    worst_sp = std::max(worst_sp, err);
    if (err > 1e-12) {
      ok = false;
      std::printf("  s_%llu = %.17g, printed %s\n", static_cast<unsigned long long>(p), s_p(p),
                  text);
    }
  }
  const double c0_err = std::fabs(C0() - -1.1725471674190148508587521528364);
  if (c0_err > 1e-12) {
    ok = false;
    std::printf("  C_0 = %.17g\n", C0());
  }
  const double elapsed = seconds_since(t0);
  if (elapsed >= 5.0) ok = false;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "constant tables (max err B %.1e, C_d %.1e, s_p %.1e, C_0 %.1e; %.2f s)", worst_B,
                worst_Cd, worst_sp, c0_err, elapsed);
  report(1, ok, buf);
}

void criterion2() {
  bool ok = true;
  const std::vector<u64> ns = {100, 1000, 10000, 100000};
  double slowest = 0.0;
  int cells = 0, misses = 0;
  for (const auto& row : rows()) {
    const double B = B_f(row.f).B;
    const auto t0 = Clock::now();
    const auto results = log_lcm_ladder(row.f, ns);
    slowest = std::max(slowest, seconds_since(t0));
    for (std::size_t i = 0; i < ns.size(); ++i) {
      const double e = results[i].log_lcm - results[i].n_log_n() - B * static_cast<double>(ns[i]);
      const double tol = (i == 3 || shift_normalized(row.f)) ? 2.0 : 1.0;
      ++cells;
      if (std::fabs(e - row.E[i]) > tol) {
        ok = false;
        ++misses;
        std::printf("  E_f(%llu) for %s = %.3f, printed %d (tolerance %g)\n",
                    static_cast<unsigned long long>(ns[i]), row.f.to_string().c_str(), e,
                    row.E[i], tol);
      }
    }
  }
  const QuadPoly f(1, 0, 1);
  const auto t0 = Clock::now();
  const auto big = log_lcm(f, 1'000'000);
  const double t6 = seconds_since(t0);
  const double e6 = big.log_lcm - big.n_log_n() - B_f(f).B * 1e6;
  std::printf("  E_f(10^6) for x^2 + 1 = %.3f in %.2f s\n", e6, t6);
  if (std::fabs(e6 - -2634) > 3.0 || t6 >= 120.0) ok = false;
  if (slowest >= 10.0) ok = false;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "error-term tables (%d/%d cells in tolerance, slowest n=10^5 ladder %.2f s, "
                "x^2+1 at 10^6 %.1f in %.2f s)",
                cells - misses, cells, slowest, e6, t6);
  report(2, ok, buf);
}

void criterion3() {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<i64> coef(-60, 60);
  std::vector<u64> primes;
  for (u64 p = 2; p <= 50; ++p)
    if (is_prime(p)) primes.push_back(p);
  int polys = 0;
  long checks = 0, mismatches = 0;
  while (polys < 100) {
    const i64 a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0) continue;
    const QuadPoly f(a, b, c);
    if (is_perfect_square(f.discriminant())) continue;
    ++polys;
    for (u64 p : primes) {
      unsigned k = 1;
      for (u64 pk = p; pk <= 100000; pk *= p, ++k) {
        // Independent count: residues x mod p^k with f(x) = 0 mod p^k.
        u64 brute = 0;
        const i128 m = static_cast<i128>(pk);
        for (u64 x = 0; x < pk; ++x) {
          const i128 X = static_cast<i128>(x);
          if ((((a * X + b) * X + c) % m) == 0) ++brute;
        }
        ++checks;
        const u64 closed = solution_count(f, p, k);
        if (closed != brute) {
          ++mismatches;
          if (mismatches <= 10) {
            std::printf("  s(%s, %llu^%u) = %llu, brute force %llu\n", f.to_string().c_str(),
                        static_cast<unsigned long long>(p), k,
                        static_cast<unsigned long long>(closed),
                        static_cast<unsigned long long>(brute));
          }
        }
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "closed-form s(f, p^k) vs residue counting (%ld checks, %ld mismatches)",
                checks, mismatches);
  report(3, mismatches == 0, buf);
}

// Entries are primes, so equal products mean equal exponents.
bool reproduces(const ExponentMap& map, const mpz_class& L) {
  mpz_class prod = 1;
  for (const auto& e : map.entries) {
    if (!is_prime(e.p)) return false;
    mpz_class pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), e.p, e.beta);
    prod *= pe;
  }
  for (u64 q : map.residual_primes) {
    mpz_class qq;
    mpz_set_ui(qq.get_mpz_t(), q);
    prod *= qq;
  }
  return prod == L;
}

void criterion4() {
  std::mt19937_64 rng(77001);
  std::uniform_int_distribution<i64> coef(-40, 40);
  int polys = 0;
  long mismatches = 0;
  const u64 N = 2000;
  while (polys < 20) {
    const i64 a = coef(rng), b = coef(rng), c = coef(rng);
    if (a == 0 || is_perfect_square(b * b - 4 * a * c)) continue;
    const QuadPoly f(a, b, c);
    ++polys;
    // Every n through one checkpointed pass, plus standalone maps on a subset.
    std::vector<u64> ns(N);
    for (u64 n = 1; n <= N; ++n) ns[n - 1] = n;
    SieveOptions keep;
    keep.keep_exponent_map = true;
    const auto ladder = log_lcm_ladder(f, ns, keep);
    mpz_class L = 1;
    for (u64 n = 1; n <= N; ++n) {
      const i128 v = f(static_cast<i128>(n));
      const long long av = static_cast<long long>(v < 0 ? -v : v);
      mpz_class term;
      mpz_set_si(term.get_mpz_t(), av);
      if (av != 0) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), term.get_mpz_t());
      std::vector<ExponentMap> maps{*ladder[n - 1].exponent_map};
      if (n <= 100 || n % 37 == 0) maps.push_back(beta_map(f, n));
      for (const auto& map : maps) {
        if (!reproduces(map, L)) {
          ++mismatches;
          if (mismatches <= 10) {
            std::printf("  mismatch for %s at n = %llu\n", f.to_string().c_str(),
                        static_cast<unsigned long long>(n));
          }
        }
      }
    }
  }
  char buf[256];
  std::snprintf(buf, sizeof buf, "exponent map vs big-integer lcm (20 polynomials x n = 1..2000, %ld mismatches)",
                mismatches);
  report(4, mismatches == 0, buf);
}

void criterion5() {
  const u64 n = 1'000'000;
  bool ok = true;
  double worst = 0.0;
  const QuadPoly reducible[] = {{2, 3, 1}, {6, 7, 2}, {4, 4, 1}};
  for (const auto& f : reducible) {
    const double K = reducible_asymptotic_constant(f);
    const double ratio = log_lcm_reducible(f, n).log_lcm / (K * static_cast<double>(n));
    std::printf("  %s: log L_n / (%.6f n) = %.5f\n", f.to_string().c_str(), K, ratio);
    worst = std::max(worst, std::fabs(ratio - 1.0));
  }
  const std::pair<i64, i64> aps[] = {{3, 1}, {4, 3}, {5, 2}};
  for (const auto& [a, b] : aps) {
    const double K = ap_constant(a, b);
    const double ratio = log_lcm_linear(a, b, n).log_lcm / (K * static_cast<double>(n));
    std::printf("  %lld k + %lld: log L_n / (%.6f n) = %.5f\n", static_cast<long long>(a),
                static_cast<long long>(b), K, ratio);
    worst = std::max(worst, std::fabs(ratio - 1.0));
  }
  if (worst > 0.05) ok = false;
  char buf[256];
  std::snprintf(buf, sizeof buf, "reducible and progression constants at n = 10^6 (max |ratio - 1| %.4f)",
                worst);
  report(5, ok, buf);
}

void criterion6() {
  bool ok = true;
  const QuadPoly polys[] = {{1, 0, 1}, {1, 1, 1}, {2, 1, 2}};
  for (const auto& f : polys) {
    double prev = 2.0;
    for (u64 x : {1000ULL, 10000ULL, 100000ULL}) {
      const auto samples = root_samples(f, x);
      std::vector<double> fr;
      for (const auto& s : samples) fr.push_back(s.frac);
      const double d = star_discrepancy(fr);
      std::printf("  D*(%s, x = %llu) = %.5f\n", f.to_string().c_str(),
                  static_cast<unsigned long long>(x), d);
      if (!(d < prev)) ok = false;
      prev = d;
    }
    const TSums t = t_sums(f, 100000);
    std::printf("  T1/n = %.5f, T2/n = %.5f\n", t.T1 / 1e5, t.T2 / 1e5);
    if (std::fabs(t.T1) / 1e5 >= 0.05 || std::fabs(t.T2) / 1e5 >= 0.05) ok = false;
    const u64 violations = pairing_check(f, 10000);
    if (violations != 0) {
      std::printf("  pairing violations for %s: %llu\n", f.to_string().c_str(),
                  static_cast<unsigned long long>(violations));
      ok = false;
    }
  }
  for (u64 n : {100ULL, 1000ULL, 100000ULL}) {
    if (t_sums(QuadPoly(1, 0, 1), n).T1 != 0.0) {
      std::printf("  T1 for x^2 + 1 at n = %llu is nonzero\n", static_cast<unsigned long long>(n));
      ok = false;
    }
  }
  report(6, ok, "equidistribution (discrepancy decreasing, T-sums, pairing, T1 = 0 for x^2 + 1)");
}

void criterion7() {
  bool ok = true;
  const QuadPoly polys[] = {{1, 0, 1}, {2, -1, -2}, {1, 2, -2}};
  for (const auto& f : polys) {
    double ref = 0.0;
    for (unsigned w : {1u, 4u, 8u}) {
      SieveOptions opts;
      opts.workers = w;
      const double v = log_lcm(f, 200000, opts).log_lcm;
      if (w == 1) ref = v;
      if (std::bit_cast<u64>(v) != std::bit_cast<u64>(ref)) {
        std::printf("  log_lcm differs for %s with %u workers\n", f.to_string().c_str(), w);
        ok = false;
      }
    }
    // B_f evaluated concurrently from 1, 4 and 8 threads.
    const double Bref = B_f(f).B;
    for (unsigned w : {4u, 8u}) {
      std::vector<double> out(w);
      std::vector<std::thread> threads;
      for (unsigned i = 0; i < w; ++i) threads.emplace_back([&, i] { out[i] = B_f(f).B; });
      for (auto& t : threads) t.join();
      for (double v : out) {
        if (std::bit_cast<u64>(v) != std::bit_cast<u64>(Bref)) ok = false;
      }
    }
  }
  report(7, ok, "bit-identical log_lcm and B_f across 1, 4, 8 workers");
}

}  // namespace

int main() {
  for (auto* c : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6,
                  criterion7}) {
    const auto t0 = Clock::now();
    c();
    std::printf("  (%.2f s)\n", seconds_since(t0));
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
