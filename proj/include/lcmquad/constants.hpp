#pragma once

#include <string>
#include <vector>

#include "lcmquad/poly.hpp"

namespace lcmquad {

inline constexpr double kEulerGamma = 0.57721566490153286061;
inline constexpr double kLog2 = 0.69314718055994530942;

// Value and s-derivative of the Hurwitz zeta function. In Laurent mode
// (s == 1) `value` holds gamma_0(x) = -psi(x) and `derivative` holds the
// generalized Stieltjes constant gamma_1(x).
struct ZetaPair {
  double value = 0.0;
  double derivative = 0.0;
};

// Euler-Maclaurin with Bernoulli corrections through B_16. Accepts any real
// s != 1 (analytic continuation) and s == 1 in Laurent mode; x in (0, 1].
ZetaPair hurwitz_zeta_pair(double s, double x);

double digamma(double x);
// gamma_1(x) = lim_N [ sum_{k<=N} log(k+x)/(k+x) - log^2(N+x)/2 ]
double stieltjes_gamma1(double x);

// zeta'(s) / zeta(s) for s >= 2.
double zeta_log_deriv(double s);
// -sum Lambda(n) n^{-s} truncated at n <= terms; tail bound written to *tail.
double zeta_log_deriv_mangoldt(double s, unsigned long terms, double* tail = nullptr);

struct LValue {
  double value = 0.0;       // L(s, chi_d)
  double derivative = 0.0;  // L'(s, chi_d)
};

// L(s, chi_d) and L'(s, chi_d) for real s >= 1, s != 1 via Hurwitz sums and
// s == 1 via digamma / Stieltjes data. d a fundamental discriminant != 1.
LValue dirichlet_L(double s, i64 d);
double L_log_deriv(double s, i64 d);
// L'/L at s via Richardson-extrapolated central differences of log L.
double L_log_deriv_numeric(double s, i64 d, double h = 1e-3);

// Upper bound for |zeta'/zeta(s)| and |L'/L(s, chi)| at s >= 2, from
// sum Lambda(n) / (n^s - 1) with the n >= 3 part compared to an integral.
double log_deriv_bound(double s);

double s_p(u64 p);

struct SeriesTerm {
  std::string series;  // "zeta", "L", "s_p", "C(f)"
  long index = 0;      // k, or the prime for per-prime terms
  double value = 0.0;
  double tail_bound = 0.0;  // bound on the omitted remainder after this term
};

struct BfBreakdown {
  double C0 = 0.0;
  double Cd = 0.0;
  double Cf = 0.0;
  double B = 0.0;
  i64 d = 0;
  i64 q = 1;
  std::vector<SeriesTerm> terms;
};

double C0(std::vector<SeriesTerm>* terms = nullptr);
double C_d(i64 d, std::vector<SeriesTerm>* terms = nullptr);
double C_f(const QuadPoly& f, std::vector<SeriesTerm>* terms = nullptr);
BfBreakdown B_f(const QuadPoly& f);

// Largest tail bound carried by the breakdown's truncated series.
double max_tail_bound(const BfBreakdown& b) noexcept;

// sum over primes p <= P, p not dividing d, of (d/p) log p / (p - 1).
double direct_prime_sum(i64 d, u64 P);

}  // namespace lcmquad
