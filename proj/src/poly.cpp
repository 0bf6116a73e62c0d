#include "lcmquad/poly.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

#include "lcmquad/error.hpp"

namespace lcmquad {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPolynomial: return "InvalidPolynomial";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotReducible: return "NotReducible";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::LimitTooLarge: return "LimitTooLarge";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::OracleRangeExceeded: return "OracleRangeExceeded";
    case ErrorKind::DegenerateFactors: return "DegenerateFactors";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::ZeroL: return "ZeroL";
    case ErrorKind::EmptyInput: return "EmptyInput";
  }
  return "Unknown";
}

const char* to_string(PolyClass klass) noexcept {
  switch (klass) {
    case PolyClass::IrreducibleQuadratic: return "IrreducibleQuadratic";
    case PolyClass::ReducibleDistinctFactors: return "ReducibleDistinctFactors";
    case PolyClass::PerfectSquareFactor: return "PerfectSquareFactor";
    case PolyClass::ContentReducible: return "ContentReducible";
  }
  return "Unknown";
}

QuadPoly::QuadPoly(i64 a, i64 b, i64 c) : a_(a), b_(b), c_(c) {
  if (a == 0) {
    throw Error(ErrorKind::InvalidPolynomial, "leading coefficient must be nonzero");
  }
  for (i64 v : {a, b, c}) {
    if (v > kMaxCoefficient || v < -kMaxCoefficient) {
      throw Error(ErrorKind::InvalidPolynomial,
                  "coefficient " + std::to_string(v) + " exceeds 2^20 in magnitude");
    }
  }
}

i64 QuadPoly::content() const noexcept {
  return std::gcd(std::gcd(a_, b_), c_);
}

QuadPoly QuadPoly::shifted(i64 k) const {
  // a(x+k)^2 + b(x+k) + c
  return {a_, 2 * a_ * k + b_, (a_ * k + b_) * k + c_};
}

std::string QuadPoly::to_string() const {
  std::ostringstream os;
  os << a_ << ',' << b_ << ',' << c_;
  return os.str();
}

QuadPoly parse_poly(std::string_view text) {
  std::vector<i64> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view field = text.substr(pos, end - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    i64 value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw Error(ErrorKind::InvalidPolynomial,
                  "cannot parse coefficient '" + std::string(field) + "' in \"" +
                      std::string(text) + "\"");
    }
    coeffs.push_back(value);
    pos = end + 1;
  }
  if (coeffs.size() != 3) {
    throw Error(ErrorKind::InvalidPolynomial,
                "expected three comma-separated coefficients \"a,b,c\", got \"" +
                    std::string(text) + "\"");
  }
  return {coeffs[0], coeffs[1], coeffs[2]};
}

i64 isqrt(u64 n) noexcept {
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return static_cast<i64>(r);
}

bool is_perfect_square(i64 n) noexcept {
  if (n < 0) return false;
  const i64 r = isqrt(static_cast<u64>(n));
  return r * r == n;
}

namespace {

bool squarefree(i64 m) {
  u64 v = static_cast<u64>(m < 0 ? -m : m);
  for (u64 p = 2; p * p <= v; ++p) {
    if (v % (p * p) == 0) return false;
    if (v % p == 0) v /= p;
  }
  return true;
}

i64 mod_floor(i64 x, i64 m) {
  const i64 r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool is_fundamental_discriminant(i64 d) noexcept {
  if (d == 0 || d == 1) return false;
  if (mod_floor(d, 4) == 1) return squarefree(d);
  if (mod_floor(d, 4) != 0) return false;
  const i64 m = d / 4;
  const i64 r = mod_floor(m, 4);
  return (r == 2 || r == 3) && squarefree(m);
}

Discriminant fundamental_discriminant(i64 D) {
  if (D == 0 || is_perfect_square(D)) {
    throw Error(ErrorKind::NotIrreducible,
                "discriminant " + std::to_string(D) + " is a perfect square");
  }
  if (mod_floor(D, 4) > 1) {
    throw Error(ErrorKind::InvalidArgument,
                "discriminant " + std::to_string(D) + " is not 0 or 1 mod 4");
  }
  // Strip square factors from the squarefree kernel, then fix up mod 4.
  i64 sign = D < 0 ? -1 : 1;
  u64 rest = static_cast<u64>(D < 0 ? -D : D);
  u64 core = 1;
  i64 sq = 1;
  for (u64 p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) sq *= static_cast<i64>(p);
    if (e % 2) core *= p;
  }
  core *= rest;
  i64 m = sign * static_cast<i64>(core);
  i64 d = m;
  if (mod_floor(m, 4) != 1) {
    d = 4 * m;
    sq /= 2;
  }
  return {d, sq};
}

PolyProfile classify(const QuadPoly& f) {
  PolyProfile out;
  out.D = f.discriminant();
  out.content = f.content();
  out.sign_flipped = f.a() < 0;
  const QuadPoly g = out.sign_flipped ? f.negated() : f;

  const i64 gab = std::gcd(g.a(), g.b());
  out.q = g.a() / gab;
  out.lred = g.b() / gab;

  if (is_perfect_square(out.D)) {
    out.d = 0;
    out.sq = isqrt(static_cast<u64>(out.D));
    if (out.content > 1) {
      out.klass = PolyClass::ContentReducible;
    } else if (out.D == 0) {
      out.klass = PolyClass::PerfectSquareFactor;
    } else {
      out.klass = PolyClass::ReducibleDistinctFactors;
    }
  } else {
    const Discriminant disc = fundamental_discriminant(out.D);
    out.d = disc.d;
    out.sq = disc.sq;
    out.klass = PolyClass::IrreducibleQuadratic;
  }

  // Smallest k with g(k+1) >= 1 and g(k+2) > g(k+1); both conditions persist
  // for all larger k once they hold.
  i64 k = 0;
  while (g(k + 1) < 1 || g.a() * (2 * k + 3) + g.b() <= 0) ++k;
  out.shift = k;
  return out;
}

QuadPoly normalized(const QuadPoly& f, const PolyProfile& profile) {
  const QuadPoly g = profile.sign_flipped ? f.negated() : f;
  return g.shifted(profile.shift);
}

i64 cutoff_constant(const QuadPoly& f, const PolyProfile& profile) noexcept {
  const i64 eps = profile.sign_flipped ? -1 : 1;
  const i64 a = eps * f.a(), b = eps * f.b() + 2 * eps * f.a() * profile.shift;
  return std::max<i64>(2 * a + b, 2);
}

namespace {

LinearFactor root_factor(i64 num, i64 den) {
  // Root x = num / den; the primitive factor vanishing there is (den x - num).
  if (den < 0) {
    den = -den;
    num = -num;
  }
  const i64 g = std::gcd(num, den);
  return {den / g, -num / g};
}

}  // namespace

Factorization factor_reducible(const QuadPoly& f) {
  const i64 D = f.discriminant();
  if (!is_perfect_square(D)) {
    throw Error(ErrorKind::NotReducible,
                "polynomial " + f.to_string() + " has non-square discriminant");
  }
  Factorization out;
  const i64 g = f.content() * (f.a() < 0 ? -1 : 1);
  const i64 A = f.a() / g, B = f.b() / g;
  const i64 s = isqrt(static_cast<u64>(D / (g * g)));
  out.content = g;
  LinearFactor r1 = root_factor(-B - s, 2 * A);
  LinearFactor r2 = root_factor(-B + s, 2 * A);
  if (r2 < r1) std::swap(r1, r2);
  out.first = r1;
  out.second = r2;
  out.square = (s == 0);
  return out;
}

}  // namespace lcmquad
