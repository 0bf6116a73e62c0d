#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lcmquad {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// Largest admissible |coefficient|.
inline constexpr i64 kMaxCoefficient = i64{1} << 20;

// f(x) = a x^2 + b x + c with a != 0.
class QuadPoly {
 public:
  QuadPoly(i64 a, i64 b, i64 c);

  i64 a() const noexcept { return a_; }
  i64 b() const noexcept { return b_; }
  i64 c() const noexcept { return c_; }

  i128 operator()(i128 x) const noexcept { return (i128{a_} * x + b_) * x + c_; }

  i64 discriminant() const noexcept { return b_ * b_ - 4 * a_ * c_; }
  i64 content() const noexcept;

  QuadPoly negated() const { return {-a_, -b_, -c_}; }
  // x -> x + k
  QuadPoly shifted(i64 k) const;

  std::string to_string() const;

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  i64 a_, b_, c_;
};

// Parses "a,b,c".
QuadPoly parse_poly(std::string_view text);

enum class PolyClass {
  IrreducibleQuadratic,
  ReducibleDistinctFactors,
  PerfectSquareFactor,
  ContentReducible,
};

const char* to_string(PolyClass klass) noexcept;

struct PolyProfile {
  i64 D = 0;   // b^2 - 4ac
  i64 d = 0;   // fundamental discriminant (0 when D is a square)
  i64 sq = 0;  // D = sq^2 * d
  i64 q = 1;     // a / gcd(a, b), after sign normalization
  i64 lred = 0;  // b / gcd(a, b), after sign normalization
  i64 content = 1;
  PolyClass klass = PolyClass::IrreducibleQuadratic;
  i64 shift = 0;
  bool sign_flipped = false;

  bool irreducible() const noexcept { return klass == PolyClass::IrreducibleQuadratic; }
};

PolyProfile classify(const QuadPoly& f);

// The sign-flipped and shifted polynomial g(x) = eps * f(x + shift): positive
// and strictly increasing on x >= 1.
QuadPoly normalized(const QuadPoly& f, const PolyProfile& profile);

// C = max(2a + b, 2) evaluated on the normalized polynomial.
i64 cutoff_constant(const QuadPoly& f, const PolyProfile& profile) noexcept;

struct Discriminant {
  i64 d;
  i64 sq;
};

// D = sq^2 * d with d a fundamental discriminant. Throws for perfect squares
// and for D not congruent to 0 or 1 mod 4.
Discriminant fundamental_discriminant(i64 D);

bool is_fundamental_discriminant(i64 d) noexcept;
bool is_perfect_square(i64 n) noexcept;
i64 isqrt(u64 n) noexcept;

struct LinearFactor {
  i64 a;  // > 0
  i64 b;

  friend auto operator<=>(const LinearFactor&, const LinearFactor&) = default;
};

// f = content * first * second, each factor primitive.
struct Factorization {
  i64 content = 1;
  LinearFactor first{1, 0};
  LinearFactor second{1, 0};
  bool square = false;
};

Factorization factor_reducible(const QuadPoly& f);

}  // namespace lcmquad
