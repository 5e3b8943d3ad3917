#ifndef BRAIDCAT_MULTIPOLY_HPP
#define BRAIDCAT_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "braidcat/errors.hpp"

namespace braidcat {

using Rational = mpq_class;
using Integer = mpz_class;

// Fixed variable universe.  Monomial order is graded lex with
// q < z1 < ... < z9 < u < v < w < t; the last slot is reserved for
// internal substitutions and is never produced by the parser.
enum class Var : int {
  q = 0,
  z1 = 1, z2 = 2, z3 = 3, z4 = 4, z5 = 5, z6 = 6, z7 = 7, z8 = 8, z9 = 9,
  u = 10, v = 11, w = 12, t = 13,
  slack = 14,
};

inline constexpr int kNumVars = 15;

Var z_var(int i);                 // 1-based tail index -> z_i, throws past z9
std::string var_name(Var v);
std::optional<Var> var_by_name(const std::string& name);

using Exponents = std::array<std::uint32_t, kNumVars>;

// Graded lex: total degree first, ties broken by the highest variable.
struct GrlexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
// Invariant: no zero coefficients are stored.
class MultiPoly {
public:
  MultiPoly() = default;
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(Var v);
  static MultiPoly monomial(const Exponents& e, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value; only meaningful when is_constant().
  Rational constant_value() const;

  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rational, GrlexLess>& terms() const { return terms_; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly pow(unsigned e) const;

  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }
  // Deterministic total order (used for canonical sorting of samples).
  bool less_than(const MultiPoly& o) const;

  // Leading term under grlex; poly must be nonzero.
  const Exponents& leading_exponents() const;
  const Rational& leading_coeff() const;

  bool uses_var(Var v) const;
  int max_var_index() const;                 // -1 when constant
  unsigned degree_in(Var v) const;
  unsigned total_degree() const;

  // Positive rational c such that (*this)/c has coprime integer
  // coefficients.  Poly must be nonzero.
  Rational content() const;
  MultiPoly divide_by_rational(const Rational& c) const;

  // Exact division; nullopt when the divisor does not divide exactly.
  static std::optional<MultiPoly> divide_exact(const MultiPoly& num,
                                               const MultiPoly& den);

  void add_term(const Exponents& e, const Rational& c);  // merges, drops zeros

  std::string to_string() const;

private:
  std::map<Exponents, Rational, GrlexLess> terms_;
};

// Primitive gcd over Q[vars]: integer coefficients, content 1, positive
// leading coefficient.  gcd(0,0) = 0.
MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace braidcat

#endif
