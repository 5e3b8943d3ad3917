#ifndef BRAIDCAT_RATFUNC_HPP
#define BRAIDCAT_RATFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "braidcat/multipoly.hpp"

namespace braidcat {

enum class GroupKind { additive, multiplicative, point };

std::string group_kind_name(GroupKind k);
GroupKind group_kind_by_name(const std::string& s);

// Element of Q(q)(z1..z9, u, v, w, t) in canonical reduced form:
// num/den with coprime integer-coefficient polynomials, joint content 1,
// positive leading denominator coefficient.  Equality of values is
// structural equality.
class RatFunc {
public:
  RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
  RatFunc(long n) : RatFunc(Rational(n)) {}
  explicit RatFunc(const Rational& c);
  static RatFunc variable(Var v);
  static RatFunc normalized(const MultiPoly& num, const MultiPoly& den);
  static RatFunc from_poly(const MultiPoly& p);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // throws ArithmeticError on /0
  RatFunc inverse() const;
  RatFunc pow(long e) const;  // negative exponents allowed internally

  bool operator==(const RatFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool less_than(const RatFunc& o) const;

  // Simultaneous substitution; unbound variables stay fixed.  Throws
  // PoleCollapseError when the substituted denominator vanishes.
  RatFunc substitute(const std::map<Var, RatFunc>& bindings) const;

  bool uses_var(Var v) const {
    return num_.uses_var(v) || den_.uses_var(v);
  }

  std::string to_string() const;

private:
  MultiPoly num_, den_;
};

// True iff f is fixed by the simultaneous action z -> z + t (additive)
// or z -> t*z (multiplicative) on the listed variables, with t fresh;
// for the point kind, true iff f does not involve the listed variables.
bool is_invariant(const RatFunc& f, const std::vector<Var>& vars,
                  GroupKind kind);

}  // namespace braidcat

#endif
