// Canonical rational functions over the fixed variable universe.

#include "braidcat/ratfunc.hpp"

namespace braidcat {

std::string group_kind_name(GroupKind k) {
  switch (k) {
    case GroupKind::additive: return "additive";
    case GroupKind::multiplicative: return "multiplicative";
    case GroupKind::point: return "point";
  }
  return "?";
}

GroupKind group_kind_by_name(const std::string& s) {
  if (s == "additive") return GroupKind::additive;
  if (s == "multiplicative") return GroupKind::multiplicative;
  if (s == "point") return GroupKind::point;
  throw InputError("unknown group kind: " + s);
}

RatFunc::RatFunc(const Rational& c) : den_(MultiPoly::constant(1)) {
  Rational cc = c;
  cc.canonicalize();
  num_ = MultiPoly::constant(cc.get_num());
  den_ = MultiPoly::constant(cc.get_den());
}

RatFunc RatFunc::variable(Var v) {
  return from_poly(MultiPoly::variable(v));
}

RatFunc RatFunc::from_poly(const MultiPoly& p) {
  return normalized(p, MultiPoly::constant(1));
}

RatFunc RatFunc::normalized(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw InputError("zero denominator");
  RatFunc r;
  if (num.is_zero()) {
    r.num_ = MultiPoly::zero();
    r.den_ = MultiPoly::constant(1);
    return r;
  }
  MultiPoly n = num, d = den;
  MultiPoly g = mpoly_gcd(n, d);
  if (!g.is_constant()) {
    n = *MultiPoly::divide_exact(n, g);
    d = *MultiPoly::divide_exact(d, g);
  }
  // Scale so both sides have integer coefficients with joint content 1.
  Rational cn = n.content(), cd = d.content();
  Rational ratio = cn / cd;
  ratio.canonicalize();
  n = n.divide_by_rational(cn) ;
  d = d.divide_by_rational(cd);
  n = n * MultiPoly::constant(ratio.get_num());
  d = d * MultiPoly::constant(ratio.get_den());
  if (d.leading_coeff() < 0) {
    n = -n;
    d = -d;
  }
  r.num_ = n;
  r.den_ = d;
  return r;
}

bool RatFunc::is_one() const {
  return num_.is_constant() && den_.is_constant() && !num_.is_zero() &&
         num_.constant_value() == den_.constant_value();
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return normalized(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return normalized(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw ArithmeticError("division by zero");
  return normalized(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw ArithmeticError("division by zero");
  return normalized(den_, num_);
}

RatFunc RatFunc::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  return normalized(num_.pow(static_cast<unsigned>(e)),
                    den_.pow(static_cast<unsigned>(e)));
}

bool RatFunc::less_than(const RatFunc& o) const {
  if (num_ != o.num_) return num_.less_than(o.num_);
  return den_.less_than(o.den_);
}

namespace {

RatFunc poly_substitute(const MultiPoly& p,
                        const std::map<Var, RatFunc>& bindings) {
  RatFunc acc;
  for (const auto& [e, c] : p.terms()) {
    RatFunc term{c};
    for (int i = 0; i < kNumVars; ++i) {
      if (e[i] == 0) continue;
      Var v = static_cast<Var>(i);
      auto it = bindings.find(v);
      RatFunc base = it == bindings.end() ? RatFunc::variable(v) : it->second;
      term = term * base.pow(e[i]);
    }
    acc = acc + term;
  }
  return acc;
}

}  // namespace

RatFunc RatFunc::substitute(const std::map<Var, RatFunc>& bindings) const {
  if (bindings.empty()) return *this;
  RatFunc n = poly_substitute(num_, bindings);
  RatFunc d = poly_substitute(den_, bindings);
  if (d.is_zero())
    throw PoleCollapseError("substitution collapses a pole: denominator (" +
                            den_.to_string() + ") vanishes identically");
  return n / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant() && den_.constant_value() == 1)
    return num_.to_string();
  std::string n = num_.term_count() > 1 ? "(" + num_.to_string() + ")"
                                        : num_.to_string();
  return n + " / (" + den_.to_string() + ")";
}

bool is_invariant(const RatFunc& f, const std::vector<Var>& vars,
                  GroupKind kind) {
  if (kind == GroupKind::point) {
    for (Var v : vars)
      if (f.uses_var(v)) return false;
    return true;
  }
  std::map<Var, RatFunc> subst;
  RatFunc t = RatFunc::variable(Var::slack);
  for (Var v : vars) {
    RatFunc zv = RatFunc::variable(v);
    subst[v] = kind == GroupKind::additive ? zv + t : zv * t;
  }
  return f.substitute(subst) == f;
}

}  // namespace braidcat
