// Sparse multivariate polynomials over the rationals.

#include "braidcat/multipoly.hpp"

#include <algorithm>
#include <sstream>

namespace braidcat {

Var z_var(int i) {
  if (i < 1 || i > 9)
    throw InputError("tail variable index out of range (z1..z9): z" +
                     std::to_string(i));
  return static_cast<Var>(static_cast<int>(Var::z1) + (i - 1));
}

std::string var_name(Var v) {
  switch (v) {
    case Var::q: return "q";
    case Var::u: return "u";
    case Var::v: return "v";
    case Var::w: return "w";
    case Var::t: return "t";
    case Var::slack: return "$";
    default: {
      int i = static_cast<int>(v) - static_cast<int>(Var::z1) + 1;
      return "z" + std::to_string(i);
    }
  }
}

std::optional<Var> var_by_name(const std::string& name) {
  if (name == "q") return Var::q;
  if (name == "u") return Var::u;
  if (name == "v") return Var::v;
  if (name == "w") return Var::w;
  if (name == "t") return Var::t;
  if (name.size() == 2 && name[0] == 'z' && name[1] >= '1' && name[1] <= '9')
    return z_var(name[1] - '0');
  return std::nullopt;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned long da = 0, db = 0;
  for (int i = 0; i < kNumVars; ++i) { da += a[i]; db += b[i]; }
  if (da != db) return da < db;
  for (int i = kNumVars - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (c != 0) {
    Exponents e{};
    p.terms_.emplace(e, c);
  }
  return p;
}

MultiPoly MultiPoly::variable(Var v) {
  Exponents e{};
  e[static_cast<int>(v)] = 1;
  return monomial(e, 1);
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.emplace(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Exponents& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_.begin()->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly r;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e;
      for (int i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    base = base * base;
    e >>= 1u;
  }
  return r;
}

bool MultiPoly::less_than(const MultiPoly& o) const {
  auto a = terms_.begin(), b = o.terms_.begin();
  GrlexLess lt;
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (lt(a->first, b->first)) return true;
    if (lt(b->first, a->first)) return false;
    if (a->second != b->second) return a->second < b->second;
  }
  return a == terms_.end() && b != o.terms_.end();
}

const Exponents& MultiPoly::leading_exponents() const {
  return terms_.rbegin()->first;
}

const Rational& MultiPoly::leading_coeff() const {
  return terms_.rbegin()->second;
}

bool MultiPoly::uses_var(Var v) const {
  int i = static_cast<int>(v);
  for (const auto& [e, c] : terms_)
    if (e[i] > 0) return true;
  return false;
}

int MultiPoly::max_var_index() const {
  int best = -1;
  for (const auto& [e, c] : terms_)
    for (int i = kNumVars - 1; i > best; --i)
      if (e[i] > 0) { best = i; break; }
  return best;
}

unsigned MultiPoly::degree_in(Var v) const {
  int i = static_cast<int>(v);
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[i]);
  return d;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (int i = 0; i < kNumVars; ++i) s += e[i];
    d = std::max(d, s);
  }
  return d;
}

Rational MultiPoly::content() const {
  Integer num_gcd = 0, den_lcm = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  if (r < 0) r = -r;
  return r;
}

MultiPoly MultiPoly::divide_by_rational(const Rational& c) const {
  MultiPoly r;
  for (const auto& [e, coeff] : terms_) {
    Rational q = coeff / c;
    q.canonicalize();
    r.terms_.emplace(e, q);
  }
  return r;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& num,
                                                 const MultiPoly& den) {
  if (den.is_zero()) return std::nullopt;
  MultiPoly rem = num;
  MultiPoly quot;
  const Exponents& de = den.leading_exponents();
  const Rational& dc = den.leading_coeff();
  while (!rem.is_zero()) {
    const Exponents& re = rem.leading_exponents();
    Exponents qe;
    for (int i = 0; i < kNumVars; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    Rational qc = rem.leading_coeff() / dc;
    qc.canonicalize();
    MultiPoly m = monomial(qe, qc);
    quot = quot + m;
    rem = rem - m * den;
  }
  return quot;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending grlex order.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    Rational ac = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::string mono;
    for (int i = 0; i < kNumVars; ++i) {
      if (it->first[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(static_cast<Var>(i));
      if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
    }
    if (mono.empty()) {
      os << ac.get_str();
    } else if (ac == 1) {
      os << mono;
    } else {
      os << ac.get_str() << "*" << mono;
    }
  }
  return os.str();
}

}  // namespace braidcat
