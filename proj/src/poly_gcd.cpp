// Multivariate polynomial gcd via primitive subresultant remainder
// sequences, recursing on the coefficient ring.

#include <cassert>
#include <vector>

#include "braidcat/multipoly.hpp"

namespace braidcat {

namespace {

// Integer-primitive representative: coprime integer coefficients,
// positive leading coefficient.
MultiPoly primitive(const MultiPoly& p) {
  if (p.is_zero()) return p;
  MultiPoly r = p.divide_by_rational(p.content());
  if (r.leading_coeff() < 0) r = -r;
  return r;
}

// View of p as a univariate polynomial in `main` with MultiPoly
// coefficients (indexed by degree, possibly zero).
std::vector<MultiPoly> univariate_view(const MultiPoly& p, Var main) {
  int mi = static_cast<int>(main);
  std::vector<MultiPoly> coeffs(p.degree_in(main) + 1);
  for (const auto& [e, c] : p.terms()) {
    Exponents rest = e;
    unsigned d = e[mi];
    rest[mi] = 0;
    coeffs[d].add_term(rest, c);
  }
  return coeffs;
}

MultiPoly from_view(const std::vector<MultiPoly>& coeffs, Var main) {
  int mi = static_cast<int>(main);
  MultiPoly p;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    for (const auto& [e, c] : coeffs[d].terms()) {
      Exponents full = e;
      full[mi] = static_cast<std::uint32_t>(d);
      p.add_term(full, c);
    }
  }
  return p;
}

int view_deg(const std::vector<MultiPoly>& v) {
  for (int d = static_cast<int>(v.size()) - 1; d >= 0; --d)
    if (!v[d].is_zero()) return d;
  return -1;
}

void view_trim(std::vector<MultiPoly>& v) {
  v.resize(static_cast<std::size_t>(view_deg(v) + 1));
}

// Content with respect to `main`: gcd of the coefficients.
MultiPoly view_content(const std::vector<MultiPoly>& v) {
  MultiPoly g;
  for (const auto& c : v) g = mpoly_gcd(g, c);
  return g;
}

std::vector<MultiPoly> view_div_coeff(const std::vector<MultiPoly>& v,
                                      const MultiPoly& d) {
  std::vector<MultiPoly> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    auto q = MultiPoly::divide_exact(v[i], d);
    assert(q.has_value() && "inexact division in gcd remainder sequence");
    r[i] = *q;
  }
  return r;
}

std::vector<MultiPoly> view_mul_coeff(const std::vector<MultiPoly>& v,
                                      const MultiPoly& m) {
  std::vector<MultiPoly> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * m;
  return r;
}

// Pseudo-remainder: lc(G)^(deg F - deg G + 1) * F mod G, no divisions.
std::vector<MultiPoly> pseudo_rem(std::vector<MultiPoly> F,
                                  const std::vector<MultiPoly>& G) {
  int dG = view_deg(G);
  assert(dG >= 0);
  const MultiPoly& lcG = G[dG];
  int e = view_deg(F) - dG + 1;
  while (true) {
    int dF = view_deg(F);
    if (dF < dG) break;
    // F := lc(G)*F - lc(F)*x^(dF-dG)*G
    MultiPoly lcF = F[dF];
    std::vector<MultiPoly> nf(static_cast<std::size_t>(dF) + 1);
    for (int i = 0; i <= dF; ++i) {
      MultiPoly t = F[i] * lcG;
      int j = i - (dF - dG);
      if (j >= 0 && j <= dG) t = t - lcF * G[j];
      nf[i] = t;
    }
    F = std::move(nf);
    view_trim(F);
    --e;
  }
  if (e > 0) {
    MultiPoly scale = lcG.pow(static_cast<unsigned>(e));
    F = view_mul_coeff(F, scale);
  }
  return F;
}

}  // namespace

MultiPoly mpoly_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return primitive(b);
  if (b.is_zero()) return primitive(a);
  MultiPoly A = primitive(a), B = primitive(b);
  if (A.is_constant() || B.is_constant()) return MultiPoly::constant(1);

  int mi = std::max(A.max_var_index(), B.max_var_index());
  Var main = static_cast<Var>(mi);

  std::vector<MultiPoly> F = univariate_view(A, main);
  std::vector<MultiPoly> G = univariate_view(B, main);
  MultiPoly contF = view_content(F), contG = view_content(G);
  F = view_div_coeff(F, contF);
  G = view_div_coeff(G, contG);
  MultiPoly cont_gcd = mpoly_gcd(contF, contG);

  if (view_deg(F) < view_deg(G)) std::swap(F, G);

  // Subresultant PRS on the primitive parts.
  MultiPoly g = MultiPoly::constant(1), h = MultiPoly::constant(1);
  while (true) {
    int dF = view_deg(F), dG = view_deg(G);
    int d = dF - dG;
    std::vector<MultiPoly> R = pseudo_rem(F, G);
    if (view_deg(R) < 0) break;  // G divides F
    if (view_deg(R) == 0) {
      // gcd of the primitive parts is trivial in the main variable
      return primitive(cont_gcd);
    }
    MultiPoly divisor = g * h.pow(static_cast<unsigned>(d));
    F = std::move(G);
    G = view_div_coeff(R, divisor);
    g = F[view_deg(F)];
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      auto q = MultiPoly::divide_exact(g.pow(static_cast<unsigned>(d)),
                                       h.pow(static_cast<unsigned>(d - 1)));
      assert(q.has_value());
      h = *q;
    }
  }
  // Primitive part of G w.r.t. main variable, times the content gcd.
  MultiPoly cg = view_content(G);
  std::vector<MultiPoly> PP = view_div_coeff(G, cg);
  return primitive(from_view(PP, main) * cont_gcd);
}

}  // namespace braidcat
