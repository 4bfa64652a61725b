// SPDX-License-Identifier: Apache-2.0
#pragma once

// Shared helpers for the test suites: independent textbook oracles
// (naive Buchberger, brute-force monomial counting) and small utilities.
// The oracles deliberately avoid the engine's reduction machinery.

#include <algorithm>
#include <string>
#include <vector>

#include "graal/engine.hpp"
#include "graal/problem.hpp"

namespace ts {

using namespace graal;

template <class Fld>
bool eqp(const Polynomial<Fld>& a, const Polynomial<Fld>& b) {
  return (a - b).is_zero();
}

// a == c * b for some nonzero field constant c
template <class Fld>
bool proportional(const Polynomial<Fld>& a, const Polynomial<Fld>& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.nterms() != b.nterms()) return false;
  const Fld& F = a.ring().F();
  auto c = F.mul(a.terms()[0].coeff, F.inv(b.terms()[0].coeff));
  return eqp(a, b.scaled(c));
}

// ---- naive division and Buchberger (global orderings only) ----

template <class Fld>
Polynomial<Fld> naive_reduce(Polynomial<Fld> f,
                             const std::vector<Polynomial<Fld>>& G,
                             const Ordering& o) {
  using Poly = Polynomial<Fld>;
  const Fld& F = f.ring().F();
  Poly rem = Poly::zero(f.ring());
  while (!f.is_zero()) {
    auto lt = lead_term(f, o);
    bool hit = false;
    for (auto& g : G) {
      if (g.is_zero()) continue;
      auto gt = lead_term(g, o);
      if (!gt.mono.divides(lt.mono)) continue;
      auto c = F.mul(lt.coeff, F.inv(gt.coeff));
      f = f - g.mul_term(lt.mono.div(gt.mono), c);
      hit = true;
      break;
    }
    if (!hit) {
      rem = rem + Poly::term(f.ring(), lt.mono, lt.coeff);
      f = f - Poly::term(f.ring(), lt.mono, lt.coeff);
    }
  }
  return rem;
}

template <class Fld>
std::vector<Polynomial<Fld>> naive_buchberger(
    std::vector<Polynomial<Fld>> G, const Ordering& o) {
  using Poly = Polynomial<Fld>;
  G.erase(std::remove_if(G.begin(), G.end(),
                         [](const Poly& p) { return p.is_zero(); }),
          G.end());
  const Fld& F = G.empty() ? Fld{} : G[0].ring().F();
  for (size_t i = 0; i < G.size(); ++i) {
    for (size_t j = 0; j < i; ++j) {
      auto ti = lead_term(G[i], o);
      auto tj = lead_term(G[j], o);
      Monomial l = Monomial::lcm(ti.mono, tj.mono);
      Poly s = G[i].mul_term(l.div(ti.mono), F.inv(ti.coeff)) -
               G[j].mul_term(l.div(tj.mono), F.inv(tj.coeff));
      Poly r = naive_reduce(s, G, o);
      if (!r.is_zero()) G.push_back(std::move(r));
    }
  }
  return G;
}

// ---- monomial ideal combinatorics ----

inline std::vector<Monomial> minimal_monomials(std::vector<Monomial> L) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < L.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < L.size() && !redundant; ++j) {
      if (j == i || !L[j].divides(L[i])) continue;
      if (L[j] != L[i] || j < i) redundant = true;  // keep one duplicate
    }
    if (!redundant) out.push_back(L[i]);
  }
  return out;
}

// number of degree-d monomials in nvars variables outside <L>
inline long count_standard_monomials(const std::vector<Monomial>& L,
                                     int nvars, int d) {
  long count = 0;
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  auto rec = [&](auto&& self, int v, int rest) -> void {
    if (v == nvars - 1) {
      e[static_cast<size_t>(v)] = rest;
      Monomial m{e};
      bool in = false;
      for (auto& g : L)
        if (g.divides(m)) {
          in = true;
          break;
        }
      if (!in) ++count;
      return;
    }
    for (int k = 0; k <= rest; ++k) {
      e[static_cast<size_t>(v)] = k;
      self(self, v + 1, rest - k);
    }
  };
  if (nvars == 0) return d == 0 ? 1 : 0;
  rec(rec, 0, d);
  return count;
}

// Exhaustive maximal-independent-set search (oracle for dim_and_indep_set).
// A set S is independent iff no generator's support lies inside S.  Masks
// are visited in an order that makes the first maximum the lex-first one.
inline std::pair<int, std::vector<int>> brute_indep_set(
    const std::vector<Monomial>& L, int nvars) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << nvars); ++m) masks.push_back(m);
  std::sort(masks.begin(), masks.end(), [nvars](unsigned a, unsigned b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    if (ca != cb) return ca > cb;
    for (int v = 0; v < nvars; ++v) {
      bool ia = a & (1u << v), ib = b & (1u << v);
      if (ia != ib) return ia;  // containing the smaller variable wins
    }
    return false;
  });
  for (unsigned mask : masks) {
    bool indep = true;
    for (auto& m : L) {
      bool support_in_S = true;
      for (int v = 0; v < nvars; ++v)
        if (m.e[static_cast<size_t>(v)] > 0 && !(mask & (1u << v)))
          support_in_S = false;
      if (support_in_S) {
        indep = false;
        break;
      }
    }
    if (!indep) continue;
    std::vector<int> S;
    for (int v = 0; v < nvars; ++v)
      if (mask & (1u << v)) S.push_back(v);
    return {static_cast<int>(S.size()), S};
  }
  return {0, {}};
}

// ---- ideal equality through the engine (both directions + leading sets) ----

template <class Fld>
bool same_ideal(const std::vector<Polynomial<Fld>>& A,
                const std::vector<Polynomial<Fld>>& B, const Ordering& o) {
  SBOpts opts;
  opts.reduce = true;
  auto gbA = std_basis(A, o, opts).basis;
  auto gbB = std_basis(B, o, opts).basis;
  for (auto& a : A)
    if (!ideal_membership(a, gbB, o)) return false;
  for (auto& b : B)
    if (!ideal_membership(b, gbA, o)) return false;
  auto la = minimal_monomials(leading_monomials(gbA, o));
  auto lb = minimal_monomials(leading_monomials(gbB, o));
  if (la.size() != lb.size()) return false;
  for (auto& m : la)
    if (std::find(lb.begin(), lb.end(), m) == lb.end()) return false;
  return true;
}

// random small polynomial over QQ
inline QPoly random_qpoly(Rng& rng, const Ring<RationalField>& R,
                          int max_deg, int max_terms, long coeff_bound) {
  QPoly p = QPoly::zero(R);
  int nt = static_cast<int>(rng.uniform(1, max_terms));
  for (int t = 0; t < nt; ++t) {
    Monomial m(R.nvars());
    int d = static_cast<int>(rng.uniform(0, max_deg));
    for (int k = 0; k < d; ++k) {
      int v = static_cast<int>(rng.uniform(0, R.nvars() - 1));
      ++m.e[static_cast<size_t>(v)];
    }
    long c = rng.uniform(-coeff_bound, coeff_bound);
    if (c == 0) c = 1;
    p = p + QPoly::term(R, m, Rational(c));
  }
  return p;
}

}  // namespace ts
