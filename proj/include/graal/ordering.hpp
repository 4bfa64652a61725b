// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "graal/polynomial.hpp"

namespace graal {

enum class OrdKind {
  lex,
  degrevlex,
  // The mixed ordering of the localization machinery: compare total degree
  // in the adjoined block ascending (weight -1 there, 0 elsewhere), break
  // ties by degrevlex on the plain block, then by lex on the adjoined
  // exponents.  Local on the adjoined variables, global on the rest.
  mixed_vy,
};

enum class OrdClass { global, local, mixed };

struct Ordering {
  OrdKind kind;
  VarTablePtr vars;

  static int cmp_lex(const Monomial& a, const Monomial& b, int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      int ai = a.e[static_cast<size_t>(i)], bi = b.e[static_cast<size_t>(i)];
      if (ai != bi) return ai > bi ? 1 : -1;
    }
    return 0;
  }

  static int cmp_drl(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = a.deg_range(lo, hi), db = b.deg_range(lo, hi);
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      int ai = a.e[static_cast<size_t>(i)], bi = b.e[static_cast<size_t>(i)];
      if (ai != bi) return ai < bi ? 1 : -1;
    }
    return 0;
  }

  // -1 / 0 / 1 for a < b, a == b, a > b
  int cmp(const Monomial& a, const Monomial& b) const {
    int n = vars->size();
    switch (kind) {
      case OrdKind::lex:
        return cmp_lex(a, b, 0, n);
      case OrdKind::degrevlex:
        return cmp_drl(a, b, 0, n);
      case OrdKind::mixed_vy: {
        int fy = vars->first_adjoined;
        int ya = a.deg_range(fy, n), yb = b.deg_range(fy, n);
        if (ya != yb) return ya < yb ? 1 : -1;
        int c = cmp_drl(a, b, 0, fy);
        if (c != 0) return c;
        return cmp_lex(a, b, fy, n);
      }
    }
    throw Error("ordering: bad kind");
  }

  bool greater(const Monomial& a, const Monomial& b) const {
    return cmp(a, b) > 0;
  }
};

inline Ordering lex_order(VarTablePtr t) {
  return Ordering{OrdKind::lex, std::move(t)};
}
inline Ordering degrevlex_order(VarTablePtr t) {
  return Ordering{OrdKind::degrevlex, std::move(t)};
}
inline Ordering mixed_order(VarTablePtr t) {
  return Ordering{OrdKind::mixed_vy, std::move(t)};
}

// Classified by comparing each variable against 1.
inline OrdClass classify(const Ordering& o) {
  int n = o.vars->size();
  Monomial unit = Monomial::unit(n);
  bool any_less = false, any_greater = false;
  for (int i = 0; i < n; ++i) {
    int c = o.cmp(Monomial::var(n, i), unit);
    if (c > 0) any_greater = true;
    if (c < 0) any_less = true;
  }
  if (!any_less) return OrdClass::global;
  if (!any_greater) return OrdClass::local;
  return OrdClass::mixed;
}

template <class Fld>
const typename Polynomial<Fld>::Term& lead_term(const Polynomial<Fld>& f,
                                                const Ordering& o) {
  if (f.is_zero()) throw Error("lead_term of zero polynomial");
  const auto* best = &f.terms()[0];
  for (size_t i = 1; i < f.terms().size(); ++i)
    if (o.cmp(f.terms()[i].mono, best->mono) > 0) best = &f.terms()[i];
  return *best;
}

template <class Fld>
const Monomial& lead_monomial(const Polynomial<Fld>& f, const Ordering& o) {
  return lead_term(f, o).mono;
}

// degree in the adjoined block of a single monomial
inline int adeg(const VarTable& t, const Monomial& m) {
  return m.deg_range(t.first_adjoined, t.size());
}

// weight degree: max over terms of -(adjoined-block degree)
template <class Fld>
int w_degree(const Polynomial<Fld>& f) {
  if (f.is_zero()) throw Error("w_degree of zero polynomial");
  const auto& t = *f.ring().vars;
  int best = adeg(t, f.terms()[0].mono);
  for (auto& tm : f.terms()) best = std::min(best, adeg(t, tm.mono));
  return -best;
}

// terms of minimal adjoined-block degree (the weight-initial part)
template <class Fld>
Polynomial<Fld> initial_w(const Polynomial<Fld>& f) {
  if (f.is_zero()) return f;
  const auto& t = *f.ring().vars;
  int mind = -w_degree(f);
  std::vector<typename Polynomial<Fld>::Term> pick;
  for (auto& tm : f.terms())
    if (adeg(t, tm.mono) == mind) pick.push_back(tm);
  return Polynomial<Fld>(f.ring(), std::move(pick));
}

}  // namespace graal
