// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "graal/module.hpp"
#include "graal/rational.hpp"

namespace graal {

template <class Fld>
struct NFResult {
  Vec<Fld> remainder;
  Polynomial<Fld> unit;
  std::vector<Polynomial<Fld>> cofactors;
  // contract: unit * f == sum_i cofactors[i] * basis[i] + remainder, exactly
};

// Weak normal form by Mora's algorithm with ecart selection.  Works for any
// ordering; for global orderings the unit stays exactly 1 and this is the
// classical division remainder of the leading term chain.
template <class Fld>
NFResult<Fld> mora_nf(const Vec<Fld>& f, const std::vector<Vec<Fld>>& basis,
                      const ModOrdering& mo, bool track = true) {
  using Poly = Polynomial<Fld>;
  using Elem = typename Fld::Elem;
  const Ring<Fld>& R = f.ring();
  const Fld& F = R.F();

  struct Red {
    Vec<Fld> v;
    ModMono lm;
    Elem lc;
    int ecart;
    int input_idx;  // >= 0: index into basis; -1: stored intermediate
    Poly u_snap;
    std::vector<Poly> q_snap;
  };
  std::vector<Red> pool;
  pool.reserve(basis.size());
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    auto lt = lead_term(basis[i], mo);
    pool.push_back(Red{basis[i],
                       ModMono{lt.mono, lt.comp},
                       lt.coeff,
                       basis[i].total_degree() - lt.mono.deg(),
                       static_cast<int>(i),
                       Poly(),
                       {}});
  }

  Vec<Fld> h = f;
  Poly u = Poly::one(R);
  std::vector<Poly> q(basis.size(), Poly::zero(R));

  while (!h.is_zero()) {
    auto lt = lead_term(h, mo);
    ModMono lmh{lt.mono, lt.comp};
    int ecart_h = h.total_degree() - lt.mono.deg();

    int pick = -1;
    for (size_t i = 0; i < pool.size(); ++i) {
      if (!pool[i].lm.divides(lmh)) continue;
      if (pick < 0 || pool[i].ecart < pool[static_cast<size_t>(pick)].ecart)
        pick = static_cast<int>(i);
    }
    if (pick < 0) break;

    if (pool[static_cast<size_t>(pick)].ecart > ecart_h) {
      // the current intermediate may shortcut a later reduction; keep it
      pool.push_back(Red{h, lmh, lt.coeff, ecart_h, -1, track ? u : Poly(),
                         track ? q : std::vector<Poly>{}});
    }
    const Red& g = pool[static_cast<size_t>(pick)];
    Elem c = F.mul(lt.coeff, F.inv(g.lc));
    Monomial m = lmh.mono.div(g.lm.mono);
    h = h - g.v.mul_term(m, c);
    if (track) {
      if (g.input_idx >= 0) {
        q[static_cast<size_t>(g.input_idx)] =
            q[static_cast<size_t>(g.input_idx)] + Poly::term(R, m, c);
      } else {
        u = u - g.u_snap.mul_term(m, c);
        for (size_t t = 0; t < q.size(); ++t)
          q[t] = q[t] - g.q_snap[t].mul_term(m, c);
      }
    }
    // keep h monic: stops junk factors compounding through the tail
    if (!h.is_zero()) {
      auto nlt = lead_term(h, mo);
      if (!F.eq(nlt.coeff, F.one())) {
        Elem k = F.inv(nlt.coeff);
        h = h.scaled(k);
        if (track) {
          u = u.scaled(k);
          for (auto& qt : q)
            if (!qt.is_zero()) qt = qt.scaled(k);
        }
      }
    }
  }
  if (track) {
    // normalize so the unit is 1 + (smaller terms); makes the remainder a
    // canonical representative independent of the scaling above
    Elem u0 = u.constant_coeff();
    if (!F.eq(u0, F.zero()) && !F.eq(u0, F.one())) {
      Elem k = F.inv(u0);
      h = h.scaled(k);
      u = u.scaled(k);
      for (auto& qt : q)
        if (!qt.is_zero()) qt = qt.scaled(k);
    }
  }
  return NFResult<Fld>{std::move(h), std::move(u), std::move(q)};
}

// replay the normal-form identity exactly; throws VerifyError on failure
template <class Fld>
void verify_nf(const NFResult<Fld>& r, const Vec<Fld>& f,
               const std::vector<Vec<Fld>>& basis, const ModOrdering& mo) {
  Vec<Fld> acc = f.mul_poly(r.unit) - r.remainder;
  for (size_t i = 0; i < basis.size(); ++i)
    acc = acc - basis[i].mul_poly(r.cofactors[i]);
  check(acc.is_zero(), "normal form identity broke");
  const Fld& F = f.ring().F();
  check(F.eq(r.unit.constant_coeff(), F.one()),
        "normal form unit has constant term != 1");
  if (!r.unit.is_zero()) {
    auto lt = lead_term(r.unit, mo.base);
    check(lt.mono.is_unit(), "normal form unit not invertible locally");
  }
  if (classify(mo.base) == OrdClass::global)
    check(r.unit == Polynomial<Fld>::one(f.ring()),
          "unit != 1 under a global ordering");
  if (!r.remainder.is_zero()) {
    auto lt = lead_term(r.remainder, mo);
    ModMono lm{lt.mono, lt.comp};
    for (auto& b : basis) {
      if (b.is_zero()) continue;
      auto bt = lead_term(b, mo);
      check(!ModMono{bt.mono, bt.comp}.divides(lm),
            "remainder leading term still reducible");
    }
  }
}

// Classical tail-reducing division: every term of the remainder is
// irreducible.  Only meaningful when it terminates, i.e. for global
// orderings or degreewise-bounded (homogeneous) data; callers guarantee.
template <class Fld>
NFResult<Fld> full_nf(const Vec<Fld>& f, const std::vector<Vec<Fld>>& basis,
                      const ModOrdering& mo, bool track = true) {
  using Poly = Polynomial<Fld>;
  using Elem = typename Fld::Elem;
  const Ring<Fld>& R = f.ring();
  const Fld& F = R.F();

  struct Red {
    ModMono lm;
    Elem lc;
    size_t idx;
  };
  std::vector<Red> pool;
  for (size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    auto lt = lead_term(basis[i], mo);
    pool.push_back(Red{ModMono{lt.mono, lt.comp}, lt.coeff, i});
  }

  Vec<Fld> p = f, rem(R, f.rank());
  std::vector<Poly> q(basis.size(), Poly::zero(R));
  while (!p.is_zero()) {
    auto lt = lead_term(p, mo);
    ModMono lmh{lt.mono, lt.comp};
    const Red* hit = nullptr;
    for (auto& r : pool)
      if (r.lm.divides(lmh)) {
        hit = &r;
        break;
      }
    if (hit) {
      Elem c = F.mul(lt.coeff, F.inv(hit->lc));
      Monomial m = lmh.mono.div(hit->lm.mono);
      p = p - basis[hit->idx].mul_term(m, c);
      if (track) q[hit->idx] = q[hit->idx] + Poly::term(R, m, c);
    } else {
      rem.at(lt.comp) = rem.at(lt.comp) + Poly::term(R, lt.mono, lt.coeff);
      p.at(lt.comp) = p.at(lt.comp) - Poly::term(R, lt.mono, lt.coeff);
    }
  }
  return NFResult<Fld>{std::move(rem), Poly::one(R), std::move(q)};
}

template <class Fld>
bool component_homogeneous(const Vec<Fld>& v, const std::vector<int>* shifts) {
  // all terms share one value of adeg(mono) + shift(comp)
  const auto& t = *v.ring().vars;
  bool have = false;
  int d = 0;
  for (int c = 0; c < v.rank(); ++c)
    for (auto& tm : v[c].terms()) {
      int w = adeg(t, tm.mono) + (shifts ? (*shifts)[static_cast<size_t>(c)] : 0);
      if (!have)
        d = w, have = true;
      else if (w != d)
        return false;
    }
  return true;
}

template <class Fld>
struct SBResult {
  std::vector<Vec<Fld>> basis;
  // basis[k] == sum_i exprs[k][i] * gens[i], exactly (when tracked)
  std::vector<std::vector<Polynomial<Fld>>> exprs;
};

struct SBOpts {
  bool track = false;
  bool reduce = true;
  // component shifts, only consulted to decide whether tail reduction
  // terminates for a non-global ordering (homogeneous data)
  const std::vector<int>* shifts = nullptr;
};

namespace detail {

template <class Fld>
struct SBElem {
  Vec<Fld> v;
  ModMono lm;
  std::vector<Polynomial<Fld>> expr;
};

template <class Fld>
void sb_sort(std::vector<SBElem<Fld>>& G, const ModOrdering& mo) {
  std::stable_sort(G.begin(), G.end(),
                   [&](const SBElem<Fld>& a, const SBElem<Fld>& b) {
                     return mo.cmp(a.lm, b.lm) > 0;
                   });
}

// drop elements whose leading monomial is divisible by another's
template <class Fld>
void sb_minimalize(std::vector<SBElem<Fld>>& G) {
  std::vector<size_t> order(G.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return G[a].lm.mono.deg() < G[b].lm.mono.deg();
  });
  std::vector<bool> dead(G.size(), false);
  for (size_t oi = 0; oi < order.size(); ++oi) {
    size_t j = order[oi];
    for (size_t ok = 0; ok < oi; ++ok) {
      size_t i = order[ok];
      if (!dead[i] && G[i].lm.divides(G[j].lm)) {
        dead[j] = true;
        break;
      }
    }
  }
  std::vector<SBElem<Fld>> kept;
  for (size_t i = 0; i < G.size(); ++i)
    if (!dead[i]) kept.push_back(std::move(G[i]));
  G = std::move(kept);
}

}  // namespace detail

// Standard basis by Buchberger-Mora.  Pair selection: smallest LCM under
// the active ordering, FIFO among ties.  Output is the reduced basis when
// that is well defined (global ordering, or homogeneous input), otherwise
// leading-term minimalized only.
template <class Fld>
SBResult<Fld> std_basis(const std::vector<Vec<Fld>>& gens,
                        const ModOrdering& mo, SBOpts opts = {}) {
  using Poly = Polynomial<Fld>;
  using Elem = typename Fld::Elem;
  using El = detail::SBElem<Fld>;
  if (gens.empty()) return {};
  const Ring<Fld>& R = gens[0].ring();
  const Fld& F = R.F();
  const size_t n = gens.size();

  auto zero_row = [&] { return std::vector<Poly>(n, Poly::zero(R)); };

  std::vector<El> G;
  struct Pair {
    size_t i, j;
    ModMono lcm;
    long seq;
  };
  std::vector<Pair> pairs;
  long seq = 0;

  auto push_pairs = [&](size_t k) {
    for (size_t i = 0; i < k; ++i) {
      if (G[i].lm.comp != G[k].lm.comp) continue;
      pairs.push_back(Pair{i, k,
                           ModMono{Monomial::lcm(G[i].lm.mono, G[k].lm.mono),
                                   G[k].lm.comp},
                           seq++});
    }
  };

  auto append = [&](Vec<Fld> v, std::vector<Poly> expr) {
    auto lt = lead_term(v, mo);
    Elem ci = F.inv(lt.coeff);
    v = v.scaled(ci);
    if (opts.track)
      for (auto& e : expr) e = e.scaled(ci);
    G.push_back(El{std::move(v), ModMono{lt.mono, lt.comp}, std::move(expr)});
    push_pairs(G.size() - 1);
  };

  for (size_t i = 0; i < n; ++i) {
    if (gens[i].is_zero()) continue;
    auto expr = zero_row();
    if (opts.track) expr[i] = Poly::one(R);
    append(gens[i], std::move(expr));
  }

  auto current = [&] {
    std::vector<Vec<Fld>> vs;
    vs.reserve(G.size());
    for (auto& e : G) vs.push_back(e.v);
    return vs;
  };

  while (!pairs.empty()) {
    size_t best = 0;
    for (size_t i = 1; i < pairs.size(); ++i) {
      int c = mo.cmp(pairs[i].lcm, pairs[best].lcm);
      if (c < 0 || (c == 0 && pairs[i].seq < pairs[best].seq)) best = i;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));

    Monomial mi = pr.lcm.mono.div(G[pr.i].lm.mono);
    Monomial mj = pr.lcm.mono.div(G[pr.j].lm.mono);
    // both elements are monic
    Vec<Fld> s = G[pr.i].v.mul_term(mi, F.one()) -
                 G[pr.j].v.mul_term(mj, F.one());
    if (s.is_zero()) continue;

    auto basis_now = current();
    auto nf = mora_nf(s, basis_now, mo, opts.track);
    if (verify_enabled() && opts.track) verify_nf(nf, s, basis_now, mo);
    if (nf.remainder.is_zero()) continue;

    std::vector<Poly> expr;
    if (opts.track) {
      expr = zero_row();
      auto addmul = [&](const std::vector<Poly>& row, const Poly& by) {
        for (size_t t = 0; t < n; ++t) expr[t] = expr[t] + row[t] * by;
      };
      // expr(spoly) = mi*expr_i - mj*expr_j, then through the NF transcript
      std::vector<Poly> se = zero_row();
      for (size_t t = 0; t < n; ++t)
        se[t] = G[pr.i].expr[t].mul_term(mi, F.one()) -
                G[pr.j].expr[t].mul_term(mj, F.one());
      addmul(se, nf.unit);
      for (size_t g = 0; g < G.size(); ++g) {
        if (nf.cofactors[g].is_zero()) continue;
        for (size_t t = 0; t < n; ++t)
          expr[t] = expr[t] - G[g].expr[t] * nf.cofactors[g];
      }
    }
    append(std::move(nf.remainder), std::move(expr));
  }

  detail::sb_minimalize(G);
  detail::sb_sort(G, mo);

  bool canon = opts.reduce && classify(mo.base) == OrdClass::global;
  if (opts.reduce && !canon) {
    bool homog = true;
    for (auto& e : G)
      if (!component_homogeneous(e.v, opts.shifts)) {
        homog = false;
        break;
      }
    canon = homog;
  }
  if (canon) {
    for (size_t i = 0; i < G.size(); ++i) {
      std::vector<Vec<Fld>> others;
      others.reserve(G.size() - 1);
      std::vector<size_t> omap;
      for (size_t j = 0; j < G.size(); ++j)
        if (j != i) {
          others.push_back(G[j].v);
          omap.push_back(j);
        }
      auto nf = full_nf(G[i].v, others, mo, opts.track);
      G[i].v = nf.remainder;
      if (opts.track)
        for (size_t k = 0; k < others.size(); ++k) {
          if (nf.cofactors[k].is_zero()) continue;
          for (size_t t = 0; t < n; ++t)
            G[i].expr[t] =
                G[i].expr[t] - G[omap[k]].expr[t] * nf.cofactors[k];
        }
    }
  }

  SBResult<Fld> out;
  for (auto& e : G) {
    out.basis.push_back(std::move(e.v));
    if (opts.track) out.exprs.push_back(std::move(e.expr));
  }

  if (verify_enabled() && opts.track) {
    for (size_t k = 0; k < out.basis.size(); ++k) {
      Vec<Fld> acc = out.basis[k];
      for (size_t i = 0; i < n; ++i)
        acc = acc - gens[i].mul_poly(out.exprs[k][i]);
      check(acc.is_zero(), "standard basis cofactor identity broke");
    }
  }
  if (verify_enabled() && !out.basis.empty()) {
    check(is_std_basis(out.basis, mo), "s-pair replay failed on output basis");
    for (size_t i = 0; i < n; ++i) {
      if (gens[i].is_zero()) continue;
      check(mora_nf(gens[i], out.basis, mo, false).remainder.is_zero(),
            "input does not reduce to zero against output basis");
    }
  }
  return out;
}

// s-pair replay: true iff basis is a standard basis of what it generates
template <class Fld>
bool is_std_basis(const std::vector<Vec<Fld>>& basis, const ModOrdering& mo) {
  std::vector<size_t> live;
  for (size_t i = 0; i < basis.size(); ++i)
    if (!basis[i].is_zero()) live.push_back(i);
  if (live.size() < 2) return true;
  const Fld& F = basis[live[0]].ring().F();
  for (size_t a = 0; a < live.size(); ++a)
    for (size_t b = a + 1; b < live.size(); ++b) {
      const Vec<Fld>&vi = basis[live[a]], &vj = basis[live[b]];
      auto li = lead_term(vi, mo), lj = lead_term(vj, mo);
      if (li.comp != lj.comp) continue;
      Monomial l = Monomial::lcm(li.mono, lj.mono);
      Vec<Fld> s = vi.mul_term(l.div(li.mono), F.inv(li.coeff)) -
                   vj.mul_term(l.div(lj.mono), F.inv(lj.coeff));
      if (s.is_zero()) continue;
      auto nf = mora_nf(s, basis, mo, false);
      if (!nf.remainder.is_zero()) return false;
    }
  return true;
}

// Generators of the syzygy module of `gens` (free-module elements over the
// ring of the active ordering), via an augmented module whose extra block
// carries the coefficients and an elimination ordering that makes the
// original block dominate.
template <class Fld>
std::vector<Vec<Fld>> syzygies(const std::vector<Vec<Fld>>& gens,
                               const ModOrdering& mo) {
  using Poly = Polynomial<Fld>;
  if (gens.empty()) return {};
  const Ring<Fld>& R = gens[0].ring();
  int r = gens[0].rank();
  int n = static_cast<int>(gens.size());

  std::vector<Vec<Fld>> out;
  std::vector<int> live;
  for (int i = 0; i < n; ++i) {
    if (gens[static_cast<size_t>(i)].is_zero())
      out.push_back(Vec<Fld>::unit(R, n, i));
    else
      live.push_back(i);
  }
  if (live.empty()) return out;

  std::vector<Vec<Fld>> live_gens;
  for (int i : live) live_gens.push_back(gens[static_cast<size_t>(i)]);

  auto mo_ptr = std::make_shared<const ModOrdering>(mo);
  auto schr = std::make_shared<const ModOrdering>(
      schreyer_extend_mod(mo_ptr, live_gens));
  ModOrdering aug;
  aug.kind = ModOrdering::Kind::elim;
  aug.base = mo.base;
  aug.split = r;
  aug.first = mo_ptr;
  aug.second = schr;

  int k = static_cast<int>(live.size());
  std::vector<Vec<Fld>> hatted;
  for (int t = 0; t < k; ++t) {
    Vec<Fld> h(R, r + k);
    for (int c = 0; c < r; ++c) h.at(c) = live_gens[static_cast<size_t>(t)][c];
    h.at(r + t) = Poly::one(R);
    hatted.push_back(std::move(h));
  }

  SBOpts opts;
  opts.track = false;
  opts.reduce = false;
  auto sb = std_basis(hatted, aug, opts);

  for (auto& b : sb.basis) {
    bool first_zero = true;
    for (int c = 0; c < r && first_zero; ++c)
      if (!b[c].is_zero()) first_zero = false;
    if (!first_zero) continue;
    Vec<Fld> s(R, n);
    for (int t = 0; t < k; ++t) s.at(live[static_cast<size_t>(t)]) = b[r + t];
    out.push_back(std::move(s));
  }

  // cheap and exact: every emitted row really is a syzygy
  for (auto& s : out) {
    Vec<Fld> acc(R, r);
    for (int i = 0; i < n; ++i)
      acc = acc + gens[static_cast<size_t>(i)].mul_poly(s[i]);
    check(acc.is_zero(), "syzygy replay failed");
  }
  return out;
}

// Syzygies of module elements over ring/<qgens>: append qgens * e_t and
// project away their coefficients.
template <class Fld>
std::vector<Vec<Fld>> syzygies_over_quotient(
    const std::vector<Vec<Fld>>& gens,
    const std::vector<Polynomial<Fld>>& qgens, const ModOrdering& mo) {
  if (gens.empty()) return {};
  const Ring<Fld>& R = gens[0].ring();
  int r = gens[0].rank();
  int n = static_cast<int>(gens.size());
  std::vector<Vec<Fld>> ext = gens;
  for (int c = 0; c < r; ++c)
    for (auto& q : qgens) {
      Vec<Fld> v(R, r);
      v.at(c) = q;
      ext.push_back(std::move(v));
    }
  auto syz = syzygies(ext, mo);
  std::vector<Vec<Fld>> out;
  for (auto& s : syz) {
    Vec<Fld> p(R, n);
    bool nonzero = false;
    for (int i = 0; i < n; ++i) {
      p.at(i) = s[i];
      if (!s[i].is_zero()) nonzero = true;
    }
    if (nonzero) out.push_back(std::move(p));
  }
  return out;
}

// ---- ring-level (rank one) conveniences ----

template <class Fld>
std::vector<Vec<Fld>> to_vecs(const std::vector<Polynomial<Fld>>& ps) {
  std::vector<Vec<Fld>> vs;
  vs.reserve(ps.size());
  for (auto& p : ps) vs.push_back(Vec<Fld>::from_poly(p));
  return vs;
}

template <class Fld>
std::vector<Polynomial<Fld>> to_polys(const std::vector<Vec<Fld>>& vs) {
  std::vector<Polynomial<Fld>> ps;
  ps.reserve(vs.size());
  for (auto& v : vs) ps.push_back(v[0]);
  return ps;
}

template <class Fld>
struct PolyNF {
  Polynomial<Fld> remainder, unit;
  std::vector<Polynomial<Fld>> cofactors;
};

template <class Fld>
PolyNF<Fld> mora_nf(const Polynomial<Fld>& f,
                    const std::vector<Polynomial<Fld>>& basis,
                    const Ordering& o, bool track = true) {
  auto mo = plain_mod_order(o);
  auto nf = mora_nf(Vec<Fld>::from_poly(f), to_vecs(basis), mo, track);
  return PolyNF<Fld>{nf.remainder[0], nf.unit, std::move(nf.cofactors)};
}

template <class Fld>
PolyNF<Fld> full_nf(const Polynomial<Fld>& f,
                    const std::vector<Polynomial<Fld>>& basis,
                    const Ordering& o, bool track = true) {
  auto mo = plain_mod_order(o);
  auto nf = full_nf(Vec<Fld>::from_poly(f), to_vecs(basis), mo, track);
  return PolyNF<Fld>{nf.remainder[0], nf.unit, std::move(nf.cofactors)};
}

template <class Fld>
struct PolySB {
  std::vector<Polynomial<Fld>> basis;
  std::vector<std::vector<Polynomial<Fld>>> exprs;
};

template <class Fld>
PolySB<Fld> std_basis(const std::vector<Polynomial<Fld>>& gens,
                      const Ordering& o, SBOpts opts = {}) {
  auto sb = std_basis(to_vecs(gens), plain_mod_order(o), opts);
  return PolySB<Fld>{to_polys(sb.basis), std::move(sb.exprs)};
}

template <class Fld>
bool is_std_basis(const std::vector<Polynomial<Fld>>& basis,
                  const Ordering& o) {
  return is_std_basis(to_vecs(basis), plain_mod_order(o));
}

// f in <basis> where basis is a standard basis under o
template <class Fld>
bool ideal_membership(const Polynomial<Fld>& f,
                      const std::vector<Polynomial<Fld>>& basis,
                      const Ordering& o) {
  if (f.is_zero()) return true;
  return mora_nf(f, basis, o, false).remainder.is_zero();
}

// minimal generators of the leading-term ideal of a (standard) basis
template <class Fld>
std::vector<Monomial> leading_monomials(
    const std::vector<Polynomial<Fld>>& basis, const Ordering& o) {
  std::vector<Monomial> ms;
  for (auto& b : basis)
    if (!b.is_zero()) ms.push_back(lead_monomial(b, o));
  // prune divisible ones, then canonical sort
  std::vector<Monomial> keep;
  std::stable_sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return Monomial::lex_cmp(a, b) > 0;
  });
  for (auto& m : ms) {
    bool red = false;
    for (auto& k : keep)
      if (k.divides(m)) {
        red = true;
        break;
      }
    if (!red) keep.push_back(m);
  }
  std::stable_sort(keep.begin(), keep.end(), MonoLexGreater{});
  return keep;
}

// ---- combinatorial dimension of a monomial ideal ----

struct DimResult {
  int dim;
  std::vector<int> indep;  // lexicographically first maximal independent set
};

// dim of k[x]/L for a monomial ideal L: size of a maximal subset S of the
// variables such that no generator involves only variables of S
inline DimResult dim_and_indep_set(const std::vector<Monomial>& L, int nvars) {
  for (auto& m : L)
    if (m.is_unit()) return DimResult{-1, {}};  // unit ideal, zero ring
  std::vector<std::vector<int>> supports;
  supports.reserve(L.size());
  for (auto& m : L) {
    std::vector<int> s;
    for (int v = 0; v < nvars; ++v)
      if (m.e[static_cast<size_t>(v)] > 0) s.push_back(v);
    supports.push_back(std::move(s));
  }
  auto independent = [&](const std::vector<int>& S) {
    for (auto& sup : supports) {
      bool inside = true;
      for (int v : sup)
        if (!std::binary_search(S.begin(), S.end(), v)) {
          inside = false;
          break;
        }
      if (inside) return false;
    }
    return true;
  };
  for (int k = nvars; k >= 0; --k) {
    // combinations of size k in lexicographic order
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      if (independent(idx)) return DimResult{k, idx};
      int i = k - 1;
      while (i >= 0 && idx[static_cast<size_t>(i)] == nvars - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return DimResult{-1, {}};  // unreachable for proper ideals
}

// ---- Hilbert series of monomial ideals ----

// dense polynomial in t with integer coefficients
using TPoly = std::vector<Integer>;

inline void tp_trim(TPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}
inline TPoly tp_sub(const TPoly& a, const TPoly& b) {
  TPoly r(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  tp_trim(r);
  return r;
}
inline TPoly tp_shift(const TPoly& a, int k) {
  if (a.empty()) return a;
  TPoly r(a.size() + static_cast<size_t>(k), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) r[i + static_cast<size_t>(k)] = a[i];
  return r;
}
inline Integer tp_eval1(const TPoly& a) {
  Integer s(0);
  for (auto& c : a) s += c;
  return s;
}
// exact division by (1 - t)
inline TPoly tp_div_1mt(const TPoly& a) {
  // a(t) = (1-t) q(t): q_i = a_i + q_{i-1}
  if (a.empty()) return a;
  TPoly q(a.size() - 1, Integer(0));
  Integer carry(0);
  for (size_t i = 0; i + 1 < a.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  check(carry + a.back() == 0, "tp_div_1mt: not divisible");
  tp_trim(q);
  return q;
}

inline std::vector<Monomial> minimalize_monomials(std::vector<Monomial> L) {
  std::stable_sort(L.begin(), L.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    return Monomial::lex_cmp(a, b) > 0;
  });
  std::vector<Monomial> keep;
  for (auto& m : L) {
    bool red = false;
    for (auto& k : keep)
      if (k.divides(m) ) {
        red = true;
        break;
      }
    if (!red) keep.push_back(m);
  }
  return keep;
}

// numerator of the Hilbert series of k[x]/L over (1-t)^nvars
inline TPoly hilbert_numerator(std::vector<Monomial> L) {
  L = minimalize_monomials(std::move(L));
  if (L.empty()) return TPoly{Integer(1)};
  if (L.size() == 1 && L[0].is_unit()) return TPoly{};
  bool all_linear = true;
  for (auto& m : L)
    if (m.deg() != 1) {
      all_linear = false;
      break;
    }
  if (all_linear) {
    // product of (1 - t) over the generators
    TPoly r{Integer(1)};
    for (size_t i = 0; i < L.size(); ++i) r = tp_sub(r, tp_shift(r, 1));
    return r;
  }
  // pivot: a generator of maximal degree
  size_t piv = 0;
  for (size_t i = 1; i < L.size(); ++i)
    if (L[i].deg() > L[piv].deg()) piv = i;
  Monomial m = L[piv];
  std::vector<Monomial> rest;
  for (size_t i = 0; i < L.size(); ++i)
    if (i != piv) rest.push_back(L[i]);
  std::vector<Monomial> colon;
  colon.reserve(rest.size());
  for (auto& g : rest) {
    Monomial q(g.nvars());
    for (size_t v = 0; v < q.e.size(); ++v)
      q.e[v] = std::max(g.e[v] - m.e[v], 0);
    colon.push_back(std::move(q));
  }
  TPoly a = hilbert_numerator(rest);
  TPoly b = hilbert_numerator(std::move(colon));
  return tp_sub(a, tp_shift(b, m.deg()));
}

struct HilbertSeriesData {
  TPoly first_num;   // over (1-t)^nvars
  TPoly second_num;  // over (1-t)^dimension
  int nvars = 0;
  int dimension = 0;
  int degree = -1;  // degree of second_num
};

inline HilbertSeriesData hilbert_series(const std::vector<Monomial>& L,
                                        int nvars) {
  HilbertSeriesData h;
  h.nvars = nvars;
  h.first_num = hilbert_numerator(L);
  if (h.first_num.empty()) {
    h.second_num = {};
    h.dimension = -1;
    h.degree = -1;
    return h;
  }
  TPoly cur = h.first_num;
  int mult = 0;
  while (tp_eval1(cur) == 0) {
    cur = tp_div_1mt(cur);
    ++mult;
  }
  h.second_num = cur;
  h.dimension = nvars - mult;
  h.degree = static_cast<int>(cur.size()) - 1;
  return h;
}

inline Integer binom_z(long n, long k) {
  if (k < 0 || n < 0 || n < k) return Integer(0);
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// value of the Hilbert function of k[x]/L at n, from the series data
inline Integer hilbert_value(const HilbertSeriesData& h, long n) {
  if (n < 0) return Integer(0);
  Integer s(0);
  if (h.dimension <= 0) {
    if (n < static_cast<long>(h.second_num.size())) s = h.second_num[static_cast<size_t>(n)];
    return s;
  }
  for (long j = 0; j < static_cast<long>(h.second_num.size()); ++j) {
    if (j > n) break;
    s += h.second_num[static_cast<size_t>(j)] *
         binom_z(n - j + h.dimension - 1, h.dimension - 1);
  }
  return s;
}

// ---- ideal intersection by the (t, 1-t) trick ----

template <class Fld>
std::vector<Polynomial<Fld>> ideal_intersection(
    const std::vector<Polynomial<Fld>>& I,
    const std::vector<Polynomial<Fld>>& J, const Ordering& o) {
  using Poly = Polynomial<Fld>;
  if (classify(o) != OrdClass::global)
    throw Error("ideal_intersection needs a global ordering");
  if (I.empty() || J.empty()) return {};
  const Ring<Fld>& R = I[0].ring();
  int n = R.nvars();

  std::vector<std::string> names;
  names.push_back("@t");
  for (auto& nm : R.vars->names) names.push_back(nm);
  Ring<Fld> Rt{R.field, make_vartable(names)};

  std::vector<Poly> shifted_vars;
  for (int v = 0; v < n; ++v)
    shifted_vars.push_back(Poly::variable(Rt, v + 1));
  auto up = [&](const Poly& p) {
    return map_poly(p, Rt, shifted_vars,
                    [](const typename Fld::Elem& c) { return c; });
  };
  Poly t = Poly::variable(Rt, 0);
  Poly one_m_t = Poly::one(Rt) - t;

  std::vector<Poly> gens;
  for (auto& f : I) gens.push_back(t * up(f));
  for (auto& g : J) gens.push_back(one_m_t * up(g));

  SBOpts opts;
  opts.reduce = true;
  auto gb = std_basis(gens, lex_order(Rt.vars), opts);

  std::vector<Poly> down_vars;
  // @t has no legal image; it never occurs in the selected elements
  down_vars.push_back(Poly::zero(R));
  for (int v = 0; v < n; ++v) down_vars.push_back(Poly::variable(R, v));

  std::vector<Poly> out;
  for (auto& b : gb.basis) {
    if (deg_in(b, 0) > 0) continue;
    out.push_back(map_poly(b, R, down_vars,
                           [](const typename Fld::Elem& c) { return c; }));
  }

  if (!out.empty()) {
    SBOpts ropts;
    ropts.reduce = true;
    out = std_basis(out, o, ropts).basis;
    // every member must lie in both inputs
    auto gbi = std_basis(I, o, ropts).basis;
    auto gbj = std_basis(J, o, ropts).basis;
    for (auto& f : out) {
      check(ideal_membership(f, gbi, o), "intersection: not in first ideal");
      check(ideal_membership(f, gbj, o), "intersection: not in second ideal");
    }
  }
  return out;
}

}  // namespace graal
