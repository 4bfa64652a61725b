// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <vector>

#include "graal/ordering.hpp"

namespace graal {

// module monomial x^a * e_comp
struct ModMono {
  Monomial mono;
  int comp = 0;

  bool operator==(const ModMono& o) const {
    return comp == o.comp && mono == o.mono;
  }
  bool divides(const ModMono& o) const {
    return comp == o.comp && mono.divides(o.mono);
  }
};

// Element of a free module R^rank, componentwise sparse.
template <class Fld>
class Vec {
 public:
  using Poly = Polynomial<Fld>;
  using Elem = typename Fld::Elem;

  struct Term {
    Monomial mono;
    int comp;
    Elem coeff;
  };

  Vec() = default;
  Vec(Ring<Fld> r, int rank)
      : ring_(std::move(r)),
        comps_(static_cast<size_t>(rank), Poly(ring_)) {}
  Vec(Ring<Fld> r, std::vector<Poly> comps)
      : ring_(std::move(r)), comps_(std::move(comps)) {}

  static Vec unit(Ring<Fld> r, int rank, int i) {
    Vec v(r, rank);
    v.comps_[static_cast<size_t>(i)] = Poly::one(r);
    return v;
  }
  static Vec from_poly(Poly p) {
    Ring<Fld> r = p.ring();
    Vec v(r, 1);
    v.comps_[0] = std::move(p);
    return v;
  }

  const Ring<Fld>& ring() const { return ring_; }
  int rank() const { return static_cast<int>(comps_.size()); }
  const Poly& operator[](int i) const {
    return comps_[static_cast<size_t>(i)];
  }
  Poly& at(int i) { return comps_[static_cast<size_t>(i)]; }
  const std::vector<Poly>& comps() const { return comps_; }

  bool is_zero() const {
    for (auto& p : comps_)
      if (!p.is_zero()) return false;
    return true;
  }

  int nterms() const {
    int n = 0;
    for (auto& p : comps_) n += p.nterms();
    return n;
  }

  int total_degree() const {
    int d = -1;
    for (auto& p : comps_) d = std::max(d, p.total_degree());
    return d;
  }

  Vec operator+(const Vec& o) const { return zip(o, false); }
  Vec operator-(const Vec& o) const { return zip(o, true); }
  Vec operator-() const {
    Vec r = *this;
    for (auto& p : r.comps_) p = -p;
    return r;
  }
  Vec mul_term(const Monomial& m, const Elem& c) const {
    Vec r = *this;
    for (auto& p : r.comps_) p = p.mul_term(m, c);
    return r;
  }
  Vec scaled(const Elem& c) const {
    Vec r = *this;
    for (auto& p : r.comps_) p = p.scaled(c);
    return r;
  }
  Vec mul_poly(const Poly& q) const {
    Vec r = *this;
    for (auto& p : r.comps_) p = p * q;
    return r;
  }

  bool operator==(const Vec& o) const { return comps_ == o.comps_; }

 private:
  Vec zip(const Vec& o, bool sub) const {
    if (rank() != o.rank()) throw Error("vec: rank mismatch");
    Vec r = *this;
    for (int i = 0; i < rank(); ++i)
      r.comps_[static_cast<size_t>(i)] =
          sub ? comps_[static_cast<size_t>(i)] - o.comps_[static_cast<size_t>(i)]
              : comps_[static_cast<size_t>(i)] + o.comps_[static_cast<size_t>(i)];
    return r;
  }

  Ring<Fld> ring_;
  std::vector<Poly> comps_;
};

// Orderings on module monomials.  plain: compare monomials by the base ring
// ordering, ties to the lower component.  schreyer: compare images
// x^a * lm(g_comp) in the codomain module.  elim: components below `split`
// dominate the rest (used for syzygy extraction).
struct ModOrdering {
  enum class Kind { plain, schreyer, elim };

  Kind kind = Kind::plain;
  Ordering base;
  std::vector<ModMono> image_lm;                  // schreyer
  std::shared_ptr<const ModOrdering> codomain;    // schreyer
  int split = 0;                                  // elim
  std::shared_ptr<const ModOrdering> first, second;  // elim

  int cmp(const ModMono& a, const ModMono& b) const {
    switch (kind) {
      case Kind::plain: {
        int c = base.cmp(a.mono, b.mono);
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
      }
      case Kind::schreyer: {
        const ModMono& ia = image_lm[static_cast<size_t>(a.comp)];
        const ModMono& ib = image_lm[static_cast<size_t>(b.comp)];
        int c = codomain->cmp(ModMono{a.mono * ia.mono, ia.comp},
                              ModMono{b.mono * ib.mono, ib.comp});
        if (c != 0) return c;
        if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
        return 0;
      }
      case Kind::elim: {
        bool fa = a.comp < split, fb = b.comp < split;
        if (fa != fb) return fa ? 1 : -1;
        if (fa) return first->cmp(a, b);
        return second->cmp(ModMono{a.mono, a.comp - split},
                           ModMono{b.mono, b.comp - split});
      }
    }
    throw Error("modordering: bad kind");
  }

  bool greater(const ModMono& a, const ModMono& b) const {
    return cmp(a, b) > 0;
  }
};

inline ModOrdering plain_mod_order(Ordering base) {
  ModOrdering mo;
  mo.kind = ModOrdering::Kind::plain;
  mo.base = std::move(base);
  return mo;
}

template <class Fld>
typename Vec<Fld>::Term lead_term(const Vec<Fld>& v, const ModOrdering& mo) {
  if (v.is_zero()) throw Error("lead_term of zero vector");
  bool have = false;
  typename Vec<Fld>::Term best;
  for (int c = 0; c < v.rank(); ++c)
    for (auto& t : v[c].terms()) {
      if (!have || mo.cmp(ModMono{t.mono, c}, ModMono{best.mono, best.comp}) > 0) {
        best = typename Vec<Fld>::Term{t.mono, c, t.coeff};
        have = true;
      }
    }
  return best;
}

template <class Fld>
ModMono lead_modmono(const Vec<Fld>& v, const ModOrdering& mo) {
  auto t = lead_term(v, mo);
  return ModMono{t.mono, t.comp};
}

// Schreyer extension: module monomials of the new free module compare via
// the leading module monomials of the given images.
template <class Fld>
ModOrdering schreyer_extend_mod(std::shared_ptr<const ModOrdering> codomain,
                                const std::vector<Vec<Fld>>& images) {
  ModOrdering mo;
  mo.kind = ModOrdering::Kind::schreyer;
  mo.base = codomain->base;
  mo.codomain = std::move(codomain);
  mo.image_lm.reserve(images.size());
  for (auto& g : images) {
    if (g.is_zero()) throw Error("schreyer_extend: zero image vector");
    mo.image_lm.push_back(lead_modmono(g, *mo.codomain));
  }
  return mo;
}

template <class Fld>
ModOrdering schreyer_extend(const Ordering& base,
                            const std::vector<Vec<Fld>>& images) {
  auto cod = std::make_shared<const ModOrdering>(plain_mod_order(base));
  return schreyer_extend_mod(cod, images);
}

template <class Fld>
ModOrdering schreyer_extend(const Ordering& base,
                            const std::vector<Polynomial<Fld>>& images) {
  std::vector<Vec<Fld>> vs;
  vs.reserve(images.size());
  for (auto& p : images) vs.push_back(Vec<Fld>::from_poly(p));
  return schreyer_extend(base, vs);
}

// adjoined-block weight degree of a vector with component shifts:
// max over terms of (shift_comp - adeg(mono))
template <class Fld>
int w_degree(const Vec<Fld>& v, const std::vector<int>& shifts) {
  if (v.is_zero()) throw Error("w_degree of zero vector");
  const auto& t = *v.ring().vars;
  bool have = false;
  int best = 0;
  for (int c = 0; c < v.rank(); ++c)
    for (auto& tm : v[c].terms()) {
      int w = -(adeg(t, tm.mono) + shifts[static_cast<size_t>(c)]);
      if (!have || w > best) best = w, have = true;
    }
  return best;
}

template <class Fld>
Vec<Fld> initial_w(const Vec<Fld>& v, const std::vector<int>& shifts) {
  if (v.is_zero()) return v;
  const auto& t = *v.ring().vars;
  int target = -w_degree(v, shifts);
  Vec<Fld> r(v.ring(), v.rank());
  for (int c = 0; c < v.rank(); ++c) {
    std::vector<typename Polynomial<Fld>::Term> pick;
    for (auto& tm : v[c].terms())
      if (adeg(t, tm.mono) + shifts[static_cast<size_t>(c)] == target)
        pick.push_back(tm);
    r.at(c) = Polynomial<Fld>(v.ring(), std::move(pick));
  }
  return r;
}

}  // namespace graal
