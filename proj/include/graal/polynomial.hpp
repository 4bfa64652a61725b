// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graal/error.hpp"
#include "graal/monomial.hpp"
#include "graal/vartable.hpp"

namespace graal {

// Ring tag: variable table plus coefficient field.  Cheap to copy, compared
// structurally so independently built towers interoperate.
template <class Fld>
struct Ring {
  std::shared_ptr<const Fld> field;
  VarTablePtr vars;

  int nvars() const { return vars->size(); }
  const Fld& F() const { return *field; }
};

template <class Fld>
Ring<Fld> make_ring(Fld field, VarTablePtr vars) {
  return Ring<Fld>{std::make_shared<const Fld>(std::move(field)),
                   std::move(vars)};
}

template <class Fld>
bool same_ring(const Ring<Fld>& a, const Ring<Fld>& b) {
  if (!same_table(a.vars, b.vars)) return false;
  return a.field == b.field || a.field->same(*b.field);
}

// Sparse multivariate polynomial.  Terms are stored in a fixed canonical
// order (descending plain-lex on exponents) independent of whatever ring
// ordering an algorithm is using; leading terms w.r.t. an ordering are
// located by scan.
template <class Fld>
class Polynomial {
 public:
  using Field = Fld;
  using Elem = typename Fld::Elem;

  struct Term {
    Monomial mono;
    Elem coeff;
  };

  Polynomial() = default;  // no ring; placeholder for containers only
  explicit Polynomial(Ring<Fld> r) : ring_(std::move(r)) {}
  Polynomial(Ring<Fld> r, std::vector<Term> raw) : ring_(std::move(r)) {
    std::map<Monomial, Elem, MonoLexGreater> acc;
    for (auto& t : raw) {
      if (t.mono.nvars() != ring_.nvars())
        throw Error("polynomial: monomial arity mismatch");
      auto it = acc.find(t.mono);
      if (it == acc.end())
        acc.emplace(std::move(t.mono), std::move(t.coeff));
      else
        it->second = ring_.F().add(it->second, t.coeff);
    }
    terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!ring_.F().is_zero(c)) terms_.push_back(Term{m, c});
  }

  static Polynomial zero(Ring<Fld> r) { return Polynomial(std::move(r)); }
  static Polynomial constant(Ring<Fld> r, Elem c) {
    Polynomial p(r);
    if (!r.F().is_zero(c))
      p.terms_.push_back(Term{Monomial::unit(r.nvars()), std::move(c)});
    return p;
  }
  static Polynomial one(Ring<Fld> r) {
    auto c = r.F().one();
    return constant(std::move(r), std::move(c));
  }
  static Polynomial variable(Ring<Fld> r, int idx, int exp = 1) {
    Polynomial p(r);
    p.terms_.push_back(
        Term{Monomial::var(r.nvars(), idx, exp), r.F().one()});
    return p;
  }
  static Polynomial term(Ring<Fld> r, Monomial m, Elem c) {
    Polynomial p(r);
    if (!r.F().is_zero(c)) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
  }

  const Ring<Fld>& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int nvars() const { return ring_.nvars(); }
  int nterms() const { return static_cast<int>(terms_.size()); }

  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (auto& t : terms_) d = std::max(d, t.mono.deg());
    return d;
  }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit());
  }

  // constant term (zero elem if absent)
  Elem constant_coeff() const {
    for (auto& t : terms_)
      if (t.mono.is_unit()) return t.coeff;
    return ring_.F().zero();
  }

  Polynomial operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = ring_.F().neg(t.coeff);
    return r;
  }

  Polynomial operator+(const Polynomial& q) const { return merged(q, false); }
  Polynomial operator-(const Polynomial& q) const { return merged(q, true); }

  Polynomial operator*(const Polynomial& q) const {
    require_same(q);
    const auto& F = ring_.F();
    std::map<Monomial, Elem, MonoLexGreater> acc;
    for (auto& a : terms_)
      for (auto& b : q.terms_) {
        Monomial m = a.mono * b.mono;
        Elem c = F.mul(a.coeff, b.coeff);
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(std::move(m), std::move(c));
        else
          it->second = F.add(it->second, c);
      }
    Polynomial r(ring_);
    for (auto& [m, c] : acc)
      if (!F.is_zero(c)) r.terms_.push_back(Term{m, c});
    return r;
  }

  Polynomial scaled(const Elem& c) const {
    const auto& F = ring_.F();
    if (F.is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
  }

  // multiply by the single term c * m
  Polynomial mul_term(const Monomial& m, const Elem& c) const {
    const auto& F = ring_.F();
    if (F.is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_)
      r.terms_.push_back(Term{t.mono * m, F.mul(t.coeff, c)});
    // multiplying by a fixed monomial preserves the canonical order
    return r;
  }

  Polynomial pow(int n) const {
    if (n < 0) throw Error("polynomial: negative power");
    Polynomial r = one(ring_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  bool operator==(const Polynomial& q) const {
    if (terms_.size() != q.terms_.size()) return false;
    const auto& F = ring_.F();
    for (size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].mono != q.terms_[i].mono) return false;
      if (!F.eq(terms_[i].coeff, q.terms_[i].coeff)) return false;
    }
    return true;
  }
  bool operator!=(const Polynomial& q) const { return !(*this == q); }

  void require_same(const Polynomial& q) const {
    if (!same_ring(ring_, q.ring_)) throw Error("polynomial: ring mismatch");
  }

 private:
  Polynomial merged(const Polynomial& q, bool subtract) const {
    require_same(q);
    const auto& F = ring_.F();
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < q.terms_.size()) {
      int c;
      if (i >= terms_.size())
        c = -1;
      else if (j >= q.terms_.size())
        c = 1;
      else
        c = Monomial::lex_cmp(terms_[i].mono, q.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        auto t = q.terms_[j++];
        if (subtract) t.coeff = F.neg(t.coeff);
        r.terms_.push_back(std::move(t));
      } else {
        Elem s = subtract ? F.sub(terms_[i].coeff, q.terms_[j].coeff)
                          : F.add(terms_[i].coeff, q.terms_[j].coeff);
        if (!F.is_zero(s)) r.terms_.push_back(Term{terms_[i].mono, s});
        ++i, ++j;
      }
    }
    return r;
  }

  Ring<Fld> ring_;
  std::vector<Term> terms_;
};

// Rebuild f over another ring: every source variable gets an image, source
// coefficients go through cmap.  Handles ring maps, variable substitution
// and coefficient-field changes in one place.
template <class FldA, class FldB, class CoeffFn>
Polynomial<FldB> map_poly(const Polynomial<FldA>& f, const Ring<FldB>& target,
                          const std::vector<Polynomial<FldB>>& images,
                          CoeffFn cmap) {
  if (static_cast<int>(images.size()) != f.nvars())
    throw Error("map_poly: need one image per source variable");
  Polynomial<FldB> acc = Polynomial<FldB>::zero(target);
  for (auto& t : f.terms()) {
    Polynomial<FldB> prod =
        Polynomial<FldB>::constant(target, cmap(t.coeff));
    for (int v = 0; v < f.nvars(); ++v) {
      int e = t.mono.e[static_cast<size_t>(v)];
      if (e > 0) prod = prod * images[static_cast<size_t>(v)].pow(e);
    }
    acc = acc + prod;
  }
  return acc;
}

// Substitution inside one ring: images[i] empty keeps variable i.
template <class Fld>
Polynomial<Fld> substitute(
    const Polynomial<Fld>& f,
    const std::vector<std::optional<Polynomial<Fld>>>& images) {
  std::vector<Polynomial<Fld>> full;
  full.reserve(images.size());
  for (size_t i = 0; i < images.size(); ++i)
    full.push_back(images[i] ? *images[i]
                             : Polynomial<Fld>::variable(
                                   f.ring(), static_cast<int>(i)));
  return map_poly(f, f.ring(), full,
                  [](const typename Fld::Elem& c) { return c; });
}

template <class Fld>
int deg_in(const Polynomial<Fld>& f, int v) {
  int d = 0;
  for (auto& t : f.terms()) d = std::max(d, t.mono.e[static_cast<size_t>(v)]);
  return d;
}

inline bool str_needs_parens(const std::string& s) {
  int depth = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && i > 0 && (c == '+' || c == '-')) return true;
  }
  return false;
}

template <class Fld>
std::string term_str(const Ring<Fld>& R,
                     const typename Polynomial<Fld>::Term& t) {
  const auto& F = R.F();
  std::string mono;
  for (int v = 0; v < R.nvars(); ++v) {
    int e = t.mono.e[static_cast<size_t>(v)];
    if (e == 0) continue;
    if (!mono.empty()) mono += "*";
    mono += R.vars->names[static_cast<size_t>(v)];
    if (e > 1) mono += "^" + std::to_string(e);
  }
  std::string c = F.str(t.coeff);
  if (mono.empty()) return str_needs_parens(c) ? "(" + c + ")" : c;
  if (c == "1") return mono;
  if (c == "-1") return "-" + mono;
  if (str_needs_parens(c)) c = "(" + c + ")";
  return c + "*" + mono;
}

// Canonical-order printer (used by tests and anywhere ordering-agnostic).
template <class Fld>
std::string to_string(const Polynomial<Fld>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (auto& t : f.terms()) {
    std::string s = term_str<Fld>(f.ring(), t);
    if (out.empty()) {
      out = s;
    } else if (!s.empty() && s[0] == '-') {
      out += " - " + s.substr(1);
    } else {
      out += " + " + s;
    }
  }
  return out;
}

}  // namespace graal
