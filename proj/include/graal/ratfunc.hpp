// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graal/polynomial.hpp"
#include "graal/rational.hpp"

namespace graal {

using QPoly = Polynomial<RationalField>;

// coefficient of x_v^k, with the x_v exponent stripped
inline QPoly coeff_of(const QPoly& f, int v, int k) {
  std::vector<QPoly::Term> pick;
  for (auto& t : f.terms())
    if (t.mono.e[static_cast<size_t>(v)] == k) {
      Monomial m = t.mono;
      m.e[static_cast<size_t>(v)] = 0;
      pick.push_back({std::move(m), t.coeff});
    }
  return QPoly(f.ring(), std::move(pick));
}

inline QPoly mul_var_pow(const QPoly& f, int v, int k) {
  return f.mul_term(Monomial::var(f.nvars(), v, k), Rational(1));
}

// canonical leading term = plain-lex greatest (terms are stored that way)
inline const QPoly::Term& lead_term(const QPoly& f) {
  if (f.is_zero()) throw Error("lead_term of zero");
  return f.terms().front();
}

// Exact multivariate division; throws when the division is not exact.
inline QPoly divexact(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw Error("divexact: zero divisor");
  QPoly rem = a, quot = QPoly::zero(a.ring());
  while (!rem.is_zero()) {
    const auto& lr = lead_term(rem);
    const auto& lb = lead_term(b);
    if (!lb.mono.divides(lr.mono)) throw Error("divexact: not divisible");
    Monomial m = lr.mono.div(lb.mono);
    Rational c = lr.coeff / lb.coeff;
    quot = quot + QPoly::term(a.ring(), m, c);
    rem = rem - b.mul_term(m, c);
  }
  return quot;
}

// Write f = r * P with P integer-primitive and positive canonical-leading
// coefficient; returns (P, r).  f == 0 gives (0, 1).
inline std::pair<QPoly, Rational> z_primitive(const QPoly& f) {
  if (f.is_zero()) return {f, Rational(1)};
  Integer den_lcm(1), num_gcd(0);
  for (auto& t : f.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            t.coeff.get_den().get_mpz_t());
  }
  for (auto& t : f.terms()) {
    Integer scaled = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational r(num_gcd, den_lcm);
  r.canonicalize();
  if (sgn(lead_term(f).coeff) < 0) r = -r;
  return {f.scaled(Rational(1) / r), r};
}

namespace detail {

inline QPoly gcd_content(const QPoly& f, int v);
inline QPoly poly_gcd_primitive(QPoly a, QPoly b);

// pseudo-remainder of G1 by G2 in variable v, scaled as lc(G2)^(delta+1)*G1 mod G2
inline QPoly prem(const QPoly& G1, const QPoly& G2, int v) {
  int d2 = deg_in(G2, v);
  QPoly l = coeff_of(G2, v, d2);
  QPoly R = G1;
  int delta = deg_in(G1, v) - d2;
  int steps = 0;
  while (!R.is_zero() && deg_in(R, v) >= d2) {
    int k = deg_in(R, v);
    QPoly cr = coeff_of(R, v, k);
    R = R * l - mul_var_pow(cr, v, k - d2) * G2;
    ++steps;
  }
  for (int i = steps; i < delta + 1; ++i) R = R * l;
  return R;
}

inline QPoly poly_gcd_primitive(QPoly a, QPoly b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return QPoly::one(a.ring());
  int v = -1;
  for (int i = 0; i < a.nvars() && v < 0; ++i)
    if (deg_in(a, i) > 0 || deg_in(b, i) > 0) v = i;
  if (v < 0) return QPoly::one(a.ring());

  QPoly ca = gcd_content(a, v), cb = gcd_content(b, v);
  QPoly c = poly_gcd_primitive(ca, cb);
  QPoly A = divexact(a, ca), B = divexact(b, cb);
  if (deg_in(A, v) < deg_in(B, v)) std::swap(A, B);
  if (deg_in(B, v) == 0) {
    // B is v-free and primitive w.r.t. v, so the v-part of the gcd is trivial
    return c;
  }

  // subresultant remainder sequence
  QPoly g = QPoly::one(a.ring()), h = QPoly::one(a.ring());
  while (true) {
    int delta = deg_in(A, v) - deg_in(B, v);
    QPoly R = prem(A, B, v);
    if (R.is_zero()) {
      QPoly pp = divexact(B, gcd_content(B, v));
      return c * pp;
    }
    if (deg_in(R, v) == 0) return c;
    A = B;
    B = divexact(R, g * h.pow(delta));
    g = coeff_of(A, v, deg_in(A, v));
    if (delta > 0) h = divexact(g.pow(delta), h.pow(delta - 1));
  }
}

// gcd of the x_v-coefficients of f (f nonzero)
inline QPoly gcd_content(const QPoly& f, int v) {
  QPoly acc = QPoly::zero(f.ring());
  for (int k = 0; k <= deg_in(f, v); ++k) {
    QPoly ck = coeff_of(f, v, k);
    if (ck.is_zero()) continue;
    acc = poly_gcd_primitive(z_primitive(ck).first, acc);
    if (acc.is_constant()) return QPoly::one(f.ring());
  }
  return acc;
}

}  // namespace detail

// gcd over Q[U]: integer-primitive with positive canonical-leading
// coefficient.  gcd(0, 0) = 0.
inline QPoly poly_gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return a;
  QPoly g = detail::poly_gcd_primitive(z_primitive(a).first,
                                       z_primitive(b).first);
  return z_primitive(g).first;
}

inline QPoly poly_lcm(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly::zero(a.ring());
  return divexact(a * b, poly_gcd(a, b));
}

// Element of k(U).  Canonical form: gcd(num, den) = 1 and den has
// canonical-leading coefficient 1, so equality is structural.
struct RatFunc {
  QPoly num, den;
};

struct FunctionField {
  Ring<RationalField> uring;

  using Elem = RatFunc;

  Elem make(QPoly n, QPoly d) const {
    if (d.is_zero()) throw Error("ratfunc: zero denominator");
    if (n.is_zero()) return Elem{std::move(n), QPoly::one(uring)};
    QPoly g = poly_gcd(n, d);
    if (!g.is_constant()) {
      n = divexact(n, g);
      d = divexact(d, g);
    }
    Rational lead = lead_term(d).coeff;
    if (lead != 1) {
      Rational li = Rational(1) / lead;
      n = n.scaled(li);
      d = d.scaled(li);
    }
    return Elem{std::move(n), std::move(d)};
  }
  Elem from_poly(QPoly p) const { return Elem{std::move(p), QPoly::one(uring)}; }

  Elem zero() const { return from_poly(QPoly::zero(uring)); }
  Elem one() const { return from_poly(QPoly::one(uring)); }
  Elem from_int(long n) const {
    return from_poly(QPoly::constant(uring, Rational(n)));
  }

  Elem add(const Elem& a, const Elem& b) const {
    return make(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  Elem sub(const Elem& a, const Elem& b) const {
    return make(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  Elem mul(const Elem& a, const Elem& b) const {
    return make(a.num * b.num, a.den * b.den);
  }
  Elem neg(const Elem& a) const { return Elem{-a.num, a.den}; }
  Elem inv(const Elem& a) const {
    if (a.num.is_zero()) throw Error("ratfunc: division by zero");
    return make(a.den, a.num);
  }

  bool is_zero(const Elem& a) const { return a.num.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const {
    return a.num == b.num && a.den == b.den;
  }
  bool same(const FunctionField& o) const {
    return same_table(uring.vars, o.uring.vars);
  }

  std::string str(const Elem& a) const {
    std::string n = graal::to_string(a.num);
    if (a.den == QPoly::one(uring)) return n;
    std::string d = graal::to_string(a.den);
    if (str_needs_parens(n) || n.find('*') != std::string::npos ||
        n.find('/') != std::string::npos)
      n = "(" + n + ")";
    if (d.find_first_of("+-*/^ ") != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
  }
};

}  // namespace graal
