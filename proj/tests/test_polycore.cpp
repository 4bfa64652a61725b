// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "graal/residue.hpp"
#include "support.hpp"

using namespace graal;
using ts::eqp;

namespace {

Rational eval_qpoly(const QPoly& f, const std::vector<Rational>& pt) {
  Rational acc(0);
  for (auto& t : f.terms()) {
    Rational v = t.coeff;
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < t.mono.e[static_cast<size_t>(i)]; ++k)
        v *= pt[static_cast<size_t>(i)];
    acc += v;
  }
  return acc;
}

RatFunc random_ratfunc(Rng& rng, const FunctionField& F) {
  QPoly n = ts::random_qpoly(rng, F.uring, 2, 3, 4);
  QPoly d = ts::random_qpoly(rng, F.uring, 2, 2, 4);
  if (d.is_zero()) d = QPoly::one(F.uring);
  return F.make(n, d);
}

}  // namespace

TEST_CASE("polynomial arithmetic basics") {
  auto Q = make_ring(RationalField{}, make_vartable({"x", "y"}));
  QPoly x = QPoly::variable(Q, 0), y = QPoly::variable(Q, 1);

  CHECK(eqp((x + y) + (x - y), x.scaled(Rational(2))));
  CHECK((x * y - x * y).is_zero());
  CHECK(((x + y) * QPoly::zero(Q)).is_zero());

  auto QY = make_ring(RationalField{}, make_vartable({"x", "Y1"}, 1));
  QPoly xx = QPoly::variable(QY, 0), Y1 = QPoly::variable(QY, 1);
  CHECK(eqp((Y1 - xx) * (Y1 + xx), Y1 * Y1 - xx * xx));
}

TEST_CASE("product evaluation oracle on random inputs") {
  auto Q = make_ring(RationalField{}, make_vartable({"x", "y", "z"}));
  Rng rng(811);
  for (int it = 0; it < 200; ++it) {
    QPoly f = ts::random_qpoly(rng, Q, 3, 4, 5);
    QPoly g = ts::random_qpoly(rng, Q, 3, 4, 5);
    std::vector<Rational> pt;
    for (int i = 0; i < 3; ++i)
      pt.push_back(Rational(rng.uniform(-7, 7)) / Rational(rng.uniform(1, 5)));
    CHECK(eval_qpoly(f * g, pt) == eval_qpoly(f, pt) * eval_qpoly(g, pt));
    CHECK(eval_qpoly(f + g, pt) == eval_qpoly(f, pt) + eval_qpoly(g, pt));
  }
}

TEST_CASE("rational function normalization") {
  FunctionField F{make_ring(RationalField{}, make_vartable({"z"}))};
  QPoly z = QPoly::variable(F.uring, 0);
  QPoly one = QPoly::one(F.uring);

  RatFunc a = F.make(z * z, z);
  CHECK(eqp(a.num, z));
  CHECK(eqp(a.den, one));

  RatFunc b = F.make(one, z.scaled(Rational(2)));
  CHECK(eqp(b.num, one.scaled(Rational(1, 2))));
  CHECK(eqp(b.den, z));

  RatFunc c = F.make(z * z - one, z - one);
  CHECK(eqp(c.num, z + one));
  CHECK(eqp(c.den, one));

  CHECK_THROWS_AS(F.make(one, QPoly::zero(F.uring)), Error);
}

TEST_CASE("rational function field axioms on random triples") {
  FunctionField F{make_ring(RationalField{}, make_vartable({"z"}))};
  Rng rng(4203);
  int inverses = 0;
  for (int it = 0; it < 400; ++it) {
    RatFunc a = random_ratfunc(rng, F);
    RatFunc b = random_ratfunc(rng, F);
    RatFunc c = random_ratfunc(rng, F);
    CHECK(F.eq(F.add(F.add(a, b), c), F.add(a, F.add(b, c))));
    CHECK(F.eq(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c))));
    CHECK(F.eq(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c))));
    if (!F.is_zero(a)) {
      CHECK(F.eq(F.mul(a, F.inv(a)), F.one()));
      ++inverses;
    }
    // normalization invariants
    CHECK(lead_term(F.add(a, b).den).coeff == 1);
    CHECK(poly_gcd(F.mul(a, b).num, F.mul(a, b).den).is_constant());
  }
  CHECK(inverses > 300);
  CHECK_THROWS_AS(F.inv(F.zero()), Error);
}

TEST_CASE("substitution collapses relations") {
  auto Q = make_ring(RationalField{},
                     make_vartable({"x", "y", "z", "Y1", "Y2"}, 3));
  QPoly x = QPoly::variable(Q, 0), y = QPoly::variable(Q, 1);
  QPoly Y1 = QPoly::variable(Q, 3);

  std::vector<QPoly> images;
  for (int i = 0; i < 5; ++i) images.push_back(QPoly::variable(Q, i));
  images[3] = x;
  images[4] = y;

  auto sub = [&](const QPoly& f) {
    return map_poly(f, Q, images, [](const Rational& c) { return c; });
  };

  CHECK(eqp(sub(Y1), x));
  CHECK(sub(Y1 - x).is_zero());

  QPoly g = parse_qpoly(Q, "Y2^2 + Y1^3 - z^2*Y1^2");
  QPoly h = parse_qpoly(Q, "y^2 + x^3 - x^2*z^2");
  CHECK(eqp(sub(g), h));
  // the image lies in <H>
  Ordering drl = degrevlex_order(Q.vars);
  std::vector<QPoly> hgens{h};
  CHECK(ts::naive_reduce(sub(g), ts::naive_buchberger(hgens, drl), drl)
            .is_zero());
}

TEST_CASE("residue field inversion and axioms") {
  FunctionField F{make_ring(RationalField{}, make_vartable({"w"}))};
  auto R = make_ring(F, make_vartable({"t"}));
  FnPoly t = FnPoly::variable(R, 0);
  FnPoly minpoly = t * t - t.scaled(F.from_int(4)) -
                   FnPoly::constant(R, F.from_int(71));
  ResidueField K{make_residue_ctx(R, {minpoly})};

  CHECK(K.eq(K.inv(K.one()), K.one()));

  // t * (t - 4) = t^2 - 4t = 71, so 1/t = (t - 4)/71
  ResidueElem tc = K.make(t);
  ResidueElem expected =
      K.make((t - FnPoly::constant(R, F.from_int(4)))
                 .scaled(F.make(QPoly::one(F.uring),
                                QPoly::constant(F.uring, Rational(71)))));
  CHECK(K.eq(K.inv(tc), expected));
  CHECK(K.eq(K.mul(tc, K.inv(tc)), K.one()));

  CHECK(K.is_zero(K.make(minpoly)));
  CHECK_THROWS_AS(K.inv(K.make(minpoly)), Error);

  Rng rng(99);
  auto rnd = [&] {
    FnPoly p = FnPoly::zero(R);
    for (int d = 0; d < 2; ++d) {
      QPoly cn = ts::random_qpoly(rng, F.uring, 1, 2, 3);
      if (cn.is_zero()) continue;
      p = p + FnPoly::term(R, Monomial::var(1, 0, d), F.from_poly(cn));
    }
    return K.make(p);
  };
  int inverses = 0;
  for (int it = 0; it < 350; ++it) {
    ResidueElem a = rnd(), b = rnd(), c = rnd();
    CHECK(K.eq(K.add(K.add(a, b), c), K.add(a, K.add(b, c))));
    CHECK(K.eq(K.mul(K.mul(a, b), c), K.mul(a, K.mul(b, c))));
    CHECK(K.eq(K.mul(a, K.add(b, c)), K.add(K.mul(a, b), K.mul(a, c))));
    if (!K.is_zero(a)) {
      CHECK(K.eq(K.mul(a, K.inv(a)), K.one()));
      ++inverses;
    }
    // normal forms are closed under re-reduction
    ResidueElem p = K.mul(a, b);
    CHECK(eqp(K.make(p.rep).rep, p.rep));
  }
  CHECK(inverses > 250);
}
