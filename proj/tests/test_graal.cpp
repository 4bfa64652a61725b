// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "graal/compress.hpp"
#include "graal/apps.hpp"
#include "support.hpp"

using namespace graal;
using ts::eqp;
using ts::proportional;

namespace {

const char* kNodalCone =
    "ring x, y, z over QQ; H = y^2 + x^3 - x^2*z^2; J = x, y;";
const char* kSmoothCurve =
    "ring x, y, z over QQ; H = y^2 + x^3 - x^2*z^2; J = x - z^2, y;";
const char* kTwoLines =
    "ring x, y, z, w over QQ; H = 0;"
    "J = z, x - 1, y^2*w - 3*w, y^4 - 3*y^2;"
    "I = intersect([(x - 1)^2 + y^2 - 3, z],"
    "              [x*z - y^2, y*w - z^2, x*w - y*z, z]);";
const char* kLine = "ring x over QQ; H = 0; J = x;";

std::shared_ptr<const RingTower> tower_from(const std::string& text) {
  ProblemFile pf = parse_problem(text);
  return build_tower(pf.Q, pf.H, pf.J);
}

std::shared_ptr<const GradedPresentation> gp_from(const std::string& text) {
  return gr_presentation(build_presentation(tower_from(text)));
}

Monomial random_mono(Rng& rng, int nvars, int max_e) {
  std::vector<int> e;
  for (int i = 0; i < nvars; ++i)
    e.push_back(static_cast<int>(rng.uniform(0, max_e)));
  return Monomial{e};
}

// evaluate the compression contract: images satisfy the relations and the
// adjoined generator is the recorded coordinate combination
void check_compression(const RingTower& T, const CompressedField& c) {
  ResidueField Kc{c.ctx};
  const FunctionField& F = c.tring.F();
  REQUIRE(c.coordinate_images.size() == T.V.size());
  for (auto& g : T.K->gb) {
    FnPoly sub = map_poly(g, c.tring, c.coordinate_images,
                          [](const RatFunc& x) { return x; });
    CHECK(Kc.is_zero(Kc.make(sub)));
  }
  if (c.lambda.size() == T.V.size()) {
    FnPoly comb = FnPoly::zero(c.tring);
    for (size_t i = 0; i < c.lambda.size(); ++i)
      comb = comb + c.coordinate_images[i].scaled(
                        F.from_poly(QPoly::constant(F.uring, c.lambda[i])));
    CHECK(Kc.is_zero(Kc.make(comb - FnPoly::variable(c.tring, 0))));
  }
  CHECK(deg_in(c.minpoly, 0) == c.degree);
  CHECK(c.degree == residue_degree_over_base(T));
  CHECK(c.attempts >= 1);
}

}  // namespace

TEST_CASE("tower construction picks the lex-first independent set") {
  auto T = tower_from(kNodalCone);
  CHECK(T->U == std::vector<int>{2});
  CHECK(T->V == std::vector<int>{0, 1});
  CHECK(T->s() == 2);
  CHECK(T->dimQH == 2);
  CHECK(T->dimQJ == 1);

  auto T2 = tower_from(kTwoLines);
  CHECK(T2->U == std::vector<int>{3});
  CHECK(T2->V == std::vector<int>{0, 1, 2});
  CHECK(T2->s() == 4);
  CHECK(T2->dimQJ == 1);

  auto T3 = tower_from(kLine);
  CHECK(T3->U.empty());
  CHECK(T3->V == std::vector<int>{0});
  CHECK(T3->s() == 1);
}

TEST_CASE("tower construction rejects bad input") {
  auto Q = make_ring(RationalField{}, make_vartable({"x", "y"}));
  QPoly x = QPoly::variable(Q, 0), y = QPoly::variable(Q, 1);

  // H not contained in J
  CHECK_THROWS_AS(build_tower(Q, {x}, {y}), InputError);
  // J the unit ideal
  CHECK_THROWS_AS(build_tower(Q, {}, {QPoly::one(Q)}), InputError);
  // zero generator listed in J
  CHECK_THROWS_AS(build_tower(Q, {}, {QPoly::zero(Q)}), InputError);
}

TEST_CASE("presentation of the affine line at the origin") {
  auto T = tower_from(kLine);
  auto P = build_presentation(T);
  REQUIRE(P->G.size() == 1);
  FnPoly expected = FnPoly::variable(P->QY, 0) - FnPoly::variable(P->QY, 1);
  CHECK(proportional(P->G[0], expected));
  REQUIRE(P->lmG.size() == 1);
  CHECK(P->lmG[0] == Monomial::var(2, 0));

  auto gp = gr_presentation(P);
  CHECK(gp->I_in_gb.empty());
  CHECK(gp->initial_images_were_basis);
  CHECK(local_dim(*gp) == 1);
  CHECK(linear_count(*gp) == 0);
  CHECK(is_regular(*gp));
}

TEST_CASE("graded presentation of the nodal cone") {
  auto gp = gp_from(kNodalCone);
  const ResidueField& K = gp->KY.F();
  const FunctionField& F = gp->P->T->Q0.F();
  QPoly zu = QPoly::variable(F.uring, 0);

  CHECK(gp->initial_images_were_basis);
  REQUIRE(gp->I_in_gb.size() == 1);
  RsPoly quad =
      RsPoly::term(gp->KY, Monomial::var(2, 1, 2), K.one()) -
      RsPoly::term(gp->KY, Monomial::var(2, 0, 2),
                   K.from_ratfunc(F.from_poly(zu * zu)));
  CHECK(proportional(gp->I_in_gb[0], quad));

  auto lm = leading_monomials(gp->I_in_gb, gp->kord);
  REQUIRE(lm.size() == 1);
  CHECK(lm[0] == Monomial::var(2, 0, 2));  // Y1^2 leads under the local order

  CHECK(local_dim(*gp) == 1);
  CHECK(local_dim(*gp) == gp->P->T->dimQH - gp->P->T->dimQJ);
  CHECK(!is_regular(*gp));
  CHECK(residue_degree_over_base(*gp->P->T) == 1);
}

TEST_CASE("valuation and initial forms on the nodal cone") {
  auto pf = parse_problem(kNodalCone);
  auto gp = gp_from(kNodalCone);
  const ResidueField& K = gp->KY.F();
  Monomial Y1 = Monomial::var(2, 0), Y2 = Monomial::var(2, 1);

  auto vx = valuation_initial(*gp, parse_qpoly(pf.Q, "x"));
  CHECK(!vx.infinite);
  CHECK(vx.nu == 1);
  CHECK(proportional(vx.initial_reduced,
                     RsPoly::term(gp->KY, Y1, K.one())));

  auto vy = valuation_initial(*gp, parse_qpoly(pf.Q, "y"));
  CHECK(vy.nu == 1);
  CHECK(proportional(vy.initial_reduced,
                     RsPoly::term(gp->KY, Y2, K.one())));

  auto v1 = valuation_initial(*gp, QPoly::one(pf.Q));
  CHECK(v1.nu == 0);
  CHECK(proportional(v1.initial, RsPoly::one(gp->KY)));

  auto v2 = valuation_initial(*gp, parse_qpoly(pf.Q, "x^2"));
  CHECK(v2.nu == 2);
  CHECK(proportional(v2.initial_reduced,
                     RsPoly::term(gp->KY, Y2 * Y2, K.one())));

  // x^2*(z^2 - x) = y^2 with z^2 - x a local unit, so x^3 sits in the
  // third power of the maximal ideal
  auto v3 = valuation_initial(*gp, parse_qpoly(pf.Q, "x^3"));
  CHECK(v3.nu == 3);
  CHECK(proportional(v3.initial_reduced,
                     RsPoly::term(gp->KY, Y1 * Y2 * Y2, K.one())));

  CHECK(valuation_initial(*gp, QPoly::zero(pf.Q)).infinite);
  CHECK(valuation_initial(*gp, pf.H[0]).infinite);
}

TEST_CASE("valuation is superadditive") {
  auto pf = parse_problem(kNodalCone);
  auto gp = gp_from(kNodalCone);
  Rng rng(501);
  int checked = 0;
  for (int it = 0; it < 30; ++it) {
    QPoly f = ts::random_qpoly(rng, pf.Q, 2, 2, 3);
    QPoly g = ts::random_qpoly(rng, pf.Q, 2, 2, 3);
    auto vf = valuation_initial(*gp, f);
    auto vg = valuation_initial(*gp, g);
    if (vf.infinite || vg.infinite) continue;
    auto vfg = valuation_initial(*gp, f * g);
    if (!vfg.infinite) CHECK(vfg.nu >= vf.nu + vg.nu);
    if (!(f + g).is_zero()) {
      auto vs = valuation_initial(*gp, f + g);
      if (!vs.infinite) CHECK(vs.nu >= std::min(vf.nu, vg.nu));
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("graded presentation of the two conjugate lines") {
  auto gp = gp_from(kTwoLines);
  const ResidueField& K = gp->KY.F();
  const FunctionField& F = gp->P->T->Q0.F();
  QPoly wu = QPoly::variable(F.uring, 0);

  CHECK(gp->initial_images_were_basis);
  REQUIRE(gp->I_in_gb.size() == 1);
  RsPoly expected =
      RsPoly::term(gp->KY, Monomial::var(4, 2), K.from_int(3)) -
      RsPoly::term(gp->KY, Monomial::var(4, 3), K.from_ratfunc(F.from_poly(wu)));
  CHECK(proportional(gp->I_in_gb[0], expected));

  // H = 0, so the localization is a regular local ring of dimension 3
  CHECK(local_dim(*gp) == 3);
  CHECK(is_regular(*gp));
  CHECK(linear_count(*gp) == 1);
  CHECK(residue_degree_over_base(*gp->P->T) == 2);
}

TEST_CASE("initial ideal of the intersection ideal") {
  auto pf = parse_problem(kTwoLines);
  auto gp = gp_from(kTwoLines);
  const ResidueField& K = gp->KY.F();
  const FunctionField& F = gp->P->T->Q0.F();
  QPoly wu = QPoly::variable(F.uring, 0);

  std::vector<QPoly> I = resolve_I(pf);
  REQUIRE(!I.empty());
  auto init = initial_ideal(*gp, I);
  CHECK(!init.anomaly);
  CHECK(!init.candidates.empty());
  REQUIRE(init.candidates.size() == init.preimages.size());

  std::vector<RsPoly> expected{
      RsPoly::term(gp->KY, Monomial::var(4, 3),
                   K.from_ratfunc(F.from_poly(wu * wu))),
      RsPoly::term(gp->KY, Monomial::var(4, 0), K.one())};
  for (auto& g : gp->I_in_gb) expected.push_back(g);
  CHECK(ts::same_ideal(init.gb, expected, gp->kord));

  // each candidate really is the initial image of its preimage
  for (size_t i = 0; i < init.candidates.size(); ++i) {
    FnPoly iw = initial_w(init.preimages[i]);
    CHECK(eqp(to_KY(*gp, iw), init.candidates[i]));
  }
}

TEST_CASE("initial ideal with no extra generators is the presentation ideal") {
  auto gp = gp_from(kNodalCone);
  auto init = initial_ideal(*gp, {});
  CHECK(init.candidates.empty());
  CHECK(!init.anomaly);
  CHECK(ts::same_ideal(init.gb, gp->I_in_gb, gp->kord));
}

TEST_CASE("residue field compression") {
  uint64_t seed = 0;

  // leading ideal of J is <z^2, y>, so U = {x} and the residue field is
  // QQ(x)[z]/(z^2 - x), quadratic over the base
  auto T1 = tower_from(kSmoothCurve);
  CHECK(T1->U == std::vector<int>{0});
  auto c1 = compress_residue_field(*T1, seed);
  CHECK(c1.degree == 2);
  check_compression(*T1, c1);

  auto T2 = tower_from("ring x, y over QQ; H = 0; J = x - 1, y - 2;");
  auto c2 = compress_residue_field(*T2, seed);
  CHECK(c2.degree == 1);
  check_compression(*T2, c2);

  auto T3 = tower_from(kTwoLines);
  auto c3 = compress_residue_field(*T3, seed);
  CHECK(c3.degree == 2);
  check_compression(*T3, c3);
  // the minimal polynomial is monic of degree 2 over the function field
  const FunctionField& F3 = c3.tring.F();
  bool monic = false;
  for (auto& t : c3.minpoly.terms())
    if (t.mono.e[0] == 2) monic = F3.eq(t.coeff, F3.one());
  CHECK(monic);
}

TEST_CASE("graded ring elements lift and push back unchanged") {
  auto gp = gp_from(kTwoLines);
  const ResidueField& K = gp->KY.F();
  const auto& Q0 = gp->P->T->Q0;
  const FunctionField& F = Q0.F();
  Rng rng(502);
  for (int it = 0; it < 30; ++it) {
    RsPoly p = RsPoly::zero(gp->KY);
    for (int t = 0; t < 3; ++t) {
      Monomial ym = random_mono(rng, gp->P->s(), 2);
      QPoly cu = ts::random_qpoly(rng, F.uring, 2, 2, 3);
      if (cu.is_zero()) continue;
      Monomial vm = random_mono(rng, gp->P->nv(), 1);
      ResidueElem ce = K.make(FnPoly::term(Q0, vm, F.from_poly(cu)));
      if (K.is_zero(ce)) continue;
      p = p + RsPoly::term(gp->KY, ym, ce);
    }
    CHECK(eqp(to_KY(*gp, lift_KY(*gp, p)), p));
  }
}
