// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "graal/apps.hpp"
#include "graal/compress.hpp"
#include "graal/lifting.hpp"
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
const char* kLine = "ring x over QQ; H = 0; J = x; I = x;";
const char* kQuadraticPoint =
    "ring t, w over QQ; H = 0; J = t^2 - 4*t - 71;";

struct Built {
  ProblemFile pf;
  std::shared_ptr<const RingTower> T;
  std::shared_ptr<const GradedPresentation> gp;
};

Built build(const std::string& text) {
  Built b;
  b.pf = parse_problem(text);
  b.T = build_tower(b.pf.Q, b.pf.H, b.pf.J);
  b.gp = gr_presentation(build_presentation(b.T));
  return b;
}

// independent zero-dimensionality certificate for a parameter system
bool sop_certificate(const GradedPresentation& gp, const SopResult& sop) {
  const ResidueField& K = gp.KY.F();
  int s = gp.P->s();
  std::vector<RsPoly> gens = gp.I_in_gb;
  for (auto& row : sop.coeff_matrix) {
    RsPoly lam = RsPoly::zero(gp.KY);
    for (int j = 0; j < s; ++j)
      if (row[static_cast<size_t>(j)] != 0)
        lam = lam + RsPoly::term(gp.KY, Monomial::var(s, j),
                                 K.from_int(row[static_cast<size_t>(j)]));
    if (lam.is_zero()) return false;
    gens.push_back(lam);
  }
  auto basis = std_basis(gens, gp.kord).basis;
  auto L = leading_monomials(basis, gp.kord);
  return dim_and_indep_set(L, s).dim == 0;
}

// structural checks every lifted resolution must satisfy
void check_resolution(const GradedPresentation& gp, const Resolution& res) {
  const LocalPresentation& P = *gp.P;
  REQUIRE(res.ranks.size() == res.steps.size() + 1);
  REQUIRE(res.ranks[0] == 1);

  std::vector<int> target_shifts{0};
  for (size_t k = 0; k < res.steps.size(); ++k) {
    const auto& st = res.steps[k];
    REQUIRE(static_cast<size_t>(res.ranks[k + 1]) == st.gr_cols.size());
    REQUIRE(st.al_cols.size() == st.gr_cols.size());
    REQUIRE(st.source_shifts.size() == st.gr_cols.size());
    for (size_t c = 0; c < st.gr_cols.size(); ++c) {
      CHECK(st.gr_cols[c].rank() == res.ranks[k]);
      CHECK(st.al_cols[c].rank() == res.ranks[k]);
      CHECK(component_homogeneous(st.gr_cols[c], &target_shifts));
      CHECK(st.source_shifts[c] == -w_degree(st.gr_cols[c], target_shifts));
      RsVec raw = to_KY_vec(gp, initial_w(st.al_cols[c], target_shifts));
      CHECK(reduce_class_vec(gp, raw - st.gr_cols[c]).is_zero());
    }
    target_shifts = st.source_shifts;
  }

  for (size_t k = 0; k + 1 < res.steps.size(); ++k) {
    const auto& A = res.steps[k];
    const auto& B = res.steps[k + 1];
    for (auto& col : B.gr_cols) {
      RsVec acc(gp.KY, res.ranks[k]);
      for (size_t r = 0; r < A.gr_cols.size(); ++r)
        acc = acc + A.gr_cols[r].mul_poly(col[static_cast<int>(r)]);
      CHECK(reduce_class_vec(gp, acc).is_zero());
    }
    for (auto& col : B.al_cols) {
      FnVec acc(P.QY, res.ranks[k]);
      for (size_t r = 0; r < A.al_cols.size(); ++r)
        acc = acc + A.al_cols[r].mul_poly(col[static_cast<int>(r)]);
      for (int e = 0; e < acc.rank(); ++e)
        CHECK(mora_nf(acc[e], P.G, P.ord, false).remainder.is_zero());
    }
  }
}

}  // namespace

TEST_CASE("dimension, embedding dimension, regularity") {
  auto line = build(kLine);
  CHECK(local_dim(*line.gp) == 1);
  CHECK(is_regular(*line.gp));
  CHECK(line.gp->P->s() - linear_count(*line.gp) == 1);

  auto nodal = build(kNodalCone);
  CHECK(local_dim(*nodal.gp) == 1);
  CHECK(!is_regular(*nodal.gp));
  CHECK(nodal.gp->P->s() - linear_count(*nodal.gp) == 2);

  auto smooth = build(kSmoothCurve);
  CHECK(local_dim(*smooth.gp) == 1);
  CHECK(is_regular(*smooth.gp));
  CHECK(smooth.gp->P->s() - linear_count(*smooth.gp) == 1);
}

TEST_CASE("system of parameters on the nodal cone") {
  auto b = build(kNodalCone);
  auto sop = system_of_parameters(*b.gp, 0);

  REQUIRE(sop.elements.size() == 1);
  REQUIRE(sop.coeff_matrix.size() == 1);
  REQUIRE(sop.coeff_matrix[0].size() == 2);
  CHECK(!sop.regular);
  CHECK(sop.attempts >= 1);
  CHECK(sop_certificate(*b.gp, sop));

  // elements really are the recorded combinations of the J generators
  for (size_t i = 0; i < sop.elements.size(); ++i) {
    QPoly a = QPoly::zero(b.pf.Q);
    for (size_t j = 0; j < b.pf.J.size(); ++j)
      a = a + b.pf.J[j].scaled(Rational(sop.coeff_matrix[i][j]));
    CHECK(eqp(a, sop.elements[i]));
  }

  // a parameter on a one-dimensional local ring has order 1 here
  auto v = valuation_initial(*b.gp, sop.elements[0]);
  CHECK(v.nu == 1);

  // deterministic for a fixed seed
  auto again = system_of_parameters(*b.gp, 0);
  CHECK(again.coeff_matrix == sop.coeff_matrix);

  CHECK_THROWS_AS(system_of_parameters(*b.gp, 0, true), InputError);
}

TEST_CASE("regular system of parameters on the smooth curve") {
  auto b = build(kSmoothCurve);
  auto sop = system_of_parameters(*b.gp, 0, true);
  REQUIRE(sop.elements.size() == 1);
  CHECK(sop.regular);
  CHECK(sop_certificate(*b.gp, sop));
}

TEST_CASE("system of parameters on the line and the intersection curve") {
  auto line = build(kLine);
  auto sop1 = system_of_parameters(*line.gp, 0, true);
  REQUIRE(sop1.elements.size() == 1);
  CHECK(sop1.regular);
  CHECK(proportional(sop1.elements[0], QPoly::variable(line.pf.Q, 0)));
  CHECK(sop_certificate(*line.gp, sop1));

  auto lines = build(kTwoLines);
  auto sop3 = system_of_parameters(*lines.gp, 0);
  REQUIRE(sop3.elements.size() == 3);
  CHECK(sop_certificate(*lines.gp, sop3));
}

TEST_CASE("hilbert data on the line") {
  auto b = build(kLine);

  auto h0 = hilbert_samuel(*b.gp, {});
  CHECK(h0.degree_d == 1);
  CHECK(h0.a_coeffs == std::vector<Integer>{Integer(1)});
  CHECK(h0.constant_c == 0);
  CHECK(h0.threshold_l == 1);
  REQUIRE(h0.hs_values.size() == 8);
  for (size_t n = 0; n < h0.hs_values.size(); ++n)
    CHECK(h0.hs_values[n] == Integer(static_cast<long>(n)));

  auto h1 = hilbert_samuel(*b.gp, b.pf.I);
  CHECK(h1.degree_d == 0);
  CHECK(h1.a_coeffs == std::vector<Integer>{Integer(0)});
  CHECK(h1.constant_c == 1);
  for (size_t n = 1; n < h1.hs_values.size(); ++n)
    CHECK(h1.hs_values[n] == 1);
}

TEST_CASE("hilbert data on the nodal cone") {
  auto b = build(kNodalCone);

  auto h = hilbert_samuel(*b.gp, {});
  CHECK(h.degree_d == 1);
  CHECK(h.a_coeffs == (std::vector<Integer>{Integer(2), Integer(0)}));
  CHECK(h.constant_c == -1);
  CHECK(h.threshold_l == 1);
  REQUIRE(h.hs_values.size() == 8);
  CHECK(h.hs_values[0] == 0);
  for (size_t n = 1; n < h.hs_values.size(); ++n)
    CHECK(h.hs_values[n] == Integer(2 * static_cast<long>(n) - 1));

  // modding out a parameter leaves an artinian ring of length 2, and the
  // agreement threshold moves past the sporadic values
  auto ha = hilbert_samuel(*b.gp, {parse_qpoly(b.pf.Q, "x")});
  CHECK(ha.degree_d == 0);
  CHECK(ha.a_coeffs == (std::vector<Integer>{Integer(0), Integer(0)}));
  CHECK(ha.constant_c == 2);
  CHECK(ha.threshold_l == 2);
  CHECK(ha.hs_values[0] == 0);
  CHECK(ha.hs_values[1] == 1);
  for (size_t n = 2; n < ha.hs_values.size(); ++n)
    CHECK(ha.hs_values[n] == 2);

  for (long n = h.threshold_l; n <= h.threshold_l + 5; ++n)
    CHECK(hilbert_samuel_value(h, n) ==
          h.hs_values[static_cast<size_t>(n)]);
  for (long n = ha.threshold_l; n <= ha.threshold_l + 5; ++n)
    CHECK(hilbert_samuel_value(ha, n) ==
          ha.hs_values[static_cast<size_t>(n)]);
}

TEST_CASE("hilbert data for the intersection curve") {
  auto b = build(kTwoLines);
  std::vector<QPoly> I = resolve_I(b.pf);

  auto h = hilbert_samuel(*b.gp, I);
  CHECK(h.degree_d == 1);
  CHECK(h.a_coeffs ==
        (std::vector<Integer>{Integer(1), Integer(0), Integer(0), Integer(0)}));
  CHECK(h.constant_c == 0);
  CHECK(h.threshold_l == 1);
  REQUIRE(h.hs_values.size() == 8);
  for (size_t n = 0; n < h.hs_values.size(); ++n)
    CHECK(h.hs_values[n] == Integer(static_cast<long>(n)));
  for (long n = h.threshold_l; n <= h.threshold_l + 5; ++n)
    CHECK(hilbert_samuel_value(h, n) ==
          h.hs_values[static_cast<size_t>(n)]);
}

TEST_CASE("resolution of the line modulo its maximal ideal") {
  auto b = build(kLine);
  auto res = lift_resolution(b.gp, b.pf.I);
  CHECK(res.finished);
  CHECK(res.ranks == (std::vector<int>{1, 1}));
  REQUIRE(res.steps.size() == 1);
  CHECK(res.steps[0].source_shifts == std::vector<int>{1});

  const ResidueField& K = b.gp->KY.F();
  RsPoly Y1 = RsPoly::variable(b.gp->KY, 0);
  CHECK(proportional(res.steps[0].gr_cols[0][0], Y1));
  check_resolution(*b.gp, res);

  // the lifted column generates I in the localization: x itself maps to it
  FnPoly x0 = embed_q0(*b.gp->P, to_q0(*b.T, parse_qpoly(b.pf.Q, "x")));
  std::vector<FnPoly> full = b.gp->P->G;
  full.push_back(res.steps[0].al_cols[0][0]);
  auto sb = std_basis(full, b.gp->P->ord);
  CHECK(ideal_membership(x0, sb.basis, b.gp->P->ord));
  (void)K;
}

TEST_CASE("resolution of the intersection curve") {
  auto b = build(kTwoLines);
  std::vector<QPoly> I = resolve_I(b.pf);

  auto res = lift_resolution(b.gp, I);
  CHECK(res.finished);
  CHECK(res.ranks == (std::vector<int>{1, 2, 1}));
  REQUIRE(res.steps.size() == 2);
  CHECK(res.steps[0].source_shifts == (std::vector<int>{1, 1}));
  CHECK(res.steps[1].source_shifts == (std::vector<int>{2}));
  check_resolution(*b.gp, res);

  // first map: the graded columns generate the initial ideal mod frakI_in
  auto init = initial_ideal(*b.gp, I);
  std::vector<RsPoly> span = b.gp->I_in_gb;
  for (auto& col : res.steps[0].gr_cols) span.push_back(col[0]);
  CHECK(ts::same_ideal(span, init.gb, b.gp->kord));
}

TEST_CASE("resolution over a quadratic residue field") {
  bool old = verify_flag();
  set_verify(true);

  auto b = build(kQuadraticPoint);
  CHECK(residue_degree_over_base(*b.T) == 2);
  CHECK(local_dim(*b.gp) == 1);

  // two multiples of the J generator; their initials are unit multiples
  // of each other in K = QQ(w)[t]/(t^2 - 4t - 71), which forces residue
  // field inversions of non-constant classes during minimalization
  std::vector<QPoly> I{parse_qpoly(b.pf.Q, "t^3 - 4*t^2 - 71*t"),
                       parse_qpoly(b.pf.Q, "t^4 - 4*t^3 - 71*t^2")};
  auto res = lift_resolution(b.gp, I);
  CHECK(res.finished);
  CHECK(res.ranks == (std::vector<int>{1, 1}));
  check_resolution(*b.gp, res);

  set_verify(old);
}

TEST_CASE("resolution truncation") {
  auto b = build(kNodalCone);
  std::vector<QPoly> I{parse_qpoly(b.pf.Q, "x"), parse_qpoly(b.pf.Q, "y")};

  // the residue field has infinite projective dimension here; the default
  // cap is s + 1 steps
  auto full = lift_resolution(b.gp, I);
  CHECK(!full.finished);
  CHECK(full.steps.size() == static_cast<size_t>(b.gp->P->s() + 1));
  check_resolution(*b.gp, full);

  auto trunc = lift_resolution(b.gp, I, 1);
  CHECK(!trunc.finished);
  CHECK(trunc.steps.size() == 1);
  check_resolution(*b.gp, trunc);

  // a principal ideal in the (domain) localization resolves in one step
  auto principal = lift_resolution(b.gp, {parse_qpoly(b.pf.Q, "x")});
  CHECK(principal.finished);
  CHECK(principal.ranks == (std::vector<int>{1, 1}));
  check_resolution(*b.gp, principal);
}
