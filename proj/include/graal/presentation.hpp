// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "graal/tower.hpp"

namespace graal {

using RsPoly = Polynomial<ResidueField>;
using FnVec = Vec<FunctionField>;
using RsVec = Vec<ResidueField>;

// Presentation of the localization: A_L = Q0[Y]_> / frakI where frakI is
// generated by f_i^0 - Y_i together with H^0, and G is a standard basis of
// frakI under the mixed ordering.
struct LocalPresentation {
  std::shared_ptr<const RingTower> T;
  Ring<FunctionField> QY;  // k(U)[V][Y], adjoined block = Y
  Ordering ord;            // mixed ordering
  std::vector<FnPoly> f0;  // f_i^0 embedded in QY (Y-free)
  std::vector<FnPoly> gens;
  std::vector<FnPoly> G;
  std::vector<Monomial> lmG;  // minimal generators of the leading ideal

  int nv() const { return static_cast<int>(T->V.size()); }
  int s() const { return T->s(); }
};

// embed a Q0 polynomial into QY (variables keep their positions)
inline FnPoly embed_q0(const LocalPresentation& P, const FnPoly& p) {
  std::vector<FnPoly> images;
  for (int v = 0; v < P.nv(); ++v)
    images.push_back(FnPoly::variable(P.QY, v));
  return map_poly(p, P.QY, images, [](const RatFunc& c) { return c; });
}

// Y-free QY (or Q0) content mapped back to Q with denominators cleared by
// their lcm; the lcm lies in QQ[U] and is a unit modulo any ideal that meets
// QQ[U] trivially, so membership tests in <H> are unaffected.
inline QPoly clear_to_Q(const RingTower& T, const FnPoly& p) {
  const FunctionField& F = T.Q0.F();
  QPoly lcm = QPoly::one(F.uring);
  for (auto& t : p.terms()) lcm = poly_lcm(lcm, t.coeff.den);
  int n = T.Q.nvars();
  std::vector<QPoly> uimg;
  for (int u : T.U) uimg.push_back(QPoly::variable(T.Q, u));
  QPoly acc = QPoly::zero(T.Q);
  for (auto& t : p.terms()) {
    for (size_t i = static_cast<size_t>(T.V.size()); i < t.mono.e.size(); ++i)
      if (t.mono.e[i] > 0)
        throw Error("clear_to_Q: polynomial is not Y-free");
    QPoly num = t.coeff.num * divexact(lcm, t.coeff.den);
    QPoly numQ = map_poly(num, T.Q, uimg, [](const Rational& c) { return c; });
    Monomial m(n);
    for (size_t i = 0; i < T.V.size(); ++i)
      m.e[static_cast<size_t>(T.V[i])] = t.mono.e[i];
    acc = acc + numQ.mul_term(m, Rational(1));
  }
  return acc;
}

inline std::shared_ptr<const LocalPresentation> build_presentation(
    std::shared_ptr<const RingTower> T) {
  auto P = std::make_shared<LocalPresentation>();
  P->T = T;
  int nv = static_cast<int>(T->V.size());
  int s = T->s();

  std::vector<std::string> names;
  for (int v : T->V) names.push_back(T->Q.vars->names[static_cast<size_t>(v)]);
  for (int i = 1; i <= s; ++i) {
    std::string y = "Y" + std::to_string(i);
    if (T->Q.vars->index_of(y) >= 0)
      throw InputError("variable name " + y + " is reserved");
    names.push_back(y);
  }
  P->QY = Ring<FunctionField>{T->Q0.field, make_vartable(names, nv)};
  P->ord = mixed_order(P->QY.vars);

  for (auto& f : T->J0) P->f0.push_back(embed_q0(*P, f));
  for (int i = 0; i < s; ++i)
    P->gens.push_back(P->f0[static_cast<size_t>(i)] -
                      FnPoly::variable(P->QY, nv + i));
  for (auto& h : T->H0) P->gens.push_back(embed_q0(*P, h));

  SBOpts opts;
  opts.reduce = true;
  P->G = std_basis(P->gens, P->ord, opts).basis;
  P->lmG = leading_monomials(P->G, P->ord);

  // soundness of the presentation: substituting Y_i -> f_i^0 into any basis
  // element must land in <H> (exactly zero when H is trivial)
  std::vector<std::optional<FnPoly>> subst_images(
      static_cast<size_t>(nv + s));
  for (int i = 0; i < s; ++i)
    subst_images[static_cast<size_t>(nv + i)] = P->f0[static_cast<size_t>(i)];
  Ordering drl = degrevlex_order(T->Q.vars);
  for (auto& g : P->G) {
    FnPoly sub = substitute(g, subst_images);
    QPoly back = clear_to_Q(*T, sub);
    if (!ideal_membership(back, T->gbH, drl))
      throw VerifyError(
          "presentation: basis element does not map into <H>; check that H "
          "and J are prime");
  }
  return P;
}

// The associated graded side: Gr = K[Y] / frakI_in with a reduced
// homogeneous basis of frakI_in.
struct GradedPresentation {
  std::shared_ptr<const LocalPresentation> P;
  Ring<ResidueField> KY;
  Ordering kord;  // graded local ordering on pure Y variables
  std::vector<RsPoly> I_in_gb;
  bool initial_images_were_basis = true;

  const RingTower& tower() const { return *P->T; }
};

// K[Y] image of a QY polynomial: group by Y-part, push V-parts into K
inline RsPoly to_KY(const GradedPresentation& gp, const FnPoly& p) {
  const ResidueField& K = gp.KY.F();
  int nv = gp.P->nv();
  int s = gp.P->s();
  std::map<Monomial, FnPoly, MonoLexGreater> acc;
  for (auto& t : p.terms()) {
    Monomial ym(s), vm(nv);
    for (int i = 0; i < nv; ++i)
      vm.e[static_cast<size_t>(i)] = t.mono.e[static_cast<size_t>(i)];
    for (int i = 0; i < s; ++i)
      ym.e[static_cast<size_t>(i)] = t.mono.e[static_cast<size_t>(nv + i)];
    FnPoly piece = FnPoly::term(gp.P->T->Q0, vm, t.coeff);
    auto it = acc.find(ym);
    if (it == acc.end())
      acc.emplace(std::move(ym), std::move(piece));
    else
      it->second = it->second + piece;
  }
  std::vector<RsPoly::Term> terms;
  for (auto& [ym, vp] : acc) {
    ResidueElem c = K.make(vp);
    if (!K.is_zero(c)) terms.push_back({ym, std::move(c)});
  }
  return RsPoly(gp.KY, std::move(terms));
}

// canonical lift K[Y] -> Q0[Y] using the reduced representatives
inline FnPoly lift_KY(const GradedPresentation& gp, const RsPoly& k) {
  int nv = gp.P->nv();
  FnPoly acc = FnPoly::zero(gp.P->QY);
  for (auto& t : k.terms()) {
    Monomial m(nv + gp.P->s());
    for (int i = 0; i < gp.P->s(); ++i)
      m.e[static_cast<size_t>(nv + i)] = t.mono.e[static_cast<size_t>(i)];
    acc = acc + embed_q0(*gp.P, t.coeff.rep).mul_term(m, gp.P->QY.F().one());
  }
  return acc;
}

inline std::shared_ptr<const GradedPresentation> gr_presentation(
    std::shared_ptr<const LocalPresentation> P) {
  auto gp = std::make_shared<GradedPresentation>();
  gp->P = P;
  int s = P->s();
  std::vector<std::string> ynames;
  for (int i = 1; i <= s; ++i) ynames.push_back("Y" + std::to_string(i));
  gp->KY = make_ring(ResidueField{P->T->K}, make_vartable(ynames, 0));
  gp->kord = mixed_order(gp->KY.vars);

  std::vector<RsPoly> images;
  for (auto& g : P->G) {
    RsPoly img = to_KY(*gp, initial_w(g));
    if (!img.is_zero()) images.push_back(std::move(img));
  }
  SBOpts opts;
  opts.reduce = true;
  gp->I_in_gb = std_basis(images, gp->kord, opts).basis;
  // the images of the weight-initial forms should already be a basis
  gp->initial_images_were_basis = is_std_basis(images, gp->kord);
  return gp;
}

struct ValuationResult {
  bool infinite = false;  // image of f is zero in the localization
  int nu = 0;
  RsPoly initial;          // raw image of the weight-initial part
  RsPoly initial_reduced;  // canonical class representative mod frakI_in
  FnPoly nf;               // the weak normal form used
};

// order and initial form of the class of f in the associated graded ring
inline ValuationResult valuation_initial(const GradedPresentation& gp,
                                         const QPoly& f) {
  const LocalPresentation& P = *gp.P;
  ValuationResult r;
  FnPoly f0y = embed_q0(P, to_q0(*P.T, f));
  if (f0y.is_zero()) {
    r.infinite = true;
    return r;
  }
  // tracked, so the remainder is the canonical representative (unit 1+...)
  auto nf = mora_nf(f0y, P.G, P.ord, true);
  if (verify_enabled()) {
    auto vnf = mora_nf(Vec<FunctionField>::from_poly(f0y), to_vecs(P.G),
                       plain_mod_order(P.ord), true);
    verify_nf(vnf, Vec<FunctionField>::from_poly(f0y), to_vecs(P.G),
              plain_mod_order(P.ord));
  }
  if (nf.remainder.is_zero()) {
    r.infinite = true;
    return r;
  }
  r.nf = nf.remainder;
  r.nu = -w_degree(nf.remainder);
  r.initial = to_KY(gp, initial_w(nf.remainder));
  check(!r.initial.is_zero(),
        "valuation: initial image vanished although the normal form did not");
  r.initial_reduced =
      gp.I_in_gb.empty()
          ? r.initial
          : full_nf(r.initial, gp.I_in_gb, gp.kord, false).remainder;
  check(!r.initial_reduced.is_zero(),
        "valuation: initial form lies in the graded presentation ideal");
  return r;
}

struct InitialIdealData {
  std::vector<RsPoly> gb;  // reduced basis of frakI_in + in_a(I) inside K[Y]
  // initial classes with matched preimages, for generating-set work
  std::vector<RsPoly> candidates;   // raw images (not reduced)
  std::vector<FnPoly> preimages;    // elements of frakI + I^0
  bool anomaly = false;  // completion beyond the qualifying initials was needed
};

inline InitialIdealData initial_ideal(const GradedPresentation& gp,
                                      const std::vector<QPoly>& Igens) {
  const LocalPresentation& P = *gp.P;
  InitialIdealData out;

  // pre-reduce each embedded generator against G; replacing g by NF(g)
  // only multiplies by a local unit, and it tames the combined basis run
  std::vector<FnPoly> combined = P.G;
  for (auto& f : Igens) {
    FnPoly img = embed_q0(P, to_q0(*P.T, f));
    if (img.is_zero()) continue;
    auto nf = mora_nf(img, P.G, P.ord, false);
    if (!nf.remainder.is_zero()) combined.push_back(std::move(nf.remainder));
  }
  SBOpts opts;
  opts.reduce = true;
  auto sb = std_basis(combined, P.ord, opts);

  std::vector<RsPoly> rest_images;
  for (auto& b : sb.basis) {
    Monomial lm = lead_monomial(b, P.ord);
    bool in_lmG = false;
    for (auto& m : P.lmG)
      if (m.divides(lm)) {
        in_lmG = true;
        break;
      }
    RsPoly img = to_KY(gp, initial_w(b));
    if (in_lmG) {
      if (!img.is_zero()) rest_images.push_back(std::move(img));
      continue;
    }
    if (img.is_zero()) continue;
    out.candidates.push_back(std::move(img));
    out.preimages.push_back(b);
  }

  std::vector<RsPoly> kgens = gp.I_in_gb;
  for (auto& c : out.candidates) kgens.push_back(c);
  out.gb = std_basis(kgens, gp.kord, opts).basis;

  for (auto& img : rest_images) {
    if (!ideal_membership(img, out.gb, gp.kord)) {
      out.anomaly = true;
      break;
    }
  }
  if (out.anomaly) {
    for (auto& img : rest_images) kgens.push_back(img);
    out.gb = std_basis(kgens, gp.kord, opts).basis;
  }
  return out;
}

}  // namespace graal
