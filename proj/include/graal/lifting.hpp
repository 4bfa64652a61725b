// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <vector>

#include "graal/presentation.hpp"

namespace graal {

inline RsVec to_KY_vec(const GradedPresentation& gp, const FnVec& v) {
  std::vector<RsPoly> comps;
  for (int c = 0; c < v.rank(); ++c) comps.push_back(to_KY(gp, v[c]));
  return RsVec(gp.KY, std::move(comps));
}

inline FnVec lift_KY_vec(const GradedPresentation& gp, const RsVec& v) {
  std::vector<FnPoly> comps;
  for (int c = 0; c < v.rank(); ++c) comps.push_back(lift_KY(gp, v[c]));
  return FnVec(gp.P->QY, std::move(comps));
}

inline RsPoly reduce_class(const GradedPresentation& gp, const RsPoly& p) {
  if (gp.I_in_gb.empty() || p.is_zero()) return p;
  return full_nf(p, gp.I_in_gb, gp.kord, false).remainder;
}

inline RsVec reduce_class_vec(const GradedPresentation& gp, const RsVec& v) {
  std::vector<RsPoly> comps;
  for (int c = 0; c < v.rank(); ++c) comps.push_back(reduce_class(gp, v[c]));
  return RsVec(gp.KY, std::move(comps));
}

// A filtered free module on both sides of the lift: M-hat over Q0[Y] with a
// standard basis of frakI*M-hat, and its graded counterpart over K[Y].
struct FreeModuleCtx {
  std::shared_ptr<const GradedPresentation> gp;
  int rank = 0;
  std::vector<int> shifts;
  std::shared_ptr<const ModOrdering> mo;
  std::vector<FnVec> G0;
  ModOrdering nmo;
  std::vector<RsVec> quot;
};

inline std::vector<FnVec> frak_times_free(const GradedPresentation& gp,
                                          int rank) {
  std::vector<FnVec> out;
  for (int c = 0; c < rank; ++c)
    for (auto& g : gp.P->G) {
      FnVec v(gp.P->QY, rank);
      v.at(c) = g;
      out.push_back(std::move(v));
    }
  return out;
}

inline std::vector<RsVec> quot_times_free(const GradedPresentation& gp,
                                          int rank) {
  std::vector<RsVec> out;
  for (int c = 0; c < rank; ++c)
    for (auto& g : gp.I_in_gb) {
      RsVec v(gp.KY, rank);
      v.at(c) = g;
      out.push_back(std::move(v));
    }
  return out;
}

inline FreeModuleCtx base_module(std::shared_ptr<const GradedPresentation> gp) {
  FreeModuleCtx ctx;
  ctx.gp = gp;
  ctx.rank = 1;
  ctx.shifts = {0};
  ctx.mo = std::make_shared<const ModOrdering>(plain_mod_order(gp->P->ord));
  ctx.G0 = frak_times_free(*gp, 1);
  ctx.nmo = plain_mod_order(gp->kord);
  ctx.quot = quot_times_free(*gp, 1);
  return ctx;
}

inline FreeModuleCtx next_module(const FreeModuleCtx& prev,
                                 const std::vector<FnVec>& images,
                                 const std::vector<int>& source_shifts) {
  FreeModuleCtx ctx;
  ctx.gp = prev.gp;
  ctx.rank = static_cast<int>(images.size());
  ctx.shifts = source_shifts;
  ctx.mo = std::make_shared<const ModOrdering>(
      schreyer_extend_mod(prev.mo, images));
  ctx.G0 = frak_times_free(*prev.gp, ctx.rank);
  ctx.nmo = prev.nmo;
  ctx.quot = quot_times_free(*prev.gp, ctx.rank);
  if (verify_enabled())
    check(is_std_basis(ctx.G0, *ctx.mo),
          "module context: component copies of the presentation basis lost "
          "the standard-basis property");
  return ctx;
}

struct LiftedBasis {
  std::vector<FnVec> Gdash;
  std::vector<std::vector<FnPoly>> qdash;  // g'_j = sum_i qdash[j][i] g_i - ...
  std::vector<std::vector<FnPoly>> D;      // ... - sum_t D[j][t] G0[t], exactly
  std::vector<FnPoly> units;               // accumulated a_j (1 when unused)
};

// Algorithm: lift a homogeneous basis of the graded submodule back to a
// standard basis over the localization.  qbar[j][i] are the K[Y]-cofactors
// expressing the j-th graded basis element in terms of in_a(g_i).
inline LiftedBasis lift_groebner(const GradedPresentation& gp,
                                 const FreeModuleCtx& ctx,
                                 const std::vector<FnVec>& G,
                                 const std::vector<std::vector<RsPoly>>& qbar) {
  const LocalPresentation& P = *gp.P;
  const ResidueField& K = gp.KY.F();
  const FunctionField& F = P.QY.F();
  LiftedBasis out;

  for (size_t j = 0; j < qbar.size(); ++j) {
    if (qbar[j].size() != G.size())
      throw Error("lift_groebner: cofactor row length mismatch");
    FnVec w(P.QY, ctx.rank);
    std::vector<FnPoly> qlift;
    for (size_t i = 0; i < G.size(); ++i) {
      qlift.push_back(lift_KY(gp, qbar[j][i]));
      w = w + G[i].mul_poly(qlift.back());
    }
    if (w.is_zero())
      throw Error("lift_groebner: cofactor row lifts to zero");

    auto nf = mora_nf(w, ctx.G0, *ctx.mo, true);
    FnVec gd = nf.remainder;
    FnPoly mu = nf.unit;
    std::vector<FnPoly> Dj = nf.cofactors;
    FnPoly a_total = FnPoly::one(P.QY);
    if (gd.is_zero())
      throw VerifyError("lift_groebner: lifted element reduced to zero");

    // Normalize against the graded order, not the Schreyer lead: the graded
    // standard-basis elements being lifted are monic under ctx.nmo, and the
    // two orders can disagree on which slot of the top weight layer leads.
    auto graded_image = [&](const FnVec& v) {
      return reduce_class_vec(gp, to_KY_vec(gp, initial_w(v, ctx.shifts)));
    };
    RsVec img = graded_image(gd);
    check(!img.is_zero(),
          "lift_groebner: initial image vanishes in the graded module");
    ResidueElem lc = lead_term(img, ctx.nmo).coeff;
    if (!K.eq(lc, K.one())) {
      FnPoly a = embed_q0(P, K.inv(lc).rep);
      a_total = a_total * a;
      auto nf2 = mora_nf(gd.mul_poly(a), ctx.G0, *ctx.mo, true);
      FnPoly ua = nf2.unit * a;
      mu = ua * mu;
      for (size_t t = 0; t < Dj.size(); ++t)
        Dj[t] = Dj[t] * ua + nf2.cofactors[t];
      gd = nf2.remainder;
      if (gd.is_zero())
        throw VerifyError("lift_groebner: element vanished while scaling");
      img = graded_image(gd);
      check(!img.is_zero() && K.eq(lead_term(img, ctx.nmo).coeff, K.one()),
            "lift_groebner: unit normalization did not converge");
    }

    std::vector<FnPoly> qrow;
    for (auto& q : qlift) qrow.push_back(mu * q);

    FnVec replay(P.QY, ctx.rank);
    for (size_t i = 0; i < G.size(); ++i)
      replay = replay + G[i].mul_poly(qrow[i]);
    for (size_t t = 0; t < Dj.size(); ++t)
      replay = replay - ctx.G0[t].mul_poly(Dj[t]);
    check(replay == gd, "lift_groebner: representation replay failed");

    if (verify_enabled()) {
      int ordg = -w_degree(gd, ctx.shifts);
      for (size_t i = 0; i < G.size(); ++i) {
        if (qrow[i].is_zero()) continue;
        auto pr = mora_nf(G[i].mul_poly(qrow[i]), ctx.G0, *ctx.mo, false);
        check(!pr.remainder.is_zero() &&
                  -w_degree(pr.remainder, ctx.shifts) == ordg,
              "lift_groebner: order of a cofactor product disagrees with the "
              "lifted element");
      }
    }

    out.Gdash.push_back(std::move(gd));
    out.qdash.push_back(std::move(qrow));
    out.D.push_back(std::move(Dj));
    out.units.push_back(std::move(a_total));
  }

  if (verify_enabled()) {
    std::vector<FnVec> joint = ctx.G0;
    for (auto& g : out.Gdash) joint.push_back(g);
    check(is_std_basis(joint, *ctx.mo),
          "lift_groebner: lifted set is not a standard basis together with "
          "the quotient basis");
  }
  return out;
}

// Algorithm: lift a homogeneous syzygy eta of the graded columns to a syzygy
// of the lifted columns, with matching initial.
inline FnVec lift_syzygy(const GradedPresentation& gp, const FreeModuleCtx& ctx,
                         const std::vector<FnVec>& G, const LiftedBasis& LB,
                         const RsVec& eta,
                         const std::vector<int>& source_shifts) {
  const LocalPresentation& P = *gp.P;
  int k = static_cast<int>(G.size());
  if (eta.rank() != k) throw Error("lift_syzygy: rank mismatch");
  if (eta.is_zero()) return FnVec(P.QY, k);

  RsVec eta_red = reduce_class_vec(gp, eta);
  if (eta_red.is_zero()) return FnVec(P.QY, k);

  std::vector<FnPoly> c;
  for (int t = 0; t < k; ++t) c.push_back(lift_KY(gp, eta_red[t]));

  FnVec w(P.QY, ctx.rank);
  for (int t = 0; t < k; ++t) w = w + G[static_cast<size_t>(t)].mul_poly(c[t]);

  FnPoly u = FnPoly::one(P.QY), udash = FnPoly::one(P.QY);
  std::vector<FnPoly> e0(ctx.G0.size(), FnPoly::zero(P.QY));
  std::vector<FnPoly> d(LB.Gdash.size(), FnPoly::zero(P.QY));
  std::vector<FnPoly> e1(ctx.G0.size(), FnPoly::zero(P.QY));
  if (!w.is_zero()) {
    auto nf = mora_nf(w, ctx.G0, *ctx.mo, true);
    u = nf.unit;
    e0 = nf.cofactors;
    if (!nf.remainder.is_zero()) {
      std::vector<FnVec> joint = LB.Gdash;
      for (auto& g : ctx.G0) joint.push_back(g);
      auto nf2 = mora_nf(nf.remainder, joint, *ctx.mo, true);
      if (!nf2.remainder.is_zero())
        throw VerifyError(
            "lift_syzygy: residual does not reduce to zero against the "
            "lifted standard basis; eta is not a syzygy of the initials");
      udash = nf2.unit;
      for (size_t jj = 0; jj < LB.Gdash.size(); ++jj) d[jj] = nf2.cofactors[jj];
      for (size_t t = 0; t < ctx.G0.size(); ++t)
        e1[t] = nf2.cofactors[LB.Gdash.size() + t];
    }
  }

  FnPoly uu = udash * u;
  std::vector<FnPoly> gamma;
  for (int t = 0; t < k; ++t) {
    FnPoly g = uu * c[t];
    for (size_t jj = 0; jj < d.size(); ++jj)
      g = g - d[jj] * LB.qdash[jj][static_cast<size_t>(t)];
    gamma.push_back(std::move(g));
  }

  // exact membership in frakI * M-hat, no normal form needed
  FnVec lhs(P.QY, ctx.rank);
  for (int t = 0; t < k; ++t)
    lhs = lhs + G[static_cast<size_t>(t)].mul_poly(gamma[static_cast<size_t>(t)]);
  FnVec rhs(P.QY, ctx.rank);
  for (size_t t = 0; t < ctx.G0.size(); ++t) {
    FnPoly E = udash * e0[t] + e1[t];
    for (size_t jj = 0; jj < d.size(); ++jj) E = E - d[jj] * LB.D[jj][t];
    rhs = rhs + ctx.G0[t].mul_poly(E);
  }
  check(lhs == rhs, "lift_syzygy: membership identity replay failed");

  FnVec gv(P.QY, gamma);
  if (verify_enabled() && !gv.is_zero()) {
    auto G0n = frak_times_free(gp, k);
    ModOrdering pm = plain_mod_order(P.ord);
    auto nfg = mora_nf(gv, G0n, pm, true);
    check(!nfg.remainder.is_zero(),
          "lift_syzygy: lifted syzygy lies in frakI times the free module");
    int target = -w_degree(eta_red, source_shifts);
    check(-w_degree(nfg.remainder, source_shifts) == target,
          "lift_syzygy: order of the lifted syzygy mismatches eta");
    RsVec raw = to_KY_vec(gp, initial_w(nfg.remainder, source_shifts));
    RsVec diff = reduce_class_vec(gp, raw - eta_red);
    check(diff.is_zero(), "lift_syzygy: initial of the lift differs from eta");
  }
  return gv;
}

// indices of a minimal homogeneous generating subset, modulo the quotient
// module generators
inline std::vector<size_t> minimal_generators(const std::vector<RsVec>& cands,
                                              const std::vector<RsVec>& quot,
                                              const ModOrdering& nmo,
                                              const std::vector<int>& shifts) {
  std::vector<size_t> order(cands.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return -w_degree(cands[a], shifts) < -w_degree(cands[b], shifts);
  });
  std::vector<size_t> kept;
  SBOpts opts;
  opts.reduce = false;
  for (size_t idx : order) {
    std::vector<RsVec> gens = quot;
    for (size_t k : kept) gens.push_back(cands[k]);
    bool member;
    if (gens.empty()) {
      member = cands[idx].is_zero();
    } else {
      auto sb = std_basis(gens, nmo, opts);
      member = mora_nf(cands[idx], sb.basis, nmo, false).remainder.is_zero();
    }
    if (!member) kept.push_back(idx);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

struct ResolutionStep {
  std::vector<RsVec> gr_cols;  // graded map, one column per source basis elt
  std::vector<FnVec> al_cols;  // lifted map, in_a of each column = gr column
  std::vector<int> source_shifts;
};

struct Resolution {
  std::shared_ptr<const GradedPresentation> gp;
  std::vector<ResolutionStep> steps;
  std::vector<int> ranks;  // free-module ranks, starting with the ambient 1
  bool finished = true;
};

inline Resolution lift_resolution(std::shared_ptr<const GradedPresentation> gp,
                                  const std::vector<QPoly>& Igens,
                                  int max_length = -1) {
  const LocalPresentation& P = *gp->P;
  if (max_length < 0) max_length = P.s() + 1;
  Resolution res;
  res.gp = gp;
  res.ranks.push_back(1);

  auto init = initial_ideal(*gp, Igens);
  std::vector<RsVec> cands;
  std::vector<FnVec> pres;
  for (size_t i = 0; i < init.candidates.size(); ++i) {
    RsPoly red = reduce_class(*gp, init.candidates[i]);
    check(!red.is_zero(),
          "lift_resolution: qualifying initial lies in the presentation "
          "ideal");
    cands.push_back(RsVec::from_poly(red));
    pres.push_back(FnVec::from_poly(init.preimages[i]));
  }

  FreeModuleCtx ctx = base_module(gp);
  auto keep0 = minimal_generators(cands, ctx.quot, ctx.nmo, ctx.shifts);
  if (keep0.empty()) return res;

  std::vector<RsVec> theta;
  std::vector<FnVec> G;
  for (size_t k : keep0) {
    theta.push_back(cands[k]);
    G.push_back(pres[k]);
  }

  while (true) {
    std::vector<int> src_shifts;
    for (auto& t : theta) src_shifts.push_back(-w_degree(t, ctx.shifts));
    res.steps.push_back({theta, G, src_shifts});
    res.ranks.push_back(static_cast<int>(theta.size()));

    auto syz = syzygies_over_quotient(theta, gp->I_in_gb, ctx.nmo);
    std::vector<RsVec> etas;
    for (auto& s : syz) {
      RsVec r = reduce_class_vec(*gp, s);
      if (!r.is_zero()) etas.push_back(std::move(r));
    }
    if (etas.empty()) {
      res.finished = true;
      break;
    }
    if (static_cast<int>(res.steps.size()) >= max_length) {
      res.finished = false;
      break;
    }

    FreeModuleCtx ctx1 = next_module(ctx, G, src_shifts);
    auto keep = minimal_generators(etas, ctx1.quot, ctx1.nmo, ctx1.shifts);
    check(!keep.empty(),
          "lift_resolution: nonzero syzygies all lie in the quotient module");

    // standard basis of the graded submodule, with cofactors on theta
    std::vector<RsVec> aug = theta;
    for (auto& q : ctx.quot) aug.push_back(q);
    SBOpts tr;
    tr.track = true;
    tr.reduce = true;
    tr.shifts = &ctx.shifts;
    auto sbK = std_basis(aug, ctx.nmo, tr);

    std::vector<std::vector<RsPoly>> qbar;
    std::vector<RsVec> hdash;
    for (size_t j = 0; j < sbK.basis.size(); ++j) {
      ModMono lm = lead_modmono(sbK.basis[j], ctx.nmo);
      bool covered = false;
      for (auto& q : gp->I_in_gb) {
        Monomial qm = lead_monomial(q, gp->kord);
        if (qm.divides(lm.mono)) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      std::vector<RsPoly> row(sbK.exprs[j].begin(),
                              sbK.exprs[j].begin() + theta.size());
      bool all_zero = true;
      for (auto& q : row)
        if (!q.is_zero()) all_zero = false;
      if (all_zero) continue;
      qbar.push_back(std::move(row));
      hdash.push_back(sbK.basis[j]);
    }

    auto LB = lift_groebner(*gp, ctx, G, qbar);
    for (size_t j = 0; j < LB.Gdash.size(); ++j) {
      RsVec raw = to_KY_vec(*gp, initial_w(LB.Gdash[j], ctx.shifts));
      RsVec diff = reduce_class_vec(*gp, raw - hdash[j]);
      check(diff.is_zero(),
            "lift_resolution: initial of a lifted basis element differs "
            "from its graded counterpart");
    }

    std::vector<RsVec> theta_next;
    std::vector<FnVec> G_next;
    for (size_t k : keep) {
      FnVec gam = lift_syzygy(*gp, ctx, G, LB, etas[k], ctx1.shifts);
      check(!gam.is_zero(), "lift_resolution: syzygy lifted to zero");
      theta_next.push_back(reduce_class_vec(*gp, etas[k]));
      G_next.push_back(std::move(gam));
    }

    theta = std::move(theta_next);
    G = std::move(G_next);
    ctx = std::move(ctx1);
  }

  // composition of consecutive graded maps vanishes in Gr
  for (size_t s = 0; s + 1 < res.steps.size(); ++s) {
    const auto& A = res.steps[s];
    const auto& B = res.steps[s + 1];
    for (auto& col : B.gr_cols) {
      RsVec acc(gp->KY, A.gr_cols[0].rank());
      for (size_t r = 0; r < A.gr_cols.size(); ++r)
        acc = acc + A.gr_cols[r].mul_poly(col[static_cast<int>(r)]);
      check(reduce_class_vec(*gp, acc).is_zero(),
            "lift_resolution: consecutive graded maps do not compose to "
            "zero");
    }
  }
  return res;
}

}  // namespace graal
