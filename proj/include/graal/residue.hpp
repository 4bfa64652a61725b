// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graal/engine.hpp"
#include "graal/ratfunc.hpp"

namespace graal {

using FnPoly = Polynomial<FunctionField>;

// Residue field K = k(U)[V] / J0 for a maximal ideal J0, represented by a
// reduced Groebner basis.  Elements are the unique fully reduced normal
// forms, so equality is structural.
struct ResidueFieldCtx {
  Ring<FunctionField> q0;
  Ordering ord;           // global ordering on V used for all reductions
  std::vector<FnPoly> gb; // reduced basis of J0

  FnPoly reduce(const FnPoly& p) const {
    if (gb.empty() || p.is_zero()) return p;
    return full_nf(p, gb, ord, false).remainder;
  }
};

inline std::shared_ptr<const ResidueFieldCtx> make_residue_ctx(
    Ring<FunctionField> q0, const std::vector<FnPoly>& j0gens) {
  Ordering ord = degrevlex_order(q0.vars);
  SBOpts opts;
  opts.reduce = true;
  std::vector<FnPoly> nz;
  for (auto& g : j0gens)
    if (!g.is_zero()) nz.push_back(g);
  auto gb = std_basis(nz, ord, opts).basis;
  for (auto& g : gb)
    if (g.is_constant())
      throw InputError("residue field: modulus is the unit ideal");
  return std::make_shared<const ResidueFieldCtx>(
      ResidueFieldCtx{std::move(q0), std::move(ord), std::move(gb)});
}

struct ResidueElem {
  FnPoly rep;  // fully reduced mod the context basis
};

struct ResidueField {
  std::shared_ptr<const ResidueFieldCtx> ctx;

  using Elem = ResidueElem;

  Elem make(const FnPoly& p) const { return Elem{ctx->reduce(p)}; }

  Elem zero() const { return Elem{FnPoly::zero(ctx->q0)}; }
  Elem one() const { return Elem{FnPoly::one(ctx->q0)}; }
  Elem from_int(long n) const {
    return Elem{FnPoly::constant(ctx->q0, ctx->q0.F().from_int(n))};
  }
  Elem from_ratfunc(const RatFunc& r) const {
    return Elem{FnPoly::constant(ctx->q0, r)};
  }

  Elem add(const Elem& a, const Elem& b) const { return Elem{a.rep + b.rep}; }
  Elem sub(const Elem& a, const Elem& b) const { return Elem{a.rep - b.rep}; }
  Elem neg(const Elem& a) const { return Elem{-a.rep}; }
  Elem mul(const Elem& a, const Elem& b) const { return make(a.rep * b.rep); }

  // Inversion by a cofactor-tracked basis of <c> + J0: the unit element of
  // that basis exposes a with a*c = 1 mod J0.
  Elem inv(const Elem& a) const {
    const FunctionField& F = ctx->q0.F();
    if (a.rep.is_zero()) throw Error("residue field: division by zero");
    if (a.rep.is_constant()) {
      return Elem{FnPoly::constant(ctx->q0, F.inv(a.rep.constant_coeff()))};
    }
    std::vector<FnPoly> gens;
    gens.push_back(a.rep);
    for (auto& g : ctx->gb) gens.push_back(g);
    SBOpts opts;
    opts.track = true;
    opts.reduce = false;
    auto sb = std_basis(gens, ctx->ord, opts);
    for (size_t k = 0; k < sb.basis.size(); ++k) {
      if (!sb.basis[k].is_constant() || sb.basis[k].is_zero()) continue;
      RatFunc lead = sb.basis[k].constant_coeff();
      Elem r = make(sb.exprs[k][0].scaled(F.inv(lead)));
      check(eq(mul(a, r), one()), "residue inverse replay failed");
      return r;
    }
    throw InputError("residue field: modulus is not maximal");
  }

  bool is_zero(const Elem& a) const { return a.rep.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a.rep == b.rep; }
  bool same(const ResidueField& o) const {
    if (ctx == o.ctx) return true;
    if (!same_ring(ctx->q0, o.ctx->q0)) return false;
    return ctx->gb == o.ctx->gb;
  }

  std::string str(const Elem& a) const { return graal::to_string(a.rep); }
};

inline ResidueElem residue_invert(const ResidueElem& c,
                                  const ResidueField& K) {
  return K.inv(c);
}

}  // namespace graal
