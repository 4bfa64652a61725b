// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <memory>
#include <vector>

#include "graal/residue.hpp"

namespace graal {

// The ring ladder of a localization problem: Q = QQ[X], primes H <= J,
// A = Q/H localized at J.  U is a maximal independent set of variables
// modulo J, V its complement, Q0 = k(U)[V], and K = Q0/J0 the residue
// field.  Primality of H and J is an input assumption and is not decided
// here; everything that can be checked cheaply is checked.
struct RingTower {
  Ring<RationalField> Q;
  std::vector<QPoly> Hgens, Jgens;
  std::vector<QPoly> gbH, gbJ;  // reduced degrevlex bases
  int dimQH = 0, dimQJ = 0;
  std::vector<int> U, V;  // ascending index sets into Q's variables

  Ring<FunctionField> Q0;  // k(U)[V]
  std::vector<FnPoly> H0, J0;
  std::shared_ptr<const ResidueFieldCtx> K;

  ResidueField residue_field() const { return ResidueField{K}; }
  int s() const { return static_cast<int>(Jgens.size()); }
};

// image of f under Q -> Q0 = k(U)[V]
inline FnPoly to_q0(const RingTower& T, const QPoly& f) {
  const FunctionField& F = T.Q0.F();
  int nv = static_cast<int>(T.V.size());
  int nu = static_cast<int>(T.U.size());
  std::map<Monomial, QPoly, MonoLexGreater> acc;
  for (auto& t : f.terms()) {
    Monomial vm(nv), um(nu);
    for (int i = 0; i < nv; ++i)
      vm.e[static_cast<size_t>(i)] =
          t.mono.e[static_cast<size_t>(T.V[static_cast<size_t>(i)])];
    for (int i = 0; i < nu; ++i)
      um.e[static_cast<size_t>(i)] =
          t.mono.e[static_cast<size_t>(T.U[static_cast<size_t>(i)])];
    QPoly piece = QPoly::term(F.uring, um, t.coeff);
    auto it = acc.find(vm);
    if (it == acc.end())
      acc.emplace(std::move(vm), std::move(piece));
    else
      it->second = it->second + piece;
  }
  std::vector<FnPoly::Term> terms;
  for (auto& [vm, up] : acc)
    if (!up.is_zero()) terms.push_back({vm, F.from_poly(up)});
  return FnPoly(T.Q0, std::move(terms));
}

inline std::shared_ptr<const RingTower> build_tower(
    const Ring<RationalField>& Q, std::vector<QPoly> Hgens,
    std::vector<QPoly> Jgens) {
  auto Tp = std::make_shared<RingTower>();
  RingTower& T = *Tp;
  T.Q = Q;
  for (auto& h : Hgens)
    if (!h.is_zero()) T.Hgens.push_back(h);
  T.Jgens = std::move(Jgens);
  for (auto& f : T.Jgens)
    if (f.is_zero()) throw InputError("tower: zero generator listed in J");
  int n = Q.nvars();

  Ordering drl = degrevlex_order(Q.vars);
  SBOpts opts;
  opts.reduce = true;
  T.gbJ = std_basis(T.Jgens, drl, opts).basis;
  T.gbH = std_basis(T.Hgens, drl, opts).basis;
  for (auto& g : T.gbJ)
    if (g.is_constant() && !g.is_zero())
      throw InputError("tower: J is the unit ideal");
  for (auto& g : T.gbH)
    if (g.is_constant() && !g.is_zero())
      throw InputError("tower: H is the unit ideal");
  for (auto& h : T.Hgens)
    if (!ideal_membership(h, T.gbJ, drl))
      throw InputError("tower: H is not contained in J");

  auto dimJ = dim_and_indep_set(leading_monomials(T.gbJ, drl), n);
  auto dimH = dim_and_indep_set(leading_monomials(T.gbH, drl), n);
  T.dimQJ = dimJ.dim;
  T.dimQH = dimH.dim;
  T.U = dimJ.indep;
  for (int v = 0; v < n; ++v)
    if (!std::binary_search(T.U.begin(), T.U.end(), v)) T.V.push_back(v);

  std::vector<std::string> unames, vnames;
  for (int u : T.U) unames.push_back(Q.vars->names[static_cast<size_t>(u)]);
  for (int v : T.V) vnames.push_back(Q.vars->names[static_cast<size_t>(v)]);
  FunctionField F{make_ring(RationalField{}, make_vartable(unames))};
  T.Q0 = make_ring(std::move(F), make_vartable(vnames));

  for (auto& h : T.Hgens) T.H0.push_back(to_q0(T, h));
  for (auto& f : T.Jgens) T.J0.push_back(to_q0(T, f));

  // J0 must be zero-dimensional (maximal, since it is prime by assumption)
  T.K = make_residue_ctx(T.Q0, T.J0);
  auto d0 = dim_and_indep_set(
      leading_monomials(T.K->gb, T.K->ord), static_cast<int>(T.V.size()));
  if (d0.dim != 0)
    throw InputError(
        "tower: fraction ideal is not zero-dimensional; J is probably not "
        "prime or U is not independent");
  return Tp;
}

}  // namespace graal
