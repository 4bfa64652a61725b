// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graal/tower.hpp"

namespace graal {

// K presented as k(U)[T]/<minpoly> via a random linear coordinate change
// that puts J0 into shape position under lex.
struct CompressedField {
  Ring<FunctionField> tring;  // univariate ring k(U)[T]
  FnPoly minpoly;             // monic generator g(T)
  // image of each original V-variable in k(U)[T], in V order
  std::vector<FnPoly> coordinate_images;
  std::shared_ptr<const ResidueFieldCtx> ctx;  // arithmetic mod minpoly
  std::vector<Rational> lambda;                // T = sum lambda_i * v_i
  int degree = 0;
  int attempts = 0;
};

inline int residue_degree_over_base(const RingTower& T) {
  auto L = leading_monomials(T.K->gb, T.K->ord);
  auto hs = hilbert_series(L, static_cast<int>(T.V.size()));
  Integer total = 0;
  for (auto& c : hs.second_num) total += c;
  return static_cast<int>(total.get_si());
}

inline CompressedField compress_residue_field(const RingTower& T,
                                              std::uint64_t seed) {
  const FunctionField& F = T.Q0.F();
  int n = static_cast<int>(T.V.size());
  auto field = T.Q0.field;

  CompressedField out;
  out.tring = Ring<FunctionField>{field, make_vartable({"T"})};
  Ordering tlex = lex_order(out.tring.vars);

  if (n == 0) {
    out.minpoly = FnPoly::variable(out.tring, 0);
    out.degree = 1;
    out.ctx = make_residue_ctx(out.tring, {out.minpoly});
    out.attempts = 1;
    return out;
  }

  std::vector<std::string> tnames;
  for (int i = 1; i < n; ++i) tnames.push_back("T" + std::to_string(i));
  tnames.push_back("T");
  Ring<FunctionField> RT{field, make_vartable(tnames)};
  Ordering rlex = lex_order(RT.vars);

  Rng rng(seed);
  long B = 3;
  const int budget = 12;
  for (int attempt = 1; attempt <= budget; ++attempt, B *= 2) {
    std::vector<Rational> lam;
    for (int i = 0; i < n; ++i) lam.push_back(Rational(rng.uniform(-B, B)));
    if (lam.back() == 0) lam.back() = 1;

    // v_i -> T_i for i < n-1, v_{n-1} -> (T - sum lambda_i T_i) / lambda_{n-1}
    std::vector<FnPoly> sub;
    for (int i = 0; i + 1 < n; ++i) sub.push_back(FnPoly::variable(RT, i));
    FnPoly last = FnPoly::variable(RT, n - 1);
    for (int i = 0; i + 1 < n; ++i)
      last = last - sub[static_cast<size_t>(i)].scaled(
                        F.from_poly(QPoly::constant(F.uring, lam[i])));
    last = last.scaled(RatFunc{QPoly::one(F.uring),
                               QPoly::constant(F.uring, lam.back())});
    sub.push_back(last);

    std::vector<FnPoly> tgens;
    for (auto& g : T.K->gb)
      tgens.push_back(map_poly(g, RT, sub, [](const RatFunc& c) { return c; }));
    SBOpts opts;
    opts.reduce = true;
    auto gb = std_basis(tgens, rlex, opts).basis;

    if (static_cast<int>(gb.size()) != n) continue;
    std::vector<FnPoly> timg(static_cast<size_t>(n - 1));
    std::vector<bool> seen(static_cast<size_t>(n - 1), false);
    FnPoly g_univ;
    bool g_found = false, ok = true;
    for (auto& b : gb) {
      bool tonly = true;
      for (int j = 0; j + 1 < n; ++j)
        if (deg_in(b, j) > 0) tonly = false;
      if (tonly) {
        if (g_found) ok = false;
        g_univ = b;
        g_found = true;
        continue;
      }
      Monomial lm = lead_monomial(b, rlex);
      int which = -1;
      for (int j = 0; j + 1 < n; ++j)
        if (lm == Monomial::var(n, j)) which = j;
      if (which < 0 || seen[static_cast<size_t>(which)]) {
        ok = false;
        break;
      }
      FnPoly tail = FnPoly::variable(RT, which) - b;
      for (int j = 0; j + 1 < n; ++j)
        if (deg_in(tail, j) > 0) ok = false;
      timg[static_cast<size_t>(which)] = tail;
      seen[static_cast<size_t>(which)] = true;
    }
    if (!ok || !g_found) continue;
    for (bool s : seen)
      if (!s) ok = false;
    if (!ok) continue;

    std::vector<FnPoly> to_t(static_cast<size_t>(n), FnPoly::zero(out.tring));
    to_t.back() = FnPoly::variable(out.tring, 0);
    out.minpoly =
        map_poly(g_univ, out.tring, to_t, [](const RatFunc& c) { return c; });
    out.coordinate_images.clear();
    for (int i = 0; i + 1 < n; ++i)
      out.coordinate_images.push_back(map_poly(
          timg[static_cast<size_t>(i)], out.tring, to_t,
          [](const RatFunc& c) { return c; }));
    FnPoly vlast = FnPoly::variable(out.tring, 0);
    for (int i = 0; i + 1 < n; ++i)
      vlast = vlast - out.coordinate_images[static_cast<size_t>(i)].scaled(
                          F.from_poly(QPoly::constant(F.uring, lam[i])));
    vlast = vlast.scaled(RatFunc{QPoly::one(F.uring),
                                 QPoly::constant(F.uring, lam.back())});
    out.coordinate_images.push_back(vlast);

    out.lambda = lam;
    out.degree = deg_in(out.minpoly, 0);
    out.attempts = attempt;

    for (auto& g : T.K->gb) {
      FnPoly img = map_poly(g, out.tring, out.coordinate_images,
                            [](const RatFunc& c) { return c; });
      if (!full_nf(img, {out.minpoly}, tlex, false).remainder.is_zero())
        throw VerifyError(
            "compression: coordinate images do not satisfy the relations of "
            "J0");
    }
    int sigma = residue_degree_over_base(T);
    if (out.degree != sigma)
      throw VerifyError("compression: minimal polynomial degree " +
                        std::to_string(out.degree) +
                        " does not match the residue degree " +
                        std::to_string(sigma));
    out.ctx = make_residue_ctx(out.tring, {out.minpoly});
    return out;
  }
  throw Error(
      "compression: no shape position found; J0 may not be radical, or "
      "increase the retry budget");
}

}  // namespace graal
