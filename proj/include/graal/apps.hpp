// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <vector>

#include "graal/lifting.hpp"

namespace graal {

inline int local_dim(const GradedPresentation& gp) {
  auto L = leading_monomials(gp.I_in_gb, gp.kord);
  return dim_and_indep_set(L, gp.P->s()).dim;
}

inline int linear_count(const GradedPresentation& gp) {
  int lin = 0;
  for (auto& g : gp.I_in_gb)
    if (g.total_degree() == 1) ++lin;
  return lin;
}

// the presentation ideal is generated by linear forms iff the embedding
// dimension s - lin agrees with the Krull dimension
inline bool is_regular(const GradedPresentation& gp) {
  int lin = linear_count(gp);
  bool all_linear = lin == static_cast<int>(gp.I_in_gb.size());
  bool dims_match = local_dim(gp) == gp.P->s() - lin;
  check(all_linear == dims_match, "regularity cross-check failed");
  return all_linear;
}

struct SopResult {
  std::vector<std::vector<long>> coeff_matrix;  // d rows, s columns
  std::vector<QPoly> elements;                  // a_i = sum_j c_ij f_j in Q
  bool regular = false;
  int attempts = 0;
};

inline SopResult system_of_parameters(const GradedPresentation& gp,
                                      std::uint64_t seed,
                                      bool want_regular = false) {
  if (want_regular && !is_regular(gp))
    throw InputError(
        "system_of_parameters: regular system requested but the ring is not "
        "regular");
  const ResidueField& K = gp.KY.F();
  int d = local_dim(gp);
  int s = gp.P->s();
  SopResult out;

  if (d == 0) {
    out.attempts = 1;
    out.regular = true;
    for (int j = 0; j < s; ++j)
      if (!ideal_membership(RsPoly::variable(gp.KY, j), gp.I_in_gb, gp.kord))
        out.regular = false;
    return out;
  }

  Rng rng(seed);
  long B = 2;
  SBOpts opts;
  opts.reduce = false;
  for (int attempt = 1; attempt <= 8; ++attempt, B *= 2) {
    std::vector<std::vector<long>> c;
    std::vector<RsPoly> lambdas;
    for (int i = 0; i < d; ++i) {
      std::vector<long> row;
      RsPoly lam = RsPoly::zero(gp.KY);
      for (int j = 0; j < s; ++j) {
        long cij = rng.uniform(-B, B);
        row.push_back(cij);
        if (cij != 0)
          lam = lam + RsPoly::term(gp.KY, Monomial::var(s, j),
                                   K.from_int(cij));
      }
      c.push_back(std::move(row));
      lambdas.push_back(std::move(lam));
    }

    std::vector<RsPoly> gens = gp.I_in_gb;
    bool degenerate = false;
    for (auto& lam : lambdas) {
      if (lam.is_zero()) degenerate = true;
      gens.push_back(lam);
    }
    if (degenerate) continue;

    auto basis = std_basis(gens, gp.kord, opts).basis;
    auto L = leading_monomials(basis, gp.kord);
    if (dim_and_indep_set(L, s).dim != 0) continue;

    bool regular_flag = true;
    for (int j = 0; j < s && regular_flag; ++j)
      if (!ideal_membership(RsPoly::variable(gp.KY, j), basis, gp.kord))
        regular_flag = false;
    if (want_regular && !regular_flag) continue;

    out.coeff_matrix = std::move(c);
    out.regular = regular_flag;
    out.attempts = attempt;
    const RingTower& T = *gp.P->T;
    for (int i = 0; i < d; ++i) {
      QPoly a = QPoly::zero(T.Q);
      for (int j = 0; j < s; ++j)
        a = a + T.Jgens[static_cast<size_t>(j)].scaled(
                    Rational(out.coeff_matrix[static_cast<size_t>(i)]
                                             [static_cast<size_t>(j)]));
      out.elements.push_back(std::move(a));
    }
    return out;
  }
  throw Error("system_of_parameters: retry budget exhausted");
}

namespace detail {

// power-basis coefficients of binom(x + shift, k)
inline std::vector<Rational> binom_poly(int shift, int k) {
  std::vector<Rational> c{Rational(1)};
  for (int i = 0; i < k; ++i) {
    std::vector<Rational> n(c.size() + 1, Rational(0));
    Rational a(shift - i);
    for (size_t j = 0; j < c.size(); ++j) {
      n[j + 1] += c[j];
      n[j] += c[j] * a;
    }
    c = std::move(n);
  }
  Integer fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  for (auto& x : c) x /= Rational(fact);
  return c;
}

}  // namespace detail

struct HilbertData {
  HilbertSeriesData series;
  std::vector<Integer> a_coeffs;  // length s, zero beyond degree d-1
  Integer constant_c;
  int threshold_l = 1;
  int degree_d = 0;
  std::vector<Integer> hs_values;  // HilbS(0), ..., HilbS(l+6)
};

inline Integer hilbert_samuel_value(const HilbertData& h, long n) {
  Integer v = h.constant_c;
  for (size_t nu = 0; nu < h.a_coeffs.size(); ++nu)
    v += h.a_coeffs[nu] * binom_z(n, static_cast<long>(nu) + 1);
  return v;
}

inline HilbertData hilbert_samuel(const GradedPresentation& gp,
                                  const std::vector<QPoly>& Igens) {
  int s = gp.P->s();
  auto init = initial_ideal(gp, Igens);
  auto L = leading_monomials(init.gb, gp.kord);
  HilbertData out;
  out.series = hilbert_series(L, s);
  int d = out.series.dimension;
  out.degree_d = d;

  // Hilbert polynomial in the power basis, degree d-1
  std::vector<Rational> Pp(static_cast<size_t>(std::max(d, 1)), Rational(0));
  if (d > 0) {
    for (size_t j = 0; j < out.series.second_num.size(); ++j) {
      if (out.series.second_num[j] == 0) continue;
      auto b = detail::binom_poly(d - 1 - static_cast<int>(j), d - 1);
      for (size_t t = 0; t < b.size(); ++t)
        Pp[t] += b[t] * Rational(out.series.second_num[j]);
    }
  }

  out.a_coeffs.assign(static_cast<size_t>(s), Integer(0));
  for (int nu = d - 1; nu >= 0; --nu) {
    Rational lead = Pp[static_cast<size_t>(nu)];
    Integer fact = 1;
    for (int i = 2; i <= nu; ++i) fact *= i;
    Rational anu = lead * Rational(fact);
    check(anu.get_den() == 1,
          "hilbert_samuel: binomial-basis coefficient is not an integer");
    if (nu < s) out.a_coeffs[static_cast<size_t>(nu)] = anu.get_num();
    auto b = detail::binom_poly(0, nu);
    for (size_t t = 0; t < b.size(); ++t) Pp[t] -= b[t] * anu;
  }
  for (auto& x : Pp)
    check(x == 0, "hilbert_samuel: polynomial extraction left a remainder");

  int deg2 = -1;
  for (size_t j = 0; j < out.series.second_num.size(); ++j)
    if (out.series.second_num[j] != 0) deg2 = static_cast<int>(j);
  int l = std::max(d, 1);
  // the Hilbert function agrees with its polynomial from deg2 - d + 1 on;
  // bump the threshold when that exceeds the default
  l = std::max(l, deg2 - d + 1);
  out.threshold_l = l;

  Integer hs = 0;
  out.hs_values.push_back(hs);
  for (long n = 1; n <= l + 6; ++n) {
    hs += hilbert_value(out.series, n - 1);
    out.hs_values.push_back(hs);
  }
  out.constant_c = out.hs_values[static_cast<size_t>(l)];
  for (size_t nu = 0; nu < out.a_coeffs.size(); ++nu)
    out.constant_c -=
        out.a_coeffs[nu] * binom_z(l, static_cast<long>(nu) + 1);

  for (long n = l; n <= l + 5; ++n)
    check(hilbert_samuel_value(out, n) == out.hs_values[static_cast<size_t>(n)],
          "hilbert_samuel: window check failed");
  return out;
}

}  // namespace graal
