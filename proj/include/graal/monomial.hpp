// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "graal/error.hpp"

namespace graal {

// Exponent vector.  Length always equals the ring's variable count.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(int nvars) : e(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  static Monomial unit(int nvars) { return Monomial(nvars); }
  static Monomial var(int nvars, int idx, int exp = 1) {
    Monomial m(nvars);
    m.e[static_cast<size_t>(idx)] = exp;
    return m;
  }

  int nvars() const { return static_cast<int>(e.size()); }
  bool is_unit() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  int deg() const { return std::accumulate(e.begin(), e.end(), 0); }
  // total degree over the index range [lo, hi)
  int deg_range(int lo, int hi) const {
    int d = 0;
    for (int i = lo; i < hi; ++i) d += e[static_cast<size_t>(i)];
    return d;
  }

  bool divides(const Monomial& m) const {
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  // quotient this / m; caller guarantees divisibility
  Monomial div(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e.size(); ++i) {
      r.e[i] -= m.e[i];
      if (r.e[i] < 0) throw Error("monomial: non-exact division");
    }
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
      if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
  }

  // Internal canonical comparison (plain lexicographic on the exponent
  // vector).  This fixes term storage order; it is not a ring ordering.
  static int lex_cmp(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i) {
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
    }
    return 0;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

struct MonoLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return Monomial::lex_cmp(a, b) > 0;
  }
};

}  // namespace graal
