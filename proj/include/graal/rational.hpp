// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <random>
#include <string>

#include "graal/error.hpp"

namespace graal {

// mpq_class keeps gcd(num, den) = 1 and den > 0 by canonicalization, which
// is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

struct RationalField {
  using Elem = Rational;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long n) const { return Elem(n); }

  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw Error("rational: division by zero");
    return Elem(1) / a;
  }

  bool is_zero(const Elem& a) const { return a == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool same(const RationalField&) const { return true; }

  std::string str(const Elem& a) const { return a.get_str(); }
};

// Deterministic integer draws.  std::uniform_int_distribution is
// implementation-defined, so anything frozen into tests goes through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  // uniform on [lo, hi], both inclusive
  long uniform(long lo, long hi) {
    auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(eng_() % span);
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace graal
