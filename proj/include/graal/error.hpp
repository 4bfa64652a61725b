// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace graal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed problem files, H not contained in J, a tower
// whose fraction ring fails the zero-dimensionality check, and so on.
// The CLI maps this to exit code 1.
struct InputError : Error {
  using Error::Error;
};

// An internal consistency replay failed (standard basis s-pair did not
// reduce to zero, a normal-form identity broke, ...).  Exit code 2.
struct VerifyError : Error {
  using Error::Error;
};

// Expensive self-checks are gated behind GRAAL_VERIFY=1.  Cheap structural
// checks run unconditionally.
inline bool& verify_flag() {
  static bool on = [] {
    const char* v = std::getenv("GRAAL_VERIFY");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
  }();
  return on;
}

inline bool verify_enabled() { return verify_flag(); }
inline void set_verify(bool b) { verify_flag() = b; }

inline void check(bool cond, const std::string& msg) {
  if (!cond) throw VerifyError(msg);
}

}  // namespace graal
