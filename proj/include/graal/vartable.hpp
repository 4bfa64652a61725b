// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graal/error.hpp"

namespace graal {

// Variable table shared by all polynomials of a ring.  Variables with index
// >= first_adjoined form the adjoined block (the Y-block carrying weight -1
// in the mixed ordering); for a plain polynomial ring first_adjoined == n.
struct VarTable {
  std::vector<std::string> names;
  int first_adjoined;

  int size() const { return static_cast<int>(names.size()); }
  int adjoined_count() const { return size() - first_adjoined; }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names[i] == name) return i;
    return -1;
  }
};

using VarTablePtr = std::shared_ptr<const VarTable>;

inline VarTablePtr make_vartable(std::vector<std::string> names,
                                 int first_adjoined = -1) {
  auto n = static_cast<int>(names.size());
  if (first_adjoined < 0) first_adjoined = n;
  if (first_adjoined > n) throw Error("vartable: bad adjoined block");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (names[i] == names[j])
        throw InputError("vartable: duplicate variable " + names[i]);
  return std::make_shared<VarTable>(VarTable{std::move(names), first_adjoined});
}

inline bool same_table(const VarTablePtr& a, const VarTablePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->names == b->names && a->first_adjoined == b->first_adjoined;
}

}  // namespace graal
