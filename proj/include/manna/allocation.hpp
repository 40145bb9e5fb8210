#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "manna/instance.hpp"

namespace manna {

// A partition of the items into one bundle per agent. Bundles are item-index
// sets, stored sorted ascending; empty bundles are legal.
struct Allocation {
  std::vector<std::vector<int>> bundles;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

inline Allocation make_allocation(std::vector<std::vector<int>> bundles) {
  for (auto& b : bundles) std::sort(b.begin(), b.end());
  return Allocation{std::move(bundles)};
}

// Outcome of validate_allocation. Never thrown; `ok()` iff the bundles are
// pairwise disjoint and cover every item exactly once. Item indices in the
// vectors are 0-based; describe() renders them 1-based like every report.
struct AllocationCheck {
  bool bundle_count_mismatch = false;
  std::vector<int> out_of_range;
  std::vector<int> duplicated;
  std::vector<int> missing;

  bool ok() const {
    return !bundle_count_mismatch && out_of_range.empty() && duplicated.empty() && missing.empty();
  }

  std::string describe() const {
    if (ok()) return "ok";
    std::string s;
    auto join = [&s](const char* label, const std::vector<int>& items, int offset) {
      if (items.empty()) return;
      if (!s.empty()) s += "; ";
      s += label;
      for (size_t i = 0; i < items.size(); ++i) {
        s += (i == 0 ? " " : ", ") + std::to_string(items[i] + offset);
      }
    };
    if (bundle_count_mismatch) s += "bundle count does not match agent count";
    join("out-of-range index(es):", out_of_range, 0);
    join("duplicated item(s):", duplicated, 1);
    join("unallocated item(s):", missing, 1);
    return s;
  }
};

inline AllocationCheck validate_allocation(const Instance& inst, const Allocation& alloc) {
  AllocationCheck check;
  if (static_cast<int>(alloc.bundles.size()) != inst.agents()) {
    check.bundle_count_mismatch = true;
  }
  std::vector<int> seen(inst.items(), 0);
  for (const auto& bundle : alloc.bundles) {
    for (int o : bundle) {
      if (o < 0 || o >= inst.items()) {
        check.out_of_range.push_back(o);
      } else {
        ++seen[o];
      }
    }
  }
  for (int o = 0; o < inst.items(); ++o) {
    if (seen[o] == 0) check.missing.push_back(o);
    if (seen[o] > 1) check.duplicated.push_back(o);
  }
  return check;
}

inline void require_valid_allocation(const Instance& inst, const Allocation& alloc) {
  AllocationCheck check = validate_allocation(inst, alloc);
  if (!check.ok()) throw std::invalid_argument("invalid allocation: " + check.describe());
}

// Per-agent bundle utilities, in agent order.
inline std::vector<Rational> allocation_utilities(const Instance& inst, const Allocation& alloc) {
  std::vector<Rational> out(inst.agents());
  for (int a = 0; a < inst.agents() && a < static_cast<int>(alloc.bundles.size()); ++a) {
    out[a] = bundle_utility(inst, a, alloc.bundles[a]);
  }
  return out;
}

}  // namespace manna
