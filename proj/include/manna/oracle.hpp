#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "manna/allocation.hpp"
#include "manna/instance.hpp"
#include "manna/properties.hpp"

namespace manna {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(int agents, int items, std::uint64_t budget)
      : std::runtime_error("enumeration space " + std::to_string(agents) + "^" +
                           std::to_string(items) + " exceeds budget " + std::to_string(budget)) {}
};

// n^m when it does not exceed cap, otherwise nullopt.
inline std::optional<std::uint64_t> allocation_space_size(int agents, int items,
                                                          std::uint64_t cap) {
  std::uint64_t space = 1;
  for (int i = 0; i < items; ++i) {
    if (space > cap / static_cast<std::uint64_t>(agents)) return std::nullopt;
    space *= static_cast<std::uint64_t>(agents);
    if (space > cap) return std::nullopt;
  }
  return space;
}

namespace detail {

// Walks every assignment vector (assign[o] = agent of item o) in
// lexicographic order, item 0 varying slowest. Stops when f returns false.
template <typename F>
void for_each_assignment(int agents, int items, F&& f) {
  std::vector<int> assign(items, 0);
  while (true) {
    if (!f(static_cast<const std::vector<int>&>(assign))) return;
    int pos = items - 1;
    while (pos >= 0 && assign[pos] == agents - 1) {
      assign[pos] = 0;
      --pos;
    }
    if (pos < 0) return;
    ++assign[pos];
  }
}

inline Allocation assignment_to_allocation(int agents, const std::vector<int>& assign) {
  std::vector<std::vector<int>> bundles(agents);
  for (int o = 0; o < static_cast<int>(assign.size()); ++o) bundles[assign[o]].push_back(o);
  return Allocation{std::move(bundles)};
}

}  // namespace detail

// Streams all n^m complete allocations exactly once, lexicographically over
// the assignment vector. Construction refuses when n^m exceeds the budget.
class AllocationEnumerator {
 public:
  explicit AllocationEnumerator(const Instance& inst,
                                std::uint64_t budget = kDefaultEnumerationBudget)
      : agents_(inst.agents()), items_(inst.items()) {
    auto space = allocation_space_size(agents_, items_, budget);
    if (!space) throw BudgetExceeded(agents_, items_, budget);
    space_ = *space;
    assign_.assign(items_, 0);
  }

  std::uint64_t space() const noexcept { return space_; }

  std::optional<Allocation> next() {
    if (done_) return std::nullopt;
    Allocation alloc = detail::assignment_to_allocation(agents_, assign_);
    int pos = items_ - 1;
    while (pos >= 0 && assign_[pos] == agents_ - 1) {
      assign_[pos] = 0;
      --pos;
    }
    if (pos < 0) {
      done_ = true;
    } else {
      ++assign_[pos];
    }
    return alloc;
  }

 private:
  int agents_;
  int items_;
  std::uint64_t space_ = 0;
  bool done_ = false;
  std::vector<int> assign_;
};

inline AllocationEnumerator enumerate_allocations(const Instance& inst,
                                                  std::uint64_t budget = kDefaultEnumerationBudget) {
  return AllocationEnumerator(inst, budget);
}

// Exact Pareto-optimality by exhaustion: holds iff no allocation dominates.
// The witness is the lexicographically first dominating allocation.
inline PropertyReport check_po_exact(const Instance& inst, const Allocation& alloc,
                                     std::uint64_t budget = kDefaultEnumerationBudget) {
  require_valid_allocation(inst, alloc);
  if (!allocation_space_size(inst.agents(), inst.items(), budget)) {
    throw BudgetExceeded(inst.agents(), inst.items(), budget);
  }
  const int n = inst.agents();
  std::vector<Rational> target = allocation_utilities(inst, alloc);

  std::optional<Allocation> dominating;
  detail::for_each_assignment(n, inst.items(), [&](const std::vector<int>& assign) {
    std::vector<Rational> sums(n);
    for (int o = 0; o < static_cast<int>(assign.size()); ++o) {
      sums[assign[o]] += inst.utility(assign[o], o);
    }
    bool weakly_better = true;
    bool strict = false;
    for (int a = 0; a < n && weakly_better; ++a) {
      if (sums[a] < target[a]) weakly_better = false;
      if (sums[a] > target[a]) strict = true;
    }
    if (weakly_better && strict) {
      dominating = detail::assignment_to_allocation(n, assign);
      return false;
    }
    return true;
  });

  PropertyReport report{"po_exact", !dominating, std::nullopt};
  if (dominating) report.witness = DominanceWitness{std::move(*dominating)};
  return report;
}

enum class PropertyId { Ef1, Efx, Efx0, Ef1Parts, EfxParts, PoExact, WelfareMax };

inline const char* property_name(PropertyId id) {
  switch (id) {
    case PropertyId::Ef1: return "ef1";
    case PropertyId::Efx: return "efx";
    case PropertyId::Efx0: return "efx0";
    case PropertyId::Ef1Parts: return "ef1_parts";
    case PropertyId::EfxParts: return "efx_parts";
    case PropertyId::PoExact: return "po_exact";
    case PropertyId::WelfareMax: return "welfare_max";
  }
  return "";
}

inline std::optional<PropertyId> parse_property(std::string_view name) {
  for (PropertyId id : {PropertyId::Ef1, PropertyId::Efx, PropertyId::Efx0, PropertyId::Ef1Parts,
                        PropertyId::EfxParts, PropertyId::PoExact, PropertyId::WelfareMax}) {
    if (name == property_name(id)) return id;
  }
  return std::nullopt;
}

inline PropertyReport run_property_check(const Instance& inst, const Allocation& alloc,
                                         PropertyId id,
                                         std::uint64_t budget = kDefaultEnumerationBudget) {
  switch (id) {
    case PropertyId::Ef1: return check_ef1(inst, alloc.bundles);
    case PropertyId::Efx: return check_efx(inst, alloc.bundles);
    case PropertyId::Efx0: return check_efx0(inst, alloc.bundles);
    case PropertyId::Ef1Parts: return check_ef1_parts(inst, alloc);
    case PropertyId::EfxParts: return check_efx_parts(inst, alloc);
    case PropertyId::PoExact: return check_po_exact(inst, alloc, budget);
    case PropertyId::WelfareMax: return check_welfare_maximal(inst, alloc);
  }
  throw std::invalid_argument("unknown property");
}

enum class SearchMode { Exists, Count, AllWitnesses };

struct SearchSpec {
  std::vector<PropertyId> require;
  SearchMode mode = SearchMode::Exists;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

// A "none" outcome (exists mode, no `found`) certifies nonexistence over the
// fully enumerated space.
struct SearchResult {
  SearchMode mode = SearchMode::Exists;
  std::uint64_t space = 0;
  std::uint64_t count = 0;
  std::optional<Allocation> found;
  std::vector<Allocation> matches;
};

inline SearchResult search(const Instance& inst, const SearchSpec& spec) {
  auto space = allocation_space_size(inst.agents(), inst.items(), spec.budget);
  if (!space) throw BudgetExceeded(inst.agents(), inst.items(), spec.budget);

  SearchResult result;
  result.mode = spec.mode;
  result.space = *space;

  detail::for_each_assignment(inst.agents(), inst.items(), [&](const std::vector<int>& assign) {
    Allocation alloc = detail::assignment_to_allocation(inst.agents(), assign);
    bool all_hold = true;
    for (PropertyId id : spec.require) {
      if (!run_property_check(inst, alloc, id, spec.budget).holds) {
        all_hold = false;
        break;
      }
    }
    if (!all_hold) return true;
    ++result.count;
    if (spec.mode == SearchMode::Exists) {
      result.found = std::move(alloc);
      return false;
    }
    if (spec.mode == SearchMode::AllWitnesses) result.matches.push_back(std::move(alloc));
    return true;
  });
  return result;
}

}  // namespace manna
