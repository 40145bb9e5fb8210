#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "manna/allocation.hpp"
#include "manna/instance.hpp"

namespace manna {

// Agent pick orders for the two round-robin phases. Defaults: (1,...,n) for
// the pure bads, (n,...,1) for the mixed items and goods.
struct MdrrOptions {
  std::vector<int> bad_order;
  std::vector<int> good_order;
};

// One pick in the run. `item` empty means the agent consumed the turn with a
// fake dummy (zero utility, never part of the returned allocation).
struct MdrrPick {
  int phase = 0;  // 0: dummies/non-pure bads, 1: pure bads, 2: mixed/goods
  int round = 0;  // 1-based within phases 1 and 2; 0 in phase 0
  int agent = 0;
  std::optional<int> item;

  friend bool operator==(const MdrrPick&, const MdrrPick&) = default;
};

struct MdrrResult {
  Allocation allocation;
  std::vector<MdrrPick> trace;
};

namespace detail {

inline std::vector<int> checked_order(const Instance& inst, const std::vector<int>& order,
                                      bool reversed) {
  const int n = inst.agents();
  if (order.empty()) {
    std::vector<int> def(n);
    std::iota(def.begin(), def.end(), 0);
    if (reversed) std::reverse(def.begin(), def.end());
    return def;
  }
  std::vector<char> seen(n, 0);
  for (int a : order) {
    if (a < 0 || a >= n || seen[a]) throw std::invalid_argument("agent order must be a permutation");
    seen[a] = 1;
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("agent order must be a permutation");
  }
  return order;
}

// Items sorted by the agent's preference: utility descending, index ascending.
inline std::vector<std::vector<int>> preference_lists(const Instance& inst,
                                                      const std::vector<int>& pool) {
  std::vector<std::vector<int>> prefs(inst.agents(), pool);
  for (int a = 0; a < inst.agents(); ++a) {
    std::sort(prefs[a].begin(), prefs[a].end(), [&](int x, int y) {
      auto cmp = inst.utility(a, x) <=> inst.utility(a, y);
      if (cmp != 0) return cmp > 0;
      return x < y;
    });
  }
  return prefs;
}

}  // namespace detail

// Modified double round-robin. Dummies and non-pure bads go first to zero
// valuers; the pure bads are padded with fake dummies to a multiple of n and
// picked round-robin in bad_order; the mixed items and goods are picked in
// good_order, an agent skipping (fake pick) once nothing of positive value
// remains for them. Output is envy-free by parts up to some item, and also
// welfare-maximal on absolute-identical and ternary matrices.
inline MdrrResult mdrr_run(const Instance& inst, const MdrrOptions& options = {}) {
  const int n = inst.agents();
  const int m = inst.items();
  const std::vector<int> bad_order = detail::checked_order(inst, options.bad_order, false);
  const std::vector<int> good_order = detail::checked_order(inst, options.good_order, true);

  std::vector<std::vector<int>> bundles(n);
  std::vector<MdrrPick> trace;

  std::vector<int> pure_bads;
  std::vector<int> positives;
  for (int o = 0; o < m; ++o) {
    int positive = 0;
    int zero = 0;
    for (int a = 0; a < n; ++a) {
      int s = inst.utility(a, o).sign();
      positive += (s > 0);
      zero += (s == 0);
    }
    if (positive > 0) {
      positives.push_back(o);
    } else if (zero > 0) {
      // Phase 0: dummy or non-pure bad; lowest-index zero valuer takes it.
      for (int a = 0; a < n; ++a) {
        if (inst.utility(a, o).is_zero()) {
          bundles[a].push_back(o);
          trace.push_back({0, 0, a, o});
          break;
        }
      }
    } else {
      pure_bads.push_back(o);
    }
  }

  // Phase 1: pure bads padded to q*n with fakes. Fakes (utility 0) beat every
  // pure bad, so they are consumed by the first p picks.
  const int q = (static_cast<int>(pure_bads.size()) + n - 1) / n;
  int fakes = q * n - static_cast<int>(pure_bads.size());
  {
    auto prefs = detail::preference_lists(inst, pure_bads);
    std::vector<char> taken(m, 0);
    std::vector<size_t> cursor(n, 0);
    for (int round = 1; round <= q; ++round) {
      for (int a : bad_order) {
        if (fakes > 0) {
          --fakes;
          trace.push_back({1, round, a, std::nullopt});
          continue;
        }
        auto& pos = cursor[a];
        while (taken[prefs[a][pos]]) ++pos;
        int item = prefs[a][pos];
        taken[item] = 1;
        bundles[a].push_back(item);
        trace.push_back({1, round, a, item});
      }
    }
  }

  // Phase 2: mixed items and goods, reversed order, skip when nothing of
  // strictly positive value remains.
  {
    auto prefs = detail::preference_lists(inst, positives);
    std::vector<char> taken(m, 0);
    std::vector<size_t> cursor(n, 0);
    int remaining = static_cast<int>(positives.size());
    for (int round = 1; remaining > 0; ++round) {
      for (int a : good_order) {
        if (remaining == 0) break;
        auto& pos = cursor[a];
        while (pos < prefs[a].size() && taken[prefs[a][pos]]) ++pos;
        if (pos < prefs[a].size() && inst.utility(a, prefs[a][pos]).sign() > 0) {
          int item = prefs[a][pos];
          taken[item] = 1;
          --remaining;
          bundles[a].push_back(item);
          trace.push_back({2, round, a, item});
        } else {
          trace.push_back({2, round, a, std::nullopt});
        }
      }
    }
  }

  return MdrrResult{make_allocation(std::move(bundles)), std::move(trace)};
}

inline Allocation mdrr_allocate(const Instance& inst, const MdrrOptions& options = {}) {
  return mdrr_run(inst, options).allocation;
}

inline std::vector<MdrrPick> mdrr_phase_trace(const Instance& inst,
                                              const MdrrOptions& options = {}) {
  return mdrr_run(inst, options).trace;
}

}  // namespace manna
