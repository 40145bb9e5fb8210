#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "manna/allocation.hpp"
#include "manna/instance.hpp"

namespace manna {

// Item processing order: non-increasing |M(o)| where M(o) = max_a u_a(o);
// within equal magnitudes every item with M(o) > 0 precedes every item with
// M(o) < 0; remaining ties break by ascending item index.
struct Sigma {
  std::vector<int> order;

  friend bool operator==(const Sigma&, const Sigma&) = default;
};

namespace detail {

inline std::vector<Rational> max_utilities(const Instance& inst) {
  std::vector<Rational> max_u(inst.items());
  for (int o = 0; o < inst.items(); ++o) {
    Rational best = inst.utility(0, o);
    for (int a = 1; a < inst.agents(); ++a) {
      if (inst.utility(a, o) > best) best = inst.utility(a, o);
    }
    max_u[o] = best;
  }
  return max_u;
}

}  // namespace detail

inline Sigma minimax_ordering(const Instance& inst) {
  auto max_u = detail::max_utilities(inst);
  std::vector<int> order(inst.items());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    auto mag = max_u[x].abs() <=> max_u[y].abs();
    if (mag != 0) return mag > 0;
    int rx = max_u[x].sign() > 0 ? 0 : 1;
    int ry = max_u[y].sign() > 0 ? 0 : 1;
    if (rx != ry) return rx < ry;
    return x < y;
  });
  return Sigma{std::move(order)};
}

// One allocation decision: the candidate agents considered, the chosen agent
// (ties to the lowest index), and every agent's bundle utility at the moment
// of the decision.
struct MinimaxStep {
  int item = 0;
  std::vector<int> candidates;
  int chosen = 0;
  std::vector<Rational> utilities;

  friend bool operator==(const MinimaxStep&, const MinimaxStep&) = default;
};

struct MinimaxResult {
  Allocation allocation;
  std::vector<MinimaxStep> log;
};

// Walks the items in sigma order. Mixed items and goods go to the poorest
// agent among those who like them; pure bads go to the richest agent overall;
// dummies and non-pure bads go to a zero valuer. EFX and PO on
// absolute-identical and ternary matrices; always welfare-maximal there.
inline MinimaxResult minimax_run(const Instance& inst) {
  const int n = inst.agents();
  auto max_u = detail::max_utilities(inst);
  Sigma sigma = minimax_ordering(inst);

  std::vector<std::vector<int>> bundles(n);
  std::vector<Rational> utilities(n);
  std::vector<MinimaxStep> log;
  log.reserve(inst.items());

  for (int t : sigma.order) {
    MinimaxStep step;
    step.item = t;
    step.utilities = utilities;
    int chosen = -1;
    int m_sign = max_u[t].sign();
    if (m_sign > 0) {
      for (int b = 0; b < n; ++b) {
        if (inst.utility(b, t).sign() > 0) {
          step.candidates.push_back(b);
          if (chosen < 0 || utilities[b] < utilities[chosen]) chosen = b;
        }
      }
    } else if (m_sign < 0) {
      for (int b = 0; b < n; ++b) {
        step.candidates.push_back(b);
        if (chosen < 0 || utilities[b] > utilities[chosen]) chosen = b;
      }
    } else {
      for (int b = 0; b < n; ++b) {
        if (inst.utility(b, t).is_zero()) {
          step.candidates.push_back(b);
          if (chosen < 0) chosen = b;
        }
      }
    }
    bundles[chosen].push_back(t);
    utilities[chosen] += inst.utility(chosen, t);
    step.chosen = chosen;
    log.push_back(std::move(step));
  }

  return MinimaxResult{make_allocation(std::move(bundles)), std::move(log)};
}

inline Allocation minimax_allocate(const Instance& inst) { return minimax_run(inst).allocation; }

}  // namespace manna
