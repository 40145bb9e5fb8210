#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "manna/allocation.hpp"
#include "manna/instance.hpp"

namespace manna {

// Envy checkers operate on a family of n pairwise-disjoint bundles. The
// family need not cover all items: the by-parts views are partial.
using BundleFamily = std::vector<std::vector<int>>;

enum class Part { All, Plus, Minus };
enum class BundleSide { Own, Envied };

struct EnvyWitness {
  int envious = 0;
  int envied = 0;
  std::optional<Part> part;        // by-parts checks: which view failed
  std::optional<int> item;         // EFX/EFX0: the blocking item
  std::optional<BundleSide> side;  // EFX/EFX0: bundle holding the blocking item

  friend bool operator==(const EnvyWitness&, const EnvyWitness&) = default;
};

struct WelfareWitness {
  int item = 0;
  int holder = 0;
  int better_agent = 0;

  friend bool operator==(const WelfareWitness&, const WelfareWitness&) = default;
};

struct DominanceWitness {
  Allocation dominating;

  friend bool operator==(const DominanceWitness&, const DominanceWitness&) = default;
};

using Witness = std::variant<EnvyWitness, WelfareWitness, DominanceWitness>;

// Verdict of one property check. A false verdict always carries a witness
// that reconfirms the violation when replayed against the raw definition.
struct PropertyReport {
  std::string property;
  bool holds = false;
  std::optional<Witness> witness;

  friend bool operator==(const PropertyReport&, const PropertyReport&) = default;
};

// The positive/negative parts of each bundle, split by the owner's utility
// sign; zero-valued items appear in neither part.
struct PartsView {
  BundleFamily plus;
  BundleFamily minus;
};

inline PartsView split_parts(const Instance& inst, const Allocation& alloc) {
  require_valid_allocation(inst, alloc);
  PartsView view;
  view.plus.resize(inst.agents());
  view.minus.resize(inst.agents());
  for (int a = 0; a < inst.agents(); ++a) {
    for (int o : alloc.bundles[a]) {
      int s = inst.utility(a, o).sign();
      if (s > 0) view.plus[a].push_back(o);
      if (s < 0) view.minus[a].push_back(o);
    }
  }
  return view;
}

namespace detail {

inline void require_disjoint_family(const Instance& inst, const BundleFamily& bundles) {
  if (static_cast<int>(bundles.size()) != inst.agents()) {
    throw std::invalid_argument("bundle family must have one bundle per agent");
  }
  std::vector<char> seen(inst.items(), 0);
  for (const auto& bundle : bundles) {
    for (int o : bundle) {
      if (o < 0 || o >= inst.items()) throw std::out_of_range("item index out of range");
      if (seen[o]) throw std::invalid_argument("bundles overlap on item " + std::to_string(o));
      seen[o] = 1;
    }
  }
}

// values[a][b] = u_a(bundles[b])
inline std::vector<std::vector<Rational>> cross_values(const Instance& inst,
                                                       const BundleFamily& bundles) {
  const int n = inst.agents();
  std::vector<std::vector<Rational>> values(n, std::vector<Rational>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Rational sum;
      for (int o : bundles[b]) sum += inst.utility(a, o);
      values[a][b] = sum;
    }
  }
  return values;
}

struct PairContext {
  const Instance& inst;
  const BundleFamily& bundles;
  const std::vector<std::vector<Rational>>& values;
};

// EF1 for the ordered pair (a, b): a does not envy b, or removing some single
// item from either bundle eliminates the envy.
inline bool ef1_pair(const PairContext& ctx, int a, int b) {
  const Rational& own = ctx.values[a][a];
  const Rational& other = ctx.values[a][b];
  if (own >= other) return true;
  // Scan both bundles even though zero-valued removals cannot help.
  for (int o : ctx.bundles[a]) {
    if (own - ctx.inst.utility(a, o) >= other) return true;
  }
  for (int o : ctx.bundles[b]) {
    if (own >= other - ctx.inst.utility(a, o)) return true;
  }
  return false;
}

struct EfxViolation {
  int item;
  BundleSide side;
};

// EFX for (a, b), with the marginal conditions reduced to sign tests (valid
// under additivity): removing any bad from a's bundle, or any good (as valued
// by a) from b's bundle, must leave a envy-free of b. `strict` distinguishes
// EFX (non-zero valued items only) from EFX0 (zero-valued items included).
inline std::optional<EfxViolation> efx_pair(const PairContext& ctx, int a, int b, bool strict) {
  const Rational& own = ctx.values[a][a];
  const Rational& other = ctx.values[a][b];
  for (int o : ctx.bundles[a]) {
    const Rational& u = ctx.inst.utility(a, o);
    bool applies = strict ? u.sign() < 0 : u.sign() <= 0;
    if (applies && own - u < other) return EfxViolation{o, BundleSide::Own};
  }
  for (int o : ctx.bundles[b]) {
    const Rational& u = ctx.inst.utility(a, o);
    bool applies = strict ? u.sign() > 0 : u.sign() >= 0;
    if (applies && own < other - u) return EfxViolation{o, BundleSide::Envied};
  }
  return std::nullopt;
}

enum class EnvyKind { Ef1, Efx, Efx0 };

inline const char* kind_name(EnvyKind kind) {
  switch (kind) {
    case EnvyKind::Ef1: return "ef1";
    case EnvyKind::Efx: return "efx";
    case EnvyKind::Efx0: return "efx0";
  }
  return "";
}

// First violation in lexicographic (a, b) order, or nullopt.
inline std::optional<EnvyWitness> first_violation(const PairContext& ctx, EnvyKind kind) {
  const int n = ctx.inst.agents();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (kind == EnvyKind::Ef1) {
        if (!ef1_pair(ctx, a, b)) return EnvyWitness{a, b, {}, {}, {}};
      } else {
        auto v = efx_pair(ctx, a, b, kind == EnvyKind::Efx);
        if (v) return EnvyWitness{a, b, std::nullopt, v->item, v->side};
      }
    }
  }
  return std::nullopt;
}

inline PropertyReport check_envy(const Instance& inst, const BundleFamily& bundles,
                                 EnvyKind kind) {
  require_disjoint_family(inst, bundles);
  auto values = cross_values(inst, bundles);
  PairContext ctx{inst, bundles, values};
  auto witness = first_violation(ctx, kind);
  PropertyReport report{kind_name(kind), !witness, std::nullopt};
  if (witness) report.witness = *witness;
  return report;
}

// By-parts check: the property must hold on the whole allocation and on both
// parts views. First witness in lexicographic (a, b, part) order.
inline PropertyReport check_envy_parts(const Instance& inst, const Allocation& alloc,
                                       EnvyKind kind) {
  require_valid_allocation(inst, alloc);
  Allocation whole = make_allocation(alloc.bundles);
  PartsView parts = split_parts(inst, whole);
  const std::array<const BundleFamily*, 3> views{&whole.bundles, &parts.plus, &parts.minus};
  const std::array<Part, 3> part_tags{Part::All, Part::Plus, Part::Minus};

  std::array<std::vector<std::vector<Rational>>, 3> values;
  for (int v = 0; v < 3; ++v) values[v] = cross_values(inst, *views[v]);

  const int n = inst.agents();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int v = 0; v < 3; ++v) {
        PairContext ctx{inst, *views[v], values[v]};
        std::optional<EnvyWitness> witness;
        if (kind == EnvyKind::Ef1) {
          if (!ef1_pair(ctx, a, b)) witness = EnvyWitness{a, b, {}, {}, {}};
        } else {
          auto viol = efx_pair(ctx, a, b, kind == EnvyKind::Efx);
          if (viol) witness = EnvyWitness{a, b, std::nullopt, viol->item, viol->side};
        }
        if (witness) {
          witness->part = part_tags[v];
          std::string name = std::string(kind_name(kind)) + "_parts";
          return PropertyReport{name, false, *witness};
        }
      }
    }
  }
  return PropertyReport{std::string(kind_name(kind)) + "_parts", true, std::nullopt};
}

}  // namespace detail

inline PropertyReport check_ef1(const Instance& inst, const BundleFamily& bundles) {
  return detail::check_envy(inst, bundles, detail::EnvyKind::Ef1);
}

inline PropertyReport check_efx(const Instance& inst, const BundleFamily& bundles) {
  return detail::check_envy(inst, bundles, detail::EnvyKind::Efx);
}

inline PropertyReport check_efx0(const Instance& inst, const BundleFamily& bundles) {
  return detail::check_envy(inst, bundles, detail::EnvyKind::Efx0);
}

inline PropertyReport check_ef1_parts(const Instance& inst, const Allocation& alloc) {
  return detail::check_envy_parts(inst, alloc, detail::EnvyKind::Ef1);
}

inline PropertyReport check_efx_parts(const Instance& inst, const Allocation& alloc) {
  return detail::check_envy_parts(inst, alloc, detail::EnvyKind::Efx);
}

// True iff b Pareto-improves a: nobody worse off, somebody strictly better.
inline bool pareto_dominates(const Instance& inst, const Allocation& b, const Allocation& a) {
  require_valid_allocation(inst, b);
  require_valid_allocation(inst, a);
  bool strict = false;
  for (int agent = 0; agent < inst.agents(); ++agent) {
    Rational ub = bundle_utility(inst, agent, b.bundles[agent]);
    Rational ua = bundle_utility(inst, agent, a.bundles[agent]);
    if (ub < ua) return false;
    if (ub > ua) strict = true;
  }
  return strict;
}

// Holds iff every item goes to an agent attaining its maximum utility. This
// maximizes the utilitarian welfare, so it is sufficient (not necessary) for
// Pareto-optimality under additive utilities.
inline PropertyReport check_welfare_maximal(const Instance& inst, const Allocation& alloc) {
  require_valid_allocation(inst, alloc);
  std::vector<int> holder(inst.items(), -1);
  for (int a = 0; a < inst.agents(); ++a) {
    for (int o : alloc.bundles[a]) holder[o] = a;
  }
  for (int o = 0; o < inst.items(); ++o) {
    int best = 0;
    for (int a = 1; a < inst.agents(); ++a) {
      if (inst.utility(a, o) > inst.utility(best, o)) best = a;
    }
    if (inst.utility(holder[o], o) < inst.utility(best, o)) {
      return PropertyReport{"welfare_max", false, WelfareWitness{o, holder[o], best}};
    }
  }
  return PropertyReport{"welfare_max", true, std::nullopt};
}

}  // namespace manna
