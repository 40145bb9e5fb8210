// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion pins its own tolerances and time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "manna/manna.hpp"

using namespace manna;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string label;
  double limit_ms;
  std::function<bool(std::string&)> run;
};

const Instance& fixture(const char* name) { return find_fixture(name)->instance; }

Instance seeded_instance(Domain domain, int agents, int items, std::uint64_t seed,
                         Rational alpha = Rational(1), Rational beta = Rational(1)) {
  GeneratorConfig config;
  config.domain = domain;
  config.agents = agents;
  config.items = items;
  config.seed = seed;
  if (domain == Domain::Ternary) {
    config.alpha = alpha;
    config.beta = beta;
  }
  return generate_instance(config);
}

Allocation seeded_allocation(std::mt19937_64& rng, int agents, int items) {
  std::vector<std::vector<int>> bundles(agents);
  for (int o = 0; o < items; ++o) bundles[rng() % agents].push_back(o);
  return make_allocation(std::move(bundles));
}

bool criterion1(std::string& detail) {
  const Instance& example1 = fixture("example1");

  PropertyReport po = check_po_exact(example1, make_allocation({{1}, {0}}));
  if (po.holds) {
    detail = "swapped-bads allocation was reported Pareto-optimal";
    return false;
  }
  const auto* witness = std::get_if<DominanceWitness>(&*po.witness);
  if (!witness || witness->dominating != make_allocation({{0}, {1}})) {
    detail = "dominating witness is not the swapped allocation";
    return false;
  }

  Allocation mdrr = mdrr_allocate(example1);
  if (!check_ef1_parts(example1, mdrr).holds) {
    detail = "mdrr output violates ef1_parts";
    return false;
  }
  if (!check_po_exact(example1, mdrr).holds) {
    detail = "mdrr output is not Pareto-optimal";
    return false;
  }
  return true;
}

bool criterion2(std::string& detail) {
  const Instance& prop1 = fixture("prop1");
  int efx_parts_count = 0;
  int efx_count = 0;
  int total = 0;
  AllocationEnumerator stream(prop1);
  while (auto alloc = stream.next()) {
    ++total;
    efx_parts_count += check_efx_parts(prop1, *alloc).holds;
    efx_count += check_efx(prop1, alloc->bundles).holds;
  }
  if (total != 8) {
    detail = "expected 8 allocations, saw " + std::to_string(total);
    return false;
  }
  if (efx_parts_count != 0) {
    detail = std::to_string(efx_parts_count) + " allocations satisfied efx_parts";
    return false;
  }
  if (efx_count < 1 || !check_efx(prop1, {{0, 1, 2}, {}}).holds) {
    detail = "the all-to-agent-1 allocation must satisfy efx";
    return false;
  }
  detail = "0/8 efx_parts, " + std::to_string(efx_count) + "/8 efx";
  return true;
}

bool criterion3(std::string& detail) {
  const Instance& prop2 = fixture("prop2");
  int efx0_count = 0;
  int efx_count = 0;
  int total = 0;
  AllocationEnumerator stream(prop2);
  while (auto alloc = stream.next()) {
    ++total;
    efx0_count += check_efx0(prop2, alloc->bundles).holds;
    efx_count += check_efx(prop2, alloc->bundles).holds;
  }
  if (total != 4 || efx0_count != 0 || efx_count < 1) {
    detail = "space " + std::to_string(total) + ", efx0 " + std::to_string(efx0_count) +
             ", efx " + std::to_string(efx_count);
    return false;
  }
  detail = "0/4 efx0, " + std::to_string(efx_count) + "/4 efx";
  return true;
}

bool criterion4(std::string& detail) {
  for (int i = 0; i < 1000; ++i) {
    GeneratorConfig config;
    config.domain = Domain::General;
    config.agents = 2 + i % 3;
    config.items = 1 + i % 8;
    config.value_range = 5;
    config.seed = 40000 + static_cast<std::uint64_t>(i);
    Instance inst = generate_instance(config);
    if (!check_ef1_parts(inst, mdrr_allocate(inst)).holds) {
      detail = "ef1_parts violated at seed " + std::to_string(config.seed);
      return false;
    }
  }
  detail = "1000/1000 general instances";
  return true;
}

bool criterion5(std::string& detail) {
  for (int i = 0; i < 500; ++i) {
    Instance inst = seeded_instance(Domain::AbsoluteIdentical, 2 + i % 2, 1 + i % 7,
                                    50000 + static_cast<std::uint64_t>(i));
    Allocation mdrr = mdrr_allocate(inst);
    if (!check_ef1_parts(inst, mdrr).holds || !check_welfare_maximal(inst, mdrr).holds ||
        !check_po_exact(inst, mdrr).holds) {
      detail = "mdrr guarantee failed at index " + std::to_string(i);
      return false;
    }
    Allocation minimax = minimax_allocate(inst);
    if (!check_efx(inst, minimax.bundles).holds || !check_welfare_maximal(inst, minimax).holds ||
        !check_po_exact(inst, minimax).holds) {
      detail = "minimax guarantee failed at index " + std::to_string(i);
      return false;
    }
  }
  detail = "500/500 absolute-identical instances";
  return true;
}

bool criterion6(std::string& detail) {
  const std::vector<std::pair<Rational, Rational>> magnitudes{
      {Rational(1), Rational(2)}, {Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  for (size_t pair = 0; pair < magnitudes.size(); ++pair) {
    for (int i = 0; i < 500; ++i) {
      Instance inst = seeded_instance(Domain::Ternary, 2 + i % 2, 1 + i % 7,
                                      60000 + pair * 1000 + static_cast<std::uint64_t>(i),
                                      magnitudes[pair].first, magnitudes[pair].second);
      Allocation mdrr = mdrr_allocate(inst);
      if (!check_ef1_parts(inst, mdrr).holds || !check_po_exact(inst, mdrr).holds) {
        detail = "mdrr guarantee failed for magnitude pair " + std::to_string(pair);
        return false;
      }
      Allocation minimax = minimax_allocate(inst);
      if (!check_efx(inst, minimax.bundles).holds || !check_po_exact(inst, minimax).holds) {
        detail = "minimax guarantee failed for magnitude pair " + std::to_string(pair);
        return false;
      }
    }
  }
  detail = "1500/1500 ternary instances across three magnitude pairs";
  return true;
}

bool criterion7(std::string& detail) {
  const std::vector<Rational> alphas{Rational(1), Rational(2), Rational(3, 2)};
  for (int i = 0; i < 500; ++i) {
    Rational alpha = alphas[i % alphas.size()];
    Instance inst = seeded_instance(Domain::Ternary, 2 + i % 2, 1 + i % 7,
                                    70000 + static_cast<std::uint64_t>(i), alpha, alpha);
    Allocation mdrr = mdrr_allocate(inst);
    if (!check_efx_parts(inst, mdrr).holds || !check_po_exact(inst, mdrr).holds) {
      detail = "symmetric-ternary mdrr guarantee failed at index " + std::to_string(i);
      return false;
    }
  }

  std::mt19937_64 pair_rng(71000);
  for (int i = 0; i < 10000; ++i) {
    Rational alpha = alphas[i % alphas.size()];
    int agents = 2 + i % 3;
    int items = 1 + i % 8;
    Instance inst = seeded_instance(Domain::Ternary, agents, items,
                                    72000 + static_cast<std::uint64_t>(i), alpha, alpha);
    Allocation alloc = seeded_allocation(pair_rng, agents, items);
    if (check_ef1(inst, alloc.bundles).holds != check_efx(inst, alloc.bundles).holds) {
      detail = "ef1/efx equivalence broke at pair " + std::to_string(i);
      return false;
    }
  }
  detail = "500 algorithm runs, 10000 equivalence pairs";
  return true;
}

bool criterion8(std::string& detail) {
  const Instance& party = fixture("party");

  Allocation minimax = minimax_allocate(party);
  bool chores_with_host = minimax.bundles[0].size() >= 2;
  for (int chore : {5, 6}) {
    bool held = false;
    for (int o : minimax.bundles[0]) held = held || o == chore;
    chores_with_host = chores_with_host && held;
  }
  if (!chores_with_host) {
    detail = "minimax did not hand both chores to agent 1";
    return false;
  }
  if (!check_efx(party, minimax.bundles).holds || !check_po_exact(party, minimax).holds) {
    detail = "minimax output must be efx and Pareto-optimal";
    return false;
  }
  PropertyReport parts = check_ef1_parts(party, minimax);
  const auto* witness = parts.holds ? nullptr : std::get_if<EnvyWitness>(&*parts.witness);
  if (!witness || !witness->part || *witness->part != Part::Minus) {
    detail = "minimax output must fail ef1_parts on the negative part";
    return false;
  }

  Allocation mdrr = mdrr_allocate(party);
  if (!check_ef1_parts(party, mdrr).holds || !check_po_exact(party, mdrr).holds) {
    detail = "mdrr output must be ef1_parts and Pareto-optimal";
    return false;
  }
  return true;
}

bool criterion9(std::string& detail) {
  std::mt19937_64 pair_rng(90000);
  for (int i = 0; i < 10000; ++i) {
    GeneratorConfig config;
    config.domain = Domain::General;
    config.agents = 2 + i % 3;
    config.items = 1 + i % 8;
    config.value_range = 5;
    config.seed = 91000 + static_cast<std::uint64_t>(i);
    Instance inst = generate_instance(config);
    Allocation alloc = seeded_allocation(pair_rng, config.agents, config.items);

    bool ef1 = check_ef1(inst, alloc.bundles).holds;
    bool efx = check_efx(inst, alloc.bundles).holds;
    bool efx0 = check_efx0(inst, alloc.bundles).holds;
    bool ef1p = check_ef1_parts(inst, alloc).holds;
    bool efxp = check_efx_parts(inst, alloc).holds;
    bool ok = (!efx0 || efx) && (!efx || ef1) && (!efxp || ef1p) && (!ef1p || ef1) &&
              (!efxp || efx);
    if (!ok) {
      detail = "implication violated at pair " + std::to_string(i);
      return false;
    }
  }
  detail = "10000/10000 pairs respect the implications";
  return true;
}

bool criterion10(std::string& detail) {
  GeneratorConfig config;
  config.domain = Domain::General;
  config.agents = 10;
  config.items = 10000;
  config.value_range = 5;
  config.seed = 100000;
  Instance inst = generate_instance(config);

  auto mdrr_start = Clock::now();
  Allocation mdrr = mdrr_allocate(inst);
  double mdrr_ms = ms_since(mdrr_start);

  auto minimax_start = Clock::now();
  Allocation minimax = minimax_allocate(inst);
  double minimax_ms = ms_since(minimax_start);

  if (!validate_allocation(inst, mdrr).ok() || !validate_allocation(inst, minimax).ok()) {
    detail = "an algorithm returned an invalid allocation";
    return false;
  }

  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "mdrr %.1f ms, minimax %.1f ms%s", mdrr_ms, minimax_ms,
                (mdrr_ms > 1000 || minimax_ms > 1000) ? " (soft 1 s target missed)" : "");
  detail = buffer;
  return mdrr_ms <= 10000 && minimax_ms <= 10000;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "example1: Pareto witness and mdrr guarantees", 1.0, criterion1},
      {2, "prop1: no efx_parts allocation, some efx allocation", 1.0, criterion2},
      {3, "prop2: no efx0 allocation, some efx allocation", 1.0, criterion3},
      {4, "mdrr is ef1_parts on 1000 general instances", 10000.0, criterion4},
      {5, "both algorithms meet their absolute-identical guarantees", 60000.0, criterion5},
      {6, "both algorithms meet their ternary guarantees", 90000.0, criterion6},
      {7, "symmetric ternary: mdrr efx_parts+PO, ef1=efx on 10000 pairs", 60000.0, criterion7},
      {8, "party: minimax chores outcome vs mdrr shared outcome", 1000.0, criterion8},
      {9, "implication lattice on 10000 random pairs", 30000.0, criterion9},
      {10, "runtime sanity at n=10, m=10000", 30000.0, criterion10},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = criterion.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = ms_since(start);
    bool in_time = elapsed <= criterion.limit_ms;
    if (!in_time) {
      detail += detail.empty() ? "" : "; ";
      detail += "over the " + std::to_string(criterion.limit_ms / 1000.0) + " s budget";
    }
    bool pass = ok && in_time;
    failed += !pass;
    std::printf("%s  %2d  %s  (%.2f ms)%s%s\n", pass ? "PASS" : "FAIL", criterion.number,
                criterion.label.c_str(), elapsed, detail.empty() ? "" : " - ", detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
