#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "manna/instance.hpp"

namespace manna {

struct NamedInstance {
  std::string name;
  std::string summary;
  Instance instance;
};

// Small counterexample and walkthrough instances used throughout the tests
// and available to the CLI by name.
inline const std::vector<NamedInstance>& builtin_fixtures() {
  static const std::vector<NamedInstance> fixtures = {
      {"example1",
       "two agents, one pure bad and one non-pure bad; a naive round-robin outcome "
       "here admits a Pareto improvement",
       Instance(2, 2, {{-1, -1}, {-1, 0}})},
      {"prop1",
       "identical ternary utilities, one pure good and two pure bads; no allocation "
       "is envy-free by parts up to any item",
       Instance(2, 3, {{-1, -1, 2}, {-1, -1, 2}})},
      {"prop2",
       "identical utilities, one pure good and one dummy; no allocation is envy-free "
       "up to any item when zero-valued items count",
       Instance(2, 2, {{1, 0}, {1, 0}})},
      {"party",
       "three agents sharing five cake pieces and two chores; items 0-2 only the "
       "host likes, items 3-4 only the guests like, items 5-6 everyone dislikes",
       Instance(3, 7,
                {{1, 1, 1, 0, 0, -1, -1},
                 {0, 0, 0, 1, 1, -1, -1},
                 {0, 0, 0, 1, 1, -1, -1}})},
  };
  return fixtures;
}

inline const NamedInstance* find_fixture(std::string_view name) {
  for (const auto& fixture : builtin_fixtures()) {
    if (fixture.name == name) return &fixture;
  }
  return nullptr;
}

}  // namespace manna
