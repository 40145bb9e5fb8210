#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "manna/rational.hpp"

namespace manna {

// An allocation problem: n >= 2 agents, m >= 1 indivisible items, and an
// exact-rational utility matrix u[agent][item]. Immutable after construction.
class Instance {
 public:
  Instance(int agents, int items, std::vector<std::vector<Rational>> utilities)
      : agents_(agents), items_(items), u_(std::move(utilities)) {
    if (agents_ < 2) throw std::invalid_argument("instance: need at least 2 agents");
    if (items_ < 1) throw std::invalid_argument("instance: need at least 1 item");
    if (static_cast<int>(u_.size()) != agents_) {
      throw std::invalid_argument("instance: utility matrix must have one row per agent");
    }
    for (const auto& row : u_) {
      if (static_cast<int>(row.size()) != items_) {
        throw std::invalid_argument("instance: utility row length must equal item count");
      }
    }
  }

  int agents() const noexcept { return agents_; }
  int items() const noexcept { return items_; }

  // Unchecked; callers validate indices at the operation boundary.
  const Rational& utility(int agent, int item) const noexcept { return u_[agent][item]; }

  const std::vector<std::vector<Rational>>& matrix() const noexcept { return u_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.agents_ == b.agents_ && a.items_ == b.items_ && a.u_ == b.u_;
  }

 private:
  int agents_;
  int items_;
  std::vector<std::vector<Rational>> u_;
};

inline void require_agent(const Instance& inst, int agent) {
  if (agent < 0 || agent >= inst.agents()) throw std::out_of_range("agent index out of range");
}

inline void require_item(const Instance& inst, int item) {
  if (item < 0 || item >= inst.items()) throw std::out_of_range("item index out of range");
}

// u_a(M) = sum of u_a(o) over o in M. The empty bundle is worth exactly 0.
inline Rational bundle_utility(const Instance& inst, int agent, std::span<const int> items) {
  require_agent(inst, agent);
  Rational total;
  for (int o : items) {
    require_item(inst, o);
    total += inst.utility(agent, o);
  }
  return total;
}

enum class ItemTag { Mixed, Good, Bad, Dummy };

// Every item falls in exactly one tag; `pure` is meaningful for Good/Bad only
// (all agents strictly positive / strictly negative).
struct ItemClass {
  ItemTag tag;
  bool pure = false;

  friend bool operator==(const ItemClass&, const ItemClass&) = default;
};

inline ItemClass classify_item(const Instance& inst, int item) {
  require_item(inst, item);
  int positive = 0;
  int negative = 0;
  for (int a = 0; a < inst.agents(); ++a) {
    int s = inst.utility(a, item).sign();
    positive += (s > 0);
    negative += (s < 0);
  }
  const int n = inst.agents();
  if (positive > 0 && negative > 0) return {ItemTag::Mixed};
  if (positive > 0) return {ItemTag::Good, positive == n};
  if (negative > 0) return {ItemTag::Bad, negative == n};
  return {ItemTag::Dummy};
}

// Utility-domain flags, decided by exact comparison over the whole matrix.
// Ternary holds only when both magnitudes are witnessed: every negative entry
// equals -alpha and every positive entry equals beta, with at least one of each.
struct DomainProfile {
  bool is_identical = false;
  bool is_absolute_identical = false;
  bool is_ternary = false;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  bool is_ternary_symmetric = false;
};

inline DomainProfile detect_domain(const Instance& inst) {
  DomainProfile profile;
  profile.is_identical = true;
  profile.is_absolute_identical = true;
  bool ternary = true;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;

  for (int o = 0; o < inst.items(); ++o) {
    const Rational& first = inst.utility(0, o);
    for (int a = 0; a < inst.agents(); ++a) {
      const Rational& u = inst.utility(a, o);
      if (u != first) profile.is_identical = false;
      if (u.abs() != first.abs()) profile.is_absolute_identical = false;
      if (u.sign() < 0) {
        if (!alpha) {
          alpha = u.abs();
        } else if (*alpha != u.abs()) {
          ternary = false;
        }
      } else if (u.sign() > 0) {
        if (!beta) {
          beta = u;
        } else if (*beta != u) {
          ternary = false;
        }
      }
    }
  }

  if (ternary && alpha && beta) {
    profile.is_ternary = true;
    profile.alpha = alpha;
    profile.beta = beta;
    profile.is_ternary_symmetric = (*alpha == *beta);
  }
  return profile;
}

}  // namespace manna
