#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "manna/instance.hpp"

namespace manna {

enum class Domain { General, AbsoluteIdentical, Identical, Ternary };

inline const char* domain_name(Domain d) {
  switch (d) {
    case Domain::General: return "general";
    case Domain::AbsoluteIdentical: return "absolute-identical";
    case Domain::Identical: return "identical";
    case Domain::Ternary: return "ternary";
  }
  return "";
}

inline std::optional<Domain> parse_domain(std::string_view name) {
  for (Domain d : {Domain::General, Domain::AbsoluteIdentical, Domain::Identical, Domain::Ternary}) {
    if (name == domain_name(d)) return d;
  }
  return std::nullopt;
}

struct GeneratorConfig {
  Domain domain = Domain::General;
  int agents = 2;
  int items = 1;
  std::optional<Rational> alpha;  // ternary only; defaults to 1
  std::optional<Rational> beta;   // ternary only; defaults to 1
  long long value_range = 5;      // integer bound for the non-ternary domains
  std::uint64_t seed = 0;
};

namespace detail {

// All draws are `engine() % k` on a mt19937_64 seeded with config.seed, so a
// (domain, sizes, seed) triple pins the instance byte-for-byte.
inline std::uint64_t draw(std::mt19937_64& engine, std::uint64_t k) { return engine() % k; }

}  // namespace detail

// Deterministic for a fixed config; the emitted instance always satisfies the
// requested domain flags under detect_domain.
inline Instance generate_instance(const GeneratorConfig& config) {
  if (config.agents < 2) throw std::invalid_argument("generator: need at least 2 agents");
  if (config.items < 1) throw std::invalid_argument("generator: need at least 1 item");
  if (config.domain != Domain::Ternary && (config.alpha || config.beta)) {
    throw std::invalid_argument("generator: alpha/beta require the ternary domain");
  }
  if (config.domain != Domain::Ternary && config.value_range < 1) {
    throw std::invalid_argument("generator: value range must be positive");
  }

  const int n = config.agents;
  const int m = config.items;
  std::mt19937_64 engine(config.seed);
  std::vector<std::vector<Rational>> u(n, std::vector<Rational>(m));

  switch (config.domain) {
    case Domain::General: {
      const long long r = config.value_range;
      for (auto& row : u) {
        for (auto& cell : row) {
          cell = Rational(static_cast<long long>(detail::draw(engine, 2 * r + 1)) - r);
        }
      }
      break;
    }
    case Domain::Identical: {
      const long long r = config.value_range;
      for (int o = 0; o < m; ++o) {
        Rational value(static_cast<long long>(detail::draw(engine, 2 * r + 1)) - r);
        for (int a = 0; a < n; ++a) u[a][o] = value;
      }
      break;
    }
    case Domain::AbsoluteIdentical: {
      const long long r = config.value_range;
      for (int o = 0; o < m; ++o) {
        Rational magnitude(static_cast<long long>(detail::draw(engine, r + 1)));
        for (int a = 0; a < n; ++a) {
          u[a][o] = detail::draw(engine, 2) == 0 ? magnitude : -magnitude;
        }
      }
      break;
    }
    case Domain::Ternary: {
      const Rational alpha = config.alpha.value_or(Rational(1));
      const Rational beta = config.beta.value_or(Rational(1));
      if (alpha.sign() <= 0 || beta.sign() <= 0) {
        throw std::invalid_argument("generator: alpha and beta must be positive");
      }
      // Both magnitudes must be witnessed for the ternary flags to hold;
      // redraw until the matrix contains a negative and a positive entry.
      for (int attempt = 0; attempt < 100000; ++attempt) {
        bool has_negative = false;
        bool has_positive = false;
        for (auto& row : u) {
          for (auto& cell : row) {
            switch (detail::draw(engine, 3)) {
              case 0: cell = -alpha; has_negative = true; break;
              case 1: cell = Rational(0); break;
              default: cell = beta; has_positive = true; break;
            }
          }
        }
        if (has_negative && has_positive) break;
      }
      break;
    }
  }
  return Instance(n, m, std::move(u));
}

}  // namespace manna
