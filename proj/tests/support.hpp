#pragma once

// Helpers shared by the test binaries: a seeded generator and brute-force
// oracles for small abelian groups.

#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rspin/abelian.hpp"

namespace rspin::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed'2024ULL);
  return engine;
}

inline long uniform(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng());
}

/// Random matrix with entries in [-bound, bound]; about a third of entries
/// are zero so that rank deficiency and sparse cases are exercised.
inline abelian::IntMatrix random_matrix(std::size_t rows, std::size_t cols, long bound) {
  abelian::IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = uniform(0, 2) == 0 ? 0 : uniform(-bound, bound);
  return m;
}

inline abelian::IntMatrix random_unimodular(std::size_t n, int steps) {
  auto u = abelian::IntMatrix::identity(n);
  if (n < 2) return u;
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    u.add_row_multiple(i, j, uniform(-2, 2));
    if (uniform(0, 4) == 0) u.swap_rows(i, j);
  }
  return u;
}

/// Elements of the subgroup of Z + Z/N generated by `gens`, restricted to
/// free part in [-window, window]. Exhaustive breadth-first search; exact
/// because a sum of integers bounded by F can be reordered so that every
/// partial sum stays within F of the segment [0, total].
inline std::set<std::pair<long, long>> reachable(long modulus,
                                                 const std::vector<std::pair<long, long>>& gens,
                                                 long window) {
  long f_max = 0;
  for (const auto& [f, t] : gens) f_max = std::max(f_max, std::labs(f));
  const long wide = window + f_max;
  std::set<std::pair<long, long>> seen{{0, 0}};
  std::vector<std::pair<long, long>> frontier{{0, 0}};
  while (!frontier.empty()) {
    std::vector<std::pair<long, long>> next;
    for (const auto& [f, t] : frontier) {
      for (const auto& [gf, gt] : gens) {
        for (int sign : {1, -1}) {
          const long nf = f + sign * gf;
          const long nt = ((t + sign * gt) % modulus + modulus) % modulus;
          if (std::labs(nf) > wide) continue;
          if (seen.insert({nf, nt}).second) next.push_back({nf, nt});
        }
      }
    }
    frontier = std::move(next);
  }
  std::set<std::pair<long, long>> out;
  for (const auto& e : seen)
    if (std::labs(e.first) <= window) out.insert(e);
  return out;
}

}  // namespace rspin::testing
