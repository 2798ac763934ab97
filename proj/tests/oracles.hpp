#pragma once

// Test-only oracles that share no code path with the library generators.

#include <mscomb/core.hpp>

#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace mscomb::oracle {

/// Counts vectors bounded by m with sum k by plain nested enumeration.
inline std::uint64_t count_by_enumeration(const std::vector<int>& m, int k) {
  std::uint64_t total = 0;
  std::vector<int> v(m.size(), 0);
  while (true) {
    int s = 0;
    for (int x : v) s += x;
    total += (s == k);
    std::size_t pos = 0;
    while (pos < v.size() && v[pos] == m[pos]) v[pos++] = 0;
    if (pos == v.size()) return total;
    ++v[pos];
  }
}

/// Number of positions where x and y differ.
inline int hamming(const CombinationVector& x, const CombinationVector& y) {
  int c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += x.counts[i] != y.counts[i];
  return c;
}

struct SpecGenerator {
  std::mt19937_64 rng;
  int max_n;
  int max_m;

  SpecGenerator(std::uint64_t seed, int max_n_, int max_m_) : rng(seed), max_n(max_n_), max_m(max_m_) {}

  std::vector<int> multiplicities(int min_n = 1) {
    std::vector<int> m(static_cast<std::size_t>(std::uniform_int_distribution<int>(min_n, max_n)(rng)));
    for (int& x : m) x = std::uniform_int_distribution<int>(1, max_m)(rng);
    return m;
  }

  MultisetSpec spec(int min_n = 1) {
    auto m = multiplicities(min_n);
    MultisetSpec s{m, 0};
    s.k = std::uniform_int_distribution<int>(0, static_cast<int>(s.total()))(rng);
    return s;
  }
};

}  // namespace mscomb::oracle
