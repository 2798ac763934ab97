#pragma once

// Slow reference generators used as oracles for the loopless engine.
//
//  brute_force             - filter the Cartesian product of [0..m[i]] on sum == k
//  lex_generate            - recursive generator with prefix-aware bounds
//  gray_generate_recursive - same recursion, direction per level flipped after
//                            every call (or, in skip_single_child mode, only
//                            after calls that branch or lie on the first path)

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace mscomb {

inline constexpr std::uint64_t kDefaultOracleLimit = 20'000'000;

class oracle_limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Called once per generated object; return false to stop early.
using Visitor = std::function<bool(const CombinationVector&)>;

inline GenerationList brute_force(const MultisetSpec& spec, std::uint64_t limit = kDefaultOracleLimit) {
  require_valid(spec);
  std::uint64_t product = 1;
  for (int x : spec.multiplicities) {
    product *= static_cast<std::uint64_t>(x) + 1;
    if (product > limit) throw oracle_limit_error("brute_force: product of (m[i]+1) exceeds oracle limit");
  }
  const auto n = static_cast<std::size_t>(spec.n());
  GenerationList out;
  std::vector<int> odo(n, 0);
  int sum = 0;
  while (true) {
    if (sum == spec.k) out.emplace_back(odo);
    // odometer with the last position fastest gives lexicographic order
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (odo[pos] < spec.multiplicities[pos]) {
        ++odo[pos];
        ++sum;
        break;
      }
      sum -= odo[pos];
      odo[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

namespace detail {

struct RecursiveWalker {
  const MultisetSpec& spec;
  ParityMode mode;
  bool gray;
  const Visitor& visit;
  std::vector<int> suffix;  // suffix[i] = m[i] + ... + m[n], suffix[n+1] = 0
  std::vector<int> dir;
  CombinationVector a;
  bool stopped = false;

  RecursiveWalker(const MultisetSpec& s, ParityMode md, bool g, const Visitor& v)
      : spec(s), mode(md), gray(g), visit(v) {
    const int n = spec.n();
    suffix.assign(static_cast<std::size_t>(n) + 2, 0);
    for (int i = n; i >= 1; --i) suffix[static_cast<std::size_t>(i)] = suffix[static_cast<std::size_t>(i) + 1] + spec.m(i);
    dir.assign(static_cast<std::size_t>(n) + 2, 1);
    a.counts.assign(static_cast<std::size_t>(n), 0);
  }

  void place(int i, int j, int remaining, bool on_first_path) {
    a.counts[static_cast<std::size_t>(i - 1)] = j;
    walk(i + 1, remaining - j, on_first_path);
  }

  void walk(int i, int remaining, bool on_first_path) {
    if (stopped) return;
    if (i > spec.n()) {
      if (!visit(a)) stopped = true;
      return;
    }
    const int lower = std::max(remaining - suffix[static_cast<std::size_t>(i) + 1], 0);
    const int upper = std::min(spec.m(i), remaining);
    auto& d = dir[static_cast<std::size_t>(i)];
    if (!gray || d > 0) {
      for (int j = lower; j <= upper && !stopped; ++j) place(i, j, remaining, on_first_path && j == lower);
    } else {
      for (int j = upper; j >= lower && !stopped; --j) place(i, j, remaining, on_first_path && j == upper);
    }
    if (mode == ParityMode::global || lower != upper || on_first_path) d = -d;
  }
};

}  // namespace detail

inline void lex_visit(const MultisetSpec& spec, const Visitor& visit) {
  require_valid(spec);
  detail::RecursiveWalker w(spec, ParityMode::global, false, visit);
  w.walk(1, spec.k, true);
}

inline void gray_visit_recursive(const MultisetSpec& spec, ParityMode mode, const Visitor& visit) {
  require_valid(spec);
  detail::RecursiveWalker w(spec, mode, true, visit);
  w.walk(1, spec.k, true);
}

inline GenerationList lex_generate(const MultisetSpec& spec) {
  GenerationList out;
  lex_visit(spec, [&](const CombinationVector& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

/// Recursive Gray-order generator. The default mode is the textbook
/// recursion; skip_single_child reproduces the loopless engine's order.
inline GenerationList gray_generate_recursive(const MultisetSpec& spec, ParityMode mode = ParityMode::global) {
  GenerationList out;
  gray_visit_recursive(spec, mode, [&](const CombinationVector& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

}  // namespace mscomb
