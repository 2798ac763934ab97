#pragma once

// Exact counting of |S(A,k)|: closed form for the unbounded case,
// inclusion-exclusion over the k-closure, and a bounded-window DP.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "core.hpp"

namespace mscomb {

using Count = boost::multiprecision::cpp_int;

inline constexpr int kDefaultSubsetLimit = 24;

class subset_limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// C(n, r) by the multiplicative formula; every partial product divides exactly.
inline Count binomial(std::int64_t n, std::int64_t r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  Count c = 1;
  for (std::int64_t i = 1; i <= r; ++i) {
    c *= n - r + i;
    c /= i;
  }
  return c;
}

/// Number of k-combinations when every component is unbounded: C(n+k-1, k).
inline Count count_closure(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0) throw std::invalid_argument("count_closure: need n >= 1 and k >= 0");
  return binomial(n + k - 1, k);
}

/// One nonzero term of the inclusion-exclusion sum.
struct InclusionExclusionTerm {
  std::vector<int> subset;  // 1-based positions forced past their bound
  std::int64_t reduced_k = 0;
  Count magnitude;  // |S(B, reduced_k)|
};

struct InclusionExclusionBreakdown {
  std::vector<InclusionExclusionTerm> terms;  // subsets in DFS order
  std::vector<Count> by_order;                // by_order[r]: sum of magnitudes over |T| = r
  Count total;
};

inline InclusionExclusionBreakdown inclusion_exclusion_breakdown(const MultisetSpec& spec,
                                                                 int subset_limit = kDefaultSubsetLimit) {
  require_valid(spec);
  if (spec.n() > subset_limit) {
    throw subset_limit_error("inclusion-exclusion: n = " + std::to_string(spec.n()) + " exceeds subset limit " +
                             std::to_string(subset_limit) + "; use the dp method");
  }
  InclusionExclusionBreakdown out;
  out.by_order.assign(static_cast<std::size_t>(spec.n()) + 1, 0);
  std::vector<int> chosen;
  // Subsets are grown in increasing position order; once the reduced k goes
  // negative no superset can contribute, so the branch is cut.
  auto dfs = [&](auto&& self, int next, std::int64_t reduced) -> void {
    InclusionExclusionTerm term{chosen, reduced, count_closure(spec.n(), reduced)};
    out.by_order[chosen.size()] += term.magnitude;
    if (chosen.size() % 2 == 0) {
      out.total += term.magnitude;
    } else {
      out.total -= term.magnitude;
    }
    out.terms.push_back(std::move(term));
    for (int i = next; i <= spec.n(); ++i) {
      const std::int64_t r = reduced - spec.m(i) - 1;
      if (r < 0) continue;
      chosen.push_back(i);
      self(self, i + 1, r);
      chosen.pop_back();
    }
  };
  dfs(dfs, 1, spec.k);
  return out;
}

inline Count count_inclusion_exclusion(const MultisetSpec& spec, int subset_limit = kDefaultSubsetLimit) {
  return inclusion_exclusion_breakdown(spec, subset_limit).total;
}

/// ways[s] after processing positions 1..i = number of prefixes a[1..i]
/// with a[j] <= m[j] summing to s; each update is a sliding window sum.
inline Count count_dp(const MultisetSpec& spec) {
  require_valid(spec);
  const auto k = static_cast<std::size_t>(spec.k);
  std::vector<Count> ways(k + 1, 0);
  std::vector<Count> next(k + 1, 0);
  ways[0] = 1;
  for (int i = 1; i <= spec.n(); ++i) {
    const auto cap = static_cast<std::size_t>(spec.m(i));
    Count window = 0;
    for (std::size_t s = 0; s <= k; ++s) {
      window += ways[s];
      if (s > cap) window -= ways[s - cap - 1];
      next[s] = window;
    }
    ways.swap(next);
  }
  return ways[k];
}

}  // namespace mscomb
