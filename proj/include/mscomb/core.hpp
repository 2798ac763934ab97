#pragma once

// Shared domain types for bounded multiset combinations.
//
// Positions and component identifiers are 1-based wherever they cross an
// API boundary (TransitionDelta, InPlaceForm, diagnostics). The count
// storage inside CombinationVector is an ordinary 0-based std::vector.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mscomb {

class spec_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A problem instance: choose k elements from n components, where
/// component i may be taken at most multiplicities[i-1] times.
struct MultisetSpec {
  std::vector<int> multiplicities;
  int k = 0;

  int n() const noexcept { return static_cast<int>(multiplicities.size()); }
  /// 1-based.
  int m(int pos) const { return multiplicities.at(static_cast<std::size_t>(pos - 1)); }

  std::int64_t total() const noexcept {
    std::int64_t s = 0;
    for (int x : multiplicities) s += x;
    return s;
  }

  friend bool operator==(const MultisetSpec&, const MultisetSpec&) = default;
};

inline MultisetSpec uniform_spec(int n, int m, int k) {
  return MultisetSpec{std::vector<int>(static_cast<std::size_t>(std::max(n, 0)), m), k};
}

inline std::string describe(const MultisetSpec& spec) {
  std::ostringstream os;
  os << "m=(";
  for (int i = 0; i < spec.n(); ++i) os << (i ? "," : "") << spec.multiplicities[static_cast<std::size_t>(i)];
  os << "), k=" << spec.k;
  return os.str();
}

/// Returns a diagnostic naming the first violated constraint, or nullopt.
inline std::optional<std::string> validate(const MultisetSpec& spec) {
  if (spec.n() == 0) return "n = 0: at least one component is required";
  for (int i = 1; i <= spec.n(); ++i) {
    if (spec.m(i) <= 0) {
      return "multiplicity m[" + std::to_string(i) + "] = " + std::to_string(spec.m(i)) +
             " must be at least 1";
    }
  }
  if (spec.total() > std::numeric_limits<int>::max() / 2) return "sum of multiplicities too large";
  if (spec.k < 0 || spec.k > spec.total()) {
    return "k = " + std::to_string(spec.k) + " out of range [0, " + std::to_string(spec.total()) + "]";
  }
  return std::nullopt;
}

inline void require_valid(const MultisetSpec& spec) {
  if (auto err = validate(spec)) throw spec_error(*err);
}

/// Vector form: counts[i] is the number of copies of component i+1.
struct CombinationVector {
  std::vector<int> counts;

  CombinationVector() = default;
  explicit CombinationVector(std::vector<int> c) : counts(std::move(c)) {}
  CombinationVector(std::initializer_list<int> c) : counts(c) {}

  std::size_t size() const noexcept { return counts.size(); }
  /// 1-based.
  int at(int pos) const { return counts.at(static_cast<std::size_t>(pos - 1)); }

  friend auto operator<=>(const CombinationVector&, const CombinationVector&) = default;
  friend bool operator==(const CombinationVector&, const CombinationVector&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const CombinationVector& a) {
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? " " : "") << a.counts[i];
  return os;
}

using GenerationList = std::vector<CombinationVector>;

/// True iff a has the right length, every entry lies in [0, m[i]] and the
/// entries sum to k.
inline bool is_member(const MultisetSpec& spec, const CombinationVector& a) {
  if (static_cast<int>(a.size()) != spec.n()) return false;
  std::int64_t s = 0;
  for (int i = 1; i <= spec.n(); ++i) {
    int v = a.at(i);
    if (v < 0 || v > spec.m(i)) return false;
    s += v;
  }
  return s == spec.k;
}

/// One Gray step: count at `inc` rose by one, count at `dec` fell by one.
struct TransitionDelta {
  int inc = 0;
  int dec = 0;

  TransitionDelta inverse() const noexcept { return {dec, inc}; }
  friend bool operator==(const TransitionDelta&, const TransitionDelta&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const TransitionDelta& d) {
  return os << '+' << d.inc << " -" << d.dec;
}

/// The explicit k-element list of component identifiers (1..n).
struct InPlaceForm {
  std::vector<int> elems;
  friend bool operator==(const InPlaceForm&, const InPlaceForm&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const InPlaceForm& f) {
  for (std::size_t i = 0; i < f.elems.size(); ++i) os << (i ? " " : "") << f.elems[i];
  return os;
}

struct FirstCombination {
  CombinationVector a;
  /// Right-most box left unfilled by the right-to-left fill; 0 when every
  /// box is full (k equals the total).
  int i0 = 0;
};

/// Lexicographically smallest member: fill boxes to capacity from the right.
inline FirstCombination first_combination(const MultisetSpec& spec) {
  require_valid(spec);
  FirstCombination out;
  out.a.counts.assign(static_cast<std::size_t>(spec.n()), 0);
  int remaining = spec.k;
  for (int i = spec.n(); i >= 1; --i) {
    if (spec.m(i) <= remaining) {
      out.a.counts[static_cast<std::size_t>(i - 1)] = spec.m(i);
      remaining -= spec.m(i);
    } else {
      out.a.counts[static_cast<std::size_t>(i - 1)] = remaining;
      out.i0 = i;
      break;
    }
  }
  return out;
}

/// True iff x and y differ in exactly two positions, one by +1 and one by -1.
inline bool is_adjacent(const CombinationVector& x, const CombinationVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("is_adjacent: length mismatch");
  int plus = 0;
  int minus = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    int diff = y.counts[i] - x.counts[i];
    if (diff == 0) continue;
    if (diff == 1) {
      ++plus;
    } else if (diff == -1) {
      ++minus;
    } else {
      return false;
    }
  }
  return plus == 1 && minus == 1;
}

/// The delta taking x to y, if they are adjacent.
inline std::optional<TransitionDelta> delta_between(const CombinationVector& x, const CombinationVector& y) {
  if (!is_adjacent(x, y)) return std::nullopt;
  TransitionDelta d;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (y.counts[i] > x.counts[i]) d.inc = static_cast<int>(i) + 1;
    if (y.counts[i] < x.counts[i]) d.dec = static_cast<int>(i) + 1;
  }
  return d;
}

inline InPlaceForm to_inplace(const CombinationVector& a) {
  InPlaceForm f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    f.elems.insert(f.elems.end(), static_cast<std::size_t>(std::max(a.counts[i], 0)), static_cast<int>(i) + 1);
  }
  return f;
}

inline InPlaceForm to_inplace(const MultisetSpec& spec, const CombinationVector& a) {
  if (!is_member(spec, a)) throw std::invalid_argument("to_inplace: vector is not a member of " + describe(spec));
  return to_inplace(a);
}

/// Inverse of to_inplace; identifiers need not be sorted.
inline CombinationVector from_inplace(int n, const std::vector<int>& elems) {
  CombinationVector a(std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int c : elems) {
    if (c < 1 || c > n) throw std::invalid_argument("from_inplace: identifier " + std::to_string(c) + " out of range");
    ++a.counts[static_cast<std::size_t>(c - 1)];
  }
  return a;
}

/// Applies d to a; a logic_error means the caller (normally the engine)
/// produced an infeasible step.
inline CombinationVector apply_delta(const MultisetSpec& spec, CombinationVector a, const TransitionDelta& d) {
  const int n = spec.n();
  if (d.inc < 1 || d.inc > n || d.dec < 1 || d.dec > n || d.inc == d.dec) {
    throw std::logic_error("apply_delta: bad positions +" + std::to_string(d.inc) + " -" + std::to_string(d.dec));
  }
  if (static_cast<int>(a.size()) != n) throw std::logic_error("apply_delta: length mismatch");
  int& up = a.counts[static_cast<std::size_t>(d.inc - 1)];
  int& down = a.counts[static_cast<std::size_t>(d.dec - 1)];
  if (up >= spec.m(d.inc)) throw std::logic_error("apply_delta: capacity overflow at position " + std::to_string(d.inc));
  if (down <= 0) throw std::logic_error("apply_delta: underflow at position " + std::to_string(d.dec));
  ++up;
  --down;
  return a;
}

/// How parity is assigned to the nodes of a level when twisting the lexico
/// tree. `global` gives every node a parity; `skip_single_child` leaves
/// non-branching nodes off the alternation.
enum class ParityMode { global, skip_single_child };

inline const char* to_string(ParityMode mode) {
  return mode == ParityMode::global ? "global" : "skip_single_child";
}

}  // namespace mscomb
