#pragma once

// Loopless Gray-order generator for bounded multiset combinations.
//
// The generator walks the twisted lexico tree of S(A,k) without visiting the
// straight (single-child) runs: from the current crossing level it either
// jumps up to the return ancestor (`up`) or down to the landing point of the
// opposite path (`down`), with the second pivot of every change kept in
// `solve`. Each advance() runs one pass of the loop body and contains no
// iteration, so its cost is bounded by a constant independent of n, k, m.
//
// Internal arrays are 1-based with index 0 acting as the virtual root.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace mscomb {

/// Read-only copy of the generator's internal arrays.
struct EngineState {
  std::vector<int> a, b, d, sum, up, up1, down, solve;
  std::vector<std::uint8_t> mark;
  int level = 0;
  int i0 = 0;
  bool finished = false;
};

/// Instrumentation for one advance() call.
struct StepTrace {
  std::optional<TransitionDelta> delta;
  int level = 0;      // crossing level the step started from
  int direction = 0;  // d at that level before the step (+1 increasing, -1 decreasing)
  bool went_up = false;
  bool went_down = false;
  int op_count = 0;
};

struct EngineOptions {
  /// Re-derive sum[i] = a[1] + ... + a[i-1] at every point where the bounds
  /// are evaluated and throw std::logic_error on mismatch. O(n) per step.
  bool check_sums = false;
};

class GrayEngine {
 public:
  explicit GrayEngine(MultisetSpec spec, EngineOptions options = {}) : spec_(std::move(spec)), options_(options) {
    require_valid(spec_);
    const int n = spec_.n();
    const auto size = static_cast<std::size_t>(n) + 2;
    a_.assign(size, 0);
    b_.assign(size, 0);
    d_.assign(size, 0);
    sum_.assign(size, 0);
    up_.assign(size, 0);
    up1_.assign(size, 0);
    down_.assign(size, 0);
    solve_.assign(size, 0);
    mark_.assign(size, 0);
    m_.assign(size, 0);
    for (int i = 1; i <= n; ++i) m_[idx(i)] = spec_.m(i);

    auto first = first_combination(spec_);
    for (int i = 1; i <= n; ++i) a_[idx(i)] = first.a.at(i);
    // A single object exists iff n = 1, k = 0 or k = total; there is no
    // crossing level to start from.
    if (n == 1 || spec_.k == 0 || first.i0 == 0) {
      i0_ = 0;
      level_ = 0;
      return;
    }
    // Level n is always forced, so a fill that stops at box n starts the
    // traversal one level up.
    i0_ = std::min(first.i0, n - 1);

    for (int i = n; i >= 1; --i) b_[idx(i)] = b_[idx(i + 1)] + m_[idx(i)];
    for (int i = 0; i <= n; ++i) {
      up_[idx(i)] = i;
      up1_[idx(i)] = i;
      solve_[idx(i)] = n;
      mark_[idx(i)] = 0;
    }
    for (int i = 1; i <= n; ++i) sum_[idx(i)] = sum_[idx(i - 1)] + a_[idx(i - 1)];
    for (int i = i0_ + 1; i <= n; ++i) sum_[idx(i)] += 1;
    for (int i = 1; i <= n; ++i) d_[idx(i)] = i <= i0_ ? 1 : -1;
    for (int i = 1; i <= n - 1; ++i) down_[idx(i)] = n - 1;
    level_ = i0_;
  }

  const MultisetSpec& spec() const noexcept { return spec_; }

  /// Current object (counts for positions 1..n).
  std::span<const int> current() const noexcept {
    return std::span<const int>(a_).subspan(1, static_cast<std::size_t>(spec_.n()));
  }
  CombinationVector current_vector() const { return CombinationVector(std::vector<int>(current().begin(), current().end())); }

  /// The object held in state is the last one; the next advance() reports it.
  bool finished() const noexcept { return level_ == 0; }
  /// Level whose node changes on the next advance(); 0 once finished.
  int level() const noexcept { return level_; }
  /// Start level of the traversal (0 for single-object instances).
  int start_level() const noexcept { return i0_; }

  const StepTrace& last_trace() const noexcept { return trace_; }

  EngineState state() const {
    return EngineState{a_, b_, d_, sum_, up_, up1_, down_, solve_, mark_, level_, i0_, finished()};
  }

  /// One pass of the loop body. Returns the change applied to current(), or
  /// nullopt once the final object has been reached; calling again after
  /// that is a usage error.
  std::optional<TransitionDelta> advance() {
    if (level_ == 0) {
      if (end_reported_) throw std::logic_error("GrayEngine::advance called after the sequence finished");
      end_reported_ = true;
      trace_ = StepTrace{};
      return std::nullopt;
    }
    const int n = spec_.n();
    const int k = spec_.k;
    int i = level_;
    int ops = 0;
    StepTrace trace;
    trace.level = i;
    trace.direction = d_[idx(i)];

    if (options_.check_sums) verify_prefix_sum(i);
    const int lower = std::max(k - b_[idx(i + 1)] - sum_[idx(i)], 0);
    const int upper = std::min(k - sum_[idx(i)], m_[idx(i)]);
    ops += 2;

    ops += 1;
    if (!at_last_child(i, lower, upper)) {
      const int j = solve_[idx(i)];
      a_[idx(i)] += d_[idx(i)];
      a_[idx(j)] -= d_[idx(i)];
      ops += 2;
      trace.delta = d_[idx(i)] > 0 ? TransitionDelta{i, j} : TransitionDelta{j, i};
    }
    up_[idx(i)] = i;
    ops += 2;

    bool up_point = false;
    if (at_last_child(i, lower, upper)) {
      up_[idx(i)] = up_[idx(i - 1)];
      up_[idx(i - 1)] = i - 1;
      const int ret = up_[idx(i)];
      const int lower1 = std::max(k - b_[idx(i + 1)] - sum_[idx(i)] - d_[idx(ret)], 0);
      const int upper1 = std::min(k - sum_[idx(i)] - d_[idx(ret)], m_[idx(i)]);
      const int next = d_[idx(i)] > 0 ? upper1 : lower1;
      solve_[idx(ret)] = a_[idx(i)] != next ? i : solve_[idx(i)];
      mark_[idx(ret)] = 1;
      mark_[idx(i)] = 1;
      up_point = (sum_[idx(i)] + a_[idx(i)] == k) || (sum_[idx(i)] + a_[idx(i)] + b_[idx(i + 1)] == k) || (i == n - 1);
      if (lower1 != upper1) sum_[idx(i)] += d_[idx(ret)];
      const bool next_landing =
          (sum_[idx(i)] + next == k) || (sum_[idx(i)] + next + b_[idx(i + 1)] == k) || (i == n - 1);
      up1_[idx(i)] = up1_[idx(i - 1)];
      up1_[idx(i - 1)] = i - 1;
      if (lower1 == upper1) {
        down_[idx(up1_[idx(i)])] = i;
      } else if (next_landing) {
        down_[idx(ret)] = i;
      } else {
        down_[idx(ret)] = down_[idx(i)];
      }
      if (next_landing) up1_[idx(i)] = i;
      d_[idx(i)] = -d_[idx(i)];
      ops += 15;
    }

    ops += 1;
    if (up_point) {
      const int from = i;
      i = up_[idx(i)];
      up_[idx(from)] = from;
      // up1 is reset together with up; a stale up1[from] would otherwise
      // misdirect a later case-1 update of down.
      up1_[idx(from)] = from;
      ops += 3;
      trace.went_up = true;
    } else {
      if (!mark_[idx(down_[idx(i)])]) solve_[idx(down_[idx(i)])] = solve_[idx(i)];
      mark_[idx(i)] = 0;
      i = down_[idx(i)];
      ops += 3;
      trace.went_down = true;
    }
    level_ = i;

    if (!trace.delta) throw std::logic_error("GrayEngine: loop pass produced no change at level " + std::to_string(trace.level));
    trace.op_count = ops;
    trace_ = trace;
    return trace.delta;
  }

 private:
  static constexpr std::size_t idx(int i) noexcept { return static_cast<std::size_t>(i); }

  bool at_last_child(int i, int lower, int upper) const noexcept {
    return (d_[idx(i)] > 0 && a_[idx(i)] == upper) || (d_[idx(i)] < 0 && a_[idx(i)] == lower);
  }

  void verify_prefix_sum(int i) const {
    int s = 0;
    for (int j = 1; j < i; ++j) s += a_[idx(j)];
    if (s != sum_[idx(i)]) {
      throw std::logic_error("GrayEngine: sum[" + std::to_string(i) + "] = " + std::to_string(sum_[idx(i)]) +
                             " but prefix sum is " + std::to_string(s));
    }
  }

  MultisetSpec spec_;
  EngineOptions options_;
  std::vector<int> m_, a_, b_, d_, sum_, up_, up1_, down_, solve_;
  std::vector<std::uint8_t> mark_;
  int level_ = 0;
  int i0_ = 0;
  bool end_reported_ = false;
  StepTrace trace_;
};

/// Streams the Gray sequence: visit(current, delta) is called first with
/// delta = nullopt for the initial object, then once per step. Return false
/// to stop.
template <class Fn>
void for_each_gray(const MultisetSpec& spec, Fn&& visit, EngineOptions options = {}) {
  GrayEngine engine(spec, options);
  if (!visit(engine, std::optional<TransitionDelta>{})) return;
  while (auto delta = engine.advance()) {
    if (!visit(engine, delta)) return;
  }
}

inline GenerationList gray_generate_loopless(const MultisetSpec& spec, EngineOptions options = {}) {
  GenerationList out;
  for_each_gray(
      spec,
      [&](const GrayEngine& e, const std::optional<TransitionDelta>&) {
        out.push_back(e.current_vector());
        return true;
      },
      options);
  return out;
}

struct InstrumentedRun {
  GenerationList items;
  std::uint64_t objects = 0;
  int max_op_count = 0;
  bool complete = true;
};

/// Max per-advance op count over at most max_steps advances; objects are
/// stored only when keep_items is set and then limited by item_budget.
inline InstrumentedRun run_instrumented(const MultisetSpec& spec, bool keep_items = true,
                                        std::uint64_t max_steps = UINT64_MAX,
                                        std::uint64_t item_budget = 50'000'000) {
  InstrumentedRun run;
  GrayEngine engine(spec);
  auto record = [&] {
    ++run.objects;
    if (keep_items) {
      if (run.items.size() >= item_budget) throw std::length_error("run_instrumented: item budget exceeded");
      run.items.push_back(engine.current_vector());
    }
  };
  record();
  for (std::uint64_t step = 0;; ++step) {
    if (step >= max_steps) {
      run.complete = engine.finished();
      break;
    }
    auto delta = engine.advance();
    if (!delta) break;
    run.max_op_count = std::max(run.max_op_count, engine.last_trace().op_count);
    record();
  }
  return run;
}

}  // namespace mscomb
