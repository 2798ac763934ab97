#pragma once

// In-place representation: a k-slot container of component identifiers plus
// one LIFO stack of container positions per component. A Gray step moves a
// single element: a position is popped from the source component's stack,
// pushed onto the destination's, and that container slot is relabelled.
//
// Stacks are intrusive singly linked lists threaded through the k positions
// (k link slots plus n heads), so nothing is allocated after construction.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "engine.hpp"

namespace mscomb {

struct ContainerMove {
  int dest = 0;
  int source = 0;
  int position = 0;  // 1-based container slot that changed
};

class ContainerState {
 public:
  ContainerState(const MultisetSpec& spec, const CombinationVector& a)
      : n_(spec.n()),
        container_(to_inplace(spec, a).elems),
        head_(static_cast<std::size_t>(spec.n()) + 1, 0),
        size_(static_cast<std::size_t>(spec.n()) + 1, 0),
        below_(container_.size() + 1, 0) {
    for (int j = 1; j <= k(); ++j) push(container_[static_cast<std::size_t>(j - 1)], j);
  }

  int k() const noexcept { return static_cast<int>(container_.size()); }
  int n() const noexcept { return n_; }

  /// Slot contents, 1-based identifiers; not kept sorted.
  const std::vector<int>& container() const noexcept { return container_; }

  /// Positions held by component c, bottom to top.
  std::vector<int> stack(int c) const {
    check_component(c);
    std::vector<int> out(static_cast<std::size_t>(size_[static_cast<std::size_t>(c)]));
    int j = head_[static_cast<std::size_t>(c)];
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      *it = j;
      j = below_[static_cast<std::size_t>(j)];
    }
    return out;
  }
  int stack_size(int c) const {
    check_component(c);
    return size_[static_cast<std::size_t>(c)];
  }

  /// Applies one Gray step. `direction` is d at the crossing level: when it
  /// is positive the crossing level gained (dest) and the solution point
  /// lost (source); otherwise the roles are swapped. Either way dest is
  /// delta.inc and source is delta.dec.
  ContainerMove apply_move(const TransitionDelta& delta, int direction) {
    if (direction != 1 && direction != -1) throw std::invalid_argument("apply_move: direction must be +1 or -1");
    check_component(delta.inc);
    check_component(delta.dec);
    ContainerMove mv{delta.inc, delta.dec, 0};
    if (size_[static_cast<std::size_t>(mv.source)] == 0) {
      throw std::logic_error("apply_move: stack of component " + std::to_string(mv.source) +
                             " is empty (container out of sync with the engine)");
    }
    mv.position = pop(mv.source);
    push(mv.dest, mv.position);
    container_[static_cast<std::size_t>(mv.position - 1)] = mv.dest;
    return mv;
  }

  InPlaceForm sorted_form() const {
    InPlaceForm f{container_};
    std::sort(f.elems.begin(), f.elems.end());
    return f;
  }

 private:
  void check_component(int c) const {
    if (c < 1 || c > n_) throw std::out_of_range("component " + std::to_string(c) + " out of range");
  }
  void push(int c, int j) {
    below_[static_cast<std::size_t>(j)] = head_[static_cast<std::size_t>(c)];
    head_[static_cast<std::size_t>(c)] = j;
    ++size_[static_cast<std::size_t>(c)];
  }
  int pop(int c) {
    const int j = head_[static_cast<std::size_t>(c)];
    head_[static_cast<std::size_t>(c)] = below_[static_cast<std::size_t>(j)];
    --size_[static_cast<std::size_t>(c)];
    return j;
  }

  int n_;
  std::vector<int> container_;
  std::vector<int> head_;   // top position per component, 0 when empty
  std::vector<int> size_;
  std::vector<int> below_;  // below_[j]: next position down in j's stack
};

/// Engine and container driven in lockstep.
class InPlaceGrayGenerator {
 public:
  explicit InPlaceGrayGenerator(const MultisetSpec& spec)
      : engine_(spec), container_(spec, engine_.current_vector()) {}

  std::optional<ContainerMove> advance() {
    auto delta = engine_.advance();
    if (!delta) return std::nullopt;
    return container_.apply_move(*delta, engine_.last_trace().direction);
  }

  const GrayEngine& engine() const noexcept { return engine_; }
  const ContainerState& container() const noexcept { return container_; }

 private:
  GrayEngine engine_;
  ContainerState container_;
};

}  // namespace mscomb
