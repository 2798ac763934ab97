#pragma once

// Cross-oracle verification of one instance: every generator against the
// brute-force set, the adjacency sweep, the counts, the container sweep and
// the tree models.

#include <mscomb/mscomb.hpp>

#include <algorithm>
#include <exception>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mscomb::cli {

struct PropertyResult {
  std::string name;
  bool mandatory = true;
  bool passed = true;
  bool skipped = false;
  std::string detail;
};

struct VerifyReport {
  MultisetSpec spec;
  std::vector<PropertyResult> properties;

  bool ok() const {
    return std::all_of(properties.begin(), properties.end(),
                       [](const PropertyResult& p) { return !p.mandatory || p.skipped || p.passed; });
  }
  const PropertyResult* first_failure() const {
    for (const auto& p : properties) {
      if (p.mandatory && !p.skipped && !p.passed) return &p;
    }
    return nullptr;
  }
};

namespace detail {

inline std::string vec_str(const CombinationVector& a) {
  std::ostringstream os;
  os << '(' ;
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a.counts[i];
  os << ')';
  return os.str();
}

inline std::string check_permutation(const GenerationList& seq, const GenerationList& lex) {
  if (seq.size() != lex.size()) {
    return "emitted " + std::to_string(seq.size()) + " objects, expected " + std::to_string(lex.size());
  }
  GenerationList sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != lex[i]) {
      if (i > 0 && sorted[i] == sorted[i - 1]) return "duplicate object " + vec_str(sorted[i]);
      return "set differs at sorted index " + std::to_string(i) + ": " + vec_str(sorted[i]) + " vs " + vec_str(lex[i]);
    }
  }
  return {};
}

inline std::string check_adjacent(const GenerationList& seq) {
  for (std::size_t i = 1; i < seq.size(); ++i) {
    if (!is_adjacent(seq[i - 1], seq[i])) {
      return "step " + std::to_string(i) + ": " + vec_str(seq[i - 1]) + " -> " + vec_str(seq[i]) + " not adjacent";
    }
  }
  return {};
}

inline std::string first_mismatch(const GenerationList& x, const GenerationList& y) {
  const std::size_t len = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < len; ++i) {
    if (x[i] != y[i]) return "first difference at index " + std::to_string(i);
  }
  if (x.size() != y.size()) return "lengths differ";
  return {};
}

}  // namespace detail

struct VerifyLimits {
  std::uint64_t oracle_limit = kDefaultOracleLimit;
  std::size_t tree_node_limit = 200'000;
};

inline VerifyReport verify_spec(const MultisetSpec& spec, const VerifyLimits& limits = {}) {
  using detail::check_adjacent;
  using detail::check_permutation;
  VerifyReport report{spec, {}};
  auto add = [&](std::string name, bool mandatory, std::string failure) {
    PropertyResult r{std::move(name), mandatory, failure.empty(), false, std::move(failure)};
    report.properties.push_back(std::move(r));
  };
  auto skip = [&](std::string name, bool mandatory, std::string why) {
    report.properties.push_back(PropertyResult{std::move(name), mandatory, true, true, std::move(why)});
  };
  auto guarded = [&](const std::string& name, bool mandatory, auto&& body) {
    try {
      add(name, mandatory, body());
    } catch (const std::exception& ex) {
      add(name, mandatory, std::string("exception: ") + ex.what());
    }
  };

  const GenerationList brute = brute_force(spec, limits.oracle_limit);
  const GenerationList lex = lex_generate(spec);
  add("lex_equals_brute_force", true, lex == brute ? "" : detail::first_mismatch(lex, brute));

  GenerationList loopless;
  std::vector<TransitionDelta> deltas;
  guarded("loopless_sum_invariant", true, [&] {
    for_each_gray(
        spec,
        [&](const GrayEngine& e, const std::optional<TransitionDelta>& d) {
          loopless.push_back(e.current_vector());
          if (d) deltas.push_back(*d);
          return true;
        },
        EngineOptions{true});
    return std::string{};
  });

  add("loopless_first_object", true,
      !loopless.empty() && loopless.front() == first_combination(spec).a ? "" : "first emission is not the first combination");
  add("loopless_permutation", true, check_permutation(loopless, lex));
  add("loopless_adjacent", true, check_adjacent(loopless));
  guarded("loopless_deltas", true, [&]() -> std::string {
    if (deltas.size() + 1 != loopless.size()) return "delta count mismatch";
    for (std::size_t i = 0; i < deltas.size(); ++i) {
      if (apply_delta(spec, loopless[i], deltas[i]) != loopless[i + 1]) return "delta " + std::to_string(i + 1) + " inconsistent";
    }
    return {};
  });

  const GenerationList recursive = gray_generate_recursive(spec);
  add("recursive_permutation", true, check_permutation(recursive, lex));
  add("recursive_adjacent", true, check_adjacent(recursive));

  guarded("counts_agree", true, [&]() -> std::string {
    const Count dp = count_dp(spec);
    std::ostringstream os;
    if (spec.n() <= kDefaultSubsetLimit) {
      const Count ie = count_inclusion_exclusion(spec);
      if (ie != dp) os << "inclusion-exclusion " << ie << " != dp " << dp << "; ";
    }
    if (dp != brute.size()) os << "dp " << dp << " != brute force " << brute.size() << "; ";
    if (dp != loopless.size()) os << "dp " << dp << " != loopless emissions " << loopless.size() << "; ";
    if (dp != recursive.size()) os << "dp " << dp << " != recursive emissions " << recursive.size() << "; ";
    return os.str();
  });

  guarded("container_sweep", true, [&]() -> std::string {
    InPlaceGrayGenerator gen(spec);
    std::size_t step = 0;
    std::vector<int> before = gen.container().container();
    if (gen.container().sorted_form() != to_inplace(gen.engine().current_vector())) return "initial container mismatch";
    while (auto mv = gen.advance()) {
      ++step;
      const auto& after = gen.container().container();
      std::size_t changed = 0;
      for (std::size_t j = 0; j < after.size(); ++j) changed += before[j] != after[j];
      if (changed != 1) return "step " + std::to_string(step) + ": " + std::to_string(changed) + " container entries changed";
      if (gen.container().sorted_form() != to_inplace(gen.engine().current_vector())) {
        return "step " + std::to_string(step) + ": sorted container differs from in-place form";
      }
      for (int c = 1; c <= spec.n(); ++c) {
        if (gen.container().stack_size(c) != gen.engine().current()[static_cast<std::size_t>(c - 1)]) {
          return "step " + std::to_string(step) + ": stack size mismatch for component " + std::to_string(c);
        }
      }
      before = after;
    }
    return {};
  });

  if (lex.size() * static_cast<std::size_t>(spec.n()) + 1 > limits.tree_node_limit) {
    skip("tree_untwisted_is_lex", true, "tree exceeds node limit");
    skip("tree_twisted_gray", true, "tree exceeds node limit");
    skip("tree_twisted_matches_loopless", false, "tree exceeds node limit");
  } else {
    const LexTree tree = build_lexico_tree(spec, limits.tree_node_limit);
    add("tree_untwisted_is_lex", true, leaf_sequence(tree) == lex ? "" : "leaf order differs from lex order");
    const GenerationList twisted = leaf_sequence(twist(tree, ParityMode::skip_single_child));
    std::string gray_fail = check_permutation(twisted, lex);
    if (gray_fail.empty()) gray_fail = check_adjacent(twisted);
    add("tree_twisted_gray", true, gray_fail);
    add("tree_twisted_matches_loopless", false, twisted == loopless ? "" : detail::first_mismatch(twisted, loopless));
  }
  add("recursive_matches_loopless", false, recursive == loopless ? "" : detail::first_mismatch(recursive, loopless));
  return report;
}

inline void print_report(std::ostream& out, const VerifyReport& report) {
  out << "spec " << describe(report.spec) << '\n';
  for (const auto& p : report.properties) {
    const char* status = p.skipped ? "SKIP" : p.passed ? "PASS" : (p.mandatory ? "FAIL" : "DIFF");
    out << "  " << status << ' ' << p.name << (p.mandatory ? "" : " (reported)");
    if (!p.detail.empty()) out << ": " << p.detail;
    out << '\n';
  }
}

}  // namespace mscomb::cli
