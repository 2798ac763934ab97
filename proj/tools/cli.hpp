#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 usage or spec error.

#include <CLI11.hpp>
#include <json.hpp>

#include <mscomb/mscomb.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "verify.hpp"

namespace mscomb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

enum class Order { lex, gray_recursive, gray_loopless };
enum class Form { vector, inplace, delta };
enum class OutputFormat { text, json_lines };

struct RunConfig {
  MultisetSpec spec;
  Order order = Order::gray_loopless;
  Form form = Form::vector;
  OutputFormat output = OutputFormat::text;
  std::optional<std::uint64_t> limit;
};

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void check_config(const RunConfig& cfg) {
  require_valid(cfg.spec);
  if (cfg.order == Order::lex && cfg.form == Form::delta) {
    throw usage_error("--form delta requires a Gray order; lex order is not adjacent");
  }
  if (cfg.limit && *cfg.limit < 1) throw usage_error("--limit must be at least 1");
}

namespace detail {

class Emitter {
 public:
  Emitter(std::ostream& out, const RunConfig& cfg) : out_(out), cfg_(cfg) {}

  void object(std::uint64_t index, const CombinationVector& a, const std::vector<int>* container) {
    if (cfg_.form == Form::vector) {
      if (cfg_.output == OutputFormat::json_lines) {
        out_ << nlohmann::json{{"i", index}, {"a", a.counts}}.dump() << '\n';
      } else {
        out_ << a << '\n';
      }
    } else if (cfg_.form == Form::inplace) {
      std::vector<int> elems = container ? *container : to_inplace(a).elems;
      if (cfg_.output == OutputFormat::json_lines) {
        out_ << nlohmann::json{{"i", index}, {"elems", elems}}.dump() << '\n';
      } else {
        out_ << InPlaceForm{elems} << '\n';
      }
    }
  }

  void delta(const TransitionDelta& d) {
    if (cfg_.output == OutputFormat::json_lines) {
      out_ << nlohmann::json{{"inc", d.inc}, {"dec", d.dec}}.dump() << '\n';
    } else {
      out_ << d << '\n';
    }
  }

 private:
  std::ostream& out_;
  const RunConfig& cfg_;
};

}  // namespace detail

/// Streams the configured enumeration. Returns the number of records written
/// and whether the limit cut it short.
struct EnumerateResult {
  std::uint64_t records = 0;
  bool truncated = false;
};

inline EnumerateResult cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  check_config(cfg);
  detail::Emitter emit(out, cfg);
  EnumerateResult res;
  const std::uint64_t limit = cfg.limit.value_or(UINT64_MAX);
  // For the delta form a record is one transition; otherwise one object.
  auto want_more = [&] {
    if (res.records < limit) return true;
    res.truncated = true;
    return false;
  };

  if (cfg.order == Order::gray_loopless) {
    if (cfg.form == Form::inplace) {
      InPlaceGrayGenerator gen(cfg.spec);
      std::uint64_t index = 0;
      if (!want_more()) return res;
      emit.object(index++, gen.engine().current_vector(), &gen.container().container());
      ++res.records;
      while (gen.advance()) {
        if (!want_more()) return res;
        emit.object(index++, gen.engine().current_vector(), &gen.container().container());
        ++res.records;
      }
      return res;
    }
    GrayEngine engine(cfg.spec);
    std::uint64_t index = 0;
    if (cfg.form == Form::vector) {
      if (!want_more()) return res;
      emit.object(index++, engine.current_vector(), nullptr);
      ++res.records;
    }
    while (true) {
      if (engine.finished()) break;
      if (!want_more()) return res;
      auto d = engine.advance();
      if (cfg.form == Form::delta) {
        emit.delta(*d);
      } else {
        emit.object(index++, engine.current_vector(), nullptr);
      }
      ++res.records;
    }
    return res;
  }

  std::optional<CombinationVector> prev;
  std::uint64_t index = 0;
  Visitor visit = [&](const CombinationVector& a) {
    if (cfg.form == Form::delta) {
      if (prev) {
        if (!want_more()) return false;
        auto d = delta_between(*prev, a);
        if (!d) throw std::logic_error("recursive Gray generator produced a non-adjacent step");
        emit.delta(*d);
        ++res.records;
      }
      prev = a;
      return true;
    }
    if (!want_more()) return false;
    emit.object(index++, a, nullptr);
    ++res.records;
    return true;
  };
  if (cfg.order == Order::lex) {
    lex_visit(cfg.spec, visit);
  } else {
    gray_visit_recursive(cfg.spec, ParityMode::global, visit);
  }
  return res;
}

enum class CountMethod { ie, dp, both };

inline int cmd_count(const MultisetSpec& spec, CountMethod method, bool breakdown, std::ostream& out, std::ostream& err) {
  require_valid(spec);
  std::optional<Count> ie;
  std::optional<Count> dp;
  if (method != CountMethod::dp) {
    try {
      auto bd = inclusion_exclusion_breakdown(spec);
      if (breakdown) {
        out << "closure C(" << spec.n() + spec.k - 1 << ", " << spec.k << ") = " << bd.by_order[0] << '\n';
        for (const auto& t : bd.terms) {
          if (t.subset.empty()) continue;
          out << (t.subset.size() % 2 ? "- " : "+ ") << "|A";
          for (std::size_t j = 0; j < t.subset.size(); ++j) out << (j ? "∩A" : "") << t.subset[j];
          out << "| = |S(B, " << t.reduced_k << ")| = " << t.magnitude << '\n';
        }
        for (std::size_t r = 1; r < bd.by_order.size(); ++r) {
          if (bd.by_order[r] != 0) out << "order " << r << " sum = " << bd.by_order[r] << '\n';
        }
      }
      ie = bd.total;
    } catch (const subset_limit_error& ex) {
      err << "error: " << ex.what() << '\n';
      return kExitUsage;
    }
  }
  if (method != CountMethod::ie) dp = count_dp(spec);
  if (method == CountMethod::both) {
    out << "inclusion-exclusion " << *ie << '\n' << "dp " << *dp << '\n';
    if (*ie != *dp) {
      err << "count mismatch for " << describe(spec) << '\n';
      return kExitFailure;
    }
    return kExitOk;
  }
  out << (ie ? *ie : *dp) << '\n';
  return kExitOk;
}

struct RandomBatch {
  int count = 200;
  int max_n = 6;
  int max_m = 4;
  std::uint64_t seed = 1;
};

/// Random multiplicity vectors, each expanded to every k in [0, total].
inline std::vector<MultisetSpec> random_specs(const RandomBatch& batch) {
  std::mt19937_64 rng(batch.seed);
  std::uniform_int_distribution<int> n_dist(1, batch.max_n);
  std::uniform_int_distribution<int> m_dist(1, batch.max_m);
  std::vector<MultisetSpec> out;
  for (int t = 0; t < batch.count; ++t) {
    std::vector<int> m(static_cast<std::size_t>(n_dist(rng)));
    for (int& x : m) x = m_dist(rng);
    MultisetSpec spec{m, 0};
    for (std::int64_t k = 0; k <= spec.total(); ++k) {
      spec.k = static_cast<int>(k);
      out.push_back(spec);
    }
  }
  return out;
}

inline int cmd_verify(const std::vector<MultisetSpec>& specs, int jobs, bool verbose, std::ostream& out,
                      std::ostream& err) {
  for (const auto& s : specs) require_valid(s);
  std::vector<VerifyReport> reports(specs.size());
  std::vector<std::string> errors(specs.size());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(specs.size())));
  auto worker = [&](int w) {
    for (std::size_t i = static_cast<std::size_t>(w); i < specs.size(); i += static_cast<std::size_t>(jobs)) {
      try {
        reports[i] = verify_spec(specs[i]);
      } catch (const std::exception& ex) {
        errors[i] = ex.what();
      }
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }

  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // name -> (passed, checked)
  std::map<std::string, bool> mandatory;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (!errors[i].empty()) {
      err << "error: " << describe(specs[i]) << ": " << errors[i] << '\n';
      return kExitUsage;
    }
    if (verbose || specs.size() == 1) print_report(out, reports[i]);
    for (const auto& p : reports[i].properties) {
      mandatory[p.name] = p.mandatory;
      if (p.skipped) continue;
      auto& [pass, checked] = tally[p.name];
      ++checked;
      pass += p.passed;
    }
  }
  if (specs.size() > 1) {
    out << "verified " << specs.size() << " specs\n";
    for (const auto& [name, pc] : tally) {
      const bool all = pc.first == pc.second;
      out << "  " << (all ? "PASS" : (mandatory[name] ? "FAIL" : "DIFF")) << ' ' << name << ' ' << pc.first << '/'
          << pc.second << (mandatory[name] ? "" : " (reported)") << '\n';
    }
  }
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (const auto* f = reports[i].first_failure()) {
      err << "counterexample: " << describe(specs[i]) << ": " << f->name << ": " << f->detail << '\n';
      return kExitFailure;
    }
  }
  out << "all mandatory properties pass\n";
  return kExitOk;
}

/// One JSON record per advance of the engine.
inline void write_trace(const MultisetSpec& spec, std::ostream& out) {
  GrayEngine engine(spec);
  std::uint64_t step = 0;
  while (auto d = engine.advance()) {
    const auto& t = engine.last_trace();
    out << nlohmann::json{{"step", ++step},  {"level", t.level},    {"dir", t.direction}, {"inc", d->inc},
                          {"dec", d->dec},   {"up", t.went_up},     {"down", t.went_down}, {"ops", t.op_count}}
               .dump()
        << '\n';
  }
}

inline int cmd_tree(const MultisetSpec& spec, bool twisted, ParityMode mode, bool leaves, std::size_t max_nodes,
                    std::ostream& out, std::ostream& err) {
  require_valid(spec);
  try {
    LexTree tree = build_lexico_tree(spec, max_nodes);
    if (twisted) tree = twist(tree, mode);
    if (leaves) {
      for (const auto& a : leaf_sequence(tree)) out << a << '\n';
    } else {
      out << export_dot(tree, max_nodes);
    }
  } catch (const oracle_limit_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

struct BenchRow {
  MultisetSpec spec;
  std::uint64_t objects = 0;
  bool complete = false;
  double objects_per_second = 0;
  int max_op_count = 0;
  std::int64_t max_step_ns = 0;
};

inline BenchRow bench_one(const MultisetSpec& spec, std::uint64_t max_steps) {
  using clock = std::chrono::steady_clock;
  BenchRow row{spec};
  GrayEngine engine(spec);
  row.objects = 1;
  const auto start = clock::now();
  while (row.objects <= max_steps) {
    const auto t0 = clock::now();
    auto d = engine.advance();
    const auto t1 = clock::now();
    if (!d) break;
    ++row.objects;
    row.max_op_count = std::max(row.max_op_count, engine.last_trace().op_count);
    row.max_step_ns = std::max<std::int64_t>(row.max_step_ns, std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  }
  row.complete = engine.finished();
  const double secs = std::chrono::duration<double>(clock::now() - start).count();
  row.objects_per_second = secs > 0 ? static_cast<double>(row.objects) / secs : 0.0;
  return row;
}

/// Parses grid tokens such as "n=10,100,1000", "m=3", "k=n/2", "k=half"
/// (floor of total/2) or "k=7".
inline std::vector<MultisetSpec> parse_grid(const std::vector<std::string>& tokens) {
  std::vector<int> ns;
  int m = 3;
  std::string k_expr = "half";
  for (const auto& tok : tokens) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw usage_error("bad grid token '" + tok + "'");
    const std::string key = tok.substr(0, eq);
    const std::string val = tok.substr(eq + 1);
    try {
      if (key == "n") {
        std::stringstream ss(val);
        for (std::string part; std::getline(ss, part, ',');) ns.push_back(std::stoi(part));
      } else if (key == "m") {
        m = std::stoi(val);
      } else if (key == "k") {
        k_expr = val;
      } else {
        throw usage_error("unknown grid key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      throw usage_error("bad grid value in '" + tok + "'");
    }
  }
  if (ns.empty()) throw usage_error("grid needs n=...");
  std::vector<MultisetSpec> out;
  for (int n : ns) {
    MultisetSpec spec = uniform_spec(n, m, 0);
    if (k_expr == "half" || k_expr == "sum/2") {
      spec.k = static_cast<int>(spec.total() / 2);
    } else if (k_expr == "n/2") {
      spec.k = n / 2;
    } else {
      try {
        spec.k = std::stoi(k_expr);
      } catch (const std::logic_error&) {
        throw usage_error("bad k expression '" + k_expr + "'");
      }
    }
    out.push_back(spec);
  }
  return out;
}

inline int cmd_bench(const std::vector<MultisetSpec>& specs, std::uint64_t max_steps, std::ostream& out) {
  for (const auto& s : specs) require_valid(s);
  out << "n\tk\tobjects\tcomplete\tobjects_per_s\tmax_ops\tmax_step_ns\n";
  for (const auto& s : specs) {
    BenchRow r = bench_one(s, max_steps);
    out << s.n() << '\t' << s.k << '\t' << r.objects << '\t' << (r.complete ? "yes" : "no") << '\t'
        << static_cast<std::uint64_t>(r.objects_per_second) << '\t' << r.max_op_count << '\t' << r.max_step_ns << '\n';
  }
  return kExitOk;
}

namespace detail {

struct SpecOptions {
  std::vector<int> m;
  int k = -1;
  int uniform = 0;
  int n = 0;

  void attach(CLI::App* app) {
    app->add_option("--m", m, "comma-separated multiplicities")->delimiter(',');
    app->add_option("--k", k, "combination size");
    app->add_option("--uniform", uniform, "use the same multiplicity for every component (with --n)");
    app->add_option("--n", n, "number of components for --uniform");
  }

  bool given() const { return !m.empty() || uniform > 0; }

  MultisetSpec build() const {
    if (k < 0) throw usage_error("--k is required");
    if (!m.empty() && uniform > 0) throw usage_error("--m and --uniform are mutually exclusive");
    if (uniform > 0) {
      if (n < 1) throw usage_error("--uniform needs --n >= 1");
      return uniform_spec(n, uniform, k);
    }
    if (m.empty()) throw usage_error("--m or --uniform is required");
    return MultisetSpec{m, k};
  }
};

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gray-order generation of bounded multiset combinations"};
  app.require_subcommand(1);

  detail::SpecOptions enum_spec, count_spec, verify_spec_opts, tree_spec, bench_spec;

  auto* enumerate = app.add_subcommand("enumerate", "stream every k-combination");
  enum_spec.attach(enumerate);
  std::string order = "gray-loopless", form = "vector", output = "text";
  std::uint64_t limit = 0;
  enumerate->add_option("--order", order, "lex | gray-recursive | gray-loopless")
      ->check(CLI::IsMember({"lex", "gray-recursive", "gray-loopless"}));
  enumerate->add_option("--form", form, "vector | inplace | delta")->check(CLI::IsMember({"vector", "inplace", "delta"}));
  enumerate->add_option("--output", output, "text | json-lines")->check(CLI::IsMember({"text", "json-lines"}));
  enumerate->add_option("--limit", limit, "stop after this many records");

  auto* count = app.add_subcommand("count", "count k-combinations exactly");
  count_spec.attach(count);
  std::string method = "dp";
  bool breakdown = false;
  count->add_option("--method", method, "ie | dp | both")->check(CLI::IsMember({"ie", "dp", "both"}));
  count->add_flag("--breakdown", breakdown, "print the inclusion-exclusion terms");

  auto* verify = app.add_subcommand("verify", "run the cross-oracle checks");
  verify_spec_opts.attach(verify);
  bool random = false, verbose = false;
  RandomBatch batch;
  int jobs = 1;
  std::string trace_path;
  verify->add_flag("--random", random, "verify a random batch instead of one spec");
  verify->add_option("--count", batch.count, "multiplicity vectors in the batch (each checked for every k)");
  verify->add_option("--max-n", batch.max_n, "largest n in the batch");
  verify->add_option("--max-m", batch.max_m, "largest multiplicity in the batch");
  verify->add_option("--seed", batch.seed, "random seed");
  verify->add_option("--jobs", jobs, "parallel workers");
  verify->add_flag("--verbose", verbose, "print every per-spec report");
  verify->add_option("--trace", trace_path, "write the engine step trace (json-lines) to a file, '-' for stdout");

  auto* tree = app.add_subcommand("tree", "render the lexico or twisted lexico tree");
  tree_spec.attach(tree);
  std::string mode = "twisted", parity = "skip";
  bool dot = false, leaves = false;
  std::size_t max_nodes = kDefaultDotNodeLimit;
  tree->add_option("--mode", mode, "lex | twisted")->check(CLI::IsMember({"lex", "twisted"}));
  tree->add_option("--parity", parity, "skip | global")->check(CLI::IsMember({"skip", "global"}));
  tree->add_flag("--dot", dot, "emit DOT (default)");
  tree->add_flag("--leaves", leaves, "print the leaf sequence instead of DOT");
  tree->add_option("--max-nodes", max_nodes, "node limit");

  auto* bench = app.add_subcommand("bench", "measure per-step cost of the loopless engine");
  bench_spec.attach(bench);
  std::vector<std::string> grid;
  std::uint64_t max_steps = 1'000'000;
  bench->add_option("--grid", grid, "grid tokens, e.g. n=10,100,1000 k=n/2 m=3");
  bench->add_option("--max-steps", max_steps, "advances per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    }
    return kExitUsage;
  }

  try {
    if (enumerate->parsed()) {
      RunConfig cfg;
      cfg.spec = enum_spec.build();
      cfg.order = order == "lex" ? Order::lex : order == "gray-recursive" ? Order::gray_recursive : Order::gray_loopless;
      cfg.form = form == "vector" ? Form::vector : form == "inplace" ? Form::inplace : Form::delta;
      cfg.output = output == "text" ? OutputFormat::text : OutputFormat::json_lines;
      if (enumerate->count("--limit")) cfg.limit = limit;
      auto res = cmd_enumerate(cfg, out);
      if (res.truncated) err << "truncated after " << res.records << " records (--limit)\n";
      return kExitOk;
    }
    if (count->parsed()) {
      const CountMethod cm = method == "ie" ? CountMethod::ie : method == "dp" ? CountMethod::dp : CountMethod::both;
      return cmd_count(count_spec.build(), cm, breakdown, out, err);
    }
    if (verify->parsed()) {
      std::vector<MultisetSpec> specs;
      if (random) {
        if (verify_spec_opts.given()) throw usage_error("--random excludes --m/--uniform");
        if (batch.count < 1 || batch.max_n < 1 || batch.max_m < 1) throw usage_error("batch parameters must be positive");
        specs = random_specs(batch);
      } else {
        specs.push_back(verify_spec_opts.build());
      }
      if (!trace_path.empty()) {
        if (specs.size() != 1) throw usage_error("--trace needs a single spec");
        require_valid(specs.front());
        if (trace_path == "-") {
          write_trace(specs.front(), out);
        } else {
          std::ofstream f(trace_path);
          if (!f) throw usage_error("cannot open trace file " + trace_path);
          write_trace(specs.front(), f);
        }
      }
      return cmd_verify(specs, jobs, verbose, out, err);
    }
    if (tree->parsed()) {
      const ParityMode pm = parity == "global" ? ParityMode::global : ParityMode::skip_single_child;
      return cmd_tree(tree_spec.build(), mode == "twisted", pm, leaves && !dot, max_nodes, out, err);
    }
    if (bench->parsed()) {
      std::vector<MultisetSpec> specs;
      if (!grid.empty()) {
        if (bench_spec.given()) throw usage_error("--grid excludes --m/--uniform");
        specs = parse_grid(grid);
      } else {
        specs.push_back(bench_spec.build());
      }
      return cmd_bench(specs, max_steps, out);
    }
  } catch (const spec_error& ex) {
    err << "error: invalid spec: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const usage_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  } catch (const oracle_limit_error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace mscomb::cli
