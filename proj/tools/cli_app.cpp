#include "cli_app.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "cig/canonical.hpp"
#include "cig/engine.hpp"
#include "cig/errors.hpp"
#include "cig/generators.hpp"
#include "cig/graph_io.hpp"
#include "cig/rng.hpp"
#include "cig/solver.hpp"
#include "cig/strategies.hpp"
#include "cig/verifier.hpp"

namespace cig::cli {

namespace {

using json = nlohmann::ordered_json;

struct OutputConfig {
  std::string path;  // empty = stdout
  std::string format = "json";
};

void add_output_flags(CLI::App* cmd, OutputConfig& cfg) {
  cmd->add_option("--out", cfg.path, "Write the report to this file instead of stdout");
  cmd->add_option("--format", cfg.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

// CSV rows carry the same figures as the JSON document: one `key,value` row
// per scalar field, arrays contribute their length as `<key>.count`.
void write_csv(std::ostream& os, const json& j, const std::string& prefix = "") {
  for (const auto& [key, value] : j.items()) {
    std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      write_csv(os, value, name);
    } else if (value.is_array()) {
      os << name << ".count," << value.size() << "\n";
    } else {
      os << name << "," << value.dump() << "\n";
    }
  }
}

void emit(const OutputConfig& cfg, const json& j, std::ostream& out) {
  std::ostringstream body;
  if (cfg.format == "csv") {
    write_csv(body, j);
  } else {
    body << j.dump(2) << "\n";
  }
  if (cfg.path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(cfg.path);
    if (!f) fail(Errc::ParseError, "cannot open " + cfg.path);
    f << body.str();
  }
}

Mover parse_mover(const std::string& s) {
  if (s == "sweller") return Mover::Sweller;
  if (s == "diminisher") return Mover::Diminisher;
  fail(Errc::ParseError, "unknown mover: " + s);
}

CanonMode parse_canon(const std::string& s) {
  if (s == "raw") return CanonMode::Raw;
  if (s == "iso") return CanonMode::Iso;
  fail(Errc::ParseError, "unknown canon mode: " + s);
}

Forest load_input(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

// Deterministic parallel map: results land in input order regardless of jobs.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, int jobs, F&& f) {
  using R = decltype(f(items[0]));
  std::vector<R> results(items.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) results[i] = f(items[i]);
    return results;
  }
  std::vector<std::thread> workers;
  std::size_t chunk = (items.size() + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    std::size_t begin = w * chunk, end = std::min(items.size(), begin + chunk);
    if (begin >= end) break;
    workers.emplace_back([&, begin, end] {
      for (std::size_t i = begin; i < end; ++i) results[i] = f(items[i]);
    });
  }
  for (auto& t : workers) t.join();
  return results;
}

json report_json(long long checked, long long passed, json failures) {
  json j;
  j["checked"] = checked;
  j["passed"] = passed;
  j["failures"] = std::move(failures);
  return j;
}

int finish_report(const OutputConfig& cfg, const json& j, std::ostream& out) {
  emit(cfg, j, out);
  return j["failures"].empty() ? 0 : 1;
}

json edges_json(const std::vector<std::pair<int, int>>& edges) {
  json arr = json::array();
  for (auto [a, b] : edges) arr.push_back({a, b});
  return arr;
}

// ---- subcommand bodies ----------------------------------------------------

int run_gen(const std::string& kind, int n, int k, int c, std::uint64_t seed,
            const OutputConfig& cfg, std::ostream& out) {
  std::ostringstream body;
  if (kind == "path") {
    write_graph(body, path(n));
  } else if (kind == "sk") {
    write_graph(body, spider_sk(k));
  } else if (kind == "tk") {
    write_graph(body, tree_tk(k).first);
  } else if (kind == "random") {
    write_graph(body, random_tree(n, seed));
  } else if (kind == "forest") {
    write_graph(body, random_forest(n, c, seed));
  } else if (kind == "enum") {
    auto trees = enumerate_trees(n);
    for (std::size_t i = 0; i < trees.size(); ++i) {
      body << "# tree " << i << "\n";
      write_graph(body, trees[i]);
    }
  }
  if (cfg.path.empty()) {
    out << body.str();
  } else {
    std::ofstream f(cfg.path);
    if (!f) fail(Errc::ParseError, "cannot open " + cfg.path);
    f << body.str();
  }
  return 0;
}

int run_solve(const Forest& f, Mover start, CanonMode canon, std::size_t memo_limit,
              const OutputConfig& cfg, std::ostream& out) {
  SolveOptions options;
  options.canon = canon;
  options.memo_limit = memo_limit;
  SolveResult r = solve(GameState::initial(f), start, options);
  json j;
  j["value"] = r.value;
  j["optimal_moves"] = r.optimal_moves;
  j["stats"] = {{"visited", r.stats.visited},
                {"memo_hits", r.stats.memo_hits},
                {"peak_memo", r.stats.peak_memo}};
  emit(cfg, j, out);
  return 0;
}

int run_verify_witnesses(int max_n, int jobs, const OutputConfig& cfg, std::ostream& out) {
  std::vector<Forest> instances;
  for (int n = 2; n <= max_n; ++n) {
    for (auto& f : enumerate_forests(n)) instances.push_back(std::move(f));
  }
  struct Result {
    long long checked = 0;
    json failures = json::array();
  };
  auto results = parallel_map(instances, jobs, [](const Forest& f) {
    Result r;
    GameState initial = GameState::initial(f);
    initial.alive.for_each([&](int wS) {
      auto [after, delta] = apply_move(initial, wS);
      after.alive.for_each([&](int wD) {
        ++r.checked;
        ExistenceReport rep = check_witness_moves(initial, wS, wD);
        for (const auto& claim : rep.missing) {
          r.failures.push_back({{"edges", edges_json(f.edges)},
                                {"wS", wS},
                                {"wD", wD},
                                {"claim", claim}});
        }
      });
    });
    return r;
  });
  long long checked = 0;
  json failures = json::array();
  for (auto& r : results) {
    checked += r.checked;
    for (auto& f : r.failures) failures.push_back(std::move(f));
  }
  return finish_report(cfg, report_json(checked, checked - failures.size(), std::move(failures)),
                       out);
}

int run_verify_rounds(int count, int max_n, std::uint64_t seed, int jobs, const OutputConfig& cfg,
                      std::ostream& out) {
  std::vector<int> indices(count);
  for (int i = 0; i < count; ++i) indices[i] = i;
  auto results = parallel_map(indices, jobs, [&](int i) {
    json failures = json::array();
    SplitMix64 rng(mix64(seed, i + 1));
    int n = 1 + static_cast<int>(rng.below(max_n));
    int c = 1 + static_cast<int>(rng.below(n));
    Forest f = random_forest(n, c, mix64(seed, 1000003ull * (i + 1)));
    GreedySweller greedy;
    LowestIdStrategy lowest;
    RandomStrategy random_d(mix64(seed, 2000003ull * (i + 1)));
    for (const Strategy* d : {static_cast<const Strategy*>(&lowest),
                              static_cast<const Strategy*>(&random_d)}) {
      GameTrace trace = play_game(f, Mover::Sweller, greedy, *d);
      RoundReport rounds = check_round_bound(trace);
      for (const auto& v : rounds.violations) {
        failures.push_back({{"instance", i}, {"round", v.round}, {"lhs8", v.lhs8},
                            {"limit8", v.limit8}});
      }
      ConservationReport cons = check_trace_conservation(trace);
      if (!cons.ok) failures.push_back({{"instance", i}, {"conservation", cons.violation}});
    }
    return failures;
  });
  long long checked = 2ll * count;
  json failures = json::array();
  for (auto& r : results) {
    for (auto& f : r) failures.push_back(std::move(f));
  }
  return finish_report(cfg, report_json(checked, checked - failures.size(), std::move(failures)),
                       out);
}

int run_verify_cases(int l_max, int p_max, const OutputConfig& cfg, std::ostream& out) {
  GridReport r = verify_case_grid(l_max, p_max);
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back(
        {{"kind", f.kind}, {"l", f.l}, {"p", f.p}, {"case", f.case_id}, {"margin8", f.margin8}});
  }
  json j = report_json(r.pairs_checked, r.pairs_checked - failures.size(), std::move(failures));
  j["infeasible_pairs"] = r.infeasible_pairs;
  return finish_report(cfg, j, out);
}

int run_verify_lower_bound(int max_n, int forest_n, int jobs, const OutputConfig& cfg,
                           std::ostream& out) {
  std::vector<Forest> instances;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& t : enumerate_trees(n)) instances.push_back(std::move(t));
  }
  for (int n = 1; n <= forest_n; ++n) {
    for (auto& f : enumerate_forests(n)) {
      if (f.component_count > 1) instances.push_back(std::move(f));
    }
  }
  SolveOptions options{.canon = CanonMode::Iso};
  auto results = parallel_map(instances, jobs, [&](const Forest& f) {
    BoundReport r = check_global_lower_bound(f, true, options);
    json fails = json::array();
    if (!r.ok) {
      fails.push_back({{"edges", edges_json(f.edges)},
                       {"bound", r.bound},
                       {"greedy", r.greedy_value},
                       {"optimal", *r.optimal_value}});
    }
    return fails;
  });
  json failures = json::array();
  for (auto& r : results) {
    for (auto& f : r) failures.push_back(std::move(f));
  }
  long long checked = static_cast<long long>(instances.size());
  return finish_report(cfg, report_json(checked, checked - failures.size(), std::move(failures)),
                       out);
}

int run_verify_tk(int k_full, int k_max, const OutputConfig& cfg, std::ostream& out) {
  json failures = json::array();
  json rows = json::array();
  long long checked = 0;
  for (int k = 1; k <= k_max; ++k) {
    ++checked;
    TkReport r = check_tk_upper_bound(k, k <= k_full);
    json row = {{"k", r.k},
                {"n", r.n},
                {"move_bound", r.move_bound},
                {"certified_length", r.certified_length}};
    if (r.exact_value) row["exact_value"] = *r.exact_value;
    row["below_three_sevenths"] = r.below_three_sevenths;
    rows.push_back(row);
    if (!r.ok) failures.push_back(row);
  }
  json j = report_json(checked, checked - failures.size(), std::move(failures));
  j["rows"] = std::move(rows);
  return finish_report(cfg, j, out);
}

int run_verify_ratio(int max_n, const OutputConfig& cfg, std::ostream& out) {
  RatioReport r = scan_ratio(max_n);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"min_is", row.min_value}, {"edges", edges_json(row.argmin_edges)}});
  }
  json failures = json::array();
  if (!r.ok) failures.push_back({{"reason", "ratio outside [5/13, 1]"}});
  json j = report_json(r.rows.size(), r.rows.size() - failures.size(), std::move(failures));
  j["rows"] = std::move(rows);
  return finish_report(cfg, j, out);
}

int run_verify_id(int max_n, const OutputConfig& cfg, std::ostream& out) {
  IdReport r = scan_conjecture_id(max_n);
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"max_id", row.max_value}, {"bound", row.bound}});
  }
  json failures = json::array();
  for (const auto& ce : r.counterexamples) failures.push_back({{"edges", edges_json(ce)}});
  json j = report_json(r.rows.size(), r.rows.size() - failures.size(), std::move(failures));
  j["rows"] = std::move(rows);
  return finish_report(cfg, j, out);
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact engine and verifier for the competition-independence game on forests"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a forest in the graph text format");
  gen->require_subcommand(1);
  int gen_n = 0, gen_k = 1, gen_c = 1;
  std::uint64_t gen_seed = 0;
  OutputConfig gen_cfg;
  std::string gen_kind;
  for (const char* kind : {"path", "sk", "tk", "random", "forest", "enum"}) {
    auto* sub = gen->add_subcommand(kind);
    if (std::string(kind) == "path" || std::string(kind) == "random" ||
        std::string(kind) == "forest" || std::string(kind) == "enum") {
      sub->add_option("--n", gen_n, "Number of vertices")->required();
    }
    if (std::string(kind) == "sk" || std::string(kind) == "tk") {
      sub->add_option("--k", gen_k, "Number of legs per spider")->required();
    }
    if (std::string(kind) == "forest") {
      sub->add_option("--c", gen_c, "Number of components")->required();
    }
    if (std::string(kind) == "random" || std::string(kind) == "forest") {
      sub->add_option("--seed", gen_seed, "PRNG seed");
    }
    sub->add_option("--out", gen_cfg.path, "Output file (default stdout)");
    sub->callback([&gen_kind, kind] { gen_kind = kind; });
  }

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Exact game value of a forest");
  std::string solve_input, solve_start = "sweller", solve_canon = "raw";
  std::size_t solve_memo = 50'000'000;
  OutputConfig solve_cfg;
  solve_cmd->add_option("--input", solve_input, "Graph file ('-' for stdin)")->required();
  solve_cmd->add_option("--start", solve_start, "First mover: sweller or diminisher")
      ->check(CLI::IsMember({"sweller", "diminisher"}));
  solve_cmd->add_option("--canon", solve_canon, "Memo key mode: raw or iso")
      ->check(CLI::IsMember({"raw", "iso"}));
  solve_cmd->add_option("--memo-limit", solve_memo, "Maximum memo entries");
  add_output_flags(solve_cmd, solve_cfg);

  // play
  auto* play_cmd = app.add_subcommand("play", "Play two strategies and export the trace");
  std::string play_input, play_start = "sweller", play_s = "greedy", play_d = "lowest";
  int play_tk_k = 0;
  OutputConfig play_cfg;
  play_cmd->add_option("--input", play_input, "Graph file ('-' for stdin)");
  play_cmd->add_option("--tk-k", play_tk_k, "Play on a generated T_k (required for strategy 'tk')");
  play_cmd->add_option("--start", play_start, "First mover")
      ->check(CLI::IsMember({"sweller", "diminisher"}));
  play_cmd->add_option("--sweller", play_s, "Sweller strategy");
  play_cmd->add_option("--diminisher", play_d, "Diminisher strategy");
  add_output_flags(play_cmd, play_cfg);

  // verify
  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->require_subcommand(1);
  int v_max_n = 9, v_count = 1000, v_rounds_n = 60, v_lmax = 200, v_pmax = 200;
  int v_lb_n = 12, v_lb_forest_n = 10, v_k_full = 3, v_k_max = 8, v_ratio_n = 12, v_id_n = 12;
  int jobs = 1;
  std::uint64_t v_seed = 1;
  OutputConfig v_cfg;
  auto* witnesses = verify->add_subcommand("witnesses", "Witness-existence sweep over small forests");
  witnesses->add_option("--max-n", v_max_n, "Largest forest order");
  auto* rounds = verify->add_subcommand("rounds", "Per-round potential bound on greedy traces");
  rounds->add_option("--count", v_count, "Number of random forests");
  rounds->add_option("--max-n", v_rounds_n, "Largest forest order");
  rounds->add_option("--seed", v_seed, "Base seed");
  auto* cases = verify->add_subcommand("cases", "Closing-case grid check");
  cases->add_option("--l-max", v_lmax, "Largest l");
  cases->add_option("--p-max", v_pmax, "Largest p");
  auto* lower = verify->add_subcommand("lower-bound", "(5n+3C)/13 lower bound sweep");
  lower->add_option("--max-n", v_lb_n, "Largest tree order");
  lower->add_option("--forest-n", v_lb_forest_n, "Largest forest order (0 to skip forests)");
  auto* tk_cmd = verify->add_subcommand("tk", "T_k upper-bound certification");
  tk_cmd->add_option("--k-full", v_k_full, "Solve exactly up to this k");
  tk_cmd->add_option("--k-max", v_k_max, "Certify restricted bound up to this k");
  auto* ratio = verify->add_subcommand("ratio", "Minimum I_s(T)/n per order");
  ratio->add_option("--max-n", v_ratio_n, "Largest tree order");
  auto* idc = verify->add_subcommand("id-conjecture", "I_d(T) <= 3n/4 scan");
  idc->add_option("--max-n", v_id_n, "Largest tree order");
  for (CLI::App* sub : {witnesses, rounds, cases, lower, tk_cmd, ratio, idc}) {
    sub->add_option("--jobs", jobs, "Parallel workers (output independent of N)");
    add_output_flags(sub, v_cfg);
  }

  std::vector<const char*> argv;
  argv.push_back("cig");
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_kind, gen_n, gen_k, gen_c, gen_seed, gen_cfg, out);
    if (solve_cmd->parsed()) {
      return run_solve(load_input(solve_input), parse_mover(solve_start),
                       parse_canon(solve_canon), solve_memo, solve_cfg, out);
    }
    if (play_cmd->parsed()) {
      Forest f;
      TkLayout layout;
      const TkLayout* layout_ptr = nullptr;
      if (play_tk_k > 0) {
        auto built = tree_tk(play_tk_k);
        f = std::move(built.first);
        layout = std::move(built.second);
        layout_ptr = &layout;
      } else if (!play_input.empty()) {
        f = load_input(play_input);
      } else {
        err << "play: need --input or --tk-k\n";
        return 2;
      }
      auto s = make_strategy(play_s, Mover::Sweller, layout_ptr);
      auto d = make_strategy(play_d, Mover::Diminisher, layout_ptr);
      GameTrace trace = play_game(f, parse_mover(play_start), *s, *d);
      if (play_cfg.path.empty()) {
        out << trace_json(trace) << "\n";
      } else {
        std::ofstream file(play_cfg.path);
        file << trace_json(trace) << "\n";
      }
      return 0;
    }
    if (witnesses->parsed()) return run_verify_witnesses(v_max_n, jobs, v_cfg, out);
    if (rounds->parsed()) return run_verify_rounds(v_count, v_rounds_n, v_seed, jobs, v_cfg, out);
    if (cases->parsed()) return run_verify_cases(v_lmax, v_pmax, v_cfg, out);
    if (lower->parsed()) return run_verify_lower_bound(v_lb_n, v_lb_forest_n, jobs, v_cfg, out);
    if (tk_cmd->parsed()) return run_verify_tk(v_k_full, v_k_max, v_cfg, out);
    if (ratio->parsed()) return run_verify_ratio(v_ratio_n, v_cfg, out);
    if (idc->parsed()) return run_verify_id(v_id_n, v_cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace cig::cli
