// Acceptance suite: runs every headline check at full scale and prints one
// pass/fail line per criterion. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "cig/canonical.hpp"
#include "cig/engine.hpp"
#include "cig/generators.hpp"
#include "cig/rng.hpp"
#include "cig/solver.hpp"
#include "cig/strategies.hpp"
#include "cig/verifier.hpp"
#include "support/brute_force.hpp"

using namespace cig;
using cig::testing::brute_force_value;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s  %2d  %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
}

Forest relabel(const Forest& f, const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : f.edges) edges.emplace_back(perm[a], perm[b]);
  return build_forest(f.order, std::move(edges));
}

// 1. Exact I_s >= ceil((5n+3)/13) for every tree with n <= 12.
void criterion_tree_lower_bound() {
  SolveOptions options{.canon = CanonMode::Iso};
  long long checked = 0, bad = 0;
  for (int n = 1; n <= 12; ++n) {
    for (const Forest& t : enumerate_trees(n)) {
      ++checked;
      int value = solve(GameState::initial(t), Mover::Sweller, options).value;
      if (value < lower_bound_13(n, 1)) ++bad;
    }
  }
  report(1, bad == 0 && checked == 987,
         "exact I_s >= ceil((5n+3)/13) on all " + std::to_string(checked) +
             " trees with n <= 12, violations: " + std::to_string(bad));
}

// 2. Exact I_s >= ceil((5n+3C)/13) for every forest with n <= 10.
void criterion_forest_lower_bound() {
  SolveOptions options{.canon = CanonMode::Iso};
  long long checked = 0, bad = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const Forest& f : enumerate_forests(n)) {
      ++checked;
      int value = solve(GameState::initial(f), Mover::Sweller, options).value;
      if (value < lower_bound_13(f.order, f.component_count)) ++bad;
    }
  }
  report(2, bad == 0,
         "exact I_s >= ceil((5n+3C)/13) on all " + std::to_string(checked) +
             " forests with n <= 10, violations: " + std::to_string(bad));
}

// 3. Greedy guarantee and per-round bound on 1000 seeded random forests, n <= 60.
void criterion_greedy_guarantee() {
  const std::uint64_t base_seed = 20260823;
  SolveOptions options{.canon = CanonMode::Iso};
  GreedySweller greedy;
  LowestIdStrategy lowest;
  long long bound_bad = 0, round_bad = 0, conservation_bad = 0;
  for (int i = 0; i < 1000; ++i) {
    SplitMix64 rng(mix64(base_seed, i + 1));
    int n = 1 + static_cast<int>(rng.below(60));
    int c = 1 + static_cast<int>(rng.below(n));
    Forest f = random_forest(n, c, mix64(base_seed, 7919ull * (i + 1)));

    int value = solve_vs_fixed(GameState::initial(f), Mover::Sweller, Mover::Sweller, greedy,
                               Objective::Minimize, options)
                    .value;
    if (value < lower_bound_13(f.order, f.component_count)) ++bound_bad;

    RandomStrategy random_d(mix64(base_seed, 104729ull * (i + 1)));
    for (const Strategy* d :
         {static_cast<const Strategy*>(&lowest), static_cast<const Strategy*>(&random_d)}) {
      GameTrace trace = play_game(f, Mover::Sweller, greedy, *d);
      if (!check_round_bound(trace).ok()) ++round_bad;
      if (!check_trace_conservation(trace).ok) ++conservation_bad;
    }
  }
  report(3, bound_bad == 0 && round_bad == 0 && conservation_bad == 0,
         "greedy-vs-optimal >= ceil((5n+3C)/13) and round bounds on 1000 random forests "
         "(violations: " +
             std::to_string(bound_bad) + " bound, " + std::to_string(round_bad) + " round, " +
             std::to_string(conservation_bad) + " conservation)");
}

// 4. T_k upper bound: exact for k <= 3, certified restricted bound for k <= 31.
void criterion_tk_upper_bound() {
  bool ok = true;
  std::string detail;
  const int exact_limits[4] = {0, 5, 8, 10};
  for (int k = 1; k <= 3; ++k) {
    TkReport r = check_tk_upper_bound(k, true);
    if (!r.ok || !r.exact_value || *r.exact_value > exact_limits[k]) ok = false;
  }
  int certified_31 = -1;
  for (int k = 4; k <= 31; ++k) {
    TkReport r = check_tk_upper_bound(k, false);
    if (!r.ok) ok = false;
    if (k == 31) {
      certified_31 = r.certified_length;
      if (!r.below_three_sevenths) ok = false;  // 7 * length < 3n refutes 3n/7
    }
  }
  for (int k = 1; k <= 100; ++k) {
    if (12 * tk_move_bound(k) > 5 * 2 * (3 * k + 1) + 26) ok = false;
  }
  report(4, ok,
         "T_k certified lengths within 2+floor((k-1)/2)+2*ceil((k+1)/2)+k for k <= 31; "
         "k=31 certified " +
             std::to_string(certified_31) + " <= 80 < 3*188/7");
}

// 5. Path values: exact n <= 30, within 2 of 3n/7, brute-force checked n <= 14.
void criterion_paths() {
  bool ok = true;
  for (int n = 1; n <= 30; ++n) {
    Forest p = path(n);
    int value = solve(GameState::initial(p), Mover::Sweller, {.canon = CanonMode::Iso}).value;
    if (7 * value < 3 * n - 14 || 7 * value > 3 * n + 14) ok = false;
    if (n <= 14 && value != brute_force_value(GameState::initial(p), Mover::Sweller)) ok = false;
  }
  report(5, ok, "I_s(P_n) for n = 1..30 within 2 of 3n/7; n <= 14 equal to brute force");
}

// 6. Witness claims hold for every tree n <= 9 and every legal (wS, wD) pair.
void criterion_existence() {
  long long checked = 0, bad = 0;
  for (int n = 2; n <= 9; ++n) {
    for (const Forest& t : enumerate_trees(n)) {
      GameState initial = GameState::initial(t);
      initial.alive.for_each([&](int wS) {
        auto [after, d] = apply_move(initial, wS);
        after.alive.for_each([&](int wD) {
          ++checked;
          if (!check_witness_moves(initial, wS, wD).ok()) ++bad;
        });
      });
    }
  }
  report(6, bad == 0,
         "witness claims on all trees n <= 9, " + std::to_string(checked) +
             " (wS, wD) pairs, violations: " + std::to_string(bad));
}

// 7. Case grid covers [0,200]^2 with valid closing inequalities.
void criterion_grid() {
  GridReport r = verify_case_grid(200, 200);
  report(7, r.ok(),
         "case grid over (l,p) in [0,200]^2: " + std::to_string(r.pairs_checked) +
             " pairs, failures: " + std::to_string(r.failures.size()));
}

// 8. Conservation identities on traces of assorted strategy pairs.
void criterion_conservation() {
  const std::uint64_t seed = 424242;
  long long checked = 0, bad = 0;
  GreedySweller greedy;
  LowestIdStrategy lowest;
  for (int i = 0; i < 400; ++i) {
    SplitMix64 rng(mix64(seed, i + 1));
    int n = 1 + static_cast<int>(rng.below(40));
    int c = 1 + static_cast<int>(rng.below(n));
    Forest f = random_forest(n, c, rng.next());
    RandomStrategy s(rng.next()), d(rng.next());
    const Strategy* swellers[] = {&greedy, static_cast<const Strategy*>(&s)};
    const Strategy* diminishers[] = {static_cast<const Strategy*>(&lowest),
                                     static_cast<const Strategy*>(&d)};
    for (const Strategy* sw : swellers) {
      for (const Strategy* di : diminishers) {
        ++checked;
        GameTrace trace = play_game(f, i % 2 ? Mover::Diminisher : Mover::Sweller, *sw, *di);
        ConservationReport cr = check_trace_conservation(trace);
        if (!cr.ok || !chosen_set_is_maximal_independent(trace)) ++bad;
      }
    }
  }
  report(8, bad == 0,
         "conservation identities on " + std::to_string(checked) +
             " traces, violations: " + std::to_string(bad));
}

// 9. Memoized solver (both canon modes) agrees with memo-free brute force, n <= 10.
void criterion_oracle_equivalence() {
  long long checked = 0, bad = 0;
  for (int n = 1; n <= 10; ++n) {
    for (const Forest& f : enumerate_forests(n)) {
      GameState s = GameState::initial(f);
      for (Mover m : {Mover::Sweller, Mover::Diminisher}) {
        ++checked;
        int oracle = brute_force_value(s, m);
        if (solve(s, m, {.canon = CanonMode::Raw}).value != oracle) ++bad;
        if (solve(s, m, {.canon = CanonMode::Iso}).value != oracle) ++bad;
      }
    }
  }
  report(9, bad == 0,
         "memoized raw/iso values equal brute force on all forests n <= 10 (" +
             std::to_string(checked) + " solves), violations: " + std::to_string(bad));
}

// 10. Property suite: greedy argmin scan, canonical relabeling invariance,
// deterministic replay.
void criterion_properties() {
  bool ok = true;
  StrategyParams params;

  SplitMix64 rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng.below(40));
    int c = 1 + static_cast<int>(rng.below(n));
    Forest f = random_forest(n, c, rng.next());
    GameState s = GameState::initial(f);
    std::vector<int> argmin = greedy_argmin(s, params);
    int best = potential8(move_delta(s, argmin.front()), params);
    s.alive.for_each([&](int u) {
      if (potential8(move_delta(s, u), params) < best) ok = false;
    });
  }

  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + static_cast<int>(rng.below(24));
    int c = 1 + static_cast<int>(rng.below(n));
    Forest f = random_forest(n, c, rng.next());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    if (canonical_key(GameState::initial(f)) != canonical_key(GameState::initial(relabel(f, perm))))
      ok = false;
  }

  for (int trial = 0; trial < 50; ++trial) {
    Forest f = random_forest(30, 3, 1000 + trial);
    GreedySweller greedy;
    RandomStrategy d(555 + trial);
    GameTrace a = play_game(f, Mover::Sweller, greedy, d);
    GameTrace b = play_game(f, Mover::Sweller, greedy, d);
    if (a.total_moves() != b.total_moves()) ok = false;
    for (int i = 0; ok && i < a.total_moves(); ++i) {
      if (a.moves[i].vertex != b.moves[i].vertex) ok = false;
    }
  }
  report(10, ok, "greedy argmin scan, 1000 relabeling invariance checks, deterministic replay");
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion_tree_lower_bound();
  criterion_forest_lower_bound();
  criterion_greedy_guarantee();
  criterion_tk_upper_bound();
  criterion_paths();
  criterion_existence();
  criterion_grid();
  criterion_conservation();
  criterion_oracle_equivalence();
  criterion_properties();
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  std::printf("%s (%lld s, %d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
              static_cast<long long>(elapsed), failures);
  return failures == 0 ? 0 : 1;
}
