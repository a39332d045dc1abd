#include "cig/verifier.hpp"

#include <algorithm>
#include <functional>

#include "cig/canonical.hpp"
#include "cig/errors.hpp"
#include "cig/generators.hpp"

namespace cig {

int lower_bound_13(int n, int c) { return (5 * n + 3 * c + 12) / 13; }

int tk_move_bound(int k) { return 2 + (k - 1) / 2 + 2 * ((k + 2) / 2) + k; }

RoundReport check_round_bound(const GameTrace& trace, const StrategyParams& params) {
  if (trace.first_mover != Mover::Sweller) {
    fail(Errc::PreconditionUnmet, "round bound is stated for Sweller-start traces");
  }
  RoundReport report;
  int full_limit = 2 * params.beta_eighths;
  int tail_limit = params.beta_eighths;
  int r = trace.round_count();
  for (int i = 1; i <= r; ++i) {
    int lhs = potential8(trace.moves[2 * i - 2].delta, params) +
              potential8(trace.moves[2 * i - 1].delta, params);
    ++report.rounds_checked;
    if (lhs > full_limit) report.violations.push_back({i, lhs, full_limit});
  }
  if (trace.total_moves() % 2 == 1) {
    int lhs = potential8(trace.moves.back().delta, params);
    ++report.rounds_checked;
    if (lhs > tail_limit) report.violations.push_back({r + 1, lhs, tail_limit});
  }
  return report;
}

DiminisherMoveProfile diminisher_profile(const GameState& after_sweller, int wD) {
  DiminisherMoveProfile profile;
  profile.l = (after_sweller.base->open_mask[wD] & after_sweller.alive).count();
  MoveDelta d = move_delta(after_sweller, wD);
  profile.p = d.e - profile.l;
  profile.q_cap = profile.l >= 1 ? profile.p / profile.l : 0;
  return profile;
}

namespace {

struct Clause {
  std::string id;
  std::function<std::optional<int>(const MoveDelta&)> match;  // returns realized q
};

// A claim is a disjunction of clauses; it needs one witness overall.
struct Claim {
  std::string id;
  std::vector<Clause> clauses;
};

std::vector<Claim> applicable_claims(const DiminisherMoveProfile& profile) {
  const int l = profile.l, p = profile.p, q_cap = profile.q_cap;
  std::vector<Claim> claims;

  if (l >= 1) {
    claims.push_back(
        {"neighbor",
         {{"neighbor.plain",
           [=](const MoveDelta& d) -> std::optional<int> {
             int q = d.v - 2;
             if (q >= 0 && q <= q_cap && d.e >= q + l && d.k >= l - p - 2) return q;
             return std::nullopt;
           }},
          {"neighbor.shared",
           [=](const MoveDelta& d) -> std::optional<int> {
             int q = d.v - 3;
             if (q >= 0 && q <= q_cap && d.e >= q + l + 2 && d.k >= l - p - 1) return q;
             return std::nullopt;
           }}}});
    claims.push_back(
        {"copy",
         {{"copy.plain",
           [=](const MoveDelta& d) -> std::optional<int> {
             if (d.v == l + 1 && d.e >= p + l) return 0;
             return std::nullopt;
           }},
          {"copy.shared",
           [=](const MoveDelta& d) -> std::optional<int> {
             if (d.v == l + 2 && d.e >= p + l + 2) return 0;
             return std::nullopt;
           }}}});
  }

  auto simple = [](std::string id, int v, int e_min, int k_min) {
    return Clause{std::move(id), [=](const MoveDelta& d) -> std::optional<int> {
                    if (d.v == v && d.e >= e_min && d.k >= k_min) return 0;
                    return std::nullopt;
                  }};
  };

  if (l == 2 && p == 0) {
    claims.push_back({"small.l2p0",
                      {simple("small.l2p0.leaf", 2, 2, 1), simple("small.l2p0.shared", 3, 4, 1)}});
  } else if (l == 3 && p == 0) {
    claims.push_back({"small.l3p0", {simple("small.l3p0", 2, 3, 1)}});
  } else if (l == 3 && p == 1) {
    claims.push_back({"small.l3p1",
                      {simple("small.l3p1.leaf", 2, 3, 1), simple("small.l3p1.shared", 3, 5, 1)}});
  } else if ((l == 2 && p == 1) || (l == p && l >= 3 && l <= 4)) {
    claims.push_back({"small.deep_leaf", {simple("small.deep_leaf", 2, 2, -8)}});
  } else if (l == 1 && p == 0) {
    claims.push_back({"small.leaf", {simple("small.leaf", 2, 1, -8)}});
  } else if (l == 0 && p == 0) {
    claims.push_back({"small.l0",
                      {simple("small.l0.leaf", 2, 1, -8),
                       {"small.l0.isolated",
                        [](const MoveDelta& d) -> std::optional<int> {
                          if (d.v == 1 && d.k == -1) return 0;
                          return std::nullopt;
                        }}}});
  }
  return claims;
}

}  // namespace

ExistenceReport check_witness_moves(const GameState& preS, int wS, int wD) {
  auto [after_sweller, deltaS] = apply_move(preS, wS);
  if (!after_sweller.alive.test(wD)) {
    fail(Errc::PreconditionUnmet, "wD is not legal after Sweller plays wS");
  }
  ExistenceReport report;
  report.profile = diminisher_profile(after_sweller, wD);

  std::vector<Claim> claims = applicable_claims(report.profile);
  for (const auto& claim : claims) {
    bool found = false;
    preS.alive.for_each([&](int u) {
      MoveDelta d = move_delta(preS, u);
      for (const auto& clause : claim.clauses) {
        if (auto q = clause.match(d)) {
          report.witnesses.push_back({u, d, clause.id, *q});
          found = true;
        }
      }
    });
    if (!found) report.missing.push_back(claim.id);
  }
  return report;
}

namespace {

struct GridCase {
  const char* id;
  bool tight;  // margin must be exactly 0
  std::function<bool(int, int)> applies;
  // 26*8-scale margin of the closing inequality, >= 0 required; q is the
  // worst case floor(p/l).
  std::function<long long(int, int, int)> margin8;
};

const std::vector<GridCase>& grid_cases() {
  static const std::vector<GridCase> cases = {
      {"case01", false, [](int l, int p) { return p >= l + 1 && l >= 4; },
       [](int l, int p, int q) { return 3ll * p - 2ll * l - 5ll * q; }},
      {"case02", false, [](int l, int p) { return p == l && l >= 5; },
       [](int l, int p, int q) { return 3ll * p - 2ll * l - 5ll * q; }},
      {"case03", false, [](int l, int p) { return p == l - 1 && l >= 3; },
       [](int l, int p, int) { return 3ll * p - 2ll * l; }},
      {"case04", false, [](int l, int p) { return p <= l - 2 && l >= 4; },
       [](int l, int p, int) { return 3ll * l - 2ll * p - 8; }},
      {"case05", false, [](int l, int p) { return 5 * l - 3 * p <= 4 && l >= 1; },
       [](int l, int p, int) { return 2ll * (4 - 5ll * l + 3ll * p); }},
      {"case06", false, [](int l, int p) { return l == 2 && p == 0; },
       [](int, int, int) { return 26ll - 25; }},
      {"case07", false, [](int l, int p) { return l == 3 && p == 0; },
       [](int, int, int) { return 26ll - 25; }},
      {"case08", false, [](int l, int p) { return l == 3 && p == 1; },
       [](int, int, int) { return 26ll - 24; }},
      {"case09", false, [](int l, int p) { return l == 2 && p == 1; },
       [](int, int, int) { return 26ll - 25; }},
      {"case10", true, [](int l, int p) { return l == 1 && p == 0; },
       [](int, int, int) { return 26ll - 26; }},
      {"case11", true, [](int l, int p) { return l == 4 && p == 4; },
       [](int, int, int) { return 26ll - 26; }},
      {"case12", false, [](int l, int p) { return l == 3 && p == 3; },
       [](int, int, int) { return 26ll - 24; }},
      {"case13", false, [](int l, int p) { return l == 0 && p == 0; },
       [](int, int, int) { return 26ll - 21; }},
  };
  return cases;
}

}  // namespace

GridReport verify_case_grid(int l_max, int p_max) {
  if (l_max < 5 || p_max < 5) fail(Errc::PreconditionUnmet, "grid bounds must be at least 5");
  GridReport report;
  for (int l = 0; l <= l_max; ++l) {
    for (int p = 0; p <= p_max; ++p) {
      ++report.pairs_checked;
      if (l == 0 && p > 0) {
        // p counts edges at the neighbours of the played vertex; with no
        // neighbours there are none.
        ++report.infeasible_pairs;
        continue;
      }
      int q = l >= 1 ? p / l : 0;
      bool covered = false;
      for (const auto& c : grid_cases()) {
        if (!c.applies(l, p)) continue;
        covered = true;
        long long margin = c.margin8(l, p, q);
        if (margin < 0 || (c.tight && margin != 0)) {
          report.failures.push_back({"inequality", l, p, c.id, margin});
        }
      }
      if (!covered) report.failures.push_back({"uncovered", l, p, "", 0});
    }
  }
  return report;
}

BoundReport check_global_lower_bound(const Forest& f, bool with_full_solve,
                                     const SolveOptions& options) {
  BoundReport report;
  report.n = f.order;
  report.c = f.component_count;
  report.bound = lower_bound_13(f.order, f.component_count);

  GameState initial = GameState::initial(f);
  if (f.order == 0) {
    report.greedy_value = 0;
    report.ok = report.bound <= 0;
    return report;
  }
  GreedySweller greedy;
  report.greedy_value =
      solve_vs_fixed(initial, Mover::Sweller, Mover::Sweller, greedy, Objective::Minimize, options)
          .value;
  report.ok = report.greedy_value >= report.bound;
  if (with_full_solve) {
    report.optimal_value = solve(initial, Mover::Sweller, options).value;
    report.ok = report.ok && *report.optimal_value >= report.bound &&
                *report.optimal_value >= report.greedy_value;
  }
  return report;
}

TkReport check_tk_upper_bound(int k, bool with_full_solve, const SolveOptions& options) {
  TkReport report;
  report.k = k;
  auto [forest, layout] = tree_tk(k);
  report.n = forest.order;
  report.move_bound = tk_move_bound(k);

  TkDiminisher diminisher(layout);
  GameState initial = GameState::initial(forest);
  report.certified_length =
      solve_vs_fixed(initial, Mover::Sweller, Mover::Diminisher, diminisher, Objective::Maximize,
                     options)
          .value;
  report.below_three_sevenths = 7 * report.certified_length < 3 * report.n;
  report.ok = report.certified_length <= report.move_bound;
  // Closed-form count stays within (5n + 26) / 12.
  report.ok = report.ok && 12 * report.move_bound <= 5 * report.n + 26;
  if (with_full_solve) {
    report.exact_value = solve(initial, Mover::Sweller, options).value;
    report.ok = report.ok && *report.exact_value <= report.certified_length;
  }
  return report;
}

RatioReport scan_ratio(int max_n) {
  if (max_n < 1 || max_n > 14) fail(Errc::CapExceeded, "scan_ratio supports 1 <= max_n <= 14");
  RatioReport report;
  report.ok = true;
  SolveOptions options{.canon = CanonMode::Iso};
  for (int n = 1; n <= max_n; ++n) {
    RatioRow row;
    row.n = n;
    for (const Forest& t : enumerate_trees(n)) {
      int value = solve(GameState::initial(t), Mover::Sweller, options).value;
      if (row.min_value == 0 || value < row.min_value) {
        row.min_value = value;
        row.argmin_edges = t.edges;
      }
    }
    // ratio within [5/13, 1]
    report.ok = report.ok && 13 * row.min_value >= 5 * n && row.min_value <= n;
    report.rows.push_back(std::move(row));
  }
  return report;
}

IdReport scan_conjecture_id(int max_n) {
  if (max_n < 2 || max_n > 14) {
    fail(Errc::CapExceeded, "scan_conjecture_id supports 2 <= max_n <= 14");
  }
  IdReport report;
  SolveOptions options{.canon = CanonMode::Iso};
  for (int n = 2; n <= max_n; ++n) {
    IdRow row;
    row.n = n;
    row.bound = 3 * n / 4;
    for (const Forest& t : enumerate_trees(n)) {
      int value = solve(GameState::initial(t), Mover::Diminisher, options).value;
      row.max_value = std::max(row.max_value, value);
      if (4 * value > 3 * n) report.counterexamples.push_back(t.edges);
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace cig
