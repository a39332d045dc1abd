#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cig/engine.hpp"
#include "cig/forest.hpp"
#include "cig/solver.hpp"
#include "cig/strategies.hpp"

namespace cig {

// ceil((5n + 3C) / 13), the guaranteed game length for the greedy Sweller.
int lower_bound_13(int n, int c);

// 2 + floor((k-1)/2) + 2*ceil((k+1)/2) + k, the certified T_k game length.
int tk_move_bound(int k);

// ---- per-round potential bound ------------------------------------------

struct RoundViolation {
  int round;   // 1-based; round_count()+1 marks the odd-game tail move
  int lhs8;    // potential of the round, in eighths
  int limit8;  // 26 for full rounds, 13 for the tail
};

struct RoundReport {
  int rounds_checked = 0;
  std::vector<RoundViolation> violations;
  bool ok() const { return violations.empty(); }
};

// For a Sweller-start trace: each full round satisfies
// 8v - 3e - 5k <= 26 (combined over both moves), and if the move count is odd
// the final Sweller move satisfies 8v - 3e - 5k <= 13. Guaranteed only when
// Sweller plays greedy; other traces may be checked as negative controls.
RoundReport check_round_bound(const GameTrace& trace, const StrategyParams& params = {});

// ---- witness moves --------------------------------------------------------

// Profile of a Diminisher move wD in the post-Sweller position: l alive
// neighbours, p further removed edges, q_cap = floor(p/l) when l >= 1.
struct DiminisherMoveProfile {
  int l = 0;
  int p = 0;
  int q_cap = 0;
};

DiminisherMoveProfile diminisher_profile(const GameState& after_sweller, int wD);

struct WitnessMove {
  int vertex;
  MoveDelta delta;
  std::string clause;
  int q = 0;  // realized q where applicable
};

struct ExistenceReport {
  DiminisherMoveProfile profile;
  std::vector<WitnessMove> witnesses;
  std::vector<std::string> missing;  // applicable claims with no witness
  bool ok() const { return missing.empty(); }
};

// Scans all alive vertices of preS (the position before Sweller's move) for
// witnesses of the three witness-existence claims applicable to the profile
// of (wS, wD). Throws PreconditionUnmet if wD is not legal after wS.
ExistenceReport check_witness_moves(const GameState& preS, int wS, int wD);

// ---- case grid ------------------------------------------------------------

struct GridFailure {
  std::string kind;  // "uncovered" or "inequality"
  int l = 0, p = 0;
  std::string case_id;
  long long margin8 = 0;
};

struct GridReport {
  long long pairs_checked = 0;
  long long infeasible_pairs = 0;  // l = 0 with p > 0 cannot occur in a forest
  std::vector<GridFailure> failures;
  bool ok() const { return failures.empty(); }
};

// Checks that every feasible (l, p) in [0,l_max] x [0,p_max] is covered by at
// least one of the thirteen closing cases and that each applicable case's
// closing inequality holds in exact integer eighths with worst-case
// q = floor(p/l). Cases 10 and 11 are additionally required to be tight.
GridReport verify_case_grid(int l_max, int p_max);

// ---- global bounds --------------------------------------------------------

struct BoundReport {
  int n = 0;
  int c = 0;
  int bound = 0;
  int greedy_value = 0;                // greedy Sweller vs minimizing Diminisher
  std::optional<int> optimal_value;    // full solve, when requested
  bool ok = false;
};

BoundReport check_global_lower_bound(const Forest& f, bool with_full_solve = true,
                                     const SolveOptions& options = {});

struct TkReport {
  int k = 0;
  int n = 0;
  int move_bound = 0;          // closed-form count
  int certified_length = 0;    // fixed-Diminisher restricted solve
  std::optional<int> exact_value;
  bool below_three_sevenths = false;  // 7 * certified_length < 3n
  bool ok = false;
};

TkReport check_tk_upper_bound(int k, bool with_full_solve = false,
                              const SolveOptions& options = {.canon = CanonMode::Iso});

// ---- scans ----------------------------------------------------------------

struct RatioRow {
  int n = 0;
  int min_value = 0;  // min I_s over trees of order n; ratio = min_value / n
  std::vector<std::pair<int, int>> argmin_edges;
};

struct RatioReport {
  std::vector<RatioRow> rows;
  bool ok = false;  // every ratio within [5/13, 1]
};

RatioReport scan_ratio(int max_n);

struct IdRow {
  int n = 0;
  int max_value = 0;  // max I_d over trees of order n
  int bound = 0;      // floor(3n/4)
};

struct IdReport {
  std::vector<IdRow> rows;
  std::vector<std::vector<std::pair<int, int>>> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

IdReport scan_conjecture_id(int max_n);

}  // namespace cig
