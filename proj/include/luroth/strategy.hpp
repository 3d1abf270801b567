// Copyright 2026 The Luroth Games Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LUROTH_STRATEGY_HPP_
#define LUROTH_STRATEGY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "luroth/commensurate.hpp"
#include "luroth/expansion.hpp"
#include "luroth/game.hpp"

namespace luroth {

struct StrategyConstants {
  Rational alpha{1, 8};
  Rational beta{1, 2};
  Digit c1 = 25;
  Digit sqrt_c1 = 5;
  Digit b = 800;  // ceil(2 c1 / (alpha beta))
};

// alpha = 1/8, c1 = 25, b = ceil(2 c1 / (alpha beta)).
StrategyConstants constants(const Rational& beta);
StrategyConstants constants(const Rational& alpha, const Rational& beta);

// Which cushion the strategy keeps around the accumulation point p at a
// generation jump. The first main-phase move always uses the closed ball of
// radius rho(B0)/b = rho(B1)/c1 around p. Later jumps always avoid the
// danger interval (p, p + |R_gamma|/b); the policy decides whether a closed
// cushion ball is added on top of it.
enum class CushionPolicy {
  kInitialOnly,  // no extra ball after the first jump
  kRescaled,     // rho(B at this jump)/c1
  kFixedB0,      // rho(B0)/b with B0 from the first jump, kept forever
};

std::string to_string(CushionPolicy p);
CushionPolicy parse_cushion_policy(const std::string& text);

enum class CaseTag { kPreamble, kInterim, kCase1, kCase2, kCase3 };
std::string to_string(CaseTag tag);

struct CaseContext {
  CaseTag tag = CaseTag::kInterim;
  std::size_t generation = 0;          // c.w.g. of the B ball
  bool initial = false;                // first main-phase move
  Rational p;                          // accumulation point p_n (or E.left in case 3)
  std::optional<Rational> p_plus;      // next accumulation point to the right
  Rational q;                          // left endpoint of R_{gamma 2}
  LurothElement r_gamma;               // generation n-1 element anchored at p
  std::optional<std::pair<ClosedInterval, ClosedInterval>> halves;  // (B^l, B^r)
  std::vector<Digit> trailing2;        // case 2: gamma~ (all 2s)
  std::optional<Rational> cushion_radius;
  std::optional<OpenInterval> danger;  // danger interval of R_gamma avoided
};

// Result of placing A inside the feasible set of a case move.
struct Placement {
  ClosedBall ball;
  // Length of the feasible component divided by A's diameter (>= 1).
  Rational feasible_ratio;
};

struct JumpCertificate {
  std::size_t from_generation = 0;
  std::size_t to_generation = 0;
  std::size_t chain_start_generation = 0;
  // min over the chain of |B| / ((sqrt_c1 / b) |E|); must exceed 1.
  Rational chain_ratio;
  bool chain_holds = true;
  // No danger interval of generations g1..to-2 meets B.
  bool lower_disjoint = true;
  std::vector<OpenInterval> lower_hits;
  // |B| over the total length of the (<= 2) generation to-1 danger intervals.
  Rational margin;
  bool margin_holds = true;
  std::vector<OpenInterval> dangers;

  bool ok() const { return chain_holds && lower_disjoint && margin_holds; }
};

struct StrategyState {
  enum class Phase { kPreamble, kMain };
  Phase phase = Phase::kPreamble;
  std::optional<Rational> b0_radius;           // (b/c1) rho(B1)
  std::size_t threshold_generation = 0;        // g1
  std::size_t current_generation = 0;          // g_n
  std::vector<std::size_t> jump_generations;   // g1, g2, ...
  std::vector<std::size_t> round_counters;     // j_1 = 1, j_2, ...
  std::size_t rounds_in_generation = 0;
  std::optional<CaseContext> case_context;
  // Set after a case-2 move: R_{gamma 2 gamma~}, which contains A.
  std::optional<LurothElement> case2_outer;
  std::vector<JumpCertificate> certificates;

  std::size_t total_rounds() const;  // J_n
};

// A ball of radius alpha * rho(B) inside B as far from 0 as possible; its
// distance to 0 is at least alpha * rho(B).
ClosedBall preamble_move(const ClosedBall& b, const StrategyConstants& consts);

// Builds the case context (tag, p, R_gamma, q, halves) for a main-phase B.
CaseContext classify(const ClosedBall& b, const CommensurateReport& report);

// Case 1 / case 3: A inside B^r (or B) and inside (p + cushion, q), centered
// in the feasible component. Throws StrategyInfeasible.
Placement case1_move(const ClosedBall& b, const CaseContext& ctx, const StrategyConstants& consts);
Placement case3_move(const ClosedBall& b, const CaseContext& ctx, const StrategyConstants& consts);
// Case 2: A with right endpoint p; fills ctx.trailing2. Throws StrategyInfeasible.
Placement case2_move(const ClosedBall& b, CaseContext& ctx, const StrategyConstants& consts);

// Exact checks at a generation jump; never throws.
JumpCertificate jump_certificates(const ClosedBall& b_at_jump, const CommensurateReport& report,
                                  const StrategyState& state, const StrategyConstants& consts);

nlohmann::json to_json(const JumpCertificate& c);

class StrategyA : public Strategy {
 public:
  explicit StrategyA(StrategyConstants consts, CushionPolicy policy = CushionPolicy::kInitialOnly);

  Proposal propose(const GameTranscript& so_far) override;

  const StrategyState& state() const { return state_; }
  const StrategyConstants& consts() const { return consts_; }

 private:
  Proposal respond(const ClosedBall& b);
  Proposal jump_move(const ClosedBall& b, const CommensurateReport& report, bool initial);

  StrategyConstants consts_;
  CushionPolicy policy_;
  StrategyState state_;
  std::size_t processed_b_moves_ = 0;
};

// Player A that always answers with the concentric ball; the control group
// for the verifier.
class ConcentricStrategy : public Strategy {
 public:
  Proposal propose(const GameTranscript& so_far) override;
};

}  // namespace luroth

#endif  // LUROTH_STRATEGY_HPP_
