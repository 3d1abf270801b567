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

#ifndef LUROTH_GAME_HPP_
#define LUROTH_GAME_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "luroth/geometry.hpp"
#include "luroth/rational.hpp"

namespace luroth {

enum class GameMode { kWinning, kStrong };
enum class Player { kA, kB };

std::string to_string(GameMode mode);
std::string to_string(Player player);
GameMode parse_game_mode(const std::string& text);

struct GameConfig {
  Rational alpha{1, 8};
  Rational beta{1, 2};
  GameMode mode = GameMode::kWinning;
  std::size_t max_rounds = 200;
  std::uint64_t rng_seed = 0;
  // Stop once the last A ball determines this many digits (0 disables).
  std::size_t target_depth = 0;

  // Throws InvalidArgument unless 0 < alpha, beta < 1.
  void validate() const;
};

struct Move {
  Player player = Player::kB;
  ClosedBall ball{Rational(1, 2), Rational(1, 2)};
  nlohmann::json annotation;  // null when the strategy attaches nothing
};

enum class ViolationReason {
  kRadiusTooSmall,
  kRadiusNotEqual,
  kNotNested,
  kOutOfTurn,
  kStrategyError,
};

std::string to_string(ViolationReason reason);
ViolationReason parse_violation_reason(const std::string& text);

struct Violation {
  Player player = Player::kA;
  ViolationReason reason = ViolationReason::kNotNested;
  std::size_t move_index = 0;
  std::string detail;
};

struct Outcome {
  bool completed = true;
  std::optional<Violation> violation;
};

struct GameTranscript {
  GameConfig config;
  std::vector<Move> moves;
  Outcome outcome;
  // Extra payload for the closing line (e.g. a verification report).
  nlohmann::json summary;

  std::size_t rounds() const;  // number of B moves
};

// Radius rule alone: equality (winning) or lower bound (strong).
std::optional<ViolationReason> check_radius_rule(const Rational& prev_radius,
                                                 const Rational& next_radius,
                                                 const Rational& factor, GameMode mode);

// Radius rule for the mover plus nesting next ⊆ prev.
std::optional<ViolationReason> validate_move(const ClosedBall& prev, const Move& next,
                                             const GameConfig& config);

// Incremental referee: owns a transcript and only appends legal moves.
class Referee {
 public:
  explicit Referee(GameConfig config);

  const GameTranscript& transcript() const { return transcript_; }
  GameTranscript& mutable_transcript() { return transcript_; }
  Player to_move() const;

  // Appends the move when legal; otherwise leaves the transcript untouched.
  std::optional<ViolationReason> check(const Move& move) const;
  std::optional<ViolationReason> submit(Move move);

 private:
  GameTranscript transcript_;
};

// Move supplier. Implementations see the whole transcript so far and must
// not keep references into it after returning.
class Strategy {
 public:
  virtual ~Strategy() = default;
  struct Proposal {
    ClosedBall ball;
    nlohmann::json annotation;
  };
  virtual Proposal propose(const GameTranscript& so_far) = 0;
};

// Runs B(initial), A, B, A, ... until max_rounds B moves have been answered,
// the target depth is reached, or someone breaks the rules.
GameTranscript play(const GameConfig& config, Strategy& strategy_a, Strategy& strategy_b,
                    const ClosedBall& initial_b);

// Last ball of a transcript; throws InvalidArgument when empty.
ClosedBall limit_ball(const GameTranscript& t);

// Replays every move through the referee rules.
std::optional<Violation> verify_legality(const GameTranscript& t);

// ---- serialization ------------------------------------------------------

nlohmann::json to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClosedBall& b);
ClosedBall ball_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ClosedInterval& i);
nlohmann::json to_json(const GameConfig& c);
GameConfig config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Move& m);
Move move_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Outcome& o);
Outcome outcome_from_json(const nlohmann::json& j);

// JSON-lines: config line, one line per move, closing outcome line.
void write_transcript(std::ostream& os, const GameTranscript& t);
std::string transcript_to_jsonl(const GameTranscript& t);
GameTranscript read_transcript(std::istream& is);
GameTranscript transcript_from_jsonl(const std::string& text);

}  // namespace luroth

#endif  // LUROTH_GAME_HPP_
