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

#include <random>
#include <sstream>

#include "doctest.h"
#include "luroth/adversary.hpp"
#include "luroth/error.hpp"
#include "luroth/game.hpp"
#include "luroth/strategy.hpp"

using namespace luroth;
using nlohmann::json;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

// Player A that answers with a ball of a fixed radius factor, concentric.
class ScaledA : public Strategy {
 public:
  explicit ScaledA(Rational factor) : factor_(std::move(factor)) {}
  Proposal propose(const GameTranscript& t) override {
    const ClosedBall& b = t.moves.back().ball;
    return {ClosedBall(b.center(), factor_ * b.radius()), json()};
  }

 private:
  Rational factor_;
};

// Player B that always returns the concentric ball of radius beta * rho(A).
class ConcentricB : public Strategy {
 public:
  Proposal propose(const GameTranscript& t) override {
    const ClosedBall& a = t.moves.back().ball;
    return {ClosedBall(a.center(), t.config.beta * a.radius()), json()};
  }
};

GameConfig winning(std::size_t rounds) {
  GameConfig c;
  c.max_rounds = rounds;
  return c;
}

}  // namespace

TEST_CASE("radius rule") {
  const Rational a = q(1, 8);
  CHECK_FALSE(check_radius_rule(Rational(1), q(1, 8), a, GameMode::kWinning));
  CHECK_FALSE(check_radius_rule(q(1, 8), q(1, 16), q(1, 2), GameMode::kWinning));
  CHECK(check_radius_rule(Rational(1), q(1, 9), a, GameMode::kWinning) ==
        ViolationReason::kRadiusNotEqual);
  CHECK(check_radius_rule(Rational(1), q(1, 9), a, GameMode::kStrong) ==
        ViolationReason::kRadiusTooSmall);
  CHECK_FALSE(check_radius_rule(Rational(1), q(1, 7), a, GameMode::kStrong));
}

TEST_CASE("validate_move") {
  GameConfig c = winning(4);
  ClosedBall prev(q(1, 2), q(1, 4));
  CHECK_FALSE(validate_move(prev, Move{Player::kA, ClosedBall(q(1, 2), q(1, 32)), json()}, c));
  CHECK(validate_move(prev, Move{Player::kA, ClosedBall(q(1, 2), q(1, 33)), json()}, c) ==
        ViolationReason::kRadiusNotEqual);
  CHECK(validate_move(prev, Move{Player::kA, ClosedBall(q(3, 4), q(1, 32)), json()}, c) ==
        ViolationReason::kNotNested);
  CHECK_FALSE(validate_move(prev, Move{Player::kB, ClosedBall(q(5, 8), q(1, 8)), json()}, c));
  c.mode = GameMode::kStrong;
  CHECK_FALSE(validate_move(prev, Move{Player::kA, ClosedBall(q(1, 2), q(1, 4)), json()}, c));
  CHECK(validate_move(prev, Move{Player::kA, ClosedBall(q(1, 2), q(1, 33)), json()}, c) ==
        ViolationReason::kRadiusTooSmall);
}

TEST_CASE("config validation") {
  GameConfig c;
  c.beta = Rational(1);
  CHECK_THROWS_AS(c.validate(), Error);
  c.beta = q(1, 2);
  c.alpha = Rational(0);
  CHECK_THROWS_AS(c.validate(), Error);
  CHECK(parse_game_mode("strong") == GameMode::kStrong);
  CHECK_THROWS_AS(parse_game_mode("weak"), Error);
}

TEST_CASE("referee enforces alternation") {
  Referee r(winning(4));
  CHECK(r.to_move() == Player::kB);
  CHECK(r.submit(Move{Player::kA, ClosedBall(q(1, 2), q(1, 4)), json()}) ==
        ViolationReason::kOutOfTurn);
  CHECK_FALSE(r.submit(Move{Player::kB, ClosedBall(q(1, 2), q(1, 4)), json()}));
  CHECK(r.to_move() == Player::kA);
  CHECK(r.submit(Move{Player::kA, ClosedBall(q(1, 2), q(1, 33)), json()}) ==
        ViolationReason::kRadiusNotEqual);
  CHECK(r.transcript().moves.size() == 1);
}

TEST_CASE("play: radius algebra") {
  // Four rounds with alpha = 1/8, beta = 1/2 contract B radii by 1/16 each.
  ScaledA a(q(1, 8));
  ConcentricB b;
  GameTranscript t = play(winning(4), a, b, ClosedBall(q(1, 2), q(1, 2)));
  REQUIRE(t.outcome.completed);
  CHECK(t.rounds() == 4);
  CHECK(t.moves.size() == 8);
  std::vector<Rational> radii;
  for (const auto& m : t.moves) {
    if (m.player == Player::kB) radii.push_back(m.ball.radius());
  }
  CHECK(radii == std::vector<Rational>{q(1, 2), q(1, 32), q(1, 512), q(1, 8192)});
  CHECK_FALSE(verify_legality(t));
  for (std::size_t n = 0; n < radii.size(); ++n) {
    Rational expect = q(1, 2);
    for (std::size_t k = 0; k < n; ++k) expect *= q(1, 16);
    CHECK(radii[n] == expect);
  }
}

TEST_CASE("play: violating player A ends the game") {
  ScaledA a(q(1, 9));
  ConcentricB b;
  GameTranscript t = play(winning(4), a, b, ClosedBall(q(1, 2), q(1, 4)));
  CHECK_FALSE(t.outcome.completed);
  REQUIRE(t.outcome.violation);
  CHECK(t.outcome.violation->player == Player::kA);
  CHECK(t.outcome.violation->reason == ViolationReason::kRadiusNotEqual);
  CHECK(t.outcome.violation->move_index == 1);
}

TEST_CASE("play: strategy errors are attributed") {
  GameConfig c = winning(5);
  ScaledA a(q(1, 8));
  ShrinkBurst b(1);  // winning mode: WrongMode
  GameTranscript t = play(c, a, b, ClosedBall(q(1, 2), q(1, 4)));
  REQUIRE(t.outcome.violation);
  CHECK(t.outcome.violation->player == Player::kB);
  CHECK(t.outcome.violation->reason == ViolationReason::kStrategyError);
  CHECK(t.outcome.violation->detail.find("WrongMode") != std::string::npos);
}

TEST_CASE("strong mode radii") {
  GameConfig c = winning(30);
  c.mode = GameMode::kStrong;
  ScaledA a(q(1, 8));
  UniformRandomAdversary b(5);
  GameTranscript t = play(c, a, b, ClosedBall(q(1, 3), q(1, 4)));
  REQUIRE(t.outcome.completed);
  Rational bound = t.moves.front().ball.radius();
  std::size_t n = 0;
  for (const auto& m : t.moves) {
    if (m.player != Player::kB) continue;
    CHECK(m.ball.radius() >= bound);
    bound *= c.alpha * c.beta;
    ++n;
  }
  CHECK(n == 30);
}

TEST_CASE("limit ball") {
  GameTranscript t;
  CHECK_THROWS_AS(limit_ball(t), Error);
  t.moves.push_back(Move{Player::kB, ClosedBall(q(1, 3), q(1, 5)), json()});
  CHECK(limit_ball(t) == ClosedBall(q(1, 3), q(1, 5)));
  ScaledA a(q(1, 8));
  UniformRandomAdversary b(9);
  GameTranscript g = play(winning(10), a, b, ClosedBall(q(1, 2), q(1, 4)));
  const ClosedBall last = limit_ball(g);
  for (const auto& m : g.moves) CHECK(contains_ball(m.ball, last));
}

TEST_CASE("transcript round trip is exact") {
  GameConfig c = winning(12);
  c.beta = q(3, 4);
  c.rng_seed = 77;
  StrategyA a(constants(c.alpha, c.beta));
  UniformRandomAdversary b(77);
  GameTranscript t = play(c, a, b, ClosedBall(q(1, 2), q(1, 2)));
  t.summary = json{{"note", "x"}};
  const std::string text = transcript_to_jsonl(t);
  GameTranscript back = transcript_from_jsonl(text);
  CHECK(transcript_to_jsonl(back) == text);
  REQUIRE(back.moves.size() == t.moves.size());
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    CHECK(back.moves[i].ball == t.moves[i].ball);
    CHECK(back.moves[i].annotation == t.moves[i].annotation);
  }
  CHECK(back.config.beta == q(3, 4));
  CHECK(back.config.rng_seed == 77);
  // first line is the config, last line carries the outcome
  std::istringstream lines(text);
  std::string first, line, last;
  std::getline(lines, first);
  while (std::getline(lines, line)) last = line;
  CHECK(json::parse(first).contains("config"));
  CHECK(json::parse(last).contains("outcome"));
}

TEST_CASE("replay reproduces a game") {
  GameConfig c = winning(15);
  StrategyA a1(constants(c.beta));
  UniformRandomAdversary b(3);
  GameTranscript t = play(c, a1, b, ClosedBall(q(2, 5), q(1, 3)));
  StrategyA a2(constants(c.beta));
  ReplayAdversary r = ReplayAdversary::from_transcript(t);
  GameTranscript u = play(c, a2, r, t.moves.front().ball);
  CHECK(transcript_to_jsonl(u) == transcript_to_jsonl(t));
  // one more round than recorded: the replay runs dry
  c.max_rounds = 16;
  StrategyA a3(constants(c.beta));
  ReplayAdversary r2 = ReplayAdversary::from_transcript(t);
  GameTranscript w = play(c, a3, r2, t.moves.front().ball);
  REQUIRE(w.outcome.violation);
  CHECK(w.outcome.violation->detail.find("ReplayExhausted") != std::string::npos);
}

TEST_CASE("malformed transcript lines are rejected") {
  CHECK_THROWS_AS(transcript_from_jsonl("not json\n"), Error);
  CHECK_THROWS_AS(ball_from_json(json{{"center", "1/2"}, {"radius", "0.5"}, {"wraps", false}}),
                  Error);
  CHECK_THROWS_AS(ball_from_json(json{{"center", "1/2"}, {"radius", "1/8"}, {"wraps", true}}),
                  Error);
  CHECK(ball_from_json(to_json(ClosedBall(q(1, 16), q(1, 8)))) == ClosedBall(q(1, 16), q(1, 8)));
}
