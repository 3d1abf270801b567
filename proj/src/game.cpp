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

#include "luroth/game.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "luroth/commensurate.hpp"
#include "luroth/error.hpp"

namespace luroth {

using nlohmann::json;

std::string to_string(GameMode mode) {
  return mode == GameMode::kWinning ? "winning" : "strong";
}

std::string to_string(Player player) { return player == Player::kA ? "A" : "B"; }

GameMode parse_game_mode(const std::string& text) {
  if (text == "winning") return GameMode::kWinning;
  if (text == "strong") return GameMode::kStrong;
  throw Error(ErrorCode::kParse, "unknown mode '" + text + "'");
}

void GameConfig::validate() const {
  if (alpha.sign() <= 0 || alpha >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "alpha must lie in (0,1)");
  }
  if (beta.sign() <= 0 || beta >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "beta must lie in (0,1)");
  }
}

std::string to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::kRadiusTooSmall: return "radius-too-small";
    case ViolationReason::kRadiusNotEqual: return "radius-not-equal";
    case ViolationReason::kNotNested: return "not-nested";
    case ViolationReason::kOutOfTurn: return "out-of-turn";
    case ViolationReason::kStrategyError: return "strategy-error";
  }
  return "unknown";
}

ViolationReason parse_violation_reason(const std::string& text) {
  for (auto r : {ViolationReason::kRadiusTooSmall, ViolationReason::kRadiusNotEqual,
                 ViolationReason::kNotNested, ViolationReason::kOutOfTurn,
                 ViolationReason::kStrategyError}) {
    if (to_string(r) == text) return r;
  }
  throw Error(ErrorCode::kParse, "unknown violation reason '" + text + "'");
}

std::size_t GameTranscript::rounds() const {
  std::size_t n = 0;
  for (const auto& m : moves) n += m.player == Player::kB ? 1 : 0;
  return n;
}

std::optional<ViolationReason> check_radius_rule(const Rational& prev_radius,
                                                 const Rational& next_radius,
                                                 const Rational& factor, GameMode mode) {
  const Rational required = factor * prev_radius;
  if (mode == GameMode::kWinning) {
    if (next_radius != required) return ViolationReason::kRadiusNotEqual;
  } else if (next_radius < required) {
    return ViolationReason::kRadiusTooSmall;
  }
  return std::nullopt;
}

std::optional<ViolationReason> validate_move(const ClosedBall& prev, const Move& next,
                                             const GameConfig& config) {
  const Rational& factor = next.player == Player::kA ? config.alpha : config.beta;
  if (auto r = check_radius_rule(prev.radius(), next.ball.radius(), factor, config.mode)) {
    return r;
  }
  if (!contains_ball(prev, next.ball)) return ViolationReason::kNotNested;
  return std::nullopt;
}

Referee::Referee(GameConfig config) {
  config.validate();
  transcript_.config = std::move(config);
}

Player Referee::to_move() const {
  if (transcript_.moves.empty()) return Player::kB;
  return transcript_.moves.back().player == Player::kB ? Player::kA : Player::kB;
}

std::optional<ViolationReason> Referee::check(const Move& move) const {
  if (move.player != to_move()) return ViolationReason::kOutOfTurn;
  if (transcript_.moves.empty()) return std::nullopt;
  return validate_move(transcript_.moves.back().ball, move, transcript_.config);
}

std::optional<ViolationReason> Referee::submit(Move move) {
  auto v = check(move);
  if (!v) transcript_.moves.push_back(std::move(move));
  return v;
}

namespace {

bool reached_depth(const GameTranscript& t) {
  const std::size_t target = t.config.target_depth;
  if (target == 0 || t.moves.empty()) return false;
  return determined_prefix(t.moves.back().ball).size() >= target;
}

}  // namespace

GameTranscript play(const GameConfig& config, Strategy& strategy_a, Strategy& strategy_b,
                    const ClosedBall& initial_b) {
  Referee referee(config);
  auto end_with = [&](Player who, ViolationReason reason, std::string detail) {
    GameTranscript& t = referee.mutable_transcript();
    t.outcome.completed = false;
    t.outcome.violation = Violation{who, reason, t.moves.size(), std::move(detail)};
    return t;
  };
  referee.submit(Move{Player::kB, initial_b, json()});
  while (true) {
    for (Player who : {Player::kA, Player::kB}) {
      if (who == Player::kB && (referee.transcript().rounds() >= config.max_rounds ||
                                reached_depth(referee.transcript()))) {
        return referee.transcript();
      }
      Strategy& s = who == Player::kA ? strategy_a : strategy_b;
      Move move;
      move.player = who;
      try {
        auto proposal = s.propose(referee.transcript());
        move.ball = std::move(proposal.ball);
        move.annotation = std::move(proposal.annotation);
      } catch (const Error& e) {
        return end_with(who, ViolationReason::kStrategyError, e.what());
      }
      if (auto v = referee.check(move)) {
        GameTranscript t = end_with(who, *v, "illegal move");
        t.moves.push_back(std::move(move));
        return t;
      }
      referee.submit(std::move(move));
    }
  }
}

ClosedBall limit_ball(const GameTranscript& t) {
  if (t.moves.empty()) throw Error(ErrorCode::kInvalidArgument, "empty transcript");
  return t.moves.back().ball;
}

std::optional<Violation> verify_legality(const GameTranscript& t) {
  for (std::size_t i = 0; i < t.moves.size(); ++i) {
    const Move& m = t.moves[i];
    const Player expected = i % 2 == 0 ? Player::kB : Player::kA;
    if (m.player != expected) return Violation{m.player, ViolationReason::kOutOfTurn, i, ""};
    if (i == 0) continue;
    if (auto r = validate_move(t.moves[i - 1].ball, m, t.config)) {
      return Violation{m.player, *r, i, ""};
    }
  }
  return std::nullopt;
}

// ---- serialization ------------------------------------------------------

json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const json& j) {
  if (!j.is_string()) throw Error(ErrorCode::kParse, "rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

json to_json(const ClosedBall& b) {
  return json{{"center", to_json(b.center())},
              {"radius", to_json(b.radius())},
              {"wraps", b.wraps()}};
}

ClosedBall ball_from_json(const json& j) {
  if (!j.is_object() || !j.contains("center") || !j.contains("radius")) {
    throw Error(ErrorCode::kParse, "ball needs center and radius");
  }
  const Rational center = rational_from_json(j.at("center"));
  if (center.sign() < 0 || center >= 1) {
    throw Error(ErrorCode::kParse, "center must lie in [0,1)");
  }
  ClosedBall ball(center, rational_from_json(j.at("radius")));
  if (j.contains("wraps") && j.at("wraps").get<bool>() != ball.wraps()) {
    throw Error(ErrorCode::kParse, "wraps flag disagrees with center/radius");
  }
  return ball;
}

json to_json(const ClosedInterval& i) {
  return json::array({to_json(i.left()), to_json(i.right())});
}

json to_json(const GameConfig& c) {
  return json{{"alpha", to_json(c.alpha)},
              {"beta", to_json(c.beta)},
              {"mode", to_string(c.mode)},
              {"max_rounds", c.max_rounds},
              {"rng_seed", c.rng_seed},
              {"target_depth", c.target_depth}};
}

GameConfig config_from_json(const json& j) {
  try {
    GameConfig c;
    c.alpha = rational_from_json(j.at("alpha"));
    c.beta = rational_from_json(j.at("beta"));
    c.mode = parse_game_mode(j.at("mode").get<std::string>());
    c.max_rounds = j.value("max_rounds", c.max_rounds);
    c.rng_seed = j.value("rng_seed", c.rng_seed);
    c.target_depth = j.value("target_depth", c.target_depth);
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad config: ") + e.what());
  }
}

json to_json(const Move& m) {
  json j{{"player", to_string(m.player)}, {"ball", to_json(m.ball)}};
  if (!m.annotation.is_null()) j["annotation"] = m.annotation;
  return j;
}

Move move_from_json(const json& j) {
  Move m;
  const std::string p = j.at("player").get<std::string>();
  if (p != "A" && p != "B") throw Error(ErrorCode::kParse, "player must be A or B");
  m.player = p == "A" ? Player::kA : Player::kB;
  m.ball = ball_from_json(j.at("ball"));
  if (j.contains("annotation")) m.annotation = j.at("annotation");
  return m;
}

json to_json(const Outcome& o) {
  if (o.completed) return json{{"status", "completed"}};
  json j{{"status", "violation"}};
  if (o.violation) {
    j["player"] = to_string(o.violation->player);
    j["reason"] = to_string(o.violation->reason);
    j["move_index"] = o.violation->move_index;
    j["detail"] = o.violation->detail;
  }
  return j;
}

Outcome outcome_from_json(const json& j) {
  Outcome o;
  o.completed = j.at("status").get<std::string>() == "completed";
  if (!o.completed && j.contains("reason")) {
    Violation v;
    v.player = j.value("player", std::string("A")) == "A" ? Player::kA : Player::kB;
    v.reason = parse_violation_reason(j.at("reason").get<std::string>());
    v.move_index = j.value("move_index", std::size_t{0});
    v.detail = j.value("detail", std::string());
    o.violation = v;
  }
  return o;
}

void write_transcript(std::ostream& os, const GameTranscript& t) {
  os << json{{"config", to_json(t.config)}}.dump() << '\n';
  for (const auto& m : t.moves) os << to_json(m).dump() << '\n';
  json last{{"outcome", to_json(t.outcome)}};
  if (!t.summary.is_null()) last["report"] = t.summary;
  os << last.dump() << '\n';
}

std::string transcript_to_jsonl(const GameTranscript& t) {
  std::ostringstream os;
  write_transcript(os, t);
  return os.str();
}

GameTranscript read_transcript(std::istream& is) {
  GameTranscript t;
  std::string line;
  bool have_config = false;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + e.what());
    }
    try {
      if (!have_config) {
        if (!j.contains("config")) throw Error(ErrorCode::kParse, "first line must hold the config");
        t.config = config_from_json(j.at("config"));
        have_config = true;
      } else if (j.contains("outcome")) {
        t.outcome = outcome_from_json(j.at("outcome"));
        if (j.contains("report")) t.summary = j.at("report");
      } else {
        t.moves.push_back(move_from_json(j));
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (!have_config) throw Error(ErrorCode::kParse, "empty transcript");
  return t;
}

GameTranscript transcript_from_jsonl(const std::string& text) {
  std::istringstream is(text);
  return read_transcript(is);
}

}  // namespace luroth
