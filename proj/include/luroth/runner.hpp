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

#ifndef LUROTH_RUNNER_HPP_
#define LUROTH_RUNNER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "luroth/adversary.hpp"
#include "luroth/game.hpp"
#include "luroth/strategy.hpp"
#include "luroth/verifier.hpp"

namespace luroth {

enum class PlayerA { kStrategyA, kConcentric };

struct GameRequest {
  GameConfig config;
  AdversarySpec adversary;
  PlayerA player_a = PlayerA::kStrategyA;
  CushionPolicy policy = CushionPolicy::kInitialOnly;
  std::optional<ClosedBall> initial;  // defaults to initial_ball(adversary)
};

struct GameResult {
  GameTranscript transcript;  // summary holds the report
  VerificationReport report;
  std::optional<StrategyState> state;  // strategy-a only
  // Error code name when A stopped with a strategy error, else empty.
  std::string strategy_error;
};

GameResult run_game(const GameRequest& request);

// Independent games on up to `threads` workers; results keep request order.
std::vector<GameResult> run_batch(const std::vector<GameRequest>& requests, std::size_t threads);

}  // namespace luroth

#endif  // LUROTH_RUNNER_HPP_
