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

#include "luroth/runner.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace luroth {

GameResult run_game(const GameRequest& request) {
  request.config.validate();
  const ClosedBall start = request.initial ? *request.initial : initial_ball(request.adversary);
  auto b = make_adversary(request.adversary);
  GameResult result;
  if (request.player_a == PlayerA::kStrategyA) {
    StrategyA a(constants(request.config.alpha, request.config.beta), request.policy);
    result.transcript = play(request.config, a, *b, start);
    result.state = a.state();
  } else {
    ConcentricStrategy a;
    result.transcript = play(request.config, a, *b, start);
  }
  const auto& v = result.transcript.outcome.violation;
  if (v && v->player == Player::kA && v->reason == ViolationReason::kStrategyError) {
    result.strategy_error = v->detail.substr(0, v->detail.find(':'));
  }
  result.report = check_bounded(result.transcript);
  result.transcript.summary = to_json(result.report);
  return result;
}

std::vector<GameResult> run_batch(const std::vector<GameRequest>& requests, std::size_t threads) {
  std::vector<GameResult> results(requests.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) results[i] = run_game(requests[i]);
  };
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(requests.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace luroth
