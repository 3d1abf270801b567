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

#ifndef LUROTH_ADVERSARY_HPP_
#define LUROTH_ADVERSARY_HPP_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "luroth/game.hpp"

namespace luroth {

enum class AdversaryKind { kUniformRandom, kAccumulationSeeker, kShrinkBurst, kReplay, kRemote };

std::string to_string(AdversaryKind kind);
AdversaryKind parse_adversary_kind(const std::string& text);

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::kUniformRandom;
  std::uint64_t seed = 0;
  // Random centers are lo + k/center_denominator * (hi - lo).
  std::uint64_t center_denominator = 1 << 16;
  // Strong-mode radius factors are beta + k/factor_denominator * (1 - beta).
  std::uint64_t factor_denominator = 1 << 8;
  std::vector<ClosedBall> replay;  // kReplay: the B balls to emit
  std::chrono::milliseconds remote_timeout{30000};
};

// B's reply to A in each kind; all outputs satisfy validate_move.
ClosedBall uniform_random_move(const ClosedBall& a, const GameConfig& config, std::mt19937_64& rng,
                               std::uint64_t center_denominator = 1 << 16,
                               std::uint64_t factor_denominator = 1 << 8);
ClosedBall accumulation_seeker_move(const ClosedBall& a, const GameConfig& config);
// `wide` alternates between calls. Throws WrongMode unless config is strong.
ClosedBall shrink_burst_move(const ClosedBall& a, const GameConfig& config, std::mt19937_64& rng,
                             bool& wide);

// Accumulation point of the smallest generation inside the (non-wrapping)
// interval, with that generation; 0 counts as generation 0.
std::pair<Rational, std::size_t> smallest_accumulation_point(const ClosedBall& a);

// Opening ball used by `play` for a given spec.
ClosedBall initial_ball(const AdversarySpec& spec);

class UniformRandomAdversary : public Strategy {
 public:
  UniformRandomAdversary(std::uint64_t seed, std::uint64_t center_denominator = 1 << 16,
                         std::uint64_t factor_denominator = 1 << 8);
  Proposal propose(const GameTranscript& so_far) override;

 private:
  std::mt19937_64 rng_;
  std::uint64_t center_den_;
  std::uint64_t factor_den_;
};

class AccumulationSeeker : public Strategy {
 public:
  Proposal propose(const GameTranscript& so_far) override;
};

class ShrinkBurst : public Strategy {
 public:
  explicit ShrinkBurst(std::uint64_t seed);
  Proposal propose(const GameTranscript& so_far) override;

 private:
  std::mt19937_64 rng_;
  bool wide_ = false;
};

// Emits recorded B balls; the first recorded ball is the opening move and is
// skipped here. Throws ReplayExhausted when out of balls.
class ReplayAdversary : public Strategy {
 public:
  explicit ReplayAdversary(std::vector<ClosedBall> balls);
  static ReplayAdversary from_transcript(const GameTranscript& t);
  Proposal propose(const GameTranscript& so_far) override;

 private:
  std::vector<ClosedBall> balls_;
};

// Player B driven from another thread. `propose` blocks until `submit`
// delivers a legal ball or the timeout expires (RemoteTimeout).
class RemoteAdversary : public Strategy {
 public:
  explicit RemoteAdversary(std::chrono::milliseconds timeout);

  Proposal propose(const GameTranscript& so_far) override;

  // Validates against the ball B must answer. Illegal balls are rejected
  // without consuming the turn; out-of-turn when nobody is waiting.
  std::optional<ViolationReason> submit(const ClosedBall& ball);
  bool waiting() const;
  // The A ball the pending B move must answer, while waiting.
  std::optional<ClosedBall> request() const;

 private:
  std::chrono::milliseconds timeout_;
  mutable std::mutex mu_;
  std::condition_variable cv_;
  bool waiting_ = false;
  GameConfig config_;
  std::optional<ClosedBall> previous_;
  std::optional<ClosedBall> pending_;
};

std::unique_ptr<Strategy> make_adversary(const AdversarySpec& spec);

}  // namespace luroth

#endif  // LUROTH_ADVERSARY_HPP_
