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

#include "luroth/adversary.hpp"

#include "luroth/commensurate.hpp"
#include "luroth/error.hpp"

namespace luroth {

using nlohmann::json;

namespace {

Rational uniform_fraction(std::mt19937_64& rng, std::uint64_t den) {
  std::uniform_int_distribution<std::uint64_t> k(0, den);
  return Rational(mpz_class(static_cast<unsigned long>(k(rng))),
                  mpz_class(static_cast<unsigned long>(den)));
}

// Centers keeping a ball of radius rb inside a, on the line lifted around
// a's center.
std::pair<Rational, Rational> center_range(const ClosedBall& a, const Rational& rb) {
  const Rational slack = a.radius() - rb;
  return {a.center() - slack, a.center() + slack};
}

const ClosedBall& last_ball(const GameTranscript& t) {
  if (t.moves.empty()) throw Error(ErrorCode::kInvalidArgument, "no ball to answer");
  return t.moves.back().ball;
}

}  // namespace

std::string to_string(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kUniformRandom: return "uniform-random";
    case AdversaryKind::kAccumulationSeeker: return "accumulation-seeker";
    case AdversaryKind::kShrinkBurst: return "shrink-burst";
    case AdversaryKind::kReplay: return "replay";
    case AdversaryKind::kRemote: return "remote";
  }
  return "unknown";
}

AdversaryKind parse_adversary_kind(const std::string& text) {
  for (auto k : {AdversaryKind::kUniformRandom, AdversaryKind::kAccumulationSeeker,
                 AdversaryKind::kShrinkBurst, AdversaryKind::kReplay, AdversaryKind::kRemote}) {
    if (to_string(k) == text) return k;
  }
  throw Error(ErrorCode::kParse, "unknown adversary '" + text + "'");
}

ClosedBall uniform_random_move(const ClosedBall& a, const GameConfig& config, std::mt19937_64& rng,
                               std::uint64_t center_denominator, std::uint64_t factor_denominator) {
  Rational factor = config.beta;
  if (config.mode == GameMode::kStrong) {
    factor += uniform_fraction(rng, factor_denominator) * (Rational(1) - config.beta);
  }
  const Rational rb = factor * a.radius();
  auto [lo, hi] = center_range(a, rb);
  return ClosedBall(lo + uniform_fraction(rng, center_denominator) * (hi - lo), rb);
}

std::pair<Rational, std::size_t> smallest_accumulation_point(const ClosedBall& a) {
  if (a.is_whole_circle() || a.wraps() || a.contains_zero()) return {Rational(0), 0};
  CommensurateReport r = cwg(a);
  if (r.accumulation) return {r.accumulation->point, r.accumulation->generation};
  return {r.witness.left(), r.generation};
}

ClosedBall accumulation_seeker_move(const ClosedBall& a, const GameConfig& config) {
  const Rational rb = config.beta * a.radius();
  const Rational p = smallest_accumulation_point(a).first;
  // Flush against p on its right, or as close as the nesting rule allows.
  Rational target = p + rb;
  target += Rational((a.center() - target + Rational(1, 2)).floor(), mpz_class(1));
  auto [lo, hi] = center_range(a, rb);
  return ClosedBall(max(lo, min(hi, target)), rb);
}

ClosedBall shrink_burst_move(const ClosedBall& a, const GameConfig& config, std::mt19937_64& rng,
                             bool& wide) {
  if (config.mode != GameMode::kStrong) {
    throw Error(ErrorCode::kWrongMode, "shrink-burst needs the strong game");
  }
  const Rational factor = wide ? (Rational(1) + config.beta) / 2 : config.beta;
  wide = !wide;
  const Rational rb = factor * a.radius();
  auto [lo, hi] = center_range(a, rb);
  return ClosedBall(lo + uniform_fraction(rng, 1 << 16) * (hi - lo), rb);
}

ClosedBall initial_ball(const AdversarySpec& spec) {
  switch (spec.kind) {
    case AdversaryKind::kUniformRandom: {
      std::mt19937_64 rng(spec.seed ^ 0x5eedULL);
      std::uniform_int_distribution<int> e(1, 5);
      const Rational radius = Rational(1) / Rational(mpz_class(1) << e(rng), mpz_class(1));
      return ClosedBall(uniform_fraction(rng, spec.center_denominator), radius);
    }
    case AdversaryKind::kReplay:
      if (spec.replay.empty()) throw Error(ErrorCode::kReplayExhausted, "empty replay");
      return spec.replay.front();
    default:
      return ClosedBall(Rational(1, 2), Rational(1, 2));
  }
}

UniformRandomAdversary::UniformRandomAdversary(std::uint64_t seed, std::uint64_t center_denominator,
                                               std::uint64_t factor_denominator)
    : rng_(seed), center_den_(center_denominator), factor_den_(factor_denominator) {}

Strategy::Proposal UniformRandomAdversary::propose(const GameTranscript& so_far) {
  return {uniform_random_move(last_ball(so_far), so_far.config, rng_, center_den_, factor_den_),
          json()};
}

Strategy::Proposal AccumulationSeeker::propose(const GameTranscript& so_far) {
  return {accumulation_seeker_move(last_ball(so_far), so_far.config), json()};
}

ShrinkBurst::ShrinkBurst(std::uint64_t seed) : rng_(seed) {}

Strategy::Proposal ShrinkBurst::propose(const GameTranscript& so_far) {
  return {shrink_burst_move(last_ball(so_far), so_far.config, rng_, wide_), json()};
}

ReplayAdversary::ReplayAdversary(std::vector<ClosedBall> balls) : balls_(std::move(balls)) {}

ReplayAdversary ReplayAdversary::from_transcript(const GameTranscript& t) {
  std::vector<ClosedBall> balls;
  for (const auto& m : t.moves) {
    if (m.player == Player::kB) balls.push_back(m.ball);
  }
  return ReplayAdversary(std::move(balls));
}

Strategy::Proposal ReplayAdversary::propose(const GameTranscript& so_far) {
  const std::size_t next = so_far.rounds();
  if (next >= balls_.size()) {
    throw Error(ErrorCode::kReplayExhausted, "no recorded B move " + std::to_string(next + 1));
  }
  return {balls_[next], json()};
}

RemoteAdversary::RemoteAdversary(std::chrono::milliseconds timeout) : timeout_(timeout) {}

Strategy::Proposal RemoteAdversary::propose(const GameTranscript& so_far) {
  std::unique_lock lock(mu_);
  config_ = so_far.config;
  previous_ = last_ball(so_far);
  pending_.reset();
  waiting_ = true;
  const bool got = cv_.wait_for(lock, timeout_, [&] { return pending_.has_value(); });
  waiting_ = false;
  if (!got) throw Error(ErrorCode::kRemoteTimeout, "no remote move within the timeout");
  ClosedBall ball = *pending_;
  pending_.reset();
  return {ball, json()};
}

std::optional<ViolationReason> RemoteAdversary::submit(const ClosedBall& ball) {
  std::lock_guard lock(mu_);
  if (!waiting_ || pending_) return ViolationReason::kOutOfTurn;
  if (auto v = validate_move(*previous_, Move{Player::kB, ball, json()}, config_)) return v;
  pending_ = ball;
  cv_.notify_all();
  return std::nullopt;
}

bool RemoteAdversary::waiting() const {
  std::lock_guard lock(mu_);
  return waiting_ && !pending_;
}

std::optional<ClosedBall> RemoteAdversary::request() const {
  std::lock_guard lock(mu_);
  if (!waiting_ || pending_) return std::nullopt;
  return previous_;
}

std::unique_ptr<Strategy> make_adversary(const AdversarySpec& spec) {
  switch (spec.kind) {
    case AdversaryKind::kUniformRandom:
      return std::make_unique<UniformRandomAdversary>(spec.seed, spec.center_denominator,
                                                      spec.factor_denominator);
    case AdversaryKind::kAccumulationSeeker: return std::make_unique<AccumulationSeeker>();
    case AdversaryKind::kShrinkBurst: return std::make_unique<ShrinkBurst>(spec.seed);
    case AdversaryKind::kReplay: return std::make_unique<ReplayAdversary>(spec.replay);
    case AdversaryKind::kRemote: return std::make_unique<RemoteAdversary>(spec.remote_timeout);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown adversary kind");
}

}  // namespace luroth
