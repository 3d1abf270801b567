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

#include "doctest.h"
#include "luroth/adversary.hpp"
#include "luroth/strategy.hpp"
#include "luroth/verifier.hpp"

using namespace luroth;
using nlohmann::json;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

// Answers with the ball of the required radius sharing the right endpoint of
// the previous ball.
class FlushRight : public Strategy {
 public:
  Proposal propose(const GameTranscript& t) override {
    const ClosedBall& prev = t.moves.back().ball;
    const Rational& f = t.moves.back().player == Player::kB ? t.config.alpha : t.config.beta;
    const Rational r = f * prev.radius();
    return {ClosedBall(prev.right() - r, r), json()};
  }
};

}  // namespace

TEST_CASE("digits of a ball") {
  DigitString d = digits_of_ball(ClosedBall::from_endpoints(q(2, 3) + q(1, 100), q(3, 4) - q(1, 100)));
  CHECK(d.digits == std::vector<Digit>{Digit(2), Digit(3)});
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    std::vector<Digit> ds;
    for (int k = 1 + static_cast<int>(rng() % 6); k > 0; --k) ds.emplace_back(2 + rng() % 9);
    ds.back() = 3 + rng() % 5;  // keep away from 1
    LurothElement e = element(ds);
    ClosedBall b = ClosedBall::from_endpoints(e.left(), e.right());
    DigitString got = digits_of_ball(b);
    REQUIRE(got.size() >= ds.size());
    for (std::size_t k = 0; k < ds.size(); ++k) CHECK(got.digits[k] == ds[k]);
    CHECK(digits_of_ball(ClosedBall(b.center(), b.radius() / 5)).size() >= got.size());
  }
}

TEST_CASE("strategy A games verify") {
  for (auto beta : {q(1, 2), q(9, 10)}) {
    for (auto kind : {AdversaryKind::kUniformRandom, AdversaryKind::kAccumulationSeeker}) {
      GameConfig c;
      c.beta = beta;
      c.max_rounds = 40;
      AdversarySpec spec;
      spec.kind = kind;
      spec.seed = 6;
      auto adv = make_adversary(spec);
      StrategyA a(constants(beta));
      GameTranscript t = play(c, a, *adv, initial_ball(spec));
      VerificationReport r = check_bounded(t);
      CHECK(r.pass);
      CHECK(r.legal);
      CHECK(r.bound == constants(beta).b);
      CHECK(r.max_digit_after_threshold <= r.bound);
      REQUIRE(r.early_cushion);
      CHECK(r.early_cushion->sign() > 0);
      CHECK(r.deepest_generation > *r.threshold_generation);
      // once past the preamble the verdict never flips on prefixes ending
      // with an A move
      bool started = false;
      for (std::size_t n = 2; n < t.moves.size(); n += 2) {
        GameTranscript p = t;
        p.moves.resize(n);
        started = started || t.moves[n - 1].annotation["case"] != "preamble";
        if (started) CHECK(check_bounded(p).pass);
      }
    }
  }
}

TEST_CASE("negative control: concentric A loses digits") {
  bool failed = false;
  for (long k = 1; k < 200 && !failed; ++k) {
    GameConfig c;
    c.max_rounds = 30;
    ConcentricStrategy a;
    AccumulationSeeker b;
    const ClosedBall start(q(k, 200), q(1, 50 + (k % 7) * 40));
    GameTranscript t = play(c, a, b, start);
    VerificationReport r = check_bounded(t);
    if (!r.pass && r.max_digit_after_threshold > r.bound) failed = true;
  }
  CHECK(failed);
}

TEST_CASE("tampered transcripts fail") {
  GameConfig c;
  c.max_rounds = 10;
  StrategyA a(constants(c.beta));
  UniformRandomAdversary b(2);
  GameTranscript t = play(c, a, b, ClosedBall(q(1, 2), q(1, 2)));
  REQUIRE(check_bounded(t).pass);
  GameTranscript bad = t;
  bad.moves[5].ball = ClosedBall(bad.moves[5].ball.center(), bad.moves[5].ball.radius() * q(9, 10));
  VerificationReport r = check_bounded(bad);
  CHECK_FALSE(r.pass);
  REQUIRE(r.violation);
  CHECK(r.violation->reason == ViolationReason::kRadiusNotEqual);
  CHECK(r.violation->move_index == 5);
  CHECK(to_json(r)["verdict"] == "fail");
}

TEST_CASE("a limit at an accumulation point passes with trailing twos") {
  GameConfig c;
  c.max_rounds = 12;
  FlushRight a, b;
  GameTranscript t = play(c, a, b, ClosedBall::from_endpoints(q(17, 40), q(1, 2)));
  REQUIRE(t.outcome.completed);
  VerificationReport r = check_bounded(t);
  CHECK(r.pass);
  CHECK(r.trailing_twos + 1 == r.digits.size());
  CHECK(r.digits.digits.front() == 3);
}

TEST_CASE("report json") {
  GameConfig c;
  c.max_rounds = 5;
  StrategyA a(constants(c.beta));
  UniformRandomAdversary b(1);
  json j = to_json(check_bounded(play(c, a, b, ClosedBall(q(1, 2), q(1, 2)))));
  CHECK(j["verdict"] == "pass");
  CHECK(j["b"] == 800);
  CHECK(j.contains("threshold_generation"));
  CHECK(j.contains("early_cushion"));
  CHECK(j.contains("deepest_generation"));
}

TEST_CASE("oracle suite") {
  OracleReport r = oracle_suite(500, 3);
  for (const auto& f : r.families) {
    INFO(f.name, " ", f.first_failure);
    CHECK(f.instances == 500);
    CHECK(f.failures == 0);
  }
  CHECK(r.ok());
}
