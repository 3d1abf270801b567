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
#include "luroth/error.hpp"
#include "luroth/geometry.hpp"
#include "luroth/rational.hpp"
#include "oracle.hpp"

using luroth::ClosedBall;
using luroth::ClosedInterval;
using luroth::ErrorCode;
using luroth::Rational;

namespace {

Rational q(long p, long d) { return Rational(p, d); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const luroth::Error& e) {
    return e.code();
  }
  FAIL("expected luroth::Error");
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST_CASE("rational canonical form and parsing") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6).to_string() == "-1/2");
  CHECK(Rational::parse("10/4").to_string() == "5/2");
  CHECK(Rational::parse("3").to_string() == "3/1");
  CHECK(code_of([] { Rational::parse("0.5"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Rational::parse(" 1/2"); }) == ErrorCode::kParse);
  CHECK(code_of([] { Rational::parse("x"); }) == ErrorCode::kParse);
  CHECK(q(7, 2).floor() == 3);
  CHECK(q(7, 2).ceil() == 4);
  CHECK(q(-7, 2).floor() == -4);
  CHECK(q(4, 1).ceil() == 4);
}

TEST_CASE("arithmetic is exact and order independent") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational a(oracle::random_unit(rng, 1000));
    Rational b(oracle::random_unit(rng, 1000));
    Rational c(oracle::random_unit(rng, 1000));
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a / b) * b == a);
    CHECK(Rational::parse(a.to_string()) == a);
  }
}

TEST_CASE("contains_point") {
  ClosedBall b(q(1, 2), q(1, 8));
  CHECK(luroth::contains_point(b, q(1, 2)));
  CHECK(luroth::contains_point(b, q(5, 8)));
  CHECK_FALSE(luroth::contains_point(b, q(3, 4)));
  ClosedBall w(q(1, 16), q(1, 8));
  CHECK(w.wraps());
  CHECK(w.contains_zero());
  CHECK(luroth::contains_point(w, q(15, 16)));
  CHECK_FALSE(luroth::contains_point(w, q(7, 8)));
}

TEST_CASE("contains_interval") {
  CHECK(luroth::contains_interval(ClosedBall(q(7, 10), q(1, 10)), ClosedInterval(q(2, 3), q(3, 4))));
  CHECK_FALSE(luroth::contains_interval(ClosedBall(q(1, 2), q(1, 8)), ClosedInterval(q(1, 3), q(1, 2))));
  ClosedBall b(q(2, 5), q(1, 7));
  CHECK(luroth::contains_interval(b, b.interval()));
  // endpoint characterisation when the ball does not wrap
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Rational c(oracle::random_unit(rng, 64));
    Rational r = Rational(oracle::random_unit(rng, 64)) / 4;
    ClosedBall ball(c, r);
    if (ball.wraps()) continue;
    Rational x(oracle::random_unit(rng, 64)), y(oracle::random_unit(rng, 64));
    ClosedInterval iv(luroth::min(x, y), luroth::max(x, y));
    CHECK(luroth::contains_interval(ball, iv) ==
          (luroth::contains_point(ball, iv.left()) && luroth::contains_point(ball, iv.right())));
  }
}

TEST_CASE("enlarged") {
  ClosedBall b(q(1, 2), q(1, 100));
  CHECK(luroth::enlarged(b, Rational(5)) == ClosedBall(q(1, 2), q(1, 20)));
  CHECK(luroth::enlarged(b, Rational(1)) == b);
  CHECK(code_of([] { luroth::enlarged(ClosedBall(q(1, 2), q(1, 8)), q(800, 25)); }) ==
        ErrorCode::kOutOfCircle);
  CHECK(luroth::enlarged(luroth::enlarged(b, q(3, 2)), q(4, 3)) == luroth::enlarged(b, Rational(2)));
}

TEST_CASE("ball construction and circle geometry") {
  CHECK(code_of([] { ClosedBall(q(1, 2), q(3, 5)); }) == ErrorCode::kOutOfCircle);
  CHECK_THROWS_AS(ClosedBall(q(1, 2), Rational(0)), luroth::Error);
  ClosedBall whole(q(1, 2), q(1, 2));
  CHECK(whole.is_whole_circle());
  CHECK(whole.contains_zero());
  CHECK_FALSE(whole.wraps());
  CHECK(ClosedBall(q(5, 4), q(1, 8)).center() == q(1, 4));
  CHECK(ClosedBall::from_endpoints(q(3, 5), q(4, 5)) == ClosedBall(q(7, 10), q(1, 10)));
  CHECK(luroth::circle_distance(q(1, 10), q(9, 10)) == q(1, 5));
  CHECK(luroth::contains_ball(ClosedBall(q(1, 2), q(1, 4)), ClosedBall(q(5, 8), q(1, 8))));
  CHECK_FALSE(luroth::contains_ball(ClosedBall(q(1, 2), q(1, 4)), ClosedBall(q(11, 16), q(1, 8))));
  CHECK(luroth::contains_ball(ClosedBall(q(0, 1), q(1, 4)), ClosedBall(q(15, 16), q(1, 16))));
}
