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

#include "luroth/geometry.hpp"

#include "luroth/error.hpp"

namespace luroth {

namespace {
const Rational kHalf(1, 2);
}

ClosedInterval::ClosedInterval(Rational left, Rational right)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_ > right_ || left_ < 0 || right_ > 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad interval [" + left_.to_string() + ", " + right_.to_string() + "]");
  }
}

Rational mod_one(const Rational& x) {
  return x - Rational(x.floor(), 1);
}

ClosedBall::ClosedBall(Rational center, Rational radius)
    : center_(std::move(center)), radius_(std::move(radius)) {
  if (radius_.sign() <= 0) throw Error(ErrorCode::kInvalidArgument, "radius must be positive");
  if (radius_ > kHalf) {
    throw Error(ErrorCode::kOutOfCircle, "radius " + radius_.to_string() + " exceeds 1/2");
  }
  if (center_ < 0 || center_ >= 1) center_ = mod_one(center_);
  wraps_ = left() < 0 || right() > 1;
}

ClosedBall ClosedBall::from_endpoints(const Rational& left, const Rational& right) {
  if (!(left < right)) throw Error(ErrorCode::kInvalidArgument, "ball needs left < right");
  return ClosedBall((left + right) / 2, (right - left) / 2);
}

ClosedInterval ClosedBall::interval() const {
  if (wraps_) throw Error(ErrorCode::kOutOfCircle, "ball crosses 0~1");
  return ClosedInterval(left(), right());
}

bool ClosedBall::contains_zero() const { return left() <= 0 || right() >= 1; }

bool ClosedBall::is_whole_circle() const { return radius_ == kHalf; }

Rational circle_distance(const Rational& x, const Rational& y) {
  const Rational d = mod_one(x - y);
  return min(d, Rational(1) - d);
}

bool contains_point(const ClosedBall& ball, const Rational& x) {
  return circle_distance(ball.center(), x) <= ball.radius();
}

bool contains_interval(const ClosedBall& ball, const ClosedInterval& interval) {
  if (ball.is_whole_circle()) return true;
  if (!ball.wraps()) {
    return ball.left() <= interval.left() && interval.right() <= ball.right();
  }
  // Wrapping ball = [0, right - 1 or right] U [left + 1 or left, 1].
  Rational lo = ball.left();
  Rational hi = ball.right();
  if (lo < 0) {
    return interval.right() <= hi || interval.left() >= lo + 1;
  }
  return interval.right() <= hi - 1 || interval.left() >= lo;
}

bool contains_ball(const ClosedBall& outer, const ClosedBall& inner) {
  if (outer.is_whole_circle()) return true;
  if (inner.radius() > outer.radius()) return false;
  return circle_distance(outer.center(), inner.center()) <= outer.radius() - inner.radius();
}

ClosedBall enlarged(const ClosedBall& ball, const Rational& factor) {
  if (factor.sign() <= 0) throw Error(ErrorCode::kInvalidArgument, "factor must be positive");
  const Rational r = ball.radius() * factor;
  if (r > kHalf) {
    throw Error(ErrorCode::kOutOfCircle, "enlarged radius " + r.to_string() + " exceeds 1/2");
  }
  return ClosedBall(ball.center(), r);
}

}  // namespace luroth
