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

#ifndef LUROTH_GEOMETRY_HPP_
#define LUROTH_GEOMETRY_HPP_

#include <optional>
#include <string>

#include "luroth/rational.hpp"

namespace luroth {

// Closed interval [left, right] inside [0, 1]. A single point (left == right)
// is allowed so that splits at an endpoint have a representation.
class ClosedInterval {
 public:
  ClosedInterval(Rational left, Rational right);

  const Rational& left() const { return left_; }
  const Rational& right() const { return right_; }
  Rational length() const { return right_ - left_; }
  bool is_degenerate() const { return left_ == right_; }

  bool contains(const Rational& x) const { return left_ <= x && x <= right_; }
  bool contains(const ClosedInterval& o) const { return left_ <= o.left_ && o.right_ <= right_; }
  // Positive-length overlap.
  bool overlaps_interior(const ClosedInterval& o) const {
    return left_ < o.right_ && o.left_ < right_;
  }

  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;

 private:
  Rational left_;
  Rational right_;
};

// Open interval (left, right); used for the "danger" regions next to
// accumulation points.
struct OpenInterval {
  Rational left;
  Rational right;

  Rational length() const { return right - left; }
  bool contains(const Rational& x) const { return left < x && x < right; }
  // True iff the closed interval shares a point with this open one.
  bool meets(const ClosedInterval& c) const { return c.left() < right && left < c.right(); }

  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

// Closed ball on the circle X = [0,1]/0~1. The center lives in [0,1) and the
// radius satisfies 0 < radius <= 1/2. `wraps` is set when the ball crosses
// the identified point 0~1, i.e. center - radius < 0 or center + radius > 1.
class ClosedBall {
 public:
  ClosedBall(Rational center, Rational radius);
  // Ball whose non-wrapping extent is exactly [left, right].
  static ClosedBall from_endpoints(const Rational& left, const Rational& right);

  const Rational& center() const { return center_; }
  const Rational& radius() const { return radius_; }
  bool wraps() const { return wraps_; }

  // Lifted endpoints; may leave [0,1] when the ball wraps.
  Rational left() const { return center_ - radius_; }
  Rational right() const { return center_ + radius_; }
  Rational diameter() const { return radius_ * 2; }

  // The ball as an interval of [0,1]; throws OutOfCircle when it wraps.
  ClosedInterval interval() const;

  // True iff the point 0~1 lies in the closed ball.
  bool contains_zero() const;
  bool is_whole_circle() const;

  friend bool operator==(const ClosedBall&, const ClosedBall&) = default;

 private:
  Rational center_;
  Rational radius_;
  bool wraps_ = false;
};

// Distance on the circle.
Rational circle_distance(const Rational& x, const Rational& y);

bool contains_point(const ClosedBall& ball, const Rational& x);
bool contains_interval(const ClosedBall& ball, const ClosedInterval& interval);
// Every point of `inner` lies in `outer` (circle metric).
bool contains_ball(const ClosedBall& outer, const ClosedBall& inner);

// Same center, radius scaled by `factor`. Throws OutOfCircle when the result
// would exceed radius 1/2.
ClosedBall enlarged(const ClosedBall& ball, const Rational& factor);

// Reduce x modulo 1 into [0,1).
Rational mod_one(const Rational& x);

}  // namespace luroth

#endif  // LUROTH_GEOMETRY_HPP_
