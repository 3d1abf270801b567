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

#ifndef LUROTH_COMMENSURATE_HPP_
#define LUROTH_COMMENSURATE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "luroth/expansion.hpp"
#include "luroth/geometry.hpp"

namespace luroth {

struct AccumulationPoint {
  Rational point;
  std::size_t generation = 0;
  // The point coincides with the ball's right endpoint (the only place an
  // accumulation point of generation < n - 1 can sit in a c.w.g. n ball).
  bool right_endpoint = false;
};

// A closed ball B is commensurate with generation n (c.w.g. n) when it
// contains a generation-n element but no generation-(n-1) element.
struct CommensurateReport {
  std::size_t generation = 0;
  LurothElement witness;                   // largest generation-n element inside B
  std::vector<LurothElement> containers;   // generation n-1, union covers B
  std::optional<AccumulationPoint> accumulation;
};

// Some generation-n element lies inside `ball`. Requires wraps == false and
// 0 not in ball.
bool contains_element_of_generation(const ClosedBall& ball, std::size_t n);

// Same test returning a witness; the largest one when n is the c.w.g.
// generation of the ball.
std::optional<LurothElement> element_of_generation_inside(const ClosedBall& ball, std::size_t n);

// The unique n with B c.w.g. n. Throws NotProper when B is the whole circle,
// wraps, or contains 0.
CommensurateReport cwg(const ClosedBall& ball);

// Unique accumulation point of generations <= up_to_generation inside the
// ball, assuming the ball is c.w.g. up_to_generation + 1.
std::optional<AccumulationPoint> accumulation_in(const ClosedBall& ball,
                                                 std::size_t up_to_generation);

// ({x in B : x <= p}, {x in B : x >= p}). Throws PointOutside when p is not
// in B.
std::pair<ClosedInterval, ClosedInterval> split(const ClosedBall& ball, const Rational& p);

// Elements of generation g whose interior meets the interior of the ball;
// at most two for every g below the ball's c.w.g. generation.
std::vector<LurothElement> elements_meeting(const ClosedBall& ball, std::size_t g);

// Longest digit prefix d with ball inside element(d) (the digits shared by
// every point of the ball).
DigitString determined_prefix(const ClosedBall& ball);

}  // namespace luroth

#endif  // LUROTH_COMMENSURATE_HPP_
