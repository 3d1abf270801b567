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

#ifndef LUROTH_EXPANSION_HPP_
#define LUROTH_EXPANSION_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "luroth/geometry.hpp"
#include "luroth/rational.hpp"

namespace luroth {

// Digits are unbounded: a point just right of an accumulation point has an
// arbitrarily large next digit.
using Digit = mpz_class;

struct DigitString {
  std::vector<Digit> digits;
  // Set when the orbit reached 0 right after the last digit, so `digits` is
  // the complete finite expansion.
  bool terminated = false;

  std::size_t size() const { return digits.size(); }
  friend bool operator==(const DigitString&, const DigitString&) = default;
};

// Cylinder R_{a1...ak}: all points whose expansion starts with the digits,
// closed on both ends. Generation 0 is the whole circle [0, 1].
class LurothElement {
 public:
  // The generation-0 element X.
  LurothElement();

  static LurothElement from_digits(const std::vector<Digit>& digits);

  const std::vector<Digit>& digits() const { return digits_; }
  std::size_t generation() const { return digits_.size(); }

  // Left endpoint; this is also the element's accumulation point.
  const Rational& left() const { return left_; }
  const Rational& length() const { return length_; }
  Rational right() const { return left_ + length_; }
  ClosedInterval interval() const { return ClosedInterval(left_, right()); }
  const Rational& accumulation_point() const { return left_; }

  friend bool operator==(const LurothElement& a, const LurothElement& b) {
    return a.digits_ == b.digits_;
  }

 private:
  LurothElement(std::vector<Digit> digits, Rational left, Rational length);
  friend LurothElement child(const LurothElement& e, const Digit& a);
  friend LurothElement left_adjacent(const LurothElement& e);
  friend std::optional<LurothElement> right_adjacent(const LurothElement& e);
  friend LurothElement parent(const LurothElement& e);

  std::vector<Digit> digits_;
  Rational left_;
  Rational length_;
};

// First digit a with x in [1/a, 1/(a-1)); requires x in (0,1).
Digit first_digit(const Rational& x);

// Tx = n(n+1)x - n on [1/(n+1), 1/n); T0 = 0.
Rational luroth_map(const Rational& x);

// Up to max_k digits of x in (0,1). Throws NoExpansion for x = 0.
DigitString digits(const Rational& x, std::size_t max_k);

// Partial series sum of the digit string.
Rational evaluate(const std::vector<Digit>& digits);
inline Rational evaluate(const DigitString& d) { return evaluate(d.digits); }

LurothElement element(const std::vector<Digit>& digits);
inline LurothElement element(const DigitString& d) { return element(d.digits); }

// R_{gamma a}; requires a >= 2.
LurothElement child(const LurothElement& e, const Digit& a);
// Requires generation >= 1.
LurothElement parent(const LurothElement& e);

// R_{gamma (a+1)} for E = R_{gamma a}.
LurothElement left_adjacent(const LurothElement& e);
// R_{gamma (a-1)}, absent when the last digit is 2.
std::optional<LurothElement> right_adjacent(const LurothElement& e);

// Generation-n element whose closed interval contains x, with x in (0,1].
// Points that are accumulation points of generation m <= n are read through
// their trailing-2 expansion, so x is the right endpoint of the result; this
// keeps locate(x, n) nested inside locate(x, n - 1).
LurothElement locate(const Rational& x, std::size_t n);

// The generation-n element E with x in [E.left, E.right), or nullopt when x
// is an accumulation point of a generation below n (no such element exists).
std::optional<LurothElement> half_open_cylinder(const Rational& x, std::size_t n);

// Measure of the union of children R_{gamma a} with a > b, i.e. the extent
// from the accumulation point to the left endpoint of R_{gamma b}.
Rational tail_measure(const LurothElement& e, const Digit& b);

// Open interval (p, p + |E|/b) occupied by the children with digit > b.
OpenInterval danger_interval(const LurothElement& e, const Digit& b);

// Generation of x as an accumulation point (0 for x in {0, 1}), looking at
// most max_generation digits deep; nullopt if x is not one within that depth.
std::optional<std::size_t> accumulation_generation(const Rational& x,
                                                   std::size_t max_generation);

// The first `count` elements of the chain X = E_0 ⊃ E_1 ⊃ ... of half-open
// cylinders of x, stopping early if x terminates.
std::vector<LurothElement> cylinder_chain(const Rational& x, std::size_t count);

struct WindowEnumeration {
  std::vector<LurothElement> elements;  // sorted by left endpoint
  bool truncated = false;
};

// Generation-n elements whose interiors meet (left, right). Near an interior
// accumulation point of a lower generation there are infinitely many such
// elements; enumeration stops at max_count and sets `truncated`.
WindowEnumeration elements_in_window(const ClosedInterval& window, std::size_t n,
                                     std::size_t max_count);

}  // namespace luroth

#endif  // LUROTH_EXPANSION_HPP_
