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

#include "luroth/commensurate.hpp"

#include "luroth/error.hpp"

namespace luroth {

namespace {

void require_proper(const ClosedBall& ball) {
  if (ball.is_whole_circle() || ball.wraps() || ball.contains_zero()) {
    throw Error(ErrorCode::kNotProper,
                "ball (" + ball.center().to_string() + ", " + ball.radius().to_string() +
                    ") is not a proper subset of X avoiding 0");
  }
}

// Index (1-based) of the last digit >= 3, or 0 if all digits are 2.
std::size_t last_non_two(const std::vector<Digit>& d) {
  for (std::size_t j = d.size(); j > 0; --j) {
    if (d[j - 1] >= 3) return j;
  }
  return 0;
}

// Element of generation j whose left endpoint is the right endpoint of the
// element with digits d (j = last_non_two(d) >= 1).
LurothElement element_starting_at_right_end(const std::vector<Digit>& d, std::size_t j) {
  std::vector<Digit> prefix(d.begin(), d.begin() + static_cast<std::ptrdiff_t>(j));
  prefix.back() -= 1;
  return element(prefix);
}

// A generation-n element inside [q, r] where q is the accumulation point of
// `base` (generation < n).
LurothElement fine_witness(const LurothElement& base, const Rational& r, std::size_t n) {
  const Rational& q = base.left();
  Digit a = (base.length() / (r - q)).ceil() + 1;
  if (a < 2) a = 2;
  LurothElement e = child(base, a);
  while (e.generation() < n) e = child(e, Digit(2));
  return e;
}

// Digits of the left endpoint with the cylinder chain, shared by the probes
// at different generations.
struct LeftChain {
  Rational left;
  Rational right;
  std::vector<LurothElement> chain;  // generations 0..k

  LeftChain(const ClosedBall& ball, std::size_t depth)
      : left(ball.left()), right(ball.right()), chain(cylinder_chain(left, depth)) {}

  std::size_t digits_known() const { return chain.size() - 1; }

  std::optional<LurothElement> probe(std::size_t n) const {
    if (n == 0) return std::nullopt;
    const std::size_t k = digits_known();
    if (k < n) {
      // l is the accumulation point of chain[k]; tiny elements sit just right of it.
      return fine_witness(chain[k], right, n);
    }
    const LurothElement& f = chain[n];
    if (f.left() == left) {
      if (f.right() <= right) return f;
      return std::nullopt;
    }
    const std::size_t j = last_non_two(f.digits());
    if (j == 0) return std::nullopt;  // f ends at 1 ~ 0, outside the ball
    if (j == n) {
      LurothElement e = *right_adjacent(f);
      if (e.right() <= right) return e;
      return std::nullopt;
    }
    const LurothElement base = element_starting_at_right_end(f.digits(), j);
    if (base.left() < right) return fine_witness(base, right, n);
    return std::nullopt;
  }

  std::optional<AccumulationPoint> accumulation(std::size_t m) const {
    const std::size_t k = digits_known();
    if (k < m) return AccumulationPoint{left, k, false};
    const LurothElement& f = chain[m];
    if (m >= 1 && f.left() == left) return AccumulationPoint{left, m, false};
    const Rational q = f.right();
    if (q <= right) {
      return AccumulationPoint{q, last_non_two(f.digits()), q == right};
    }
    return std::nullopt;
  }
};

// Generation n-1 elements covering a ball that is c.w.g. n.
std::vector<LurothElement> containers_of(const LeftChain& lc, std::size_t n) {
  std::vector<LurothElement> out{lc.chain[n - 1]};
  const auto acc = lc.accumulation(n - 1);
  if (acc && !acc->right_endpoint && acc->point == out.front().right()) {
    out.push_back(*right_adjacent(out.front()));
  }
  return out;
}

// Largest child of one of the containers lying inside [l, r]. Children
// shrink as the digit grows, so each container offers its smallest fitting
// digit.
std::optional<LurothElement> largest_inside(const std::vector<LurothElement>& containers,
                                            const Rational& l, const Rational& r) {
  std::optional<LurothElement> best;
  for (const auto& f : containers) {
    const Rational& p = f.left();
    if (r <= p) continue;
    Digit a = (f.length() / (r - p)).ceil() + 1;
    if (a < 2) a = 2;
    if (l > p && Rational(a, mpz_class(1)) > f.length() / (l - p)) continue;
    LurothElement c = child(f, a);
    if (!best || c.length() > best->length()) best = std::move(c);
  }
  return best;
}

std::size_t generation_upper_bound(const ClosedBall& ball) {
  // Every generation-n element has length <= 2^-n, so the element holding
  // the center fits once 2^-n <= radius.
  const mpz_class num = ball.radius().numerator();
  const mpz_class den = ball.radius().denominator();
  const long bits = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) + 2;
  return static_cast<std::size_t>(std::max(bits, 1L));
}

}  // namespace

std::optional<LurothElement> element_of_generation_inside(const ClosedBall& ball, std::size_t n) {
  require_proper(ball);
  LeftChain lc(ball, n);
  auto found = lc.probe(n);
  if (found && !lc.probe(n - 1)) {
    if (auto big = largest_inside(containers_of(lc, n), lc.left, lc.right)) return big;
  }
  return found;
}

bool contains_element_of_generation(const ClosedBall& ball, std::size_t n) {
  return element_of_generation_inside(ball, n).has_value();
}

std::optional<AccumulationPoint> accumulation_in(const ClosedBall& ball,
                                                 std::size_t up_to_generation) {
  require_proper(ball);
  return LeftChain(ball, up_to_generation).accumulation(up_to_generation);
}

CommensurateReport cwg(const ClosedBall& ball) {
  require_proper(ball);
  std::size_t hi = generation_upper_bound(ball);
  LeftChain lc(ball, hi);
  while (!lc.probe(hi)) {
    hi *= 2;  // not expected; the bound above is sufficient
    lc = LeftChain(ball, hi);
  }
  std::size_t lo = 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (lc.probe(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  const std::size_t n = lo;
  CommensurateReport report;
  report.generation = n;
  report.accumulation = lc.accumulation(n - 1);
  report.containers = containers_of(lc, n);
  auto big = largest_inside(report.containers, lc.left, lc.right);
  report.witness = big ? *big : *lc.probe(n);
  return report;
}

std::pair<ClosedInterval, ClosedInterval> split(const ClosedBall& ball, const Rational& p) {
  const ClosedInterval iv = ball.interval();
  if (!iv.contains(p)) {
    throw Error(ErrorCode::kPointOutside, p.to_string() + " is not in the ball");
  }
  return {ClosedInterval(iv.left(), p), ClosedInterval(p, iv.right())};
}

std::vector<LurothElement> elements_meeting(const ClosedBall& ball, std::size_t g) {
  const ClosedInterval iv = ball.interval();
  if (g == 0) return {LurothElement()};
  auto from_left = half_open_cylinder(iv.left(), g);
  if (from_left) {
    LurothElement from_right = locate(iv.right(), g);
    if (from_right == *from_left) return {*from_left};
    if (from_left->right() == from_right.left()) return {*from_left, from_right};
  }
  return elements_in_window(iv, g, 64).elements;
}

DigitString determined_prefix(const ClosedBall& ball) {
  DigitString out;
  if (ball.is_whole_circle() || ball.wraps() || ball.contains_zero()) return out;
  const Rational r = ball.right();
  Rational y = ball.left();
  LurothElement e;
  while (!y.is_zero()) {
    Digit a = first_digit(y);
    LurothElement c = child(e, a);
    if (r > c.right()) break;
    y = luroth_map(y);
    e = std::move(c);
    out.digits.push_back(std::move(a));
  }
  return out;
}

}  // namespace luroth
