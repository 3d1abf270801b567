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

#include "luroth/expansion.hpp"

#include <algorithm>
#include <functional>

#include "luroth/error.hpp"

namespace luroth {

namespace {

void require_digit(const Digit& a) {
  if (a < 2) throw Error(ErrorCode::kInvalidArgument, "digit " + a.get_str() + " < 2");
}

Rational digit_rational(const Digit& a) { return Rational(a, mpz_class(1)); }

}  // namespace

LurothElement::LurothElement() : left_(0), length_(1) {}

LurothElement::LurothElement(std::vector<Digit> digits, Rational left, Rational length)
    : digits_(std::move(digits)), left_(std::move(left)), length_(std::move(length)) {}

LurothElement LurothElement::from_digits(const std::vector<Digit>& digits) {
  LurothElement e;
  for (const auto& a : digits) e = child(e, a);
  return e;
}

Digit first_digit(const Rational& x) {
  if (x.sign() <= 0 || x >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "first digit needs x in (0,1), got " + x.to_string());
  }
  return x.reciprocal().ceil();
}

Rational luroth_map(const Rational& x) {
  if (x.sign() < 0 || x >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "luroth_map needs x in [0,1), got " + x.to_string());
  }
  if (x.is_zero()) return Rational(0);
  const Rational a = digit_rational(first_digit(x));
  return a * (a - 1) * x - (a - 1);
}

DigitString digits(const Rational& x, std::size_t max_k) {
  if (x.is_zero()) throw Error(ErrorCode::kNoExpansion, "0 has no Luroth expansion");
  if (x.sign() < 0 || x >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "digits need x in (0,1), got " + x.to_string());
  }
  DigitString out;
  Rational y = x;
  while (out.digits.size() < max_k) {
    Digit a = first_digit(y);
    const Rational ar = digit_rational(a);
    y = ar * (ar - 1) * y - (ar - 1);
    out.digits.push_back(std::move(a));
    if (y.is_zero()) {
      out.terminated = true;
      break;
    }
  }
  return out;
}

Rational evaluate(const std::vector<Digit>& digits) {
  Rational sum(0);
  Rational scale(1);
  for (const auto& a : digits) {
    require_digit(a);
    const Rational ar = digit_rational(a);
    sum += scale / ar;
    scale /= ar * (ar - 1);
  }
  return sum;
}

LurothElement element(const std::vector<Digit>& digits) {
  return LurothElement::from_digits(digits);
}

LurothElement child(const LurothElement& e, const Digit& a) {
  require_digit(a);
  const Rational ar = digit_rational(a);
  std::vector<Digit> d = e.digits_;
  d.push_back(a);
  return LurothElement(std::move(d), e.left_ + e.length_ / ar, e.length_ / (ar * (ar - 1)));
}

LurothElement parent(const LurothElement& e) {
  if (e.generation() == 0) throw Error(ErrorCode::kInvalidArgument, "X has no parent");
  const Rational a = digit_rational(e.digits_.back());
  Rational len = e.length_ * a * (a - 1);
  Rational left = e.left_ - len / a;
  std::vector<Digit> d(e.digits_.begin(), e.digits_.end() - 1);
  return LurothElement(std::move(d), std::move(left), std::move(len));
}

LurothElement left_adjacent(const LurothElement& e) {
  if (e.generation() == 0) throw Error(ErrorCode::kInvalidArgument, "X has no neighbours");
  return child(parent(e), e.digits_.back() + 1);
}

std::optional<LurothElement> right_adjacent(const LurothElement& e) {
  if (e.generation() == 0) throw Error(ErrorCode::kInvalidArgument, "X has no neighbours");
  if (e.digits_.back() == 2) return std::nullopt;
  return child(parent(e), e.digits_.back() - 1);
}

LurothElement locate(const Rational& x, std::size_t n) {
  if (x.is_zero()) throw Error(ErrorCode::kNoExpansion, "0 has no Luroth expansion");
  if (x.sign() < 0 || x > 1) {
    throw Error(ErrorCode::kInvalidArgument, "locate needs x in (0,1], got " + x.to_string());
  }
  std::vector<Digit> d;
  if (x != 1) {
    DigitString ds = digits(x, n);
    d = std::move(ds.digits);
    if (ds.terminated) d.back() += 1;  // trailing-2 reading: x becomes a right endpoint
  }
  while (d.size() < n) d.emplace_back(2);
  return element(d);
}

std::optional<LurothElement> half_open_cylinder(const Rational& x, std::size_t n) {
  if (x.sign() < 0 || x >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "cylinder needs x in [0,1), got " + x.to_string());
  }
  if (n == 0) return LurothElement();
  if (x.is_zero()) return std::nullopt;
  DigitString ds = digits(x, n);
  if (ds.size() < n) return std::nullopt;
  return element(ds.digits);
}

std::vector<LurothElement> cylinder_chain(const Rational& x, std::size_t count) {
  std::vector<LurothElement> chain{LurothElement()};
  if (x.is_zero() || count == 0) return chain;
  const DigitString ds = digits(x, count);
  chain.reserve(ds.size() + 1);
  for (const auto& a : ds.digits) chain.push_back(child(chain.back(), a));
  return chain;
}

Rational tail_measure(const LurothElement& e, const Digit& b) {
  return child(e, b).left() - e.left();
}

OpenInterval danger_interval(const LurothElement& e, const Digit& b) {
  require_digit(b);
  return OpenInterval{e.left(), e.left() + e.length() / digit_rational(b)};
}

std::optional<std::size_t> accumulation_generation(const Rational& x,
                                                   std::size_t max_generation) {
  if (x.is_zero() || x == 1) return 0;
  const DigitString ds = digits(x, max_generation);
  if (ds.terminated) return ds.size();
  return std::nullopt;
}

WindowEnumeration elements_in_window(const ClosedInterval& window, std::size_t n,
                                     std::size_t max_count) {
  WindowEnumeration out;
  const Rational& lo = window.left();
  const Rational& hi = window.right();
  std::function<void(const LurothElement&)> visit = [&](const LurothElement& e) {
    if (out.truncated) return;
    if (e.generation() == n) {
      if (out.elements.size() >= max_count) {
        out.truncated = true;
        return;
      }
      out.elements.push_back(e);
      return;
    }
    const Rational& p = e.left();
    const Rational& len = e.length();
    if (hi <= p) return;
    // child a spans [p + len/a, p + len/(a-1)]; it meets (lo, hi) iff
    // p + len/a < hi and p + len/(a-1) > lo.
    Digit a_min = (len / (hi - p)).floor() + 1;
    if (a_min < 2) a_min = 2;
    std::optional<Digit> a_max;
    if (lo > p) a_max = (len / (lo - p)).ceil();
    for (Digit a = a_min; !a_max || a <= *a_max; ++a) {
      if (out.truncated) return;
      visit(child(e, a));
    }
  };
  visit(LurothElement());
  std::sort(out.elements.begin(), out.elements.end(),
            [](const LurothElement& a, const LurothElement& b) { return a.left() < b.left(); });
  return out;
}

}  // namespace luroth
