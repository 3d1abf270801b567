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

#include "luroth/verifier.hpp"

#include <random>

#include "luroth/commensurate.hpp"
#include "luroth/error.hpp"

namespace luroth {

using nlohmann::json;

namespace {

json digit_json(const Digit& d) {
  if (d.fits_slong_p()) return d.get_si();
  return d.get_str();
}

Digit bound_for(const GameConfig& c) {
  return (Rational(50) / (c.alpha * c.beta)).ceil();
}

std::optional<std::size_t> threshold_of(const GameTranscript& t) {
  for (const auto& m : t.moves) {
    if (m.player != Player::kB) continue;
    if (m.ball.is_whole_circle() || m.ball.contains_zero()) continue;
    return cwg(m.ball).generation;
  }
  return std::nullopt;
}

}  // namespace

DigitString digits_of_ball(const ClosedBall& ball) { return determined_prefix(ball); }

VerificationReport check_bounded(const GameTranscript& t) { return check_bounded(t, bound_for(t.config)); }

VerificationReport check_bounded(const GameTranscript& t, const Digit& b) {
  VerificationReport r;
  r.bound = b;
  r.overall_bound = b;
  r.rounds = t.rounds();
  r.violation = verify_legality(t);
  if (!r.violation && !t.outcome.completed) r.violation = t.outcome.violation;
  r.legal = !r.violation;
  if (!r.legal) {
    r.reasons.push_back("illegal: " + to_string(r.violation->reason) + " at move " +
                        std::to_string(r.violation->move_index));
  }
  if (t.moves.empty()) {
    r.reasons.push_back("empty transcript");
    return r;
  }
  const ClosedBall last = limit_ball(t);
  r.digits = digits_of_ball(last);
  r.deepest_generation = r.digits.size();
  for (auto it = r.digits.digits.rbegin(); it != r.digits.digits.rend() && *it == 2; ++it) {
    ++r.trailing_twos;
  }
  r.threshold_generation = threshold_of(t);
  if (!r.threshold_generation) {
    r.reasons.push_back("no ball past the preamble");
    return r;
  }
  const std::size_t n = *r.threshold_generation;
  for (std::size_t k = 1; k <= r.digits.size(); ++k) {
    const Digit& d = r.digits.digits[k - 1];
    if (k > n) {
      if (d > r.max_digit_after_threshold) r.max_digit_after_threshold = d;
    } else if (d > r.max_early_digit) {
      r.max_early_digit = d;
    }
  }
  if (r.max_early_digit > r.overall_bound) r.overall_bound = r.max_early_digit;
  if (r.max_digit_after_threshold > b) {
    r.reasons.push_back("digit " + r.max_digit_after_threshold.get_str() + " after generation " +
                        std::to_string(n) + " exceeds b = " + b.get_str());
  }
  if (!last.wraps() && !last.contains_zero()) {
    const Rational x = last.left();
    LurothElement e;
    const std::size_t upto = std::min(n, r.digits.size() + 1);
    for (std::size_t g = 0; g < upto; ++g) {
      if (g > 0) e = child(e, r.digits.digits[g - 1]);
      const Rational c = (x - e.left()) / e.length();
      if (!r.early_cushion || c < *r.early_cushion) r.early_cushion = c;
    }
  }
  if (!r.early_cushion || r.early_cushion->sign() <= 0) {
    r.reasons.push_back("limit ball touches an early accumulation point");
  }
  r.pass = r.reasons.empty();
  return r;
}

json to_json(const VerificationReport& r) {
  json digits = json::array();
  for (const auto& d : r.digits.digits) digits.push_back(digit_json(d));
  json out{{"verdict", r.pass ? "pass" : "fail"},
           {"legal", r.legal},
           {"rounds", r.rounds},
           {"threshold_generation", r.threshold_generation ? json(*r.threshold_generation) : json()},
           {"early_cushion", r.early_cushion ? to_json(*r.early_cushion) : json()},
           {"deepest_generation", r.deepest_generation},
           {"digits", digits},
           {"max_digit_after_threshold", digit_json(r.max_digit_after_threshold)},
           {"max_early_digit", digit_json(r.max_early_digit)},
           {"b", digit_json(r.bound)},
           {"overall_bound", digit_json(r.overall_bound)},
           {"trailing_twos", r.trailing_twos},
           {"reasons", r.reasons}};
  if (r.violation) {
    out["violation"] = {{"player", to_string(r.violation->player)},
                        {"reason", to_string(r.violation->reason)},
                        {"move_index", r.violation->move_index},
                        {"detail", r.violation->detail}};
  }
  return out;
}

bool OracleReport::ok() const {
  for (const auto& f : families) {
    if (f.failures > 0 || f.instances == 0) return false;
  }
  return true;
}

OracleReport oracle_suite(std::size_t instances, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto random_element = [&] {
    std::vector<Digit> d;
    for (long k = pick(0, 6); k > 0; --k) d.emplace_back(pick(2, 12));
    return element(d);
  };
  auto random_ball = [&] {
    const long den = 1 << 16;
    for (;;) {
      long a = pick(1, den - 1), b = pick(1, den - 1);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      return ClosedBall::from_endpoints(Rational(a, den), Rational(b, den));
    }
  };
  auto fail = [](OracleFamily& f, const std::string& what) {
    if (f.failures++ == 0) f.first_failure = what;
  };

  auto family = [](const char* name) {
    OracleFamily f;
    f.name = name;
    return f;
  };
  OracleFamily tail = family("tail-telescoping"), unique = family("cwg-uniqueness"),
               cont = family("containers"), adj = family("adjacency"), danger = family("danger-digit");
  for (std::size_t i = 0; i < instances; ++i) {
    {
      LurothElement e = random_element();
      const long b = pick(2, 50);
      Rational sum = tail_measure(e, Digit(b));
      for (long a = 2; a <= b; ++a) sum += child(e, Digit(a)).length();
      ++tail.instances;
      if (sum != e.length() || tail_measure(e, Digit(b)) * Rational(b) != e.length()) {
        fail(tail, "element generation " + std::to_string(e.generation()));
      }
    }
    {
      ClosedBall ball = random_ball();
      CommensurateReport r = cwg(ball);
      const std::size_t n = r.generation;
      ++unique.instances;
      bool ok = r.witness.generation() == n && contains_interval(ball, r.witness.interval());
      // Generation n-1: only finitely many elements meet the ball; none fits.
      auto below = elements_in_window(ball.interval(), n - 1, 1000);
      ok = ok && !below.truncated;
      for (const auto& e : below.elements) ok = ok && !contains_interval(ball, e.interval());
      if (!ok) fail(unique, "ball " + ball.left().to_string() + " " + ball.right().to_string());
      ++cont.instances;
      const auto& c = r.containers;
      bool cok = !c.empty() && c.size() <= 2 && c.front().left() <= ball.left() &&
                 ball.right() <= c.back().right();
      if (c.size() == 2) cok = cok && c[0].right() == c[1].left();
      if (!cok) fail(cont, "ball " + ball.left().to_string() + " " + ball.right().to_string());
    }
    {
      LurothElement e = random_element();
      if (e.generation() == 0) e = child(e, Digit(pick(2, 12)));
      ++adj.instances;
      LurothElement l = left_adjacent(e);
      if (right_adjacent(l) != e || l.right() != e.left()) fail(adj, "adjacency");
    }
    {
      const long q = pick(2, 100000);
      const Rational x(pick(1, q - 1), q);
      const DigitString d = digits(x, 8);
      const std::size_t k = static_cast<std::size_t>(pick(1, static_cast<long>(d.size())));
      const auto parent_cyl = k == 1 ? std::optional<LurothElement>(LurothElement())
                                     : half_open_cylinder(x, k - 1);
      const long b = pick(2, 20);
      ++danger.instances;
      if (parent_cyl && parent_cyl->left() != x) {
        const bool inside = danger_interval(*parent_cyl, Digit(b)).contains(x);
        if (inside != (d.digits[k - 1] > b)) fail(danger, "x = " + x.to_string());
      }
    }
  }
  return OracleReport{{tail, unique, cont, adj, danger}};
}

json to_json(const OracleReport& r) {
  json fams = json::array();
  for (const auto& f : r.families) {
    fams.push_back({{"name", f.name},
                    {"instances", f.instances},
                    {"failures", f.failures},
                    {"first_failure", f.first_failure}});
  }
  return json{{"ok", r.ok()}, {"families", fams}};
}

}  // namespace luroth
