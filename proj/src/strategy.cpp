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

#include "luroth/strategy.hpp"

#include <algorithm>
#include <sstream>

#include "luroth/error.hpp"

namespace luroth {

using nlohmann::json;

namespace {

Rational as_rational(const Digit& d) { return Rational(d, mpz_class(1)); }

json digits_json(const std::vector<Digit>& digits) {
  json arr = json::array();
  for (const auto& d : digits) {
    if (d.fits_slong_p()) {
      arr.push_back(d.get_si());
    } else {
      arr.push_back(d.get_str());
    }
  }
  return arr;
}

json open_json(const OpenInterval& i) { return json::array({to_json(i.left), to_json(i.right)}); }

[[noreturn]] void infeasible(const std::string& what) {
  throw Error(ErrorCode::kStrategyInfeasible, what);
}

// A ball of the given diameter inside the feasible interval between lo and
// hi; strict ends are excluded from the feasible set.
Placement center_in(const Rational& lo, bool lo_strict, const Rational& hi, bool hi_strict,
                    const Rational& diameter, const char* label) {
  const Rational len = hi - lo;
  const bool fits = len > diameter || (len == diameter && !lo_strict && !hi_strict);
  if (!fits) {
    infeasible(std::string(label) + ": feasible length " + len.to_string() +
               " below diameter " + diameter.to_string());
  }
  return Placement{ClosedBall((lo + hi) / 2, diameter / 2), len / diameter};
}

// Elements of generations 0..max_g whose interiors meet the interior of the
// ball, indexed by generation. Shares one digit expansion per endpoint.
std::vector<std::vector<LurothElement>> meeting_by_generation(const ClosedBall& ball,
                                                              std::size_t max_g) {
  const ClosedInterval iv = ball.interval();
  const auto left_chain = cylinder_chain(iv.left(), max_g);
  std::vector<LurothElement> right_chain(max_g + 1);
  LurothElement e = locate(iv.right(), max_g);
  for (std::size_t g = max_g + 1; g-- > 0;) {
    right_chain[g] = e;
    if (g > 0) e = parent(e);
  }
  std::vector<std::vector<LurothElement>> out(max_g + 1);
  for (std::size_t g = 0; g <= max_g; ++g) {
    if (g < left_chain.size()) {
      const LurothElement& a = left_chain[g];
      const LurothElement& b = right_chain[g];
      if (a == b) {
        out[g] = {a};
        continue;
      }
      if (a.right() == b.left()) {
        out[g] = {a, b};
        continue;
      }
    }
    out[g] = elements_in_window(iv, g, 64).elements;
  }
  return out;
}

}  // namespace

StrategyConstants constants(const Rational& alpha, const Rational& beta) {
  if (alpha.sign() <= 0 || alpha >= 1 || beta.sign() <= 0 || beta >= 1) {
    throw Error(ErrorCode::kInvalidArgument, "alpha and beta must lie in (0,1)");
  }
  StrategyConstants c;
  c.alpha = alpha;
  c.beta = beta;
  c.b = (Rational(2) * as_rational(c.c1) / (alpha * beta)).ceil();
  return c;
}

StrategyConstants constants(const Rational& beta) { return constants(Rational(1, 8), beta); }

std::string to_string(CushionPolicy p) {
  switch (p) {
    case CushionPolicy::kInitialOnly: return "initial-only";
    case CushionPolicy::kRescaled: return "rescaled";
    case CushionPolicy::kFixedB0: return "fixed-b0";
  }
  return "unknown";
}

CushionPolicy parse_cushion_policy(const std::string& text) {
  for (auto p : {CushionPolicy::kInitialOnly, CushionPolicy::kRescaled, CushionPolicy::kFixedB0}) {
    if (to_string(p) == text) return p;
  }
  throw Error(ErrorCode::kParse, "unknown cushion policy '" + text + "'");
}

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kPreamble: return "preamble";
    case CaseTag::kInterim: return "interim";
    case CaseTag::kCase1: return "case1";
    case CaseTag::kCase2: return "case2";
    case CaseTag::kCase3: return "case3";
  }
  return "unknown";
}

std::size_t StrategyState::total_rounds() const {
  std::size_t j = 0;
  for (auto r : round_counters) j += r;
  return j;
}

ClosedBall preamble_move(const ClosedBall& b, const StrategyConstants& consts) {
  const Rational radius = consts.alpha * b.radius();
  if (b.is_whole_circle()) return ClosedBall(Rational(1, 2), radius);
  // Work on the lifted interval [c - rho, c + rho]; maximise the distance of
  // A's center to the nearest integer.
  const Rational lo = b.left() + radius;
  const Rational hi = b.right() - radius;
  auto dist_to_z = [](const Rational& x) {
    const Rational f = mod_one(x);
    return min(f, Rational(1) - f);
  };
  std::vector<Rational> candidates{lo, hi};
  const Rational half(1, 2);
  for (mpz_class k = (lo - half).ceil(); as_rational(k) + half <= hi; ++k) {
    candidates.push_back(as_rational(k) + half);
  }
  Rational best = candidates.front();
  for (const auto& c : candidates) {
    const Rational dc = dist_to_z(c);
    const Rational db = dist_to_z(best);
    if (dc > db || (dc == db && c > best)) best = c;
  }
  ClosedBall a(mod_one(best), radius);
  if (dist_to_z(best) - radius < radius) {
    infeasible("preamble could not clear 0");
  }
  return a;
}

CaseContext classify(const ClosedBall& b, const CommensurateReport& report) {
  CaseContext ctx;
  const std::size_t g = report.generation;
  ctx.generation = g;
  if (report.accumulation) {
    const AccumulationPoint& acc = *report.accumulation;
    ctx.p = acc.point;
    ctx.halves = split(b, acc.point);
    const Rational left_len = ctx.halves->first.length();
    const Rational right_len = ctx.halves->second.length();
    if (right_len >= left_len) {
      if (acc.generation + 1 != g) {
        infeasible("case 1 accumulation point has generation " + std::to_string(acc.generation));
      }
      ctx.tag = CaseTag::kCase1;
      ctx.r_gamma = *half_open_cylinder(acc.point, g - 1);
    } else {
      ctx.tag = CaseTag::kCase2;
      ctx.r_gamma = report.containers.front();
      if (ctx.r_gamma.right() != acc.point) infeasible("case 2 container does not end at p");
    }
  } else {
    if (report.containers.size() != 1) infeasible("case 3 expects a single container");
    ctx.tag = CaseTag::kCase3;
    ctx.r_gamma = report.containers.front();
    ctx.p = ctx.r_gamma.left();
  }
  ctx.q = child(ctx.r_gamma, Digit(2)).left();
  if (ctx.tag != CaseTag::kCase2) ctx.p_plus = ctx.r_gamma.right();
  return ctx;
}

namespace {

Placement place_right_of_p(const ClosedBall& b, const CaseContext& ctx,
                           const StrategyConstants& consts, const char* label) {
  const ClosedInterval iv = b.interval();
  const Rational diameter = consts.alpha * b.diameter();
  // A.left > p keeps A off every other generation n-1 element.
  Rational lo = ctx.p;
  bool lo_strict = true;
  if (ctx.cushion_radius) {
    const Rational c = ctx.p + *ctx.cushion_radius;
    if (c >= lo) {
      lo = c;
      lo_strict = true;
    }
  }
  if (ctx.danger && ctx.danger->right > lo) {
    lo = ctx.danger->right;
    lo_strict = false;
  }
  if (iv.left() > lo) {
    lo = iv.left();
    lo_strict = false;
  }
  // A.right < q keeps A off R_{gamma 2}.
  Rational hi = ctx.q;
  bool hi_strict = true;
  if (iv.right() < hi) {
    hi = iv.right();
    hi_strict = false;
  }
  return center_in(lo, lo_strict, hi, hi_strict, diameter, label);
}

}  // namespace

Placement case1_move(const ClosedBall& b, const CaseContext& ctx, const StrategyConstants& consts) {
  return place_right_of_p(b, ctx, consts, "case1");
}

Placement case3_move(const ClosedBall& b, const CaseContext& ctx, const StrategyConstants& consts) {
  return place_right_of_p(b, ctx, consts, "case3");
}

Placement case2_move(const ClosedBall& b, CaseContext& ctx, const StrategyConstants& consts) {
  const ClosedInterval iv = b.interval();
  const Rational diameter = consts.alpha * b.diameter();
  const Rational& p = ctx.p;
  const Rational a_left = p - diameter;
  if (a_left < iv.left()) infeasible("case2: A does not fit in B^l");
  const LurothElement r2 = child(ctx.r_gamma, Digit(2));
  const OpenInterval r2_danger = danger_interval(r2, consts.b);
  if (a_left < r2.left()) infeasible("case2: A leaves R_{gamma 2}");
  if (a_left < r2_danger.right) infeasible("case2: A meets the danger interval of R_{gamma 2}");
  // Longest trailing-2 chain R_{gamma 2 2^k} still containing A.
  LurothElement outer = r2;
  ctx.trailing2.clear();
  while (child(outer, Digit(2)).length() >= diameter) {
    outer = child(outer, Digit(2));
    ctx.trailing2.emplace_back(2);
  }
  if (!(diameter > outer.length() / 2)) infeasible("case2: |A| <= |R_{gamma 2 gamma~}|/2");
  ctx.danger = r2_danger;
  const Rational room = p - max(iv.left(), r2_danger.right);
  return Placement{ClosedBall(p - diameter / 2, diameter / 2), room / diameter};
}

JumpCertificate jump_certificates(const ClosedBall& b_at_jump, const CommensurateReport& report,
                                  const StrategyState& state, const StrategyConstants& consts) {
  JumpCertificate cert;
  cert.from_generation = state.current_generation;
  cert.to_generation = report.generation;
  const std::size_t to = report.generation;
  std::size_t start = state.current_generation;
  if (state.case2_outer) start = std::max(start, state.case2_outer->generation());
  cert.chain_start_generation = start;

  const auto meeting = meeting_by_generation(b_at_jump, to - 1);
  const Rational diam = b_at_jump.diameter();
  const Rational b = as_rational(consts.b);
  const Rational hole = as_rational(consts.sqrt_c1) / b;

  bool first = true;
  for (std::size_t g = start; g + 1 <= to; ++g) {
    for (const auto& e : meeting[g]) {
      const Rational ratio = diam / (hole * e.length());
      if (first || ratio < cert.chain_ratio) cert.chain_ratio = ratio;
      first = false;
    }
  }
  cert.chain_holds = first || cert.chain_ratio > 1;

  const ClosedInterval iv = b_at_jump.interval();
  for (std::size_t g = state.threshold_generation; g + 2 <= to; ++g) {
    for (const auto& e : meeting[g]) {
      const OpenInterval d = danger_interval(e, consts.b);
      if (d.meets(iv)) cert.lower_hits.push_back(d);
    }
  }
  cert.lower_disjoint = cert.lower_hits.empty();

  Rational total(0);
  for (const auto& e : meeting[to - 1]) {
    cert.dangers.push_back(danger_interval(e, consts.b));
    total += e.length() / b;
  }
  cert.margin = diam / total;
  cert.margin_holds = cert.margin >= Rational(5, 2);
  return cert;
}

json to_json(const JumpCertificate& c) {
  json dangers = json::array();
  for (const auto& d : c.dangers) dangers.push_back(open_json(d));
  json hits = json::array();
  for (const auto& d : c.lower_hits) hits.push_back(open_json(d));
  return json{{"from", c.from_generation},
              {"to", c.to_generation},
              {"chain_start", c.chain_start_generation},
              {"chain_ratio", to_json(c.chain_ratio)},
              {"chain_holds", c.chain_holds},
              {"lower_disjoint", c.lower_disjoint},
              {"lower_hits", hits},
              {"margin", to_json(c.margin)},
              {"margin_approx", c.margin.to_double()},
              {"margin_holds", c.margin_holds},
              {"dangers", dangers}};
}

StrategyA::StrategyA(StrategyConstants consts, CushionPolicy policy)
    : consts_(std::move(consts)), policy_(policy) {}

Strategy::Proposal StrategyA::propose(const GameTranscript& so_far) {
  std::vector<const ClosedBall*> b_balls;
  for (const auto& m : so_far.moves) {
    if (m.player == Player::kB) b_balls.push_back(&m.ball);
  }
  if (b_balls.empty() || so_far.moves.back().player != Player::kB) {
    throw Error(ErrorCode::kInvalidArgument, "player A moves only after a B move");
  }
  if (processed_b_moves_ >= b_balls.size()) {
    // A transcript we have not followed; rebuild the state from scratch.
    state_ = StrategyState{};
    processed_b_moves_ = 0;
  }
  Proposal out{*b_balls.back(), json()};
  while (processed_b_moves_ < b_balls.size()) {
    out = respond(*b_balls[processed_b_moves_]);
    ++processed_b_moves_;
  }
  return out;
}

Strategy::Proposal StrategyA::respond(const ClosedBall& b) {
  if (state_.phase == StrategyState::Phase::kPreamble) {
    if (b.is_whole_circle() || b.contains_zero()) {
      return Proposal{preamble_move(b, consts_), json{{"case", to_string(CaseTag::kPreamble)}}};
    }
    state_.phase = StrategyState::Phase::kMain;
    CommensurateReport report = cwg(b);
    state_.b0_radius = as_rational(consts_.b) / as_rational(consts_.c1) * b.radius();
    state_.threshold_generation = report.generation;
    state_.current_generation = report.generation;
    state_.jump_generations = {report.generation};
    state_.round_counters = {1};
    state_.rounds_in_generation = 1;
    return jump_move(b, report, true);
  }
  CommensurateReport report = cwg(b);
  if (report.generation == state_.current_generation) {
    ++state_.rounds_in_generation;
    state_.case_context.reset();
    return Proposal{ClosedBall(b.center(), consts_.alpha * b.radius()),
                    json{{"case", to_string(CaseTag::kInterim)}, {"cwg", report.generation}}};
  }
  if (report.generation < state_.current_generation) {
    throw Error(ErrorCode::kInvalidArgument, "c.w.g. generation decreased; balls are not nested");
  }
  JumpCertificate cert = jump_certificates(b, report, state_, consts_);
  state_.certificates.push_back(cert);
  if (!cert.ok()) {
    throw Error(ErrorCode::kCertificateFailed, to_json(cert).dump());
  }
  state_.round_counters.push_back(state_.rounds_in_generation);
  state_.rounds_in_generation = 1;
  state_.current_generation = report.generation;
  state_.jump_generations.push_back(report.generation);
  state_.case2_outer.reset();
  Proposal p = jump_move(b, report, false);
  p.annotation["certificate"] = to_json(cert);
  return p;
}

Strategy::Proposal StrategyA::jump_move(const ClosedBall& b, const CommensurateReport& report,
                                        bool initial) {
  CaseContext ctx = classify(b, report);
  ctx.initial = initial;
  const Rational bq = as_rational(consts_.b);
  if (initial) {
    ctx.cushion_radius = *state_.b0_radius / bq;
  } else {
    if (policy_ == CushionPolicy::kRescaled) ctx.cushion_radius = b.radius() / as_rational(consts_.c1);
    if (policy_ == CushionPolicy::kFixedB0) ctx.cushion_radius = *state_.b0_radius / bq;
    if (ctx.tag != CaseTag::kCase2) ctx.danger = danger_interval(ctx.r_gamma, consts_.b);
  }
  Placement placement = [&] {
    switch (ctx.tag) {
      case CaseTag::kCase1: return case1_move(b, ctx, consts_);
      case CaseTag::kCase2: return case2_move(b, ctx, consts_);
      default: return case3_move(b, ctx, consts_);
    }
  }();
  if (ctx.tag == CaseTag::kCase2) {
    LurothElement outer = child(ctx.r_gamma, Digit(2));
    for (const auto& d : ctx.trailing2) outer = child(outer, d);
    state_.case2_outer = outer;
  }

  json danger = json::array();
  if (ctx.danger) danger.push_back(open_json(*ctx.danger));
  json annotation{{"case", to_string(ctx.tag)},
                  {"cwg", report.generation},
                  {"initial", initial},
                  {"p", to_json(ctx.p)},
                  {"r_gamma", digits_json(ctx.r_gamma.digits())},
                  {"danger", danger},
                  {"margins",
                   {{"feasible", to_json(placement.feasible_ratio)},
                    {"feasible_approx", placement.feasible_ratio.to_double()}}}};
  if (ctx.cushion_radius) annotation["cushion"] = to_json(*ctx.cushion_radius);
  if (ctx.tag == CaseTag::kCase2) annotation["trailing2"] = ctx.trailing2.size();
  state_.case_context = std::move(ctx);
  return Proposal{std::move(placement.ball), std::move(annotation)};
}

Strategy::Proposal ConcentricStrategy::propose(const GameTranscript& so_far) {
  if (so_far.moves.empty()) throw Error(ErrorCode::kInvalidArgument, "no ball to answer");
  const ClosedBall& b = so_far.moves.back().ball;
  return Proposal{ClosedBall(b.center(), so_far.config.alpha * b.radius()),
                  json{{"case", "concentric"}}};
}

}  // namespace luroth
