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

#ifndef LUROTH_VERIFIER_HPP_
#define LUROTH_VERIFIER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "luroth/expansion.hpp"
#include "luroth/game.hpp"

namespace luroth {

struct VerificationReport {
  bool legal = false;
  std::optional<Violation> violation;
  std::size_t rounds = 0;
  // c.w.g. generation of the first B ball past the preamble (n in BL(b)).
  std::optional<std::size_t> threshold_generation;
  // Largest c with the limit ball clear of (p_E, p_E + c|E|) for the
  // determined elements of generations below the threshold.
  std::optional<Rational> early_cushion;
  DigitString digits;                 // determined prefix of the limit ball
  std::size_t deepest_generation = 0; // = digits.size()
  Digit max_digit_after_threshold = 0;
  Digit max_early_digit = 0;
  Digit bound = 0;                    // b
  Digit overall_bound = 0;            // max(b, early digits)
  std::size_t trailing_twos = 0;      // > 0 when closing in on a right endpoint
  bool pass = false;
  std::vector<std::string> reasons;   // why the verdict is fail
};

// Digits shared by every point of the ball (empty when it meets 0).
DigitString digits_of_ball(const ClosedBall& ball);

// Uses b = ceil(2 c1 / (alpha beta)) from the transcript's config.
VerificationReport check_bounded(const GameTranscript& t);
VerificationReport check_bounded(const GameTranscript& t, const Digit& b);

nlohmann::json to_json(const VerificationReport& r);

struct OracleFamily {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct OracleReport {
  std::vector<OracleFamily> families;
  bool ok() const;
};

// Brute-force cross-checks on random instances: tail telescoping, c.w.g.
// uniqueness and containers, adjacency involution, danger/digit equivalence.
OracleReport oracle_suite(std::size_t instances = 500, std::uint64_t seed = 1);

nlohmann::json to_json(const OracleReport& r);

}  // namespace luroth

#endif  // LUROTH_VERIFIER_HPP_
