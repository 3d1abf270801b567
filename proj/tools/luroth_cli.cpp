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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "luroth/commensurate.hpp"
#include "luroth/error.hpp"
#include "luroth/expansion.hpp"
#include "luroth/runner.hpp"
#include "luroth/service.hpp"
#include "luroth/verifier.hpp"

using namespace luroth;

namespace {

constexpr const char* kDirEnv = "LUROTH_TRANSCRIPT_DIR";

std::vector<Digit> parse_digits(const std::string& text) {
  std::vector<Digit> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorCode::kParse, "digit '" + item + "' is not a positive integer");
    }
    Digit d(item);
    if (d < 2) throw Error(ErrorCode::kInvalidArgument, "digits must be at least 2");
    out.push_back(d);
  }
  if (out.empty()) throw Error(ErrorCode::kParse, "no digits given");
  return out;
}

std::string join(const std::vector<Digit>& digits) {
  std::string out;
  for (const auto& d : digits) {
    if (!out.empty()) out += ' ';
    out += d.get_str();
  }
  return out;
}

std::string show(const ClosedInterval& i) {
  return "[" + i.left().to_string() + ", " + i.right().to_string() + "]";
}

std::string show(const LurothElement& e) {
  return show(e.interval()) + " digits " + (e.digits().empty() ? "()" : join(e.digits()));
}

std::string default_dir() {
  const char* env = std::getenv(kDirEnv);
  return env ? env : "";
}

void print_report(const VerificationReport& r) {
  std::cout << "legal = " << (r.legal ? "yes" : "no") << "\n"
            << "rounds = " << r.rounds << "\n"
            << "b = " << r.bound.get_str() << "\n";
  if (r.threshold_generation) std::cout << "threshold generation = " << *r.threshold_generation << "\n";
  std::cout << "deepest generation = " << r.deepest_generation << "\n"
            << "max digit after threshold = " << r.max_digit_after_threshold.get_str() << "\n"
            << "max early digit = " << r.max_early_digit.get_str() << "\n";
  if (r.early_cushion) {
    std::cout << "early cushion = " << std::fixed << std::setprecision(6) << r.early_cushion->to_double()
              << " (exact " << r.early_cushion->to_string() << ")\n";
  }
  std::cout << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
  for (const auto& reason : r.reasons) std::cout << "reason: " << reason << "\n";
}

void write_file(const std::filesystem::path& path, const GameTranscript& t) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  write_transcript(os, t);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Luroth expansions and Schmidt games"};
  app.require_subcommand(1);

  std::string expand_x;
  std::size_t max_digits = 32;
  auto* expand = app.add_subcommand("expand", "Luroth digits of a rational p/q");
  expand->add_option("x", expand_x, "rational in [0,1)")->required();
  expand->add_option("--max-digits", max_digits, "stop after this many digits");

  std::string eval_digits;
  auto* eval = app.add_subcommand("eval", "value of a finite digit string");
  eval->add_option("digits", eval_digits, "comma separated, e.g. 3,2")->required();

  std::string element_digits;
  auto* elem = app.add_subcommand("element", "cylinder of a digit string");
  elem->add_option("digits", element_digits, "comma separated")->required();

  std::string cwg_left, cwg_right;
  auto* cw = app.add_subcommand("cwg", "commensurate generation of [left, right]");
  cw->add_option("--left", cwg_left)->required();
  cw->add_option("--right", cwg_right)->required();

  std::string alpha = "1/8", beta = "1/2", mode = "winning", adversary = "uniform-random";
  std::string out_path, cushion = "initial-only", player_a = "strategy-a";
  std::size_t rounds = 200, batch = 0, depth = 0, jobs = 0;
  std::uint64_t seed = 0;
  auto* play_cmd = app.add_subcommand("play", "play strategy A against an adversary and verify");
  play_cmd->add_option("--alpha", alpha);
  play_cmd->add_option("--beta", beta);
  play_cmd->add_option("--mode", mode)->check(CLI::IsMember({"winning", "strong"}));
  play_cmd->add_option("--adversary", adversary)
      ->check(CLI::IsMember({"uniform-random", "accumulation-seeker", "shrink-burst"}));
  play_cmd->add_option("--rounds", rounds);
  play_cmd->add_option("--depth", depth, "stop once this many digits are determined");
  play_cmd->add_option("--seed", seed);
  play_cmd->add_option("--out", out_path, "transcript file (batch: directory)");
  play_cmd->add_option("--batch", batch, "run N games with seeds seed..seed+N-1 in parallel");
  play_cmd->add_option("--jobs", jobs, "worker threads for --batch");
  play_cmd->add_option("--cushion", cushion)
      ->check(CLI::IsMember({"initial-only", "rescaled", "fixed-b0"}));
  play_cmd->add_option("--player-a", player_a)->check(CLI::IsMember({"strategy-a", "concentric"}));

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a transcript file");
  verify_cmd->add_option("file", verify_path)->required();

  std::string host = "127.0.0.1", serve_dir;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "run the game service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--dir", serve_dir, std::string("transcript directory (default $") + kDirEnv + ")");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) {
      const DigitString d = digits(Rational::parse(expand_x), max_digits);
      std::cout << join(d.digits) << (d.digits.empty() ? "" : " ")
                << (d.terminated ? "(terminated)" : "(truncated)") << "\n";
    } else if (*eval) {
      std::cout << evaluate(parse_digits(eval_digits)).to_string() << "\n";
    } else if (*elem) {
      const LurothElement e = element(parse_digits(element_digits));
      std::cout << show(e.interval()) << " length " << e.length().to_string() << "\n";
    } else if (*cw) {
      const CommensurateReport r =
          cwg(ClosedBall::from_endpoints(Rational::parse(cwg_left), Rational::parse(cwg_right)));
      std::cout << "generation " << r.generation << "\n"
                << "witness " << show(r.witness) << "\n";
      for (const auto& c : r.containers) std::cout << "container " << show(c) << "\n";
      if (r.accumulation) {
        std::cout << "accumulation " << r.accumulation->point.to_string() << " generation "
                  << r.accumulation->generation
                  << (r.accumulation->right_endpoint ? " (right endpoint)" : "") << "\n";
      }
    } else if (*play_cmd) {
      GameRequest req;
      req.config.alpha = Rational::parse(alpha);
      req.config.beta = Rational::parse(beta);
      req.config.mode = parse_game_mode(mode);
      req.config.max_rounds = rounds;
      req.config.target_depth = depth;
      req.config.rng_seed = seed;
      req.config.validate();
      req.adversary.kind = parse_adversary_kind(adversary);
      req.adversary.seed = seed;
      req.policy = parse_cushion_policy(cushion);
      req.player_a = player_a == "concentric" ? PlayerA::kConcentric : PlayerA::kStrategyA;
      if (req.adversary.kind == AdversaryKind::kShrinkBurst && req.config.mode != GameMode::kStrong) {
        throw Error(ErrorCode::kWrongMode, "shrink-burst needs --mode strong");
      }
      std::string out = out_path.empty() ? default_dir() : out_path;
      if (batch == 0) {
        GameResult g = run_game(req);
        if (!g.strategy_error.empty()) std::cout << "strategy error: " << g.strategy_error << "\n";
        print_report(g.report);
        if (!out.empty()) {
          std::filesystem::path path = out;
          if (out_path.empty()) path /= "play-" + adversary + "-" + std::to_string(seed) + ".jsonl";
          write_file(path, g.transcript);
          std::cout << "transcript: " << path.string() << "\n";
        }
        return g.report.pass ? 0 : 1;
      }
      std::vector<GameRequest> reqs(batch, req);
      for (std::size_t i = 0; i < batch; ++i) {
        reqs[i].adversary.seed = seed + i;
        reqs[i].config.rng_seed = seed + i;
      }
      const std::size_t threads = jobs ? jobs : std::max(1u, std::thread::hardware_concurrency());
      auto results = run_batch(reqs, threads);
      std::size_t passed = 0;
      std::cout << "b = " << constants(req.config.alpha, req.config.beta).b.get_str() << "\n";
      for (std::size_t i = 0; i < results.size(); ++i) {
        const auto& r = results[i].report;
        passed += r.pass;
        std::cout << "seed " << reqs[i].adversary.seed << ": " << (r.pass ? "pass" : "fail")
                  << " rounds " << r.rounds << " depth " << r.deepest_generation
                  << " max digit " << r.max_digit_after_threshold.get_str();
        if (!r.pass && !r.reasons.empty()) std::cout << " (" << r.reasons.front() << ")";
        std::cout << "\n";
        if (!out.empty()) {
          write_file(std::filesystem::path(out) /
                         ("play-" + adversary + "-" + std::to_string(reqs[i].adversary.seed) + ".jsonl"),
                     results[i].transcript);
        }
      }
      std::cout << "passed " << passed << "/" << results.size() << "\n";
      return passed == results.size() ? 0 : 1;
    } else if (*verify_cmd) {
      std::ifstream is(verify_path);
      if (!is) throw Error(ErrorCode::kInvalidArgument, "cannot open " + verify_path);
      const VerificationReport r = check_bounded(read_transcript(is));
      print_report(r);
      return r.pass ? 0 : 1;
    } else if (*serve) {
      ServiceOptions opts;
      opts.transcript_dir = serve_dir.empty() ? default_dir() : serve_dir;
      if (opts.transcript_dir.empty()) opts.transcript_dir = "transcripts";
      GameService svc(opts);
      const std::size_t loaded = svc.load_saved_games();
      std::cout << "loaded " << loaded << " saved games from " << opts.transcript_dir.string() << "\n"
                << "listening on http://" << host << ":" << port << std::endl;
      HttpServer server(svc);
      if (!server.listen(host, port)) {
        std::cerr << "error: cannot listen on " << host << ":" << port << "\n";
        return 2;
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
