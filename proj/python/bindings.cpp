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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "luroth/commensurate.hpp"
#include "luroth/error.hpp"
#include "luroth/expansion.hpp"
#include "luroth/runner.hpp"

namespace py = pybind11;
using namespace luroth;

namespace {

py::int_ to_py(const Digit& d) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(d.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Digit>& ds) {
  py::list out;
  for (const auto& d : ds) out.append(to_py(d));
  return out;
}

std::vector<Digit> from_py(const std::vector<py::int_>& ds) {
  std::vector<Digit> out;
  for (const auto& d : ds) out.emplace_back(py::str(d).cast<std::string>());
  return out;
}

py::dict element_dict(const LurothElement& e) {
  py::dict d;
  d["digits"] = to_py(e.digits());
  d["left"] = e.left().to_string();
  d["right"] = e.right().to_string();
  d["length"] = e.length().to_string();
  return d;
}

py::object from_json(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

}  // namespace

PYBIND11_MODULE(_luroth, m) {
  m.doc() = "Exact Luroth expansions and Schmidt games";

  py::register_exception<Error>(m, "LurothError", PyExc_ValueError);

  m.def(
      "expand",
      [](const std::string& x, std::size_t max_digits) {
        const DigitString d = digits(Rational::parse(x), max_digits);
        return py::make_tuple(to_py(d.digits), d.terminated);
      },
      py::arg("x"), py::arg("max_digits") = 32,
      "Digits of the rational 'p/q' and whether the expansion terminated.");

  m.def(
      "evaluate", [](const std::vector<py::int_>& ds) { return evaluate(from_py(ds)).to_string(); },
      py::arg("digits"));

  m.def(
      "element", [](const std::vector<py::int_>& ds) { return element_dict(element(from_py(ds))); },
      py::arg("digits"));

  m.def(
      "cwg",
      [](const std::string& left, const std::string& right) {
        const CommensurateReport r =
            cwg(ClosedBall::from_endpoints(Rational::parse(left), Rational::parse(right)));
        py::dict d;
        d["generation"] = r.generation;
        d["witness"] = element_dict(r.witness);
        py::list containers;
        for (const auto& c : r.containers) containers.append(element_dict(c));
        d["containers"] = containers;
        if (r.accumulation) {
          d["accumulation"] = py::make_tuple(r.accumulation->point.to_string(), r.accumulation->generation);
        } else {
          d["accumulation"] = py::none();
        }
        return d;
      },
      py::arg("left"), py::arg("right"));

  m.def(
      "play",
      [](const std::string& alpha, const std::string& beta, const std::string& mode,
         const std::string& adversary, std::size_t rounds, std::uint64_t seed, std::size_t depth,
         const std::string& cushion, bool concentric) {
        GameRequest req;
        req.config.alpha = Rational::parse(alpha);
        req.config.beta = Rational::parse(beta);
        req.config.mode = parse_game_mode(mode);
        req.config.max_rounds = rounds;
        req.config.rng_seed = seed;
        req.config.target_depth = depth;
        req.adversary.kind = parse_adversary_kind(adversary);
        if (req.adversary.kind == AdversaryKind::kReplay || req.adversary.kind == AdversaryKind::kRemote) {
          throw Error(ErrorCode::kInvalidArgument, "play needs a self-driving adversary");
        }
        req.adversary.seed = seed;
        req.policy = parse_cushion_policy(cushion);
        req.player_a = concentric ? PlayerA::kConcentric : PlayerA::kStrategyA;
        GameResult g;
        {
          py::gil_scoped_release release;
          g = run_game(req);
        }
        py::dict d;
        d["report"] = from_json(to_json(g.report));
        d["transcript"] = transcript_to_jsonl(g.transcript);
        d["strategy_error"] = g.strategy_error.empty() ? py::object(py::none()) : py::str(g.strategy_error);
        return d;
      },
      py::arg("alpha") = "1/8", py::arg("beta") = "1/2", py::arg("mode") = "winning",
      py::arg("adversary") = "uniform-random", py::arg("rounds") = 200, py::arg("seed") = 0,
      py::arg("depth") = 0, py::arg("cushion") = "initial-only", py::arg("concentric") = false,
      "Play strategy A against an adversary; returns the report and the JSON-lines transcript.");

  m.def(
      "verify",
      [](const std::string& jsonl) { return from_json(to_json(check_bounded(transcript_from_jsonl(jsonl)))); },
      py::arg("transcript"), "Verification report for a JSON-lines transcript.");
}
