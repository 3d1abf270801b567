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

#include "luroth/service.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "httplib.h"
#include "luroth/commensurate.hpp"
#include "luroth/error.hpp"
#include "luroth/verifier.hpp"

namespace luroth {

using nlohmann::json;

namespace {

ServiceResponse error_response(int status, const std::string& message) {
  return ServiceResponse{status, json{{"error", message}}, std::nullopt};
}

ServiceResponse not_found(const std::string& id) { return error_response(404, "no game '" + id + "'"); }

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

GameConfig config_from_request(const json& body) {
  const json& c = body.contains("config") ? body.at("config") : body;
  GameConfig config;
  if (!c.is_object()) throw Error(ErrorCode::kParse, "config must be an object");
  if (c.contains("alpha")) config.alpha = rational_from_json(c.at("alpha"));
  if (c.contains("beta")) config.beta = rational_from_json(c.at("beta"));
  if (c.contains("mode")) config.mode = parse_game_mode(c.at("mode").get<std::string>());
  if (c.contains("max_rounds")) config.max_rounds = c.at("max_rounds").get<std::size_t>();
  if (c.contains("rng_seed")) config.rng_seed = c.at("rng_seed").get<std::uint64_t>();
  config.validate();
  return config;
}

bool finished(const GameTranscript& t) {
  return t.outcome.violation.has_value() ||
         (t.rounds() >= t.config.max_rounds && !t.moves.empty() &&
          t.moves.back().player == Player::kA);
}

std::string game_id(std::size_t n) {
  std::ostringstream os;
  os << 'g' << std::setw(6) << std::setfill('0') << n;
  return os.str();
}

}  // namespace

GameService::Game::Game(std::string id_in, GameConfig config, CushionPolicy policy)
    : id(std::move(id_in)),
      referee(config),
      strategy(constants(config.alpha, config.beta), policy) {}

GameService::GameService(ServiceOptions options) : options_(std::move(options)) {
  if (!options_.transcript_dir.empty()) std::filesystem::create_directories(options_.transcript_dir);
}

std::shared_ptr<GameService::Game> GameService::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = games_.find(id);
  return it == games_.end() ? nullptr : it->second;
}

json GameService::snapshot(Game& g) const {
  const GameTranscript& t = g.referee.transcript();
  json moves = json::array();
  for (const auto& m : t.moves) moves.push_back(to_json(m));
  json expect;
  if (!finished(t)) {
    expect = json{{"player", "B"}};
    if (t.moves.empty()) {
      expect["inside"] = nullptr;
      expect["radius"] = nullptr;
    } else {
      const ClosedBall& a = t.moves.back().ball;
      expect["inside"] = to_json(a);
      expect["radius"] = to_json(t.config.beta * a.radius());
      expect["rule"] = t.config.mode == GameMode::kWinning ? "equal" : "at-least";
    }
  }
  const Digit b = constants(t.config.alpha, t.config.beta).b;
  json out{{"game_id", g.id},
           {"config", to_json(t.config)},
           {"b", digits_json({b}).front()},
           {"rounds", t.rounds()},
           {"to_move", finished(t) ? json() : json("B")},
           {"expect", expect},
           {"finished", finished(t)},
           {"outcome", to_json(t.outcome)},
           {"moves", moves}};
  return out;
}

void GameService::persist(Game& g) const {
  if (options_.transcript_dir.empty()) return;
  const auto path = options_.transcript_dir / (g.id + ".jsonl");
  const auto tmp = options_.transcript_dir / (g.id + ".jsonl.tmp");
  {
    std::ofstream os(tmp, std::ios::trunc);
    write_transcript(os, g.referee.transcript());
  }
  std::filesystem::rename(tmp, path);
}

json GameService::play_b(Game& g, const ClosedBall& ball) {
  if (auto v = g.referee.submit(Move{Player::kB, ball, json()})) {
    return json{{"violation", to_string(*v)}};
  }
  GameTranscript& t = g.referee.mutable_transcript();
  Move reply;
  reply.player = Player::kA;
  try {
    auto p = g.strategy.propose(t);
    reply.ball = std::move(p.ball);
    reply.annotation = std::move(p.annotation);
  } catch (const Error& e) {
    t.outcome.completed = false;
    t.outcome.violation = Violation{Player::kA, ViolationReason::kStrategyError, t.moves.size(), e.what()};
    return json{{"reply", nullptr}};
  }
  if (auto v = g.referee.submit(reply)) {
    t.outcome.completed = false;
    t.outcome.violation = Violation{Player::kA, *v, t.moves.size(), "illegal reply"};
    return json{{"reply", nullptr}};
  }
  return json{{"reply", to_json(reply)}};
}

ServiceResponse GameService::create_game(const json& body) {
  GameConfig config;
  std::optional<ClosedBall> initial;
  try {
    config = config_from_request(body.is_null() ? json::object() : body);
    if (body.is_object() && body.contains("initial")) initial = ball_from_json(body.at("initial"));
  } catch (const Error& e) {
    return error_response(400, e.what());
  } catch (const json::exception& e) {
    return error_response(400, e.what());
  }
  std::shared_ptr<Game> g;
  {
    std::lock_guard lock(mu_);
    std::string id = game_id(next_id_++);
    g = std::make_shared<Game>(id, config, options_.policy);
    games_[id] = g;
  }
  std::lock_guard lock(g->mu);
  json out;
  if (initial) out = play_b(*g, *initial);
  persist(*g);
  json snap = snapshot(*g);
  snap["reply"] = out.is_object() && out.contains("reply") ? out["reply"] : json();
  return ServiceResponse{201, snap, std::nullopt};
}

ServiceResponse GameService::get_game(const std::string& id) {
  auto g = find(id);
  if (!g) return not_found(id);
  std::lock_guard lock(g->mu);
  return ServiceResponse{200, snapshot(*g), std::nullopt};
}

ServiceResponse GameService::submit_move(const std::string& id, const json& body) {
  auto g = find(id);
  if (!g) return not_found(id);
  ClosedBall ball(Rational(1, 2), Rational(1, 2));
  try {
    ball = ball_from_json(body.is_object() && body.contains("ball") ? body.at("ball") : body);
  } catch (const Error& e) {
    return error_response(400, e.what());
  } catch (const json::exception& e) {
    return error_response(400, e.what());
  }
  std::lock_guard lock(g->mu);
  if (finished(g->referee.transcript())) return error_response(409, "game is finished");
  json result = play_b(*g, ball);
  if (result.contains("violation")) {
    json body_out{{"accepted", false},
                  {"violation", result["violation"]},
                  {"expect", snapshot(*g)["expect"]}};
    return ServiceResponse{422, body_out, std::nullopt};
  }
  persist(*g);
  json snap = snapshot(*g);
  json out{{"accepted", true},
           {"reply", result["reply"]},
           {"rounds", snap["rounds"]},
           {"finished", snap["finished"]},
           {"outcome", snap["outcome"]},
           {"expect", snap["expect"]}};
  return ServiceResponse{200, out, std::nullopt};
}

ServiceResponse GameService::elements(const std::string& id, const std::string& generation,
                                      const std::string& left, const std::string& right,
                                      const std::string& max) {
  auto g = find(id);
  if (!g) return not_found(id);
  std::size_t n = 0, cap = 256;
  Rational lo, hi;
  try {
    auto count = [](const std::string& text) {
      if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw Error(ErrorCode::kParse, "expected a non-negative integer, got '" + text + "'");
      }
      return std::stoul(text);
    };
    n = count(generation);
    if (n > 64) throw Error(ErrorCode::kParse, "generation above 64");
    if (!max.empty()) cap = count(max);
    if (cap == 0) throw Error(ErrorCode::kParse, "max must be positive");
    lo = Rational::parse(left);
    hi = Rational::parse(right);
  } catch (const Error& e) {
    return error_response(400, e.what());
  } catch (const std::exception&) {
    return error_response(400, "generation and max must be non-negative integers");
  }
  if (lo.sign() < 0 || hi > Rational(1) || !(lo < hi)) {
    return error_response(400, "window must satisfy 0 <= left < right <= 1");
  }
  cap = std::min<std::size_t>(cap, 10000);
  Digit b;
  {
    std::lock_guard lock(g->mu);
    const GameConfig& c = g->referee.transcript().config;
    b = constants(c.alpha, c.beta).b;
  }
  WindowEnumeration w = elements_in_window(ClosedInterval(lo, hi), n, cap);
  json elems = json::array();
  for (const auto& e : w.elements) {
    const OpenInterval d = danger_interval(e, b);
    elems.push_back({{"digits", digits_json(e.digits())},
                     {"interval", to_json(e.interval())},
                     {"danger", json::array({to_json(d.left), to_json(d.right)})}});
  }
  return ServiceResponse{200,
                         json{{"generation", n},
                              {"window", json::array({to_json(lo), to_json(hi)})},
                              {"b", digits_json({b}).front()},
                              {"elements", elems},
                              {"truncated", w.truncated}},
                         std::nullopt};
}

ServiceResponse GameService::transcript(const std::string& id) {
  auto g = find(id);
  if (!g) return not_found(id);
  std::lock_guard lock(g->mu);
  return ServiceResponse{200, json(), transcript_to_jsonl(g->referee.transcript())};
}

ServiceResponse GameService::verify(const std::string& id) {
  auto g = find(id);
  if (!g) return not_found(id);
  std::lock_guard lock(g->mu);
  GameTranscript& t = g->referee.mutable_transcript();
  json report = to_json(check_bounded(t));
  t.summary = report;
  persist(*g);
  return ServiceResponse{200, report, std::nullopt};
}

std::size_t GameService::load_saved_games() {
  if (options_.transcript_dir.empty() || !std::filesystem::exists(options_.transcript_dir)) return 0;
  std::size_t loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(options_.transcript_dir)) {
    if (entry.path().extension() != ".jsonl") continue;
    const std::string id = entry.path().stem().string();
    std::ifstream is(entry.path());
    GameTranscript t;
    try {
      t = read_transcript(is);
    } catch (const Error&) {
      continue;
    }
    auto g = std::make_shared<Game>(id, t.config, options_.policy);
    g->referee.mutable_transcript() = std::move(t);
    std::lock_guard lock(mu_);
    games_[id] = g;
    if (id.size() > 1 && id[0] == 'g') {
      try {
        next_id_ = std::max(next_id_, std::stoul(id.substr(1)) + 1);
      } catch (const std::exception&) {
      }
    }
    ++loaded;
  }
  return loaded;
}

// ---- HTTP ---------------------------------------------------------------

struct HttpServer::Impl {
  GameService& service;
  httplib::Server server;
  std::thread thread;

  explicit Impl(GameService& s) : service(s) {
    auto send = [](httplib::Response& res, const ServiceResponse& r) {
      res.status = r.status;
      if (r.text) {
        res.set_header("Content-Disposition", "attachment; filename=\"transcript.jsonl\"");
        res.set_content(*r.text, "application/x-ndjson");
      } else {
        res.set_content(r.body.dump(), "application/json");
      }
    };
    auto parse_body = [](const httplib::Request& req, json& out) {
      if (req.body.empty()) {
        out = json::object();
        return true;
      }
      try {
        out = json::parse(req.body);
        return true;
      } catch (const json::exception&) {
        return false;
      }
    };
    server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                {"Access-Control-Allow-Headers", "Content-Type"}});
    server.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server.Post("/games", [=, this](const httplib::Request& req, httplib::Response& res) {
      json body;
      if (!parse_body(req, body)) return send(res, error_response(400, "body is not JSON"));
      send(res, service.create_game(body));
    });
    server.Get(R"(/games/([^/]+))", [=, this](const httplib::Request& req, httplib::Response& res) {
      send(res, service.get_game(req.matches[1]));
    });
    server.Post(R"(/games/([^/]+)/move)",
                [=, this](const httplib::Request& req, httplib::Response& res) {
                  json body;
                  if (!parse_body(req, body)) return send(res, error_response(400, "body is not JSON"));
                  send(res, service.submit_move(req.matches[1], body));
                });
    server.Get(R"(/games/([^/]+)/elements)",
               [=, this](const httplib::Request& req, httplib::Response& res) {
                 send(res, service.elements(req.matches[1], req.get_param_value("generation"),
                                            req.get_param_value("left"),
                                            req.get_param_value("right"),
                                            req.get_param_value("max")));
               });
    server.Get(R"(/games/([^/]+)/transcript)",
               [=, this](const httplib::Request& req, httplib::Response& res) {
                 send(res, service.transcript(req.matches[1]));
               });
    server.Post(R"(/games/([^/]+)/verify)",
                [=, this](const httplib::Request& req, httplib::Response& res) {
                  send(res, service.verify(req.matches[1]));
                });
  }
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host) : port;
  if (port != 0 && !impl_->server.bind_to_port(host, port)) return -1;
  if (bound < 0) return -1;
  impl_->thread = std::thread([this] { impl_->server.listen_after_bind(); });
  impl_->server.wait_until_ready();
  return bound;
}

bool HttpServer::listen(const std::string& host, int port) { return impl_->server.listen(host, port); }

void HttpServer::stop() {
  if (!impl_) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

}  // namespace luroth
