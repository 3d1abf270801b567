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

#ifndef LUROTH_SERVICE_HPP_
#define LUROTH_SERVICE_HPP_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "luroth/game.hpp"
#include "luroth/strategy.hpp"

namespace luroth {

struct ServiceOptions {
  // Transcripts are written to <dir>/<game id>.jsonl; empty disables.
  std::filesystem::path transcript_dir;
  CushionPolicy policy = CushionPolicy::kInitialOnly;
};

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
  // Set for non-JSON bodies (the transcript download).
  std::optional<std::string> text;
};

// Live games where a remote Player B faces StrategyA. Transport-free so it
// can be driven directly; `HttpServer` maps the routes onto it.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});

  ServiceResponse create_game(const nlohmann::json& body);
  ServiceResponse get_game(const std::string& id);
  ServiceResponse submit_move(const std::string& id, const nlohmann::json& body);
  ServiceResponse elements(const std::string& id, const std::string& generation,
                           const std::string& left, const std::string& right,
                           const std::string& max);
  ServiceResponse transcript(const std::string& id);
  ServiceResponse verify(const std::string& id);

  // Reloads every transcript found in the transcript directory.
  std::size_t load_saved_games();

 private:
  struct Game {
    std::mutex mu;
    std::string id;
    Referee referee;
    StrategyA strategy;
    explicit Game(std::string id, GameConfig config, CushionPolicy policy);
  };

  std::shared_ptr<Game> find(const std::string& id);
  nlohmann::json snapshot(Game& g) const;
  void persist(Game& g) const;
  nlohmann::json play_b(Game& g, const ClosedBall& ball);

  ServiceOptions options_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Game>> games_;
  std::size_t next_id_ = 1;
};

// HTTP front end (cpp-httplib).
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds (port 0 picks a free one) and serves on a background thread;
  // returns the bound port or -1.
  int start(const std::string& host, int port);
  // Serves on the calling thread until stop().
  bool listen(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace luroth

#endif  // LUROTH_SERVICE_HPP_
