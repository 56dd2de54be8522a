#pragma once

#include <cstddef>
#include <memory>
#include <string>

namespace chaoseed::cli {

/// Stateless HTTP front end:
///   GET /api/health      -> 200 "ok"
///   GET /api/placements  -> 200 placement JSON, 400 {"error": "..."}
class PlacementServer {
 public:
  explicit PlacementServer(std::size_t max_cells);
  ~PlacementServer();

  PlacementServer(const PlacementServer&) = delete;
  PlacementServer& operator=(const PlacementServer&) = delete;

  /// Binds host:port (port 0 picks a free port). Returns false if binding fails.
  bool bind(const std::string& host, int port);

  /// Port actually bound, valid after a successful bind().
  [[nodiscard]] int port() const noexcept;

  /// Serves until stop() is called. Requires a successful bind().
  void listen();

  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace chaoseed::cli
