#include "chaoseed/cli/server.hpp"

#include <httplib.h>
#include <json.hpp>

#include "chaoseed/cli/request.hpp"
#include "chaoseed/error.hpp"

namespace chaoseed::cli {

namespace {

std::optional<std::string> query_param(const httplib::Request& req, const char* key) {
  if (!req.has_param(key)) return std::nullopt;
  return req.get_param_value(key);
}

void send_error(httplib::Response& res, const std::string& message) {
  res.status = 400;
  res.set_content(nlohmann::json{{"error", message}}.dump(), "application/json");
}

}  // namespace

struct PlacementServer::Impl {
  httplib::Server http;
  std::size_t max_cells;
  int port = -1;
};

PlacementServer::PlacementServer(std::size_t max_cells) : impl_(std::make_unique<Impl>()) {
  impl_->max_cells = max_cells;
  // The library default enables SO_REUSEPORT, which lets a second process
  // share a busy port instead of failing to bind.
  impl_->http.set_socket_options([](auto sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });

  impl_->http.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("ok", "text/plain");
  });

  impl_->http.Get("/api/placements", [this](const httplib::Request& req, httplib::Response& res) {
    PlaceRequest request;
    request.x0 = query_param(req, "x0");
    request.r = query_param(req, "r");
    request.width = query_param(req, "width");
    request.height = query_param(req, "height");
    request.mode = query_param(req, "mode");
    request.count = query_param(req, "count");
    request.burn_in = query_param(req, "burn_in");
    try {
      res.set_content(render_place(validate(request, impl_->max_cells)), "application/json");
    } catch (const Error& e) {
      send_error(res, e.what());
    }
  });
}

PlacementServer::~PlacementServer() { stop(); }

bool PlacementServer::bind(const std::string& host, int port) {
  if (port == 0) {
    impl_->port = impl_->http.bind_to_any_port(host);
    return impl_->port > 0;
  }
  if (!impl_->http.bind_to_port(host, port)) return false;
  impl_->port = port;
  return true;
}

int PlacementServer::port() const noexcept { return impl_->port; }

void PlacementServer::listen() { impl_->http.listen_after_bind(); }

void PlacementServer::stop() {
  if (impl_) impl_->http.stop();
}

}  // namespace chaoseed::cli
