#include "httplib.h"
#include "mathplay/service.hpp"

namespace mathplay::service {

struct HttpServer::Impl {
  Api& api;
  ServerConfig config;
  httplib::Server server;
  int port = -1;

  Impl(Api& a, ServerConfig c) : api(a), config(std::move(c)) {}

  void respond(const httplib::Request& req, httplib::Response& res) {
    ApiRequest request;
    request.method = req.method;
    request.path = req.path;
    for (const auto& [key, value] : req.params) request.query.emplace(key, value);
    request.body = req.body;
    const auto out = api.handle(request);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  }
};

HttpServer::HttpServer(Api& api, ServerConfig config) : impl_(std::make_unique<Impl>(api, std::move(config))) {
  auto& server = impl_->server;
  const auto handler = [this](const httplib::Request& req, httplib::Response& res) { impl_->respond(req, res); };
  server.Get(R"(/api/.*)", handler);
  server.Post(R"(/api/.*)", handler);
  if (impl_->config.ui_dir) server.set_mount_point("/ui", *impl_->config.ui_dir);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind() {
  auto& impl = *impl_;
  if (impl.config.port == 0) {
    impl.port = impl.server.bind_to_any_port(impl.config.host);
  } else {
    impl.port = impl.server.bind_to_port(impl.config.host, impl.config.port) ? impl.config.port : -1;
  }
  return impl.port;
}

bool HttpServer::serve() {
  if (impl_->port < 0) return false;
  return impl_->server.listen_after_bind();
}

void HttpServer::wait_until_ready() { impl_->server.wait_until_ready(); }

void HttpServer::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace mathplay::service
