// Copyright 2026 The jobstd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jobstd/service/http_server.h"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "jobstd/error.h"

namespace jobstd {

struct HttpServer::Impl {
  explicit Impl(JobApi &api) : api(api) {}

  JobApi &api;
  httplib::Server server;
};

namespace {

void Reply(const HttpResult &result, httplib::Response &res) {
  res.status = result.status;
  if (!result.body.is_null()) {
    res.set_content(result.body.dump(), "application/json");
  }
}

}  // namespace

HttpServer::HttpServer(JobApi &api) : impl_(std::make_unique<Impl>(api)) {
  httplib::Server &s = impl_->server;
  JobApi *a = &impl_->api;
  s.Post("/v1/standardize",
         [a](const httplib::Request &req, httplib::Response &res) {
           Reply(a->Standardize(req.body), res);
         });
  s.Get("/v1/titles/typeahead",
        [a](const httplib::Request &req, httplib::Response &res) {
          Reply(a->Typeahead(req.get_param_value("q")), res);
        });
  s.Post("/v1/feedback",
         [a](const httplib::Request &req, httplib::Response &res) {
           Reply(a->Feedback(req.body), res);
         });
  s.Post("/v1/admin/models/activate",
         [a](const httplib::Request &req, httplib::Response &res) {
           Reply(a->Activate(req.body), res);
         });
  s.Get("/v1/health", [a](const httplib::Request &, httplib::Response &res) {
    Reply(a->Health(), res);
  });
  s.set_exception_handler([](const httplib::Request &req,
                             httplib::Response &res, std::exception_ptr ep) {
    std::string what = "unknown error";
    try {
      std::rethrow_exception(ep);
    } catch (const std::exception &e) {
      what = e.what();
    } catch (...) {
    }
    spdlog::error("{} {}: {}", req.method, req.path, what);
    res.status = 500;
    res.set_content(Json{{"error", "internal"}, {"message", what}}.dump(),
                    "application/json");
  });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string &host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound < 0) {
    throw Error(ErrorCode::kIo,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

}  // namespace jobstd
