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

#ifndef JOBSTD_SERVICE_HTTP_SERVER_H_
#define JOBSTD_SERVICE_HTTP_SERVER_H_

#include <memory>
#include <string>

#include "jobstd/service/api.h"

namespace jobstd {

// Serves a JobApi over HTTP/1.1 on the /v1 routes.
class HttpServer {
 public:
  explicit HttpServer(JobApi &api);
  ~HttpServer();

  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Binds to host:port (port 0 picks a free port) and returns the bound
  // port. Throws Error(kIo) if binding fails.
  int Bind(const std::string &host, int port);
  // Blocks until Stop() is called.
  void Listen();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace jobstd

#endif  // JOBSTD_SERVICE_HTTP_SERVER_H_
