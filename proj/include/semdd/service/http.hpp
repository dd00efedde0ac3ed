// Copyright 2026 The semdd Authors.
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

// HTTP/JSON routes. `dispatch` holds the routing so it can be exercised
// without sockets; `install_routes` wires it into cpp-httplib.

#pragma once

#include <string>

#include "semdd/service/service.hpp"

namespace httplib {
class Server;
}

namespace semdd::service {

struct HttpRequest {
  std::string method;
  std::string path;  // already percent-decoded
  std::string body;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

// GET  /subjects
// POST /query               {"sparql": "..."}
// GET  /templates
// POST /templates/{id}/run  {"params": {...}}
// GET  /terms/{qname}
// GET  /datatypes
// GET  /maps
// POST /crossspecies        {"map": "...", "tolerance": 0}
// POST /export              {"sparql": "..."} | {"selection": {"subjects": [...], "data_types": [...]}}
HttpResponse dispatch(const Service& service, const HttpRequest& request);

void install_routes(httplib::Server& server, const Service& service);

// Blocks until the server stops. Returns false if the socket could not be
// bound.
bool serve(const Service& service, const std::string& host, int port);

}  // namespace semdd::service
