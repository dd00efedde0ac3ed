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

#include "semdd/service/http.hpp"

#include <httplib.h>

#include <nlohmann/json.hpp>

namespace semdd::service {

using nlohmann::json;

namespace {

HttpResponse json_response(int status, const json& body) { return {status, "application/json", body.dump()}; }

HttpResponse error_response(int status, const std::string& code, const std::string& message) {
  return json_response(status, {{"error", code}, {"message", message}});
}

json parse_body(const HttpRequest& req) {
  if (req.body.empty()) return json::object();
  json j = json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw ServiceError(400, "bad_json", "request body must be a JSON object");
  return j;
}

std::string required_string(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_string()) {
    throw ServiceError(400, "bad_request", std::string("missing string field \"") + key + "\"");
  }
  return it->get<std::string>();
}

bool starts_with(const std::string& s, std::string_view prefix) { return s.rfind(prefix, 0) == 0; }

HttpResponse route(const Service& svc, const HttpRequest& req) {
  const std::string& p = req.path;
  const bool get = req.method == "GET";
  const bool post = req.method == "POST";

  if (p == "/subjects") {
    if (!get) return error_response(405, "method_not_allowed", "use GET");
    return json_response(200, to_json(svc.list_subjects()));
  }
  if (p == "/query") {
    if (!post) return error_response(405, "method_not_allowed", "use POST");
    return json_response(200, to_json(svc.run_query(required_string(parse_body(req), "sparql"))));
  }
  if (p == "/templates") {
    if (!get) return error_response(405, "method_not_allowed", "use GET");
    json arr = json::array();
    for (const auto& t : default_templates()) arr.push_back(to_json(t));
    return json_response(200, {{"templates", arr}});
  }
  if (starts_with(p, "/templates/") && p.size() > 15 && p.substr(p.size() - 4) == "/run") {
    if (!post) return error_response(405, "method_not_allowed", "use POST");
    std::string id = p.substr(11, p.size() - 15);
    json body = parse_body(req);
    return json_response(200, to_json(svc.run_template(id, body.value("params", json::object()))));
  }
  if (starts_with(p, "/terms/")) {
    if (!get) return error_response(405, "method_not_allowed", "use GET");
    return json_response(200, to_json(svc.term_definition(p.substr(7))));
  }
  if (p == "/datatypes") {
    if (!get) return error_response(405, "method_not_allowed", "use GET");
    json arr = json::array();
    for (const auto& d : default_data_types()) arr.push_back(to_json(d));
    return json_response(200, {{"data_types", arr}});
  }
  if (p == "/maps") {
    if (!get) return error_response(405, "method_not_allowed", "use GET");
    return json_response(200, svc.map_catalog());
  }
  if (p == "/crossspecies") {
    if (!post) return error_response(405, "method_not_allowed", "use POST");
    json body = parse_body(req);
    std::string map = required_string(body, "map");
    auto tol = body.find("tolerance");
    if (tol != body.end() && !tol->is_number()) throw ServiceError(400, "bad_request", "tolerance must be a number");
    return json_response(200, svc.cross_species(map, tol == body.end() ? 0.0 : tol->get<double>()));
  }
  if (p == "/export") {
    if (!post) return error_response(405, "method_not_allowed", "use POST");
    json body = parse_body(req);
    std::string csv;
    if (body.contains("sparql")) {
      csv = svc.export_csv(required_string(body, "sparql"));
    } else if (body.contains("selection") && body["selection"].is_object()) {
      csv = svc.export_csv(selection_from_json(body["selection"]));
    } else {
      throw ServiceError(400, "bad_request", "export needs \"sparql\" or \"selection\"");
    }
    return {200, "text/csv; charset=utf-8", std::move(csv)};
  }
  return error_response(404, "not_found", "no route " + req.method + " " + p);
}

}  // namespace

HttpResponse dispatch(const Service& service, const HttpRequest& request) {
  try {
    return route(service, request);
  } catch (const ServiceError& e) {
    return json_response(e.status(), e.to_json());
  } catch (const std::exception& e) {
    return error_response(500, "internal_error", e.what());
  }
}

void install_routes(httplib::Server& server, const Service& service) {
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    auto out = dispatch(service, {req.method, req.path, req.body});
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  server.Get(".*", handler);
  server.Post(".*", handler);
}

bool serve(const Service& service, const std::string& host, int port) {
  httplib::Server server;
  install_routes(server, service);
  return server.listen(host, port);
}

}  // namespace semdd::service
