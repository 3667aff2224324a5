#include "http_api.hpp"

#include <httplib.h>

namespace qx::service {

namespace {

Params params_of(const httplib::Request& req) {
  Params p;
  for (const auto& [key, value] : req.params) p.emplace(key, value);
  return p;
}

}  // namespace

void register_routes(httplib::Server& server, const Context& ctx,
                     const std::optional<std::filesystem::path>& web_root) {
  for (const char* name : {"threshold", "grid", "analyze", "qaps", "roadmap", "catalog", "plot"}) {
    std::string endpoint = name;
    server.Get("/api/" + endpoint, [&ctx, endpoint](const httplib::Request& req, httplib::Response& res) {
      try {
        Params p = params_of(req);
        Format f = format_from_string(p.count("format") ? p.at("format") : "json");
        std::string body = render_document(endpoint, payload(endpoint, ctx, p), f);
        res.set_content(body, content_type(f));
      } catch (const std::exception& e) {
        ErrorReply err = error_reply(e);
        res.status = err.status;
        res.set_content(to_json_text(err.body), "application/json");
      }
    });
  }
  server.Get("/api/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"status\": \"ok\"}\n", "application/json");
  });
  if (web_root && std::filesystem::is_directory(*web_root)) server.set_mount_point("/", web_root->string());
}

}  // namespace qx::service
