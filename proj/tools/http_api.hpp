#pragma once

#include <filesystem>
#include <optional>

#include "service.hpp"

namespace httplib {
class Server;
}

namespace qx::service {

// GET /api/{threshold,grid,analyze,qaps,roadmap,catalog,plot}; query
// parameters are the CLI flag names. Serves `web_root` at / when given.
void register_routes(httplib::Server& server, const Context& ctx,
                     const std::optional<std::filesystem::path>& web_root);

}  // namespace qx::service
