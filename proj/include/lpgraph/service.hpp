#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "lpgraph/json_io.hpp"

namespace httplib {
class Server;
}

namespace lpgraph {

struct ServiceResponse {
  int status = 200;
  json body;
};

/// Mutation sessions over graph LP seeds. A session is its graph and its
/// direction history; the current seed is the replay of that history from
/// the initial seed, with directions given as positions of the initial seed.
/// Requests on one session are serialized; sessions run concurrently.
///
/// Errors come back as {"error": {"code": ..., "message": ...}} with status
/// 400 (invalid_input, invalid_direction, empty_history, resource_limit) or
/// 404 (not_found).
class Service {
 public:
  explicit Service(int cap = 6) : cap_(cap) {}

  /// Body: a graph document, or {"graph": ..., "history": [...]}. 201 with
  /// the session id and the seed view.
  ServiceResponse create(const json& body);
  /// {"id", "graph", "history", "seed"}.
  ServiceResponse get(const std::string& id);
  ServiceResponse seed(const std::string& id);
  /// Body {"direction": i}. Returns the new seed view, the move kind, which
  /// variable changed and the exchange relation x_i x'_i = hatF_i.
  ServiceResponse mutate(const std::string& id, const json& body);
  ServiceResponse undo(const std::string& id);
  /// Seeds within `radius` (at most 2) mutations, deduplicated by
  /// collection, with edges labelled by position and move kind.
  ServiceResponse neighborhood(const std::string& id, int radius);
  ServiceResponse remove(const std::string& id);

  std::size_t session_count();

 private:
  struct Session;
  std::shared_ptr<Session> find(const std::string& id);

  int cap_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_ = 1;
};

/// The seed JSON plus display fields: cluster names, the collection and
/// F_i and hatF_i over the names.
json seed_view(const Digraph& g, const VariableInventory& inv, const Seed& t);

/// POST /sessions, GET /sessions/:id, GET /sessions/:id/seed,
/// POST /sessions/:id/mutate, POST /sessions/:id/undo,
/// GET /sessions/:id/neighborhood?radius=r, DELETE /sessions/:id.
void install_routes(httplib::Server& server, Service& service);

}  // namespace lpgraph
