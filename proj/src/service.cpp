#include "lpgraph/service.hpp"

#include <unordered_map>

#include "httplib.h"

namespace lpgraph {

namespace {

ServiceResponse error(int status, const std::string& code, const std::string& message) {
  return {status, {{"error", {{"code", code}, {"message", message}}}}};
}

ServiceResponse from_error(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ResourceLimit:
      return error(400, "resource_limit", e.what());
    case ErrorKind::Internal:
      return error(500, "internal", e.what());
    default:
      return error(400, "invalid_input", e.what());
  }
}

// Runs f, turning library and JSON errors into error objects.
template <typename F>
ServiceResponse guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return from_error(e);
  } catch (const json::exception& e) {
    return error(400, "invalid_input", e.what());
  }
}

std::vector<Var> names_or_positions(const std::optional<SeedNames>& names, int n) {
  if (names) return names->names;
  std::vector<Var> out;
  for (int p = 1; p <= n; ++p) out.push_back(zsym(p));
  return out;
}

}  // namespace

struct Service::Session {
  std::string id;
  Digraph graph;
  std::shared_ptr<YCache> cache;
  VariableInventory inv;
  std::vector<Seed> stack;  // stack[k] is the seed after k directions of history
  std::vector<int> history;
  std::mutex mu;

  json view() const { return seed_view(graph, inv, stack.back()); }
};

json seed_view(const Digraph& g, const VariableInventory& inv, const Seed& t) {
  json out = seed_to_json(t);
  const auto names = name_seed(g, inv, t);
  const auto symbols = names_or_positions(names, t.n());
  json n = json::array(), ex = json::array(), hat = json::array();
  for (int p = 1; p <= t.n(); ++p) {
    n.push_back(symbols[p - 1].name());
    ex.push_back(render(name_symbols(t.exchange[p - 1], symbols)));
    hat.push_back(render(name_symbols(hat_f(t, p), symbols)));
  }
  out["names"] = n;
  out["exchange_named"] = ex;
  out["hat_named"] = hat;
  out["collection"] = names ? collection_to_json(names->collection) : json();
  return out;
}

std::shared_ptr<Service::Session> Service::find(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

std::size_t Service::session_count() {
  std::lock_guard lock(mu_);
  return sessions_.size();
}

ServiceResponse Service::create(const json& body) {
  return guarded([&]() -> ServiceResponse {
    const bool wrapped = body.is_object() && body.contains("graph");
    const Digraph g = graph_from_json(wrapped ? body["graph"] : body);
    if (g.n() > cap_)
      return error(400, "resource_limit", "graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(cap_));
    auto s = std::make_shared<Session>();
    s->graph = g;
    s->cache = std::make_shared<YCache>(g);
    s->inv = variable_inventory(g, *s->cache);
    s->stack.push_back(initial_seed(g));
    if (wrapped && body.contains("history")) {
      for (const auto& d : body["history"]) {
        if (!d.is_number_integer() || d.get<int>() < 1 || d.get<int>() > g.n())
          return error(400, "invalid_direction", "history entries must be positions 1.." + std::to_string(g.n()));
        s->stack.push_back(lpgraph::mutate(s->stack.back(), d.get<int>()));
        s->history.push_back(d.get<int>());
      }
    }
    {
      std::lock_guard lock(mu_);
      s->id = "s" + std::to_string(next_++);
      sessions_.emplace(s->id, s);
    }
    return {201, {{"id", s->id}, {"history", s->history}, {"seed", s->view()}}};
  });
}

ServiceResponse Service::get(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "not_found", "no session " + id);
  std::lock_guard lock(s->mu);
  return {200, {{"id", s->id}, {"graph", graph_to_json(s->graph)}, {"history", s->history}, {"seed", s->view()}}};
}

ServiceResponse Service::seed(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "not_found", "no session " + id);
  std::lock_guard lock(s->mu);
  return {200, s->view()};
}

ServiceResponse Service::mutate(const std::string& id, const json& body) {
  auto s = find(id);
  if (!s) return error(404, "not_found", "no session " + id);
  std::lock_guard lock(s->mu);
  return guarded([&]() -> ServiceResponse {
    const int n = s->graph.n();
    if (!body.is_object() || !body.contains("direction") || !body["direction"].is_number_integer())
      return error(400, "invalid_direction", "body needs an integer \"direction\"");
    const int d = body["direction"].get<int>();
    if (d < 1 || d > n) return error(400, "invalid_direction", "direction must be in 1.." + std::to_string(n));
    const Seed& before = s->stack.back();
    const auto old_names = name_seed(s->graph, s->inv, before);
    Seed after = lpgraph::mutate(before, d);
    const auto new_names = name_seed(s->graph, s->inv, after);
    const auto old_sym = names_or_positions(old_names, n), new_sym = names_or_positions(new_names, n);
    json out;
    out["direction"] = d;
    out["move"] = old_names ? move_name(move_kind(old_names->collection, old_names->label[d - 1])) : "unknown";
    out["changed"] = {{"position", d}, {"old", old_sym[d - 1].name()}, {"new", new_sym[d - 1].name()}};
    out["relation"] = old_sym[d - 1].name() + " * " + new_sym[d - 1].name() + " = " +
                      render(name_symbols(hat_f(before, d), old_sym));
    s->stack.push_back(std::move(after));
    s->history.push_back(d);
    out["history"] = s->history;
    out["seed"] = s->view();
    return {200, out};
  });
}

ServiceResponse Service::undo(const std::string& id) {
  auto s = find(id);
  if (!s) return error(404, "not_found", "no session " + id);
  std::lock_guard lock(s->mu);
  if (s->history.empty()) return error(400, "empty_history", "nothing to undo");
  s->stack.pop_back();
  const int d = s->history.back();
  s->history.pop_back();
  return {200, {{"undone", d}, {"history", s->history}, {"seed", s->view()}}};
}

ServiceResponse Service::neighborhood(const std::string& id, int radius) {
  auto s = find(id);
  if (!s) return error(404, "not_found", "no session " + id);
  if (radius < 0 || radius > 2) return error(400, "invalid_input", "radius must be 0, 1 or 2");
  std::lock_guard lock(s->mu);
  return guarded([&]() -> ServiceResponse {
    const int n = s->graph.n();
    struct Node {
      Seed seed;
      std::optional<SeedNames> names;
      int distance;
    };
    std::vector<Node> nodes;
    std::unordered_map<MaximalNestedCollection, int, CollectionHash> index;
    auto add = [&](Seed t, int distance) {
      auto names = name_seed(s->graph, s->inv, t);
      if (names) {
        auto it = index.find(names->collection);
        if (it != index.end()) return it->second;
        index.emplace(names->collection, static_cast<int>(nodes.size()));
      }
      nodes.push_back({std::move(t), std::move(names), distance});
      return static_cast<int>(nodes.size()) - 1;
    };
    add(s->stack.back(), 0);
    json edges = json::array();
    for (std::size_t u = 0; u < nodes.size(); ++u) {
      if (nodes[u].distance >= radius) continue;
      for (int d = 1; d <= n; ++d) {
        const std::string move =
            nodes[u].names ? move_name(move_kind(nodes[u].names->collection, nodes[u].names->label[d - 1])) : "unknown";
        const int v = add(lpgraph::mutate(nodes[u].seed, d), nodes[u].distance + 1);
        edges.push_back({{"from", u}, {"to", v}, {"direction", d}, {"move", move}});
      }
    }
    json out = json::array();
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      const auto names = names_or_positions(nodes[k].names, n);
      json cluster = json::array();
      for (Var v : names) cluster.push_back(v.name());
      out.push_back({{"id", k},
                     {"distance", nodes[k].distance},
                     {"cluster", cluster},
                     {"collection", nodes[k].names ? collection_to_json(nodes[k].names->collection) : json()}});
    }
    return {200, {{"radius", radius}, {"nodes", out}, {"edges", edges}}};
  });
}

ServiceResponse Service::remove(const std::string& id) {
  std::lock_guard lock(mu_);
  if (!sessions_.erase(id)) return error(404, "not_found", "no session " + id);
  return {200, {{"deleted", id}}};
}

void install_routes(httplib::Server& server, Service& service) {
  auto reply = [](httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto body_of = [](const httplib::Request& req, json& out) {
    if (req.body.empty()) {
      out = json::object();
      return true;
    }
    out = json::parse(req.body, nullptr, false);
    return !out.is_discarded();
  };
  auto bad_json = error(400, "invalid_input", "request body is not JSON");

  server.Post("/sessions", [=, &service](const httplib::Request& req, httplib::Response& res) {
    json body;
    reply(res, body_of(req, body) ? service.create(body) : bad_json);
  });
  server.Get("/sessions/:id", [=, &service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.get(req.path_params.at("id")));
  });
  server.Delete("/sessions/:id", [=, &service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.remove(req.path_params.at("id")));
  });
  server.Get("/sessions/:id/seed", [=, &service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.seed(req.path_params.at("id")));
  });
  server.Post("/sessions/:id/mutate", [=, &service](const httplib::Request& req, httplib::Response& res) {
    json body;
    reply(res, body_of(req, body) ? service.mutate(req.path_params.at("id"), body) : bad_json);
  });
  server.Post("/sessions/:id/undo", [=, &service](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.undo(req.path_params.at("id")));
  });
  server.Get("/sessions/:id/neighborhood", [=, &service](const httplib::Request& req, httplib::Response& res) {
    int radius = 1;
    if (req.has_param("radius")) {
      try {
        radius = std::stoi(req.get_param_value("radius"));
      } catch (const std::exception&) {
        radius = -1;
      }
    }
    reply(res, service.neighborhood(req.path_params.at("id"), radius));
  });
  server.set_error_handler([=](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) reply(res, error(res.status, res.status == 404 ? "not_found" : "http_error", "no such route"));
  });
}

}  // namespace lpgraph
