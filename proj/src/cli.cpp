#include "lpgraph/cli.hpp"

#include <string>
#include <vector>

#include "CLI11.hpp"
#include "httplib.h"
#include "lpgraph/parallel.hpp"
#include "lpgraph/service.hpp"

namespace lpgraph {

namespace {

struct Options {
  std::string graph_file;
  int cap = 6;
  std::size_t budget = 5000;
  std::string format = "text";
  int threads = default_threads();
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? sep : "") + parts[k];
  return out;
}

std::string sets_text(const std::vector<VertexSet>& sets) {
  std::vector<std::string> parts;
  for (VertexSet s : sets) parts.push_back(s.to_string());
  return join(parts, " ");
}

void print_seed_text(std::ostream& out, const json& view) {
  if (!view["collection"].is_null()) {
    std::vector<std::string> sets;
    for (const auto& s : view["collection"]["sets"]) sets.push_back(VertexSet::from_vector(s.get<std::vector<int>>()).to_string());
    out << "collection {" << join(sets, ",") << "}\n";
  }
  for (std::size_t p = 0; p < view["names"].size(); ++p) {
    out << p + 1 << ": " << view["names"][p].get<std::string>() << " = " << view["vars"][p].get<std::string>() << "\n";
    out << "   F = " << view["exchange_named"][p].get<std::string>() << "\n";
    out << "   hatF = " << view["hat_named"][p].get<std::string>() << "\n";
  }
}

BuildOptions build_options(const Options& o) {
  BuildOptions b;
  b.cap = o.cap;
  b.budget = o.budget;
  b.threads = o.threads;
  return b;
}

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (o.format == f) return;
  throw Error(ErrorKind::InvalidInput, "format " + o.format + " is not available for this command");
}

}  // namespace

int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph LP algebras: seeds, mutation, exchange graphs and checks", "lpgraph"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--graph", o.graph_file, "graph JSON file");
  app.add_option("--cap", o.cap, "largest vertex count for enumerations")->check(CLI::Range(1, 12));
  app.add_option("--budget", o.budget, "largest number of seeds to explore");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
  app.add_option("--threads", o.threads, "worker threads (default LPGRAPH_THREADS or 1)")->check(CLI::PositiveNumber);

  auto* info = app.add_subcommand("info", "vertices, edges, strongly connected subsets and components");
  std::vector<int> set;
  auto* ys = app.add_subcommand("ys", "print Y_I for every strongly connected I, or for --set");
  ys->add_option("--set", set, "vertex list, e.g. 1,2,4")->delimiter(',');
  std::string collection_text;
  std::vector<int> activation;
  auto* seed = app.add_subcommand("seed", "the seed of a nested collection from the closed formulas");
  auto* coll_opt = seed->add_option("--collection", collection_text, "JSON list of vertex lists");
  seed->add_option("--activation", activation, "activation sequence, e.g. 1,2,3")->delimiter(',')->excludes(coll_opt);
  std::vector<int> path;
  auto* mut = app.add_subcommand("mutate", "apply a direction sequence to the initial seed");
  mut->add_option("--path", path, "directions, e.g. 1,2,3")->delimiter(',');
  auto* xg = app.add_subcommand("exchange-graph", "build the algebra by mutation and export its exchange graph");
  auto* verify = app.add_subcommand("verify", "identity suite and seed-by-seed comparison with the closed formulas");
  auto* freeze_cmd = app.add_subcommand("freeze", "the algebra with the component variables frozen");
  int degree = 2;
  auto* conj = app.add_subcommand("conjectures", "positivity and cluster-monomial independence evidence");
  conj->add_option("--degree", degree, "cluster monomial degree cap")->check(CLI::Range(0, 3));
  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "JSON-over-HTTP mutation sessions");
  serve->add_option("--port", port, "TCP port")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "lpgraph: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (serve->parsed()) {
      Service service(o.cap);
      httplib::Server server;
      install_routes(server, service);
      const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
      if (bound < 0) throw Error(ErrorKind::InvalidInput, "cannot bind " + host + ":" + std::to_string(port));
      out << "listening on http://" << host << ":" << bound << std::endl;
      server.listen_after_bind();
      return kExitOk;
    }

    if (o.graph_file.empty()) throw Error(ErrorKind::InvalidInput, "--graph FILE is required");
    const Digraph g = load_graph(o.graph_file);
    if (g.n() > o.cap)
      throw Error(ErrorKind::ResourceLimit, "graph has " + std::to_string(g.n()) + " vertices, cap is " + std::to_string(o.cap));
    const bool as_json = o.format == "json";

    if (info->parsed()) {
      require_format(o, {"text", "json"});
      const auto fam = strongly_connected_subsets(g);
      if (as_json) {
        json subsets = json::array(), comps = json::array();
        for (VertexSet s : fam.subsets) subsets.push_back(s.members());
        for (VertexSet s : fam.components) comps.push_back(s.members());
        out << json{{"graph", graph_to_json(g)}, {"strongly_connected", subsets}, {"components", comps}}.dump(2) << "\n";
      } else {
        std::vector<std::string> edges;
        for (auto [a, b] : g.edges()) edges.push_back(std::to_string(a) + "->" + std::to_string(b));
        out << "vertices: " << g.n() << "\n";
        out << "edges (" << edges.size() << "): " << join(edges, " ") << "\n";
        out << "strongly connected subsets (" << fam.subsets.size() << "): " << sets_text(fam.subsets) << "\n";
        out << "components (" << fam.components.size() << "): " << sets_text(fam.components) << "\n";
      }
      return kExitOk;
    }

    if (ys->parsed()) {
      require_format(o, {"text", "json"});
      std::vector<VertexSet> which;
      if (!set.empty()) {
        for (int v : set)
          if (v < 1 || v > g.n()) throw Error(ErrorKind::InvalidInput, "vertex " + std::to_string(v) + " is not in the graph");
        which.push_back(VertexSet::from_vector(set));
      } else {
        which = strongly_connected_subsets(g, o.cap).subsets;
      }
      YCache cache(g);
      json j = json::array();
      for (VertexSet I : which) {
        const LaurentPoly& y = cache.y(I);
        if (as_json) j.push_back({{"set", I.members()}, {"text", render(y)}, {"terms", poly_to_terms(y)}});
        else if (!set.empty()) out << render(y) << "\n";
        else out << Var::Y(I).name() << " = " << render(y) << "\n";
      }
      if (as_json) out << j.dump(2) << "\n";
      return kExitOk;
    }

    if (seed->parsed() || mut->parsed()) {
      require_format(o, {"text", "json"});
      YCache cache(g);
      const VariableInventory inv = variable_inventory(g, cache);
      Seed t;
      if (seed->parsed()) {
        MaximalNestedCollection m = MaximalNestedCollection::empty(g.n());
        if (!collection_text.empty()) {
          const json cj = json::parse(collection_text, nullptr, false);
          if (cj.is_discarded()) throw Error(ErrorKind::InvalidInput, "--collection is not JSON");
          m = collection_from_json(g, cj);
        } else if (!activation.empty()) {
          m = MaximalNestedCollection::from_activation(g, activation);
        }
        t = direct_seed(g, m, cache).seed;
      } else {
        t = initial_seed(g);
        for (int d : path) {
          if (d < 1 || d > g.n()) throw Error(ErrorKind::InvalidInput, "direction " + std::to_string(d) + " out of range");
          t = mutate(t, d);
        }
      }
      const json view = seed_view(g, inv, t);
      if (as_json) out << view.dump(2) << "\n";
      else print_seed_text(out, view);
      return kExitOk;
    }

    if (xg->parsed()) {
      const GraphLPAlgebra a = build_algebra(g, build_options(o));
      if (o.format == "dot") out << exchange_graph_dot(a);
      else if (as_json) out << exchange_graph_json(a).dump(2) << "\n";
      else {
        std::size_t edges = 0;
        for (const auto& s : a.seeds)
          for (const auto& e : s.edges) edges += e.target >= 0;
        out << "seeds: " << a.seeds.size() << (a.complete ? "" : " (budget reached)") << "\n";
        out << "cluster variables: " << a.variables.size() << "\n";
        out << "edges: " << edges / 2 << "\n";
        for (std::size_t u = 0; u < a.seeds.size(); ++u) {
          std::vector<std::string> names, nb;
          for (Var v : collection_symbols(a.seeds[u].collection)) names.push_back(v.name());
          for (const auto& e : a.seeds[u].edges) nb.push_back(std::to_string(e.target));
          out << u << ": " << a.seeds[u].collection.to_string() << " [" << join(names, " ") << "] -> " << join(nb, " ")
              << "\n";
        }
      }
      return a.main.ok() ? kExitOk : kExitVerifyFailed;
    }

    if (verify->parsed()) {
      require_format(o, {"text", "json"});
      const IdentityReport ids = verify_identities(g, o.cap);
      const GraphLPAlgebra a = build_algebra(g, build_options(o));
      const bool ok = ids.ok() && a.main.ok() && a.complete;
      if (as_json) {
        out << json{{"ok", ok}, {"identities", identities_to_json(ids)}, {"main", main_check_to_json(a.main)}, {"complete", a.complete}}
                   .dump(2)
            << "\n";
      } else {
        out << ids.to_string();
        out << "seeds: " << a.seeds.size() << (a.complete ? "" : " (budget reached)") << ", checked against closed formulas: "
            << a.main.seeds_checked << ", edges checked: " << a.main.edges_checked << "\n";
        for (const auto& m : a.main.mismatches) out << "mismatch: " << m << "\n";
        out << (ok ? "verify: ok" : "verify: FAILED") << "\n";
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }

    if (freeze_cmd->parsed()) {
      require_format(o, {"text", "json"});
      const FrozenAlgebra f = freeze(build_algebra(g, build_options(o)));
      if (as_json) out << frozen_to_json(f).dump(2) << "\n";
      else {
        out << "frozen: " << sets_text(f.frozen) << "\n";
        out << "rank: " << f.rank << "\n";
        out << "seeds: " << f.seed_index.size() << "\n";
        out << "cluster complex equals the nested set complex: " << (f.complex_matches_nested ? "yes" : "no") << "\n";
        for (std::size_t k = 0; k < f.clusters.size(); ++k) out << k << ": " << sets_text(f.clusters[k]) << "\n";
      }
      return f.complex_matches_nested ? kExitOk : kExitVerifyFailed;
    }

    if (conj->parsed()) {
      require_format(o, {"text", "json"});
      const GraphLPAlgebra a = build_algebra(g, build_options(o));
      const ConjectureReport pos = check_positivity(a, o.threads);
      const ConjectureReport mono = check_cluster_monomials(a, degree);
      const bool ok = pos.ok() && mono.ok();
      if (as_json) {
        out << json{{"ok", ok}, {"reports", {conjecture_to_json(pos), conjecture_to_json(mono)}}}.dump(2) << "\n";
      } else {
        out << "positivity: " << pos.instances << " instances, " << pos.failures.size() << " failures\n";
        for (const auto& w : pos.failures)
          out << "  " << w.base.to_string() << " " << w.variable << ": " << w.detail << ": " << render(w.value) << "\n";
        out << "cluster monomials (degree <= " << degree << "): " << mono.monomials << " monomials, rank " << mono.rank << "\n";
        for (const auto& d : mono.by_degree)
          out << "  degree " << d.degree << ": " << d.monomials << " monomials, rank " << d.rank << "\n";
      }
      return ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    err << "lpgraph: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? kExitInternal : kExitBadInput;
  } catch (const json::exception& e) {
    err << "lpgraph: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitOk;
}

}  // namespace lpgraph
