#include "lpgraph/nested.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace lpgraph {

namespace {

bool size_then_mask(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

// Calls f(union, count) for every nonempty subfamily of pairwise disjoint
// members, stopping early when f returns false.
template <typename F>
bool for_each_disjoint_subfamily(const std::vector<VertexSet>& family, std::size_t start, VertexSet acc, int count,
                                 F&& f) {
  for (std::size_t i = start; i < family.size(); ++i) {
    if (family[i].intersects(acc)) continue;
    const VertexSet u = acc | family[i];
    if (!f(u, count + 1)) return false;
    if (!for_each_disjoint_subfamily(family, i + 1, u, count + 1, f)) return false;
  }
  return true;
}

}  // namespace

NestedCheck check_nested(const Digraph& g, const std::vector<VertexSet>& family) {
  for (VertexSet s : family) {
    if (s.empty() || !is_strongly_connected(g, s)) return {false, "member " + s.to_string() + " is not strongly connected"};
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const VertexSet a = family[i], b = family[j];
      if (a == b) return {false, "repeated member " + a.to_string()};
      if (a.intersects(b) && !a.is_subset_of(b) && !b.is_subset_of(a))
        return {false, "members " + a.to_string() + " and " + b.to_string() + " overlap"};
    }
  std::string reason;
  for_each_disjoint_subfamily(family, 0, VertexSet{}, 0, [&](VertexSet u, int count) {
    if (count < 2) return true;
    if (static_cast<int>(scc_partition(g, u).size()) != count) {
      reason = "disjoint members with union " + u.to_string() + " are not its strongly connected components";
      return false;
    }
    return true;
  });
  if (!reason.empty()) return {false, reason};
  return {};
}

// ---------------------------------------------------------------- collection

MaximalNestedCollection MaximalNestedCollection::empty(int n) { return assemble(n, {}); }

MaximalNestedCollection MaximalNestedCollection::assemble(int n, const std::vector<VertexSet>& sets) {
  MaximalNestedCollection m;
  m.n_ = n;
  m.by_vertex_.assign(n + 1, VertexSet{});
  m.plus_.assign(n + 1, 0);
  m.key_.assign(n, 0);
  for (VertexSet s : sets) {
    if (!s.is_subset_of(VertexSet::range(n))) throw Error(ErrorKind::InvalidInput, "member outside the vertex range");
    m.support_ |= s;
  }
  m.support_.for_each([&](int v) {
    VertexSet best;
    for (VertexSet s : sets)
      if (s.contains(v) && (best.empty() || s.size() < best.size())) best = s;
    m.by_vertex_[v] = best;
  });
  // bijection: distinct vertices own distinct sets and every set is owned
  std::set<VertexSet> owned;
  m.support_.for_each([&](int v) { owned.insert(m.by_vertex_[v]); });
  std::set<VertexSet> given(sets.begin(), sets.end());
  if (owned.size() != static_cast<std::size_t>(m.support_.size()) || owned != given)
    throw Error(ErrorKind::InvalidInput, "collection is not maximal for its support");
  m.support_.for_each([&](int v) {
    const VertexSet sv = m.by_vertex_[v];
    VertexSet cover;
    int owner = 0;
    m.support_.for_each([&](int w) {
      const VertexSet sw = m.by_vertex_[w];
      if (sw != sv && sv.is_subset_of(sw) && (cover.empty() || sw.size() < cover.size())) {
        cover = sw;
        owner = w;
      }
    });
    m.plus_[v] = owner;
    m.key_[v - 1] = sv.mask();
  });
  return m;
}

MaximalNestedCollection MaximalNestedCollection::from_sets(const Digraph& g, const std::vector<VertexSet>& sets) {
  const auto check = check_nested(g, sets);
  if (!check.nested) throw Error(ErrorKind::InvalidInput, "not nested: " + check.reason);
  return assemble(g.n(), sets);
}

MaximalNestedCollection MaximalNestedCollection::from_activation(const Digraph& g, const std::vector<int>& sequence) {
  MaximalNestedCollection m = empty(g.n());
  for (int s : sequence) {
    if (s < 1 || s > g.n()) throw Error(ErrorKind::InvalidInput, "activation vertex out of range: " + std::to_string(s));
    if (m.support().contains(s)) throw Error(ErrorKind::InvalidInput, "vertex activated twice: " + std::to_string(s));
    m = activate(g, m, s);
  }
  return m;
}

std::vector<VertexSet> MaximalNestedCollection::sets() const {
  std::vector<VertexSet> out;
  support_.for_each([&](int v) { out.push_back(by_vertex_[v]); });
  std::sort(out.begin(), out.end(), size_then_mask);
  return out;
}

VertexSet MaximalNestedCollection::set_of(int i) const {
  if (!support_.contains(i)) throw Error(ErrorKind::Precondition, "vertex " + std::to_string(i) + " is not active");
  return by_vertex_[i];
}

int MaximalNestedCollection::plus(int i) const {
  if (!support_.contains(i)) throw Error(ErrorKind::Precondition, "vertex " + std::to_string(i) + " is not active");
  return plus_[i];
}

VertexSet MaximalNestedCollection::maxima() const {
  VertexSet out;
  support_.for_each([&](int v) {
    if (plus_[v] == 0) out.insert(v);
  });
  return out;
}

int MaximalNestedCollection::vertex_of(VertexSet s) const {
  int found = 0;
  support_.for_each([&](int v) {
    if (by_vertex_[v] == s) found = v;
  });
  return found;
}

MaximalNestedCollection MaximalNestedCollection::restricted_to(VertexSet m) const {
  std::vector<VertexSet> kept;
  for (VertexSet s : sets())
    if (s.is_subset_of(m)) kept.push_back(s);
  return assemble(n_, kept);
}

std::size_t MaximalNestedCollection::hash() const {
  std::size_t h = static_cast<std::size_t>(n_);
  for (auto k : key_) h ^= std::hash<std::uint64_t>{}(k) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string MaximalNestedCollection::to_string() const {
  std::string out = "{";
  bool first = true;
  for (VertexSet s : sets()) {
    if (!first) out += ",";
    out += s.to_string();
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------- moves

const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::Activation:
      return "activation";
    case MoveKind::Deactivation:
      return "deactivation";
    case MoveKind::InternalMutation:
      return "internal mutation";
  }
  return "";
}

MoveKind move_kind(const MaximalNestedCollection& m, int s) {
  if (!m.support().contains(s)) return MoveKind::Activation;
  return m.is_maximal(s) ? MoveKind::Deactivation : MoveKind::InternalMutation;
}

MaximalNestedCollection activate(const Digraph& g, const MaximalNestedCollection& m, int s) {
  if (m.support().contains(s)) throw Error(ErrorKind::Precondition, "already active");
  auto sets = m.sets();
  sets.push_back(oplus(g, m.support(), s));
  return MaximalNestedCollection::from_sets(g, sets);
}

MaximalNestedCollection mutate_collection(const Digraph& g, const MaximalNestedCollection& m, int s) {
  if (s < 1 || s > g.n()) throw Error(ErrorKind::InvalidInput, "direction out of range: " + std::to_string(s));
  switch (move_kind(m, s)) {
    case MoveKind::Activation:
      return activate(g, m, s);
    case MoveKind::Deactivation: {
      auto sets = m.sets();
      sets.erase(std::find(sets.begin(), sets.end(), m.set_of(s)));
      return MaximalNestedCollection::from_sets(g, sets);
    }
    case MoveKind::InternalMutation: {
      const int up = m.plus(s);
      auto sets = m.sets();
      sets.erase(std::find(sets.begin(), sets.end(), m.set_of(s)));
      sets.push_back(oplus(g, m.set_of(up).without(s), up));
      return MaximalNestedCollection::from_sets(g, sets);
    }
  }
  throw Error(ErrorKind::Internal, "unreachable move kind");
}

// ---------------------------------------------------------------- exchange graph

int CollectionExchangeGraph::index_of(const MaximalNestedCollection& m) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == m) return static_cast<int>(i);
  return -1;
}

std::vector<std::tuple<int, int, int>> CollectionExchangeGraph::edges() const {
  std::vector<std::tuple<int, int, int>> out;
  for (std::size_t u = 0; u < neighbor.size(); ++u)
    for (int s = 1; s <= n; ++s) {
      const int v = neighbor[u][s - 1];
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v, s);
    }
  return out;
}

CollectionExchangeGraph collection_exchange_graph(const Digraph& g, int cap) {
  if (g.n() > cap) throw Error(ErrorKind::ResourceLimit, "collection enumeration capped at n = " + std::to_string(cap));
  CollectionExchangeGraph eg;
  eg.n = g.n();
  std::unordered_map<MaximalNestedCollection, int, CollectionHash> index;
  auto intern = [&](const MaximalNestedCollection& m) {
    auto [it, fresh] = index.try_emplace(m, static_cast<int>(eg.vertices.size()));
    if (fresh) {
      eg.vertices.push_back(m);
      eg.neighbor.emplace_back(g.n(), -1);
    }
    return it->second;
  };
  intern(MaximalNestedCollection::empty(g.n()));
  for (std::size_t head = 0; head < eg.vertices.size(); ++head) {
    for (int s = 1; s <= g.n(); ++s) {
      const MaximalNestedCollection next = mutate_collection(g, eg.vertices[head], s);
      const int v = intern(next);
      eg.neighbor[head][s - 1] = v;
    }
  }
  return eg;
}

std::vector<MaximalNestedCollection> enumerate_maximal_collections(const Digraph& g, int cap) {
  return collection_exchange_graph(g, cap).vertices;
}

// ---------------------------------------------------------------- complexes

namespace {

void extend_faces(const Digraph& g, const std::vector<VertexSet>& pool, std::size_t start, std::vector<VertexSet>& face,
                  std::vector<std::vector<VertexSet>>& out) {
  out.push_back(face);
  for (std::size_t i = start; i < pool.size(); ++i) {
    face.push_back(pool[i]);
    if (is_nested(g, face)) extend_faces(g, pool, i + 1, face, out);
    face.pop_back();
  }
}

std::vector<std::vector<VertexSet>> facets_of(const std::vector<std::vector<VertexSet>>& faces,
                                             const std::vector<VertexSet>& pool) {
  const std::set<std::vector<VertexSet>> all(faces.begin(), faces.end());
  std::vector<std::vector<VertexSet>> out;
  for (const auto& f : faces) {
    bool maximal = true;
    for (VertexSet s : pool) {
      if (std::binary_search(f.begin(), f.end(), s)) continue;
      std::vector<VertexSet> h = f;
      h.insert(std::upper_bound(h.begin(), h.end(), s), s);
      if (all.count(h)) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

}  // namespace

NestedComplexes nested_complexes(const Digraph& g, int cap) {
  if (g.n() > cap) throw Error(ErrorKind::ResourceLimit, "nested complex enumeration capped at n = " + std::to_string(cap));
  const auto fam = strongly_connected_subsets(g);
  std::vector<VertexSet> all = fam.subsets;
  std::sort(all.begin(), all.end());
  std::vector<VertexSet> inner;
  for (VertexSet s : all)
    if (std::find(fam.components.begin(), fam.components.end(), s) == fam.components.end()) inner.push_back(s);
  NestedComplexes out;
  std::vector<VertexSet> face;
  extend_faces(g, all, 0, face, out.extended_faces);
  extend_faces(g, inner, 0, face, out.nested_faces);
  out.extended_facets = facets_of(out.extended_faces, all);
  out.nested_facets = facets_of(out.nested_faces, inner);
  return out;
}

// ---------------------------------------------------------------- swaps

bool exchangeable_swap_equiv(const Digraph& g, const std::vector<int>& seq1, const std::vector<int>& seq2) {
  MaximalNestedCollection::from_activation(g, seq1);
  MaximalNestedCollection::from_activation(g, seq2);
  if (seq1 == seq2) return true;
  std::set<std::vector<int>> seen{seq1};
  std::deque<std::vector<int>> queue{seq1};
  while (!queue.empty()) {
    const std::vector<int> cur = queue.front();
    queue.pop_front();
    const auto m = MaximalNestedCollection::from_activation(g, cur);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      if (m.set_of(cur[i]).intersects(m.set_of(cur[i + 1]))) continue;
      std::vector<int> next = cur;
      std::swap(next[i], next[i + 1]);
      if (next == seq2) return true;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return false;
}

}  // namespace lpgraph
