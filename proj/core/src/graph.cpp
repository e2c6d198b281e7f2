#include "stallings/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace stallings {

namespace {

const std::vector<DartId> kNoDarts{};

void insert_sorted(std::vector<DartId>& v, DartId d) {
  v.insert(std::upper_bound(v.begin(), v.end(), d), d);
}

void erase_value(std::vector<DartId>& v, DartId d) {
  auto it = std::lower_bound(v.begin(), v.end(), d);
  if (it != v.end() && *it == d) v.erase(it);
}

}  // namespace

VertexId Graph::add_vertex() {
  while (vertices_.count(next_vertex_)) ++next_vertex_;
  VertexId v = next_vertex_++;
  vertices_.insert(v);
  out_[v];
  return v;
}

void Graph::add_vertex(VertexId v) {
  if (v < 0) throw std::invalid_argument("vertex ids are nonnegative");
  vertices_.insert(v);
  out_[v];
  if (v >= next_vertex_) next_vertex_ = v + 1;
}

std::pair<DartId, DartId> Graph::add_arc(VertexId from, VertexId to) {
  DartId d = next_dart_;
  return add_arc_with_ids(d, d + 1, from, to);
}

std::pair<DartId, DartId> Graph::add_arc_with_ids(DartId d, DartId dinv,
                                                  VertexId from, VertexId to) {
  if (d == dinv) throw std::invalid_argument("arc darts must be distinct");
  if (darts_.count(d) || darts_.count(dinv)) {
    throw std::invalid_argument("dart id already in use");
  }
  if (!has_vertex(from) || !has_vertex(to)) {
    throw std::invalid_argument("arc endpoint is not a vertex");
  }
  darts_[d] = DartRec{dinv, from};
  darts_[dinv] = DartRec{d, to};
  insert_sorted(out_[from], d);
  insert_sorted(out_[to], dinv);
  next_dart_ = std::max(next_dart_, std::max(d, dinv) + 1);
  return {d, dinv};
}

DartId Graph::inv(DartId d) const {
  auto it = darts_.find(d);
  if (it == darts_.end()) throw std::invalid_argument("unknown dart");
  return it->second.inv;
}

VertexId Graph::src(DartId d) const {
  auto it = darts_.find(d);
  if (it == darts_.end()) throw std::invalid_argument("unknown dart");
  return it->second.src;
}

std::vector<DartId> Graph::darts() const {
  std::vector<DartId> out;
  out.reserve(darts_.size());
  for (const auto& [d, rec] : darts_) out.push_back(d);
  return out;
}

const std::vector<DartId>& Graph::out_darts(VertexId v) const {
  auto it = out_.find(v);
  if (it == out_.end()) {
    if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
    return kNoDarts;
  }
  return it->second;
}

void Graph::merge_vertex_into(VertexId gone, VertexId keep) {
  if (gone == keep) return;
  if (!has_vertex(gone) || !has_vertex(keep)) {
    throw std::invalid_argument("merge of unknown vertex");
  }
  std::vector<DartId> moved = out_[gone];
  for (DartId d : moved) {
    darts_[d].src = keep;
    insert_sorted(out_[keep], d);
  }
  out_.erase(gone);
  vertices_.erase(gone);
}

void Graph::remove_arc(DartId d) {
  auto it = darts_.find(d);
  if (it == darts_.end()) throw std::invalid_argument("unknown dart");
  DartId dinv = it->second.inv;
  erase_value(out_[darts_[d].src], d);
  erase_value(out_[darts_[dinv].src], dinv);
  darts_.erase(d);
  darts_.erase(dinv);
}

void Graph::remove_isolated_vertex(VertexId v) {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex");
  if (!out_darts(v).empty()) {
    throw std::invalid_argument("vertex still has incident darts");
  }
  out_.erase(v);
  vertices_.erase(v);
}

bool Graph::operator==(const Graph& other) const {
  if (vertices_ != other.vertices_) return false;
  if (darts_.size() != other.darts_.size()) return false;
  for (const auto& [d, rec] : darts_) {
    auto it = other.darts_.find(d);
    if (it == other.darts_.end()) return false;
    if (it->second.inv != rec.inv || it->second.src != rec.src) return false;
  }
  return true;
}

std::optional<std::string> validate(const Graph& g) {
  if (g.vertices().empty()) return "graph has no vertices";
  for (DartId d : g.darts()) {
    DartId di = g.inv(d);
    if (di == d) return "involution has unexpected fixed point";
    if (!g.has_dart(di)) return "inverse dart missing";
    if (g.inv(di) != d) return "involution is not an involution";
    if (!g.has_vertex(g.src(d))) return "dart source is not a declared vertex";
  }
  return std::nullopt;
}

std::optional<std::string> validate_subgraph(const Graph& g, const Subgraph& sub) {
  for (VertexId v : sub.vertices) {
    if (!g.has_vertex(v)) return "subgraph vertex not in parent";
  }
  for (DartId d : sub.darts) {
    if (!g.has_dart(d)) return "subgraph dart not in parent";
    if (!sub.darts.count(g.inv(d))) return "subgraph not closed under inv";
    if (!sub.vertices.count(g.src(d))) return "subgraph dart source not included";
  }
  return std::nullopt;
}

std::optional<std::string> validate_path(const Graph& g, const Path& p) {
  if (!g.has_vertex(p.start)) return "path start is not a vertex";
  VertexId at = p.start;
  for (DartId d : p.darts) {
    if (!g.has_dart(d)) return "path dart not in graph";
    if (g.src(d) != at) return "path darts are not consecutively incident";
    at = g.dst(d);
  }
  return std::nullopt;
}

Subgraph whole_graph(const Graph& g) {
  Subgraph s;
  s.vertices = g.vertices();
  for (DartId d : g.darts()) s.darts.insert(d);
  return s;
}

std::vector<Subgraph> connected_components(const Graph& g) {
  std::vector<Subgraph> out;
  std::set<VertexId> seen;
  for (VertexId start : g.vertices()) {
    if (seen.count(start)) continue;
    Subgraph comp;
    std::deque<VertexId> queue{start};
    seen.insert(start);
    comp.vertices.insert(start);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (DartId d : g.out_darts(v)) {
        comp.darts.insert(d);
        comp.darts.insert(g.inv(d));
        VertexId w = g.dst(d);
        if (!seen.count(w)) {
          seen.insert(w);
          comp.vertices.insert(w);
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() == 1;
}

bool is_tree(const Graph& g, const Subgraph& sub) {
  if (validate_subgraph(g, sub)) return false;
  if (sub.vertices.empty()) return false;
  // Connected and #arcs == #vertices - 1.
  std::set<VertexId> seen;
  std::deque<VertexId> queue{*sub.vertices.begin()};
  seen.insert(*sub.vertices.begin());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      if (!sub.darts.count(d)) continue;
      VertexId w = g.dst(d);
      if (!seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  if (seen != sub.vertices) return false;
  return sub.darts.size() / 2 == sub.vertices.size() - 1;
}

int rank(const Graph& g, const Subgraph& component) {
  if (component.vertices.empty()) throw std::invalid_argument("empty component");
  if (auto why = validate_subgraph(g, component)) throw std::invalid_argument(*why);
  // Check connectivity within the subgraph.
  std::set<VertexId> seen;
  std::deque<VertexId> queue{*component.vertices.begin()};
  seen.insert(*component.vertices.begin());
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      if (!component.darts.count(d)) continue;
      VertexId w = g.dst(d);
      if (!seen.count(w)) {
        seen.insert(w);
        queue.push_back(w);
      }
    }
  }
  if (seen != component.vertices) {
    throw std::invalid_argument("component is not connected");
  }
  return static_cast<int>(component.darts.size() / 2) -
         static_cast<int>(component.vertices.size()) + 1;
}

int rank(const Graph& g) {
  return rank(g, whole_graph(g));
}

Subgraph spanning_tree(const Graph& g, VertexId root) {
  if (!g.has_vertex(root)) throw std::invalid_argument("unknown root vertex");
  Subgraph tree;
  tree.vertices.insert(root);
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      VertexId w = g.dst(d);
      if (tree.vertices.count(w)) continue;
      tree.vertices.insert(w);
      tree.darts.insert(d);
      tree.darts.insert(g.inv(d));
      queue.push_back(w);
    }
  }
  if (tree.vertices != g.vertices()) {
    throw std::invalid_argument("graph is disconnected");
  }
  return tree;
}

QuotientResult quotient_by_trees(const Graph& g, const std::vector<Subgraph>& trees) {
  std::set<VertexId> used_vertices;
  std::set<DartId> used_darts;
  for (const Subgraph& t : trees) {
    if (!is_tree(g, t)) throw std::invalid_argument("subgraph is not a tree");
    for (VertexId v : t.vertices) {
      if (!used_vertices.insert(v).second) {
        throw std::invalid_argument("trees overlap");
      }
    }
    for (DartId d : t.darts) used_darts.insert(d);
  }

  QuotientResult res;
  for (VertexId v : g.vertices()) res.vertex_map[v] = v;
  for (const Subgraph& t : trees) {
    VertexId keep = *t.vertices.begin();
    for (VertexId v : t.vertices) res.vertex_map[v] = keep;
  }
  for (VertexId v : g.vertices()) {
    VertexId image = res.vertex_map[v];
    if (!res.graph.has_vertex(image)) res.graph.add_vertex(image);
  }
  for (DartId d : g.darts()) {
    if (used_darts.count(d)) {
      res.dart_map[d] = std::nullopt;
      continue;
    }
    res.dart_map[d] = d;
    DartId di = g.inv(d);
    if (d < di) {
      res.graph.add_arc_with_ids(d, di, res.vertex_map[g.src(d)],
                                 res.vertex_map[g.src(di)]);
    }
  }
  return res;
}

std::set<DartId> coboundary(const Graph& g, const Subgraph& sub) {
  std::set<DartId> out;
  for (DartId d : g.darts()) {
    if (sub.darts.count(d)) continue;
    if (sub.vertices.count(g.src(d))) out.insert(d);
  }
  return out;
}

VertexId path_end(const Graph& g, const Path& p) {
  if (auto why = validate_path(g, p)) throw std::invalid_argument(*why);
  return p.darts.empty() ? p.start : g.dst(p.darts.back());
}

Path reduce(const Graph& g, const Path& p) {
  if (auto why = validate_path(g, p)) throw std::invalid_argument(*why);
  Path out;
  out.start = p.start;
  for (DartId d : p.darts) {
    if (!out.darts.empty() && out.darts.back() == g.inv(d)) {
      out.darts.pop_back();
    } else {
      out.darts.push_back(d);
    }
  }
  return out;
}

Subgraph spine(const Graph& g, VertexId v) {
  if (!g.has_vertex(v)) throw std::invalid_argument("unknown basepoint");
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");

  // Iterated removal of degree-1 vertices other than v.
  std::map<VertexId, std::vector<DartId>> live;
  for (VertexId u : g.vertices()) {
    const auto& outs = g.out_darts(u);
    live[u] = std::vector<DartId>(outs.begin(), outs.end());
  }
  std::deque<VertexId> leaves;
  for (const auto& [u, outs] : live) {
    if (u != v && outs.size() == 1) leaves.push_back(u);
  }
  std::set<VertexId> removed;
  while (!leaves.empty()) {
    VertexId u = leaves.front();
    leaves.pop_front();
    if (removed.count(u) || live[u].size() != 1) continue;
    DartId d = live[u].front();
    VertexId w = g.dst(d);
    removed.insert(u);
    live.erase(u);
    auto& wouts = live[w];
    wouts.erase(std::remove(wouts.begin(), wouts.end(), g.inv(d)), wouts.end());
    if (w != v && wouts.size() == 1 && !removed.count(w)) leaves.push_back(w);
  }

  Subgraph s;
  for (const auto& [u, outs] : live) {
    s.vertices.insert(u);
    for (DartId d : outs) s.darts.insert(d);
  }
  s.vertices.insert(v);
  return s;
}

}  // namespace stallings
