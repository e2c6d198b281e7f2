#ifndef STALLINGS_GRAPH_HPP
#define STALLINGS_GRAPH_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace stallings {

using VertexId = int;
using DartId = int;

// A graph in the dart model: darts come in arc pairs {d, inv(d)}, inv is a
// fixed-point-free involution, and src assigns each dart a start vertex.
// Vertices live in their own carrier set, so inv has no fixed points by
// construction and validate() can state each axiom separately.
//
// Iteration over vertices and darts is always in ascending identifier
// order; every operation downstream relies on that for reproducibility.
// Graphs are treated as immutable values once built; the mutating members
// exist for construction (folding, quotients, trimming) only.
class Graph {
 public:
  Graph() = default;

  VertexId add_vertex();
  void add_vertex(VertexId v);
  // Creates the arc {d, d+1} with src(d)=from, src(d+1)=to; returns (d, d+1).
  std::pair<DartId, DartId> add_arc(VertexId from, VertexId to);
  std::pair<DartId, DartId> add_arc_with_ids(DartId d, DartId dinv,
                                             VertexId from, VertexId to);

  bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
  bool has_dart(DartId d) const { return darts_.count(d) > 0; }

  DartId inv(DartId d) const;
  VertexId src(DartId d) const;
  VertexId dst(DartId d) const { return src(inv(d)); }

  const std::set<VertexId>& vertices() const { return vertices_; }
  std::vector<DartId> darts() const;
  // Outgoing darts of v in ascending dart id order.
  const std::vector<DartId>& out_darts(VertexId v) const;
  int degree(VertexId v) const { return static_cast<int>(out_darts(v).size()); }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_darts() const { return darts_.size(); }
  std::size_t num_arcs() const { return darts_.size() / 2; }

  // Construction-time surgery.
  void merge_vertex_into(VertexId gone, VertexId keep);
  void remove_arc(DartId d);
  void remove_isolated_vertex(VertexId v);

  bool operator==(const Graph& other) const;

 private:
  struct DartRec {
    DartId inv;
    VertexId src;
  };

  std::set<VertexId> vertices_;
  std::map<DartId, DartRec> darts_;
  std::map<VertexId, std::vector<DartId>> out_;
  VertexId next_vertex_ = 0;
  DartId next_dart_ = 0;
};

// A subgraph is a vertex subset plus a dart subset of some parent graph,
// closed under inv, with every included dart's src included.
struct Subgraph {
  std::set<VertexId> vertices;
  std::set<DartId> darts;

  bool operator==(const Subgraph& other) const = default;
};

// A path: a start vertex and a sequence of consecutively incident darts.
// The empty sequence is the trivial path at `start`.
struct Path {
  VertexId start = 0;
  std::vector<DartId> darts;
};

// Checks all Graph axioms; returns std::nullopt when the graph is valid,
// otherwise a description of the first violation found.  The empty graph
// (no vertices) is rejected.
std::optional<std::string> validate(const Graph& g);

std::optional<std::string> validate_subgraph(const Graph& g, const Subgraph& sub);
std::optional<std::string> validate_path(const Graph& g, const Path& p);

Subgraph whole_graph(const Graph& g);

// Maximal connected pieces, ordered by their smallest vertex id.
std::vector<Subgraph> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g, const Subgraph& sub);

// Rank (#arcs - #vertices + 1) of a connected component.  Throws on an
// empty or disconnected component.
int rank(const Graph& g, const Subgraph& component);
int rank(const Graph& g);

// Breadth-first spanning tree from `root`, out-darts scanned in ascending
// id order.  Throws when g is disconnected.
Subgraph spanning_tree(const Graph& g, VertexId root);

struct QuotientResult {
  Graph graph;
  // Every vertex of the input maps to a vertex of the quotient.
  std::map<VertexId, VertexId> vertex_map;
  // Darts of collapsed tree arcs map to nullopt, all others to themselves.
  std::map<DartId, std::optional<DartId>> dart_map;
};

// Collapses each of the given pairwise disjoint trees to a single vertex
// (the tree's smallest vertex id).  Rank of every component is preserved.
QuotientResult quotient_by_trees(const Graph& g, const std::vector<Subgraph>& trees);

// Directional coboundary: darts of g outside `sub` whose source lies in
// `sub`.
std::set<DartId> coboundary(const Graph& g, const Subgraph& sub);

VertexId path_end(const Graph& g, const Path& p);

// Removes spurs (a dart followed by its inverse) until none remain.
// Endpoint-preserving and idempotent.
Path reduce(const Graph& g, const Path& p);

// The spine of g at v: the union of all closed reduced paths starting at v.
// Computed by trimming degree-1 vertices other than v; a simply connected
// input yields the single vertex v.  Requires g finite and connected.
Subgraph spine(const Graph& g, VertexId v);

}  // namespace stallings

#endif
