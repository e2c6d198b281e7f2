#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "stallings/graph.hpp"
#include "stallings/io.hpp"
#include "stallings/sample.hpp"
#include "support/oracles.hpp"

using namespace stallings;

namespace {

Graph cycle(int n) {
  Graph g;
  for (int v = 0; v < n; ++v) g.add_vertex(v);
  for (int v = 0; v < n; ++v) g.add_arc(v, (v + 1) % n);
  return g;
}

}  // namespace

TEST_CASE("validate accepts wellformed graphs") {
  Graph single;
  single.add_vertex();
  CHECK(!validate(single));

  Graph arc;
  VertexId a = arc.add_vertex();
  VertexId b = arc.add_vertex();
  arc.add_arc(a, b);
  CHECK(!validate(arc));
}

TEST_CASE("validate rejects the empty graph") {
  Graph g;
  auto why = validate(g);
  REQUIRE(why);
  CHECK(*why == "graph has no vertices");
}

TEST_CASE("a self-inverse dart is rejected at the document boundary") {
  // The builder API cannot express inv(d) = d, so the violation surfaces
  // when loading a document that claims it.
  json doc;
  doc["vertices"] = {0};
  doc["darts"] = json::array({json{{"id", 0}, {"inv", 0}, {"src", 0}}});
  CHECK_THROWS_WITH_AS(graph_from_json(doc),
                       "involution has unexpected fixed point",
                       std::invalid_argument);
}

TEST_CASE("connected components") {
  SUBCASE("two disjoint loops") {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    g.add_arc(0, 0);
    g.add_arc(1, 1);
    CHECK(connected_components(g).size() == 2);
  }
  SUBCASE("3-cycle") {
    CHECK(connected_components(cycle(3)).size() == 1);
  }
}

TEST_CASE("rank") {
  SUBCASE("single vertex") {
    Graph g;
    g.add_vertex();
    CHECK(rank(g) == 0);
  }
  SUBCASE("bouquet of two loops") {
    Graph g;
    g.add_vertex(0);
    g.add_arc(0, 0);
    g.add_arc(0, 0);
    CHECK(rank(g) == 2);
  }
  SUBCASE("two vertices, three parallel arcs") {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    for (int i = 0; i < 3; ++i) g.add_arc(0, 1);
    CHECK(rank(g) == 2);
    // Equals the number of arcs omitted by a spanning tree.
    Subgraph t = spanning_tree(g, 0);
    CHECK(g.num_arcs() - t.darts.size() / 2 == 2);
  }
  SUBCASE("errors") {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    Subgraph empty;
    CHECK_THROWS_AS(rank(g, empty), std::invalid_argument);
    CHECK_THROWS_AS(rank(g), std::invalid_argument);  // disconnected
  }
}

TEST_CASE("spanning tree") {
  SUBCASE("tree input returns the whole graph") {
    Graph g;
    for (int v = 0; v < 4; ++v) g.add_vertex(v);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    g.add_arc(1, 3);
    CHECK(spanning_tree(g, 0) == whole_graph(g));
  }
  SUBCASE("one-vertex bouquet keeps only the vertex") {
    Graph g;
    g.add_vertex(0);
    g.add_arc(0, 0);
    Subgraph t = spanning_tree(g, 0);
    CHECK(t.vertices == std::set<VertexId>{0});
    CHECK(t.darts.empty());
  }
  SUBCASE("3-cycle: breadth-first by dart id from the root") {
    Graph g = cycle(3);  // arcs 0-1 (darts 0,1), 1-2 (2,3), 2-0 (4,5)
    Subgraph t = spanning_tree(g, 0);
    CHECK(t.darts == std::set<DartId>{0, 1, 4, 5});
  }
  SUBCASE("disconnected input throws") {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    CHECK_THROWS_AS(spanning_tree(g, 0), std::invalid_argument);
  }
}

TEST_CASE("quotient by trees") {
  SUBCASE("collapsing a spanning tree of a 3-cycle") {
    Graph g = cycle(3);
    Subgraph t = spanning_tree(g, 0);
    QuotientResult q = quotient_by_trees(g, {t});
    CHECK(q.graph.num_vertices() == 1);
    CHECK(q.graph.num_arcs() == 1);
    CHECK(rank(q.graph) == 1);
    CHECK(q.vertex_map.at(2) == 0);
  }
  SUBCASE("collapsing nothing is the identity") {
    Graph g = cycle(3);
    QuotientResult q = quotient_by_trees(g, {});
    CHECK(q.graph == g);
  }
  SUBCASE("theta graph with one arc collapsed becomes a 2-bouquet") {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    for (int i = 0; i < 3; ++i) g.add_arc(0, 1);
    Subgraph t;
    t.vertices = {0, 1};
    t.darts = {0, 1};
    QuotientResult q = quotient_by_trees(g, {t});
    CHECK(q.graph.num_vertices() == 1);
    CHECK(q.graph.num_arcs() == 2);
    CHECK(rank(q.graph) == 2);
  }
  SUBCASE("overlapping trees throw") {
    Graph g = cycle(3);
    Subgraph t1, t2;
    t1.vertices = {0, 1};
    t1.darts = {0, 1};
    t2.vertices = {1, 2};
    t2.darts = {2, 3};
    CHECK_THROWS_AS(quotient_by_trees(g, {t1, t2}), std::invalid_argument);
  }
  SUBCASE("a non-tree subgraph throws") {
    Graph g = cycle(3);
    CHECK_THROWS_AS(quotient_by_trees(g, {whole_graph(g)}), std::invalid_argument);
  }
}

TEST_CASE("coboundary") {
  SUBCASE("whole graph has empty coboundary") {
    Graph g = cycle(3);
    CHECK(coboundary(g, whole_graph(g)).empty());
  }
  SUBCASE("isolated endpoint of a single arc") {
    Graph g;
    g.add_vertex(0);
    g.add_vertex(1);
    auto [d, di] = g.add_arc(0, 1);
    Subgraph sub;
    sub.vertices = {0};
    CHECK(coboundary(g, sub) == std::set<DartId>{d});
  }
}

TEST_CASE("path reduction") {
  Graph g = cycle(3);
  SUBCASE("a spur cancels to the trivial path") {
    Path p{0, {0, 1}};  // dart 0 then its inverse
    Path r = reduce(g, p);
    CHECK(r.darts.empty());
    CHECK(r.start == 0);
  }
  SUBCASE("a reduced path is unchanged") {
    Path p{0, {0, 2}};
    CHECK(reduce(g, p).darts == std::vector<DartId>{0, 2});
  }
  SUBCASE("nested cancellation") {
    Path p{0, {0, 2, 3, 1}};  // d1 d2 inv(d2) inv(d1)
    CHECK(reduce(g, p).darts.empty());
  }
  SUBCASE("idempotent and endpoint preserving on random paths") {
    Sampler sampler(7);
    for (int i = 0; i < 200; ++i) {
      Graph h = oracles::random_connected_graph(sampler, 2 + sampler.below(5),
                                                sampler.below(4));
      Path p;
      p.start = sampler.below(static_cast<int>(h.vertices().size()));
      VertexId at = p.start;
      for (int steps = sampler.below(12); steps > 0; --steps) {
        const auto& outs = h.out_darts(at);
        if (outs.empty()) break;
        DartId d = outs[sampler.below(static_cast<int>(outs.size()))];
        p.darts.push_back(d);
        at = h.dst(d);
      }
      Path r = reduce(h, p);
      CHECK(path_end(h, r) == path_end(h, p));
      CHECK(reduce(h, r).darts == r.darts);
    }
  }
}

TEST_CASE("spine") {
  SUBCASE("cycle through v is its own spine") {
    Graph g = cycle(4);
    CHECK(spine(g, 0) == whole_graph(g));
  }
  SUBCASE("pendant edge off a non-basepoint vertex is trimmed") {
    Graph g = cycle(3);
    VertexId pendant = g.add_vertex();
    g.add_arc(1, pendant);
    Subgraph s = spine(g, 0);
    CHECK(!s.vertices.count(pendant));
    CHECK(s.vertices == std::set<VertexId>{0, 1, 2});
    CHECK(s.darts.size() == 6);
  }
  SUBCASE("tail from the basepoint to a remote cycle is kept") {
    Graph g;
    for (int v = 0; v < 4; ++v) g.add_vertex(v);
    g.add_arc(0, 1);  // tail
    g.add_arc(1, 2);
    g.add_arc(2, 3);
    g.add_arc(3, 1);  // cycle 1-2-3
    Subgraph s = spine(g, 0);
    CHECK(s == whole_graph(g));
  }
  SUBCASE("simply connected input yields the single basepoint") {
    Graph g;
    for (int v = 0; v < 3; ++v) g.add_vertex(v);
    g.add_arc(0, 1);
    g.add_arc(1, 2);
    Subgraph s = spine(g, 1);
    CHECK(s.vertices == std::set<VertexId>{1});
    CHECK(s.darts.empty());
  }
}

TEST_CASE("spine equals the path-enumeration definition on small graphs") {
  Sampler sampler(11);
  for (int i = 0; i < 400; ++i) {
    int nv = 1 + sampler.below(7);
    Graph g = oracles::random_connected_graph(sampler, nv, sampler.below(4));
    VertexId v = sampler.below(nv);
    CHECK(spine(g, v) == oracles::spine_by_reachability(g, v));
  }
}

TEST_CASE("spine commutes with relabeling isomorphisms") {
  Sampler sampler(13);
  for (int i = 0; i < 100; ++i) {
    int nv = 1 + sampler.below(6);
    Graph g = oracles::random_connected_graph(sampler, nv, sampler.below(4));
    VertexId v = sampler.below(nv);

    // Random isomorphic copy: permute vertex ids and arc order.
    std::vector<int> vperm = sampler.permutation(nv);
    std::vector<DartId> reps;
    for (DartId d : g.darts()) {
      if (d < g.inv(d)) reps.push_back(d);
    }
    std::vector<int> aperm = sampler.permutation(static_cast<int>(reps.size()));
    Graph h;
    std::map<DartId, DartId> dart_map;
    for (int x = 0; x < nv; ++x) h.add_vertex(x);
    for (std::size_t k = 0; k < reps.size(); ++k) {
      DartId d = reps[aperm[k]];
      auto [nd, ndi] = h.add_arc(vperm[g.src(d)], vperm[g.dst(d)]);
      dart_map[d] = nd;
      dart_map[g.inv(d)] = ndi;
    }

    Subgraph s = spine(g, v);
    Subgraph sh = spine(h, vperm[v]);
    Subgraph mapped;
    for (VertexId x : s.vertices) mapped.vertices.insert(vperm[x]);
    for (DartId d : s.darts) mapped.darts.insert(dart_map[d]);
    CHECK(sh == mapped);
  }
}

TEST_CASE("rank is preserved by tree quotients on random graphs") {
  Sampler sampler(17);
  for (int i = 0; i < 1000; ++i) {
    int nv = 2 + sampler.below(7);
    Graph g = oracles::random_connected_graph(sampler, nv, sampler.below(5));
    int before = rank(g);

    // A random subtree of the spanning tree.
    Subgraph tree = sampler.random_spanning_tree(g, 0);
    Subgraph sub;
    VertexId seed = sampler.below(nv);
    sub.vertices.insert(seed);
    for (int grow = sampler.below(nv); grow > 0; --grow) {
      bool grew = false;
      for (DartId d : g.darts()) {
        if (!tree.darts.count(d)) continue;
        if (sub.vertices.count(g.src(d)) && !sub.vertices.count(g.dst(d))) {
          sub.vertices.insert(g.dst(d));
          sub.darts.insert(d);
          sub.darts.insert(g.inv(d));
          grew = true;
          break;
        }
      }
      if (!grew) break;
    }
    QuotientResult q = quotient_by_trees(g, {sub});
    CHECK(rank(q.graph) == before);
  }
}

TEST_CASE("rank equals arcs omitted by a spanning tree on random graphs") {
  Sampler sampler(19);
  for (int i = 0; i < 500; ++i) {
    int nv = 1 + sampler.below(7);
    Graph g = oracles::random_connected_graph(sampler, nv, sampler.below(5));
    Subgraph t = spanning_tree(g, sampler.below(nv));
    CHECK(rank(g) ==
          static_cast<int>(g.num_arcs()) - static_cast<int>(t.darts.size() / 2));
  }
}
