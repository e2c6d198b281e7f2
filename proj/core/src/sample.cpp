#include "stallings/sample.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace stallings {

BasedCore complete_core_from_permutations(
    const std::vector<std::vector<int>>& perms) {
  if (perms.empty()) throw std::invalid_argument("need at least one permutation");
  int n = static_cast<int>(perms.front().size());
  LabeledGraph lg;
  for (int v = 0; v < n; ++v) lg.graph.add_vertex(v);
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (static_cast<int>(perms[i].size()) != n) {
      throw std::invalid_argument("permutations act on different sets");
    }
    std::vector<bool> hit(n, false);
    for (int v = 0; v < n; ++v) {
      int w = perms[i][v];
      if (w < 0 || w >= n || hit[w]) {
        throw std::invalid_argument("not a permutation");
      }
      hit[w] = true;
      lg.add_labeled_arc(v, w, static_cast<int>(i) + 1);
    }
  }
  return BasedCore::from_graph(std::move(lg), 0, static_cast<int>(perms.size()));
}

int Sampler::below(int n) {
  if (n <= 0) throw std::invalid_argument("below: n must be positive");
  return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
}

Word Sampler::reduced_word(int rank, int max_len) {
  int len = 1 + below(max_len);
  Word w;
  w.reserve(len);
  for (int i = 0; i < len; ++i) {
    if (w.empty()) {
      w.push_back(label_from_key(below(2 * rank)));
    } else {
      int forbidden = label_key(-w.back());
      int pick = below(2 * rank - 1);
      if (pick >= forbidden) ++pick;
      w.push_back(label_from_key(pick));
    }
  }
  return w;
}

std::vector<Word> Sampler::generator_set(int rank, int max_words, int max_len) {
  int m = 1 + below(max_words);
  std::vector<Word> gens;
  gens.reserve(m);
  for (int i = 0; i < m; ++i) gens.push_back(reduced_word(rank, max_len));
  return gens;
}

BasedCore Sampler::random_core(int rank, int max_words, int max_len) {
  return core_from_words(generator_set(rank, max_words, max_len), rank);
}

std::vector<int> Sampler::permutation(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int i = n - 1; i > 0; --i) {
    std::swap(p[i], p[below(i + 1)]);
  }
  return p;
}

BasedCore Sampler::random_complete_core(int n, int rank) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<std::vector<int>> perms;
    for (int i = 0; i < rank; ++i) perms.push_back(permutation(n));
    try {
      return complete_core_from_permutations(perms);
    } catch (const std::invalid_argument&) {
      // Non-transitive pair: the graph was disconnected; resample.
    }
  }
  throw std::runtime_error("random_complete_core: no transitive pair found");
}

Graph Sampler::random_rank2_base(int nv) {
  if (nv < 1) throw std::invalid_argument("need at least one vertex");
  Graph g;
  for (int v = 0; v < nv; ++v) g.add_vertex(v);
  for (int v = 1; v < nv; ++v) g.add_arc(below(v), v);
  for (int extra = 0; extra < 2; ++extra) {
    g.add_arc(below(nv), below(nv));
  }
  return g;
}

Subgraph Sampler::random_spanning_tree(const Graph& g, VertexId root) {
  Subgraph tree;
  tree.vertices.insert(root);
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    std::vector<DartId> outs = g.out_darts(v);
    for (int i = static_cast<int>(outs.size()) - 1; i > 0; --i) {
      std::swap(outs[i], outs[below(i + 1)]);
    }
    for (DartId d : outs) {
      VertexId w = g.dst(d);
      if (tree.vertices.count(w)) continue;
      tree.vertices.insert(w);
      tree.darts.insert(d);
      tree.darts.insert(g.inv(d));
      queue.push_back(w);
    }
  }
  if (tree.vertices != g.vertices()) {
    throw std::invalid_argument("random_spanning_tree: graph disconnected");
  }
  return tree;
}

Path Sampler::random_closed_path(const Graph& g, const Subgraph& tree, VertexId v,
                                 int steps) {
  Path p;
  p.start = v;
  VertexId at = v;
  for (int i = 0; i < steps; ++i) {
    const auto& outs = g.out_darts(at);
    if (outs.empty()) break;
    DartId d = outs[below(static_cast<int>(outs.size()))];
    p.darts.push_back(d);
    at = g.dst(d);
  }
  // Tree walk back to v: parent darts computed from the spanning tree.
  std::map<VertexId, DartId> parent;
  std::deque<VertexId> queue{v};
  std::set<VertexId> seen{v};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(x)) {
      if (!tree.darts.count(d)) continue;
      VertexId w = g.dst(d);
      if (!seen.insert(w).second) continue;
      parent[w] = g.inv(d);  // dart leading from w toward v
      queue.push_back(w);
    }
  }
  while (at != v) {
    DartId d = parent.at(at);
    p.darts.push_back(d);
    at = g.dst(d);
  }
  return p;
}

}  // namespace stallings
