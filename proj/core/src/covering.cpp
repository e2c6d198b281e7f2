#include "stallings/covering.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace stallings {

namespace {

void require_rank2_nontrivial(const BasedCore& core, const char* op) {
  if (core.base_rank() != 2) {
    throw std::invalid_argument(std::string(op) + ": base rank must be 2");
  }
  if (core.is_trivial()) {
    throw std::invalid_argument(std::string(op) + ": trivial subgroup");
  }
}

// Breadth-first discovery order from the basepoint, labels scanned in key
// order, with the (reduced) path word to each vertex.
std::vector<std::pair<VertexId, Word>> bfs_words(const BasedCore& core) {
  std::vector<std::pair<VertexId, Word>> order;
  std::map<VertexId, Word> word_to;
  std::deque<VertexId> queue{core.basepoint()};
  word_to[core.basepoint()] = {};
  order.push_back({core.basepoint(), {}});
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (int key = 0; key < 2 * core.base_rank(); ++key) {
      int letter = label_from_key(key);
      auto d = core.step(v, letter);
      if (!d) continue;
      VertexId w = core.graph().dst(*d);
      if (word_to.count(w)) continue;
      Word path = word_to[v];
      path.push_back(letter);
      word_to[w] = path;
      order.push_back({w, path});
      queue.push_back(w);
    }
  }
  return order;
}

}  // namespace

std::optional<int> index(const BasedCore& core) {
  if (core.is_complete()) return static_cast<int>(core.graph().num_vertices());
  return std::nullopt;
}

SpineInvariants spine_invariants(const BasedCore& core) {
  require_rank2_nontrivial(core, "spine_invariants");
  SpineInvariants inv;
  inv.H = static_cast<int>(core.graph().num_vertices());
  inv.n1 = inv.H - core.arcs_with_label(1);
  inv.n2 = inv.H - core.arcs_with_label(2);
  inv.rank = core.rank();
  if (inv.rank != inv.H - (inv.n1 + inv.n2) + 1) {
    throw std::logic_error("spine invariant identity violated");
  }
  return inv;
}

ExtendedSpine extended_spine(const BasedCore& core) {
  require_rank2_nontrivial(core, "extended_spine");
  const Graph& g = core.graph();

  ExtendedSpine es;
  es.graph = core.labeled();
  es.basepoint = core.basepoint();
  es.interior = g.vertices();

  // One tip per missing direction.
  std::map<std::pair<VertexId, int>, VertexId> tip_at;
  for (VertexId v : g.vertices()) {
    for (int key = 0; key < 4; ++key) {
      int letter = label_from_key(key);
      if (core.step(v, letter)) continue;
      VertexId tip = es.graph.graph.add_vertex();
      es.graph.add_labeled_arc(v, tip, letter);
      es.boundary.insert(tip);
      tip_at[{v, letter}] = tip;
    }
  }

  // Maximal label-i segments that are not cycles; each yields one x_i-pair.
  for (int i = 1; i <= 2; ++i) {
    for (VertexId v : g.vertices()) {
      if (core.step(v, -i)) continue;  // has an incoming i-arc: not a segment start
      XiPair pair;
      pair.label = i;
      pair.tip_in = tip_at.at({v, -i});
      VertexId at = v;
      pair.gamma.push_back(at);
      while (auto d = core.step(at, i)) {
        at = g.dst(*d);
        pair.gamma.push_back(at);
      }
      pair.tip_out = tip_at.at({at, i});
      es.pairs.push_back(std::move(pair));
    }
  }

  // Cross-check the arithmetic pair counts against the enumeration.
  SpineInvariants inv = spine_invariants(core);
  int n1 = 0, n2 = 0;
  for (const XiPair& p : es.pairs) (p.label == 1 ? n1 : n2)++;
  if (n1 != inv.n1 || n2 != inv.n2) {
    throw std::logic_error("x_i-pair enumeration disagrees with arithmetic count");
  }

  // Checker scheme: all interior vertices checkered; one removal per
  // x1-pair (the interior vertex of gamma nearest the in-tip), one per
  // x2-pair (lowest still-checkered vertex).
  es.checkered = es.interior;
  for (const XiPair& p : es.pairs) {
    if (p.label != 1) continue;
    if (!es.checkered.erase(p.gamma.front())) {
      throw std::logic_error("x1-pair checker already removed");
    }
  }
  for (const XiPair& p : es.pairs) {
    if (p.label != 2) continue;
    if (es.checkered.empty()) {
      throw std::logic_error("no checker left for x2-pair");
    }
    es.checkered.erase(es.checkered.begin());
  }
  return es;
}

int checker_count(const ExtendedSpine& es) {
  return static_cast<int>(es.checkered.size());
}

GaloisResult is_galois(const BasedCore& core) {
  if (!index(core)) {
    throw std::invalid_argument("is_galois: core has infinite index");
  }
  const Graph& g = core.graph();
  const VertexId u = core.basepoint();
  const int r = core.base_rank();

  for (VertexId p : g.vertices()) {
    if (p == u) continue;
    // Search the pair automaton from (u, p) for a state (u, y) with y != p:
    // its path word is closed at u but not at p.  If no such state is
    // reachable, u -> p extends to a label-preserving automorphism.
    std::map<std::pair<VertexId, VertexId>, std::pair<std::pair<VertexId, VertexId>, int>>
        parent;
    std::deque<std::pair<VertexId, VertexId>> queue{{u, p}};
    parent[{u, p}] = {{u, p}, 0};
    std::optional<std::pair<VertexId, VertexId>> found;
    while (!queue.empty() && !found) {
      auto [x, y] = queue.front();
      queue.pop_front();
      for (int key = 0; key < 2 * r && !found; ++key) {
        int letter = label_from_key(key);
        auto dx = core.step(x, letter);
        auto dy = core.step(y, letter);
        if (!dx || !dy) {
          throw std::logic_error("is_galois: incomplete core slipped through");
        }
        std::pair<VertexId, VertexId> next{g.dst(*dx), g.dst(*dy)};
        if (parent.count(next)) continue;
        parent[next] = {{x, y}, letter};
        if (next.first == u && next.second != p) {
          found = next;
        } else {
          queue.push_back(next);
        }
      }
    }
    if (found) {
      Word w;
      for (auto state = *found; state != std::make_pair(u, p);
           state = parent[state].first) {
        w.push_back(parent[state].second);
      }
      std::reverse(w.begin(), w.end());
      if (!trace_from(core.labeled(), u, w).closed() ||
          trace_from(core.labeled(), p, w).closed()) {
        throw std::logic_error("is_galois: witness failed verification");
      }
      return GaloisResult{false, w, p};
    }
  }
  return GaloisResult{true, {}, -1};
}

BasedCore complete_to_finite_cover(const BasedCore& core,
                                   const std::vector<Word>& avoid) {
  const int r = core.base_rank();
  std::vector<Word> xs;
  for (const Word& raw : avoid) {
    Word x = reduce_word(raw);
    if (x.empty()) {
      throw std::invalid_argument("complete_to_finite_cover: trivial word in X");
    }
    if (trace(core, x).closed()) {
      throw std::invalid_argument("complete_to_finite_cover: member word in X");
    }
    xs.push_back(std::move(x));
  }

  // Realize each avoided word as a concrete non-closed path by attaching
  // hanging vertices where it escapes.  Later arcs cannot reroute a trace,
  // so these words stay non-closed through completion.
  LabeledGraph grown = core.labeled();
  VertexId base = core.basepoint();
  for (const Word& x : xs) {
    TraceResult t = trace_from(grown, base, x);
    if (t.kind == TraceResult::Kind::Closed) {
      throw std::logic_error("avoided word became closed while attaching");
    }
    if (t.kind == TraceResult::Kind::Escapes) {
      Word rest(x.begin() + t.position, x.end());
      detail::attach_word_path(grown, t.end, rest);
    }
  }

  auto attempt = [&](const LabeledGraph& start, int shift) -> std::optional<LabeledGraph> {
    LabeledGraph lg = start;
    for (int i = 1; i <= r; ++i) {
      std::vector<VertexId> missing_out, missing_in;
      for (VertexId v : lg.graph.vertices()) {
        if (!detail::find_step(lg, v, i)) missing_out.push_back(v);
        if (!detail::find_step(lg, v, -i)) missing_in.push_back(v);
      }
      if (missing_out.size() != missing_in.size()) {
        throw std::logic_error("deficiency lists of unequal size");
      }
      std::size_t m = missing_out.size();
      for (std::size_t j = 0; j < m; ++j) {
        lg.add_labeled_arc(missing_out[j], missing_in[(j + shift) % m], i);
      }
    }
    for (const Word& x : xs) {
      if (trace_from(lg, base, x).closed()) return std::nullopt;
    }
    return lg;
  };

  int max_shifts =
      std::max<int>(1, static_cast<int>(xs.size()) *
                           static_cast<int>(grown.graph.num_arcs()) + 1);
  for (int round = 0; round < 2; ++round) {
    for (int shift = 0; shift < max_shifts; ++shift) {
      if (auto done = attempt(grown, shift)) {
        return BasedCore::from_graph(std::move(*done), base, r);
      }
    }
    // Extra slack: one fresh vertex per label, then retry the shifts.
    for (int i = 0; i < r; ++i) grown.graph.add_vertex();
  }
  throw std::runtime_error("complete_to_finite_cover: no completion found");
}

namespace detail {

std::vector<Word> schreier_words(const BasedCore& core, const Subgraph& tree) {
  const Graph& g = core.graph();
  if (!is_tree(g, tree) || tree.vertices != g.vertices()) {
    throw std::invalid_argument("schreier_words: not a spanning tree");
  }

  std::map<VertexId, Word> word_to;
  word_to[core.basepoint()] = {};
  std::deque<VertexId> queue{core.basepoint()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      if (!tree.darts.count(d)) continue;
      VertexId w = g.dst(d);
      if (word_to.count(w)) continue;
      Word path = word_to[v];
      path.push_back(core.labeled().label(d));
      word_to[w] = std::move(path);
      queue.push_back(w);
    }
  }

  std::vector<Word> basis;
  for (DartId d : g.darts()) {
    if (tree.darts.count(d) || d > g.inv(d)) continue;
    Word w = word_to.at(g.src(d));
    w.push_back(core.labeled().label(d));
    Word back = inverse_word(word_to.at(g.dst(d)));
    w.insert(w.end(), back.begin(), back.end());
    basis.push_back(reduce_word(w));
  }
  return basis;
}

}  // namespace detail

std::vector<Word> schreier_basis(const BasedCore& core, const Subgraph& tree) {
  if (!index(core)) {
    throw std::invalid_argument("schreier_basis: core has infinite index");
  }
  return detail::schreier_words(core, tree);
}

std::vector<Word> schreier_basis(const BasedCore& core) {
  return schreier_basis(core, spanning_tree(core.graph(), core.basepoint()));
}

Word escape_witness(const BasedCore& core, const Word& w_raw) {
  Word w = reduce_word(w_raw);
  if (w.empty()) {
    throw std::invalid_argument("escape_witness: trivial word");
  }
  if (index(core)) {
    throw std::invalid_argument("escape_witness: core has finite index");
  }
  if (!trace(core, w).closed()) return {};

  const int r = core.base_rank();
  // Candidates g = (path to a deficient vertex) · missing letter · pad,
  // shortest path first; each is verified by trace before returning.
  for (const auto& [v, path] : bfs_words(core)) {
    for (int key = 0; key < 2 * r; ++key) {
      int letter = label_from_key(key);
      if (core.step(v, letter)) continue;
      for (int pad_key = -1; pad_key < 2 * r; ++pad_key) {
        Word g = path;
        g.push_back(letter);
        if (pad_key >= 0) {
          int pad = label_from_key(pad_key);
          if (pad == -letter) continue;
          g.push_back(pad);
        }
        Word candidate = conjugate_word(g, w);
        if (!candidate.empty() && !trace(core, candidate).closed()) {
          return g;
        }
      }
    }
  }
  throw std::logic_error("escape_witness: search exhausted");
}

}  // namespace stallings
