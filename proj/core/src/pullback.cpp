#include "stallings/pullback.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace stallings {

namespace {

// Breadth-first path words (by ascending dart id) from the basepoint to
// every vertex.
std::map<VertexId, Word> bfs_path_words(const BasedCore& core) {
  const Graph& g = core.graph();
  std::map<VertexId, Word> word_to;
  word_to[core.basepoint()] = {};
  std::deque<VertexId> queue{core.basepoint()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (DartId d : g.out_darts(v)) {
      VertexId w = g.dst(d);
      if (word_to.count(w)) continue;
      Word path = word_to[v];
      path.push_back(core.labeled().label(d));
      word_to[w] = std::move(path);
      queue.push_back(w);
    }
  }
  return word_to;
}

}  // namespace

VertexId PullbackReport::product_vertex(VertexId p, VertexId q) const {
  auto it = std::lower_bound(vertex_pairs.begin(), vertex_pairs.end(),
                             std::make_pair(p, q));
  if (it == vertex_pairs.end() || *it != std::make_pair(p, q)) {
    throw std::invalid_argument("no such product vertex");
  }
  return static_cast<VertexId>(it - vertex_pairs.begin());
}

PullbackReport fiber_product(const BasedCore& c1, const BasedCore& c2) {
  if (c1.base_rank() != c2.base_rank()) {
    throw std::invalid_argument("fiber_product: mismatched base ranks");
  }
  PullbackReport report;
  report.base_rank = c1.base_rank();

  // Vertices: all pairs, id = position in lexicographic order.
  for (VertexId p : c1.graph().vertices()) {
    for (VertexId q : c2.graph().vertices()) {
      report.vertex_pairs.emplace_back(p, q);
    }
  }
  for (std::size_t i = 0; i < report.vertex_pairs.size(); ++i) {
    report.product.graph.add_vertex(static_cast<VertexId>(i));
  }

  // Darts: pairs of equal-label darts.  One arc per pair of positive darts.
  std::map<int, std::vector<DartId>> pos1, pos2;
  for (const auto& [d, lab] : c1.labeled().labels) {
    if (lab > 0) pos1[lab].push_back(d);
  }
  for (const auto& [d, lab] : c2.labeled().labels) {
    if (lab > 0) pos2[lab].push_back(d);
  }
  DartId next = 0;
  for (const auto& [lab, darts1] : pos1) {
    auto it = pos2.find(lab);
    if (it == pos2.end()) continue;
    for (DartId d1 : darts1) {
      for (DartId d2 : it->second) {
        VertexId from = report.product_vertex(c1.graph().src(d1), c2.graph().src(d2));
        VertexId to = report.product_vertex(c1.graph().dst(d1), c2.graph().dst(d2));
        report.product.graph.add_arc_with_ids(next, next + 1, from, to);
        report.product.labels[next] = lab;
        report.product.labels[next + 1] = -lab;
        report.dart_pairs[next] = {d1, d2};
        report.dart_pairs[next + 1] = {c1.graph().inv(d1), c2.graph().inv(d2)};
        next += 2;
      }
    }
  }

  // Components, their ranks, representatives and intersection invariants.
  std::map<VertexId, Word> words1 = bfs_path_words(c1);
  std::map<VertexId, Word> words2 = bfs_path_words(c2);
  for (Subgraph& comp : connected_components(report.product.graph)) {
    PullbackComponent pc;
    pc.rank = static_cast<int>(comp.darts.size() / 2) -
              static_cast<int>(comp.vertices.size()) + 1;
    pc.simply_connected = pc.rank == 0;
    pc.base_vertex = *comp.vertices.begin();
    auto [p, q] = report.vertex_pairs[pc.base_vertex];
    pc.rep = concat_reduced(words1.at(p), inverse_word(words2.at(q)));
    if (!pc.simply_connected && report.base_rank == 2) {
      BasedCore section = fold_to_core(detail::induced(report.product, comp),
                                       pc.base_vertex, report.base_rank);
      pc.invariants = spine_invariants(section);
    }
    pc.part = std::move(comp);
    report.components.push_back(std::move(pc));
  }
  return report;
}

BasedCore pointed_intersection(const BasedCore& c1, const BasedCore& c2) {
  if (c1.base_rank() != c2.base_rank()) {
    throw std::invalid_argument("pointed_intersection: mismatched base ranks");
  }
  const int r = c1.base_rank();
  // Build only the component of (u1, u2) by pair search in both directions;
  // arcs are deduplicated by their positive dart pair.
  LabeledGraph out;
  std::map<std::pair<VertexId, VertexId>, VertexId> id;
  std::set<std::pair<DartId, DartId>> arcs_seen;
  std::deque<std::pair<VertexId, VertexId>> queue;
  std::pair<VertexId, VertexId> start{c1.basepoint(), c2.basepoint()};
  id[start] = out.graph.add_vertex();
  queue.push_back(start);
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (int key = 0; key < 2 * r; ++key) {
      int letter = label_from_key(key);
      auto d1 = c1.step(p, letter);
      auto d2 = c2.step(q, letter);
      if (!d1 || !d2) continue;
      std::pair<VertexId, VertexId> to{c1.graph().dst(*d1), c2.graph().dst(*d2)};
      if (!id.count(to)) {
        id[to] = out.graph.add_vertex();
        queue.push_back(to);
      }
      std::pair<DartId, DartId> arc{letter > 0 ? *d1 : c1.graph().inv(*d1),
                                    letter > 0 ? *d2 : c2.graph().inv(*d2)};
      if (arcs_seen.insert(arc).second) {
        if (letter > 0) {
          out.add_labeled_arc(id[{p, q}], id[to], letter);
        } else {
          out.add_labeled_arc(id[to], id[{p, q}], -letter);
        }
      }
    }
  }
  return fold_to_core(std::move(out), id[start], r);
}

std::vector<std::pair<Word, std::size_t>> double_coset_reps(
    const PullbackReport& report, const BasedCore& c1, const BasedCore& c2) {
  std::vector<std::pair<Word, std::size_t>> reps;
  for (std::size_t i = 0; i < report.components.size(); ++i) {
    const PullbackComponent& pc = report.components[i];
    if (pc.simply_connected) continue;
    detail::BasedGraph conj = detail::rebase(c2, inverse_word(pc.rep));
    if (!detail::pointed_product_witness(c1.labeled(), c1.basepoint(), conj.lg,
                                         conj.base, report.base_rank)) {
      throw std::logic_error("double coset representative fails non-triviality");
    }
    reps.emplace_back(pc.rep, i);
  }
  return reps;
}

int intersection_rank_sum(const PullbackReport& report) {
  int sum = 0;
  for (const PullbackComponent& pc : report.components) {
    if (!pc.simply_connected) sum += pc.rank - 1;
  }
  return sum;
}

BasedCore join(const BasedCore& c1, const BasedCore& c2) {
  if (c1.base_rank() != c2.base_rank()) {
    throw std::invalid_argument("join: mismatched base ranks");
  }
  LabeledGraph wedge = c1.labeled();
  std::map<VertexId, VertexId> map2;
  map2[c2.basepoint()] = c1.basepoint();
  for (VertexId v : c2.graph().vertices()) {
    if (!map2.count(v)) map2[v] = wedge.graph.add_vertex();
  }
  for (const auto& [d, lab] : c2.labeled().labels) {
    if (lab < 0) continue;
    wedge.add_labeled_arc(map2[c2.graph().src(d)], map2[c2.graph().dst(d)], lab);
  }
  return fold_to_core(std::move(wedge), c1.basepoint(), c1.base_rank());
}

namespace detail {

std::optional<Word> pointed_product_witness(const LabeledGraph& lg1, VertexId b1,
                                            const LabeledGraph& lg2, VertexId b2,
                                            int base_rank) {
  // Breadth-first search of the pair automaton; the first edge closing a
  // cycle yields a non-trivial closed word (folded graphs: tree-path words
  // never cancel against a non-tree arc).
  std::map<std::pair<VertexId, VertexId>, Word> word_to;
  std::deque<std::pair<VertexId, VertexId>> queue;
  std::pair<VertexId, VertexId> start{b1, b2};
  word_to[start] = {};
  queue.push_back(start);
  std::set<std::pair<DartId, DartId>> arcs_seen;
  while (!queue.empty()) {
    auto [p, q] = queue.front();
    queue.pop_front();
    for (int key = 0; key < 2 * base_rank; ++key) {
      int letter = label_from_key(key);
      auto d1 = find_step(lg1, p, letter);
      auto d2 = find_step(lg2, q, letter);
      if (!d1 || !d2) continue;
      std::pair<DartId, DartId> arc{letter > 0 ? *d1 : lg1.graph.inv(*d1),
                                    letter > 0 ? *d2 : lg2.graph.inv(*d2)};
      if (!arcs_seen.insert(arc).second) continue;
      std::pair<VertexId, VertexId> to{lg1.graph.dst(*d1), lg2.graph.dst(*d2)};
      auto it = word_to.find(to);
      if (it == word_to.end()) {
        Word w = word_to[{p, q}];
        w.push_back(letter);
        word_to[to] = std::move(w);
        queue.push_back(to);
      } else {
        // Non-tree arc: witness = path(p,q) · letter · path(to)^-1.
        Word w = word_to[{p, q}];
        w.push_back(letter);
        Word back = inverse_word(it->second);
        w.insert(w.end(), back.begin(), back.end());
        w = reduce_word(w);
        if (w.empty()) {
          throw std::logic_error("pointed product witness reduced to identity");
        }
        return w;
      }
    }
  }
  return std::nullopt;
}

std::size_t component_of_coset(const PullbackReport& report, const BasedCore& c1,
                               const BasedCore& c2, const Word& g) {
  BasedGraph conj = rebase(c2, inverse_word(g));
  auto witness = pointed_product_witness(c1.labeled(), c1.basepoint(), conj.lg,
                                         conj.base, report.base_rank);
  if (!witness) {
    throw std::invalid_argument("component_of_coset: trivial conjugate intersection");
  }
  // Walk the witness from (u1, conj.base); the first pair state whose
  // second coordinate lies in the original core is in the product, and in
  // the unique non-simply-connected component of the coset.
  VertexId p = c1.basepoint();
  VertexId q = conj.base;
  for (std::size_t j = 0; j <= witness->size(); ++j) {
    if (c2.graph().has_vertex(q)) {
      VertexId pv = report.product_vertex(p, q);
      for (std::size_t i = 0; i < report.components.size(); ++i) {
        if (report.components[i].part.vertices.count(pv)) {
          if (report.components[i].simply_connected) {
            throw std::logic_error("coset walk landed in a tree component");
          }
          return i;
        }
      }
      throw std::logic_error("product vertex not in any component");
    }
    if (j == witness->size()) break;
    int letter = (*witness)[j];
    auto d1 = c1.step(p, letter);
    auto d2 = find_step(conj.lg, q, letter);
    if (!d1 || !d2) throw std::logic_error("witness walk left the graphs");
    p = c1.graph().dst(*d1);
    q = conj.lg.graph.dst(*d2);
  }
  throw std::logic_error("witness walk never met the core product");
}

namespace {

// All reduced words of length <= max_len, shortest first, letters in key
// order within each length.
void enumerate_reduced_words(int base_rank, int max_len,
                             const std::function<void(const Word&)>& visit) {
  std::vector<Word> frontier{Word{}};
  visit(frontier.front());
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (int key = 0; key < 2 * base_rank; ++key) {
        int letter = label_from_key(key);
        if (!w.empty() && w.back() == -letter) continue;
        Word longer = w;
        longer.push_back(letter);
        visit(longer);
        next.push_back(std::move(longer));
      }
    }
    frontier = std::move(next);
  }
}

}  // namespace

}  // namespace detail

std::map<std::size_t, Word> brute_force_double_coset_map(
    const BasedCore& c1, const BasedCore& c2, const PullbackReport& report,
    int max_len) {
  std::map<std::size_t, Word> classes;
  detail::enumerate_reduced_words(
      c1.base_rank(), max_len, [&](const Word& g) {
        detail::BasedGraph conj = detail::rebase(c2, inverse_word(g));
        if (!detail::pointed_product_witness(c1.labeled(), c1.basepoint(),
                                             conj.lg, conj.base,
                                             report.base_rank)) {
          return;
        }
        std::size_t comp = detail::component_of_coset(report, c1, c2, g);
        classes.emplace(comp, g);  // keeps the first (shortest) word found
      });
  return classes;
}

std::vector<Word> brute_force_double_cosets(const BasedCore& c1,
                                            const BasedCore& c2, int max_len) {
  PullbackReport report = fiber_product(c1, c2);
  std::vector<Word> out;
  for (const auto& [comp, w] : brute_force_double_coset_map(c1, c2, report, max_len)) {
    out.push_back(w);
  }
  return out;
}

}  // namespace stallings
