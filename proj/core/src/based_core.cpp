#include "stallings/based_core.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace stallings {

namespace detail {

std::optional<DartId> find_step(const LabeledGraph& lg, VertexId v, int letter) {
  for (DartId d : lg.graph.out_darts(v)) {
    if (lg.label(d) == letter) return d;
  }
  return std::nullopt;
}

LabeledGraph induced(const LabeledGraph& lg, const Subgraph& sub) {
  LabeledGraph out;
  for (VertexId v : sub.vertices) out.graph.add_vertex(v);
  for (DartId d : sub.darts) {
    DartId di = lg.graph.inv(d);
    if (d < di) {
      out.graph.add_arc_with_ids(d, di, lg.graph.src(d), lg.graph.src(di));
      out.labels[d] = lg.label(d);
      out.labels[di] = lg.label(di);
    }
  }
  return out;
}

namespace {

// The lexicographically smallest pair of distinct equal-label out-darts at
// v, if any.
std::optional<std::pair<DartId, DartId>> violation_at(const LabeledGraph& lg,
                                                      VertexId v) {
  std::map<int, DartId> seen;
  std::optional<std::pair<DartId, DartId>> chosen;
  for (DartId d : lg.graph.out_darts(v)) {
    int lab = lg.label(d);
    auto [it, fresh] = seen.emplace(lab, d);
    if (!fresh) {
      std::pair<DartId, DartId> cand{it->second, d};
      if (!chosen || cand < *chosen) chosen = cand;
    }
  }
  return chosen;
}

}  // namespace

VertexId fold(LabeledGraph& lg, VertexId base) {
  std::set<VertexId> worklist(lg.graph.vertices().begin(),
                              lg.graph.vertices().end());
  while (!worklist.empty()) {
    VertexId v = *worklist.begin();
    if (!lg.graph.has_vertex(v)) {
      worklist.erase(worklist.begin());
      continue;
    }
    auto pair = violation_at(lg, v);
    if (!pair) {
      worklist.erase(worklist.begin());
      continue;
    }
    auto [d1, d2] = *pair;
    VertexId t1 = lg.graph.dst(d1);
    VertexId t2 = lg.graph.dst(d2);
    lg.remove_arc(d2);
    if (t1 != t2) {
      VertexId keep = std::min(t1, t2);
      VertexId gone = std::max(t1, t2);
      lg.graph.merge_vertex_into(gone, keep);
      if (base == gone) base = keep;
      worklist.insert(keep);
    } else {
      worklist.insert(t1);
    }
    worklist.insert(v);
  }
  return base;
}

VertexId attach_word_path(LabeledGraph& lg, VertexId start, const Word& w) {
  VertexId at = start;
  for (int letter : w) {
    if (find_step(lg, at, letter)) {
      throw std::invalid_argument("attach_word_path: direction already present");
    }
    VertexId next = lg.graph.add_vertex();
    lg.add_labeled_arc(at, next, letter);
    at = next;
  }
  return at;
}

BasedGraph rebase(const BasedCore& core, const Word& w) {
  if (!is_reduced(w)) throw std::invalid_argument("rebase word must be reduced");
  BasedGraph out{core.labeled(), core.basepoint(), core.base_rank()};
  TraceResult t = trace_from(out.lg, out.base, w);
  if (t.kind == TraceResult::Kind::Escapes) {
    Word rest(w.begin() + t.position, w.end());
    out.base = attach_word_path(out.lg, t.end, rest);
  } else {
    out.base = t.end;
  }
  return out;
}

}  // namespace detail

BasedCore BasedCore::from_graph(LabeledGraph lg, VertexId basepoint, int base_rank) {
  if (base_rank < 1) throw std::invalid_argument("base rank must be >= 1");
  if (auto why = validate(lg, base_rank)) throw std::invalid_argument(*why);
  if (!lg.graph.has_vertex(basepoint)) {
    throw std::invalid_argument("basepoint is not a vertex");
  }
  if (!is_connected(lg.graph)) throw std::invalid_argument("core must be connected");
  for (VertexId v : lg.graph.vertices()) {
    std::set<int> seen;
    for (DartId d : lg.graph.out_darts(v)) {
      if (!seen.insert(lg.label(d)).second) {
        throw std::invalid_argument("graph is not folded");
      }
    }
    if (v != basepoint && lg.graph.out_darts(v).size() == 1) {
      throw std::invalid_argument("core has a hanging vertex");
    }
  }
  return BasedCore(std::move(lg), basepoint, base_rank);
}

std::optional<DartId> BasedCore::step(VertexId v, int letter) const {
  return detail::find_step(lg_, v, letter);
}

int BasedCore::rank() const {
  return static_cast<int>(lg_.graph.num_arcs()) -
         static_cast<int>(lg_.graph.num_vertices()) + 1;
}

bool BasedCore::is_complete() const {
  for (VertexId v : lg_.graph.vertices()) {
    if (lg_.graph.out_darts(v).size() != 2 * static_cast<std::size_t>(rank_)) {
      return false;
    }
  }
  return true;
}

int BasedCore::arcs_with_label(int gen) const {
  if (gen < 1 || gen > rank_) throw std::invalid_argument("generator out of range");
  int count = 0;
  for (const auto& [d, lab] : lg_.labels) {
    if (lab == gen) ++count;
  }
  return count;
}

bool BasedCore::operator==(const BasedCore& other) const {
  return base_ == other.base_ && rank_ == other.rank_ && lg_ == other.lg_;
}

TraceResult trace_from(const LabeledGraph& lg, VertexId start, const Word& w) {
  if (!is_reduced(w)) throw std::invalid_argument("trace requires a reduced word");
  VertexId at = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto d = detail::find_step(lg, at, w[i]);
    if (!d) {
      return TraceResult{TraceResult::Kind::Escapes, at, static_cast<int>(i)};
    }
    at = lg.graph.dst(*d);
  }
  if (at == start) {
    return TraceResult{TraceResult::Kind::Closed, at, static_cast<int>(w.size())};
  }
  return TraceResult{TraceResult::Kind::NonClosed, at, static_cast<int>(w.size())};
}

TraceResult trace(const BasedCore& core, const Word& w) {
  return trace_from(core.labeled(), core.basepoint(), w);
}

bool is_member(const BasedCore& core, const Word& w) {
  return trace(core, w).closed();
}

BasedCore fold_to_core(LabeledGraph lg, VertexId base, int base_rank) {
  base = detail::fold(lg, base);
  Subgraph sp = spine(lg.graph, base);
  LabeledGraph trimmed = detail::induced(lg, sp);
  BasedCore core = BasedCore::from_graph(std::move(trimmed), base, base_rank);
  return canonical(core);
}

BasedCore core_from_words(const std::vector<Word>& gens, int base_rank) {
  if (base_rank < 1) throw std::invalid_argument("base rank must be >= 1");
  LabeledGraph lg;
  VertexId base = lg.graph.add_vertex();
  for (const Word& raw : gens) {
    Word w = reduce_word(raw);
    for (int letter : w) {
      if (std::abs(letter) > base_rank) {
        throw std::invalid_argument("generator letter out of range");
      }
    }
    if (w.empty()) continue;
    VertexId at = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      VertexId next = (i + 1 == w.size()) ? base : lg.graph.add_vertex();
      lg.add_labeled_arc(at, next, w[i]);
      at = next;
    }
  }
  return fold_to_core(std::move(lg), base, base_rank);
}

BasedCore canonical(const BasedCore& core) {
  const LabeledGraph& lg = core.labeled();
  const int r = core.base_rank();

  std::map<VertexId, VertexId> order;
  order[core.basepoint()] = 0;
  std::deque<VertexId> queue{core.basepoint()};
  VertexId next_id = 1;
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (int key = 0; key < 2 * r; ++key) {
      auto d = core.step(v, label_from_key(key));
      if (!d) continue;
      VertexId w = lg.graph.dst(*d);
      if (!order.count(w)) {
        order[w] = next_id++;
        queue.push_back(w);
      }
    }
  }
  if (order.size() != lg.graph.num_vertices()) {
    throw std::logic_error("canonical: core is not connected");
  }

  // One representative dart per arc, sorted by (new src, label key).
  std::vector<std::tuple<VertexId, int, DartId>> arcs;
  for (DartId d : lg.graph.darts()) {
    DartId di = lg.graph.inv(d);
    std::pair<VertexId, int> mine{order[lg.graph.src(d)], label_key(lg.label(d))};
    std::pair<VertexId, int> theirs{order[lg.graph.src(di)], label_key(lg.label(di))};
    if (mine < theirs) arcs.emplace_back(mine.first, mine.second, d);
  }
  std::sort(arcs.begin(), arcs.end());

  LabeledGraph out;
  for (VertexId v = 0; v < next_id; ++v) out.graph.add_vertex(v);
  DartId id = 0;
  for (const auto& [srcv, key, d] : arcs) {
    DartId di = lg.graph.inv(d);
    out.graph.add_arc_with_ids(id, id + 1, order[lg.graph.src(d)],
                               order[lg.graph.src(di)]);
    out.labels[id] = lg.label(d);
    out.labels[id + 1] = lg.label(di);
    id += 2;
  }
  return BasedCore::from_graph(std::move(out), 0, r);
}

bool is_basis(const Substitution& s) {
  int r = s.rank();
  if (r < 1) return false;
  BasedCore folded = core_from_words(s.images, r);
  return folded.graph().num_vertices() == 1 &&
         folded.graph().num_arcs() == static_cast<std::size_t>(r);
}

ExcisionResult lattice_excision(const Graph& base, const Subgraph& tree,
                                const std::vector<Path>& loops) {
  if (auto why = validate(base)) throw std::invalid_argument(*why);
  if (!is_connected(base)) throw std::invalid_argument("base graph disconnected");
  if (rank(base) != 2) throw std::invalid_argument("base graph must have rank 2");
  if (!is_tree(base, tree) || tree.vertices != base.vertices()) {
    throw std::invalid_argument("not a spanning tree of the base");
  }

  std::optional<VertexId> at;
  for (const Path& p : loops) {
    if (auto why = validate_path(base, p)) throw std::invalid_argument(*why);
    if (path_end(base, p) != p.start) {
      throw std::invalid_argument("loop is not closed at its start vertex");
    }
    if (at && *at != p.start) {
      throw std::invalid_argument("loops must share a common basepoint");
    }
    at = p.start;
  }

  // The non-tree arcs, by ascending lowest dart id; the lower dart of each
  // arc is its positive direction.
  std::vector<DartId> generators;
  for (DartId d : base.darts()) {
    if (tree.darts.count(d)) continue;
    if (d < base.inv(d)) generators.push_back(d);
  }
  if (generators.size() != 2) {
    throw std::logic_error("rank-2 graph must have exactly 2 non-tree arcs");
  }

  ExcisionResult res;
  res.bouquet = Bouquet::of_rank(2);
  for (const Path& p : loops) {
    Word w;
    for (DartId d : p.darts) {
      if (tree.darts.count(d)) continue;
      for (std::size_t i = 0; i < generators.size(); ++i) {
        if (generators[i] == d) {
          w.push_back(static_cast<int>(i) + 1);
        } else if (base.inv(generators[i]) == d) {
          w.push_back(-(static_cast<int>(i) + 1));
        }
      }
    }
    res.words.push_back(reduce_word(w));
  }
  return res;
}

}  // namespace stallings
