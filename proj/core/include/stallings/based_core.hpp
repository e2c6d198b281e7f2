#ifndef STALLINGS_BASED_CORE_HPP
#define STALLINGS_BASED_CORE_HPP

#include <optional>
#include <string>
#include <vector>

#include "stallings/labeled_graph.hpp"

namespace stallings {

// The based core of a finitely generated subgroup: a folded, connected
// labeled graph with a basepoint that equals its own spine there (no
// degree-1 vertices except possibly the basepoint).  This is the canonical
// finite representation of the subgroup.
class BasedCore {
 public:
  // Validates all invariants; throws std::invalid_argument on failure.
  static BasedCore from_graph(LabeledGraph lg, VertexId basepoint, int base_rank);

  const LabeledGraph& labeled() const { return lg_; }
  const Graph& graph() const { return lg_.graph; }
  VertexId basepoint() const { return base_; }
  int base_rank() const { return rank_; }

  // The unique outgoing dart at v with the given signed label, if any.
  std::optional<DartId> step(VertexId v, int letter) const;

  // Subgroup rank: #arcs - #vertices + 1.
  int rank() const;
  bool is_trivial() const { return rank() == 0; }
  // Complete = every vertex carries all 2r directions (finite index).
  bool is_complete() const;
  // Number of arcs whose positive-direction label is `gen` (gen >= 1).
  int arcs_with_label(int gen) const;

  bool operator==(const BasedCore& other) const;

 private:
  BasedCore(LabeledGraph lg, VertexId base, int rank)
      : lg_(std::move(lg)), base_(base), rank_(rank) {}

  LabeledGraph lg_;
  VertexId base_;
  int rank_;
};

struct TraceResult {
  enum class Kind { Closed, NonClosed, Escapes };
  Kind kind;
  // Closed/NonClosed: the end vertex; Escapes: the vertex with no
  // continuing dart.
  VertexId end;
  // Escapes: index of the letter that could not be read; otherwise |w|.
  int position;

  bool closed() const { return kind == Kind::Closed; }
};

// Follows the labels of the reduced word w from `start`.  On a based core,
// w is a member of the subgroup at `start` exactly when the result is
// Closed; a reduced word that escapes can never return (the full cover
// attaches only hanging trees), so Escapes also certifies non-membership.
TraceResult trace_from(const LabeledGraph& lg, VertexId start, const Word& w);
TraceResult trace(const BasedCore& core, const Word& w);
bool is_member(const BasedCore& core, const Word& w);

// Stallings construction: wedge of generator cycles at a basepoint, folded
// to an immersion, trimmed to its spine, canonically renumbered.  Trivial
// or empty generators yield the one-vertex core.
BasedCore core_from_words(const std::vector<Word>& gens, int base_rank);

// Folds an arbitrary connected labeled graph into the core of the subgroup
// it spells at `base` (fold, trim to spine, canonicalize).
BasedCore fold_to_core(LabeledGraph lg, VertexId base, int base_rank);

// Breadth-first renumbering from the basepoint, labels scanned in the order
// +1,-1,+2,-2,...: equal subgroups always produce identical dumps.
BasedCore canonical(const BasedCore& core);

// True iff the substitution images generate the whole free group; for r
// images in rank r this forces a basis.
bool is_basis(const Substitution& s);

struct ExcisionResult {
  Bouquet bouquet;
  std::vector<Word> words;
};

// Lattice excision: collapse the spanning tree T of a connected rank-2
// graph and rewrite each closed loop at v as the word of its non-tree
// arcs, giving generators over the 2-loop bouquet.  Orientation of each
// non-tree arc is fixed by its lowest dart identifier.
ExcisionResult lattice_excision(const Graph& base, const Subgraph& tree,
                                const std::vector<Path>& loops);

namespace detail {

// Outgoing dart at v with signed label `letter` in a folded graph, found by
// scanning the (short) out-star.
std::optional<DartId> find_step(const LabeledGraph& lg, VertexId v, int letter);

// Copy of the sub-structure induced by `sub`, ids preserved.
LabeledGraph induced(const LabeledGraph& lg, const Subgraph& sub);

// Stallings folding in place: repeatedly identifies pairs of equal-label
// darts leaving a common vertex (lowest vertex, then lexicographically
// lowest dart pair).  Returns the image of `base`.
VertexId fold(LabeledGraph& lg, VertexId base);

// Appends fresh vertices and arcs so that `w` can be read from `start`;
// returns the end vertex.  The graph stays folded.  Used to realize trace
// escapes concretely.
VertexId attach_word_path(LabeledGraph& lg, VertexId start, const Word& w);

// A folded based graph that need not equal its spine (hanging paths
// allowed).  Internal verification helper: conjugate subgroups are
// realized by re-basing a core at the endpoint of a traced word.
struct BasedGraph {
  LabeledGraph lg;
  VertexId base;
  int base_rank;
};

BasedGraph rebase(const BasedCore& core, const Word& w);

}  // namespace detail

}  // namespace stallings

#endif
