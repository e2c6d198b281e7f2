#ifndef STALLINGS_COVERING_HPP
#define STALLINGS_COVERING_HPP

#include <optional>
#include <set>
#include <vector>

#include "stallings/based_core.hpp"

namespace stallings {

// The spine invariants of a based core over the rank-2 bouquet.
// H is the number of spine vertices, n1/n2 the x_i-pair counts of the
// extended spine; they determine the subgroup rank via
// rank = H - (n1 + n2) + 1.
struct SpineInvariants {
  int H = 0;
  int n1 = 0;
  int n2 = 0;
  int rank = 0;

  bool operator==(const SpineInvariants&) const = default;
};

// Degree of the covering: #vertices when every vertex carries all 2r
// directions, infinite (nullopt) otherwise.
std::optional<int> index(const BasedCore& core);

// Requires base rank 2 and a non-trivial subgroup.  n_i is computed as
// H - #(label-i arcs): every maximal label-i segment that is not a cycle
// contributes exactly one pair.
SpineInvariants spine_invariants(const BasedCore& core);

// Two boundary (tip) vertices joined by a maximal path of label-i darts
// through the core; gamma lists the interior vertices along it, oriented in
// the label-i direction (tip_in precedes gamma.front()).
struct XiPair {
  int label = 0;
  VertexId tip_in = 0;
  VertexId tip_out = 0;
  std::vector<VertexId> gamma;
};

// The core plus one tip vertex and arc per missing direction.  Interior
// vertices are the original core vertices (0 missing directions in the
// ambient cover), boundary vertices the tips (3 missing).  Black checkers
// realize the count rank - 1.
struct ExtendedSpine {
  LabeledGraph graph;
  VertexId basepoint = 0;
  std::set<VertexId> interior;
  std::set<VertexId> boundary;
  std::vector<XiPair> pairs;
  std::set<VertexId> checkered;
};

ExtendedSpine extended_spine(const BasedCore& core);

// Number of black checkers; always rank - 1.
int checker_count(const ExtendedSpine& es);

struct GaloisResult {
  bool galois = true;
  // On failure: a word closed at the basepoint but not at fiber_vertex.
  Word witness;
  VertexId fiber_vertex = -1;
};

// Whether the finite-index core is a Galois (regular) covering: every
// vertex is the image of the basepoint under a label-preserving
// automorphism.  Requires finite index.
GaloisResult is_galois(const BasedCore& core);

// Completes the core to a finite-index one in which the original embeds
// (identically: vertex and dart ids are preserved) and every word of
// `avoid` still traces non-closed.  Each avoided word must be non-trivial
// and a non-member.  The subgroup of the result contains the original as a
// free factor.
BasedCore complete_to_finite_cover(const BasedCore& core,
                                   const std::vector<Word>& avoid);

// One generator per non-tree arc: tree path out, arc, tree path back.
// The list freely generates the subgroup; for a complete core of index n
// over base rank r it has n(r-1)+1 entries.  Requires finite index.
std::vector<Word> schreier_basis(const BasedCore& core, const Subgraph& tree);
std::vector<Word> schreier_basis(const BasedCore& core);

// For an infinite-index core and non-trivial w, finds g such that
// reduce(g w g^-1) does not trace closed, certifying that the conjugate
// leaves the subgroup.  Verified by trace before returning.
Word escape_witness(const BasedCore& core, const Word& w);

namespace detail {

// The Schreier words of the non-tree arcs (tree path out, arc, tree path
// back) for any core, no index requirement.
std::vector<Word> schreier_words(const BasedCore& core, const Subgraph& tree);

}  // namespace detail

}  // namespace stallings

#endif
